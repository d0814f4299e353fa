// Copyright 2026 The symoracle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symoracle/character_table.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "symoracle/partition.hpp"

namespace symoracle {

namespace {

std::uint64_t hash_exponents(const std::vector<std::int32_t> &e) {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : e) {
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
        h *= 1099511628211ull;
    }
    return h;
}

std::string join(const std::vector<std::int32_t> &v, std::size_t from, std::size_t to) {
    std::string s;
    for (std::size_t i = from; i < to; ++i) {
        if (i > from) {
            s += ",";
        }
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<Cyclotomic> roots_table(int m) {
    std::vector<Cyclotomic> roots;
    roots.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        roots.push_back(Cyclotomic::root_of_unity(m, k));
    }
    return roots;
}

std::vector<ClassInfo> class_infos(const ConjugacyClasses &cc) {
    std::vector<ClassInfo> out;
    for (const auto &c : cc.classes()) {
        out.push_back({c.size, c.element_order, c.label});
    }
    return out;
}

int mod(std::int64_t a, int m) {
    auto r = static_cast<int>(a % m);
    return r < 0 ? r + m : r;
}

// sum_k hist[k] zeta_m^k divided by denom, as an exact rational when possible.
std::optional<Rational> histogram_value(int m, const std::vector<std::int64_t> &hist,
                                        std::uint64_t denom) {
    Cyclotomic v = Cyclotomic::from_powers(m, hist);
    if (!v.is_rational()) {
        return std::nullopt;
    }
    return v.to_rational() / Rational(static_cast<unsigned long>(denom));
}

}  // namespace

// ---------------------------------------------------------------------------------------

CharacterTable::CharacterTable(std::string group_name, std::vector<ClassInfo> classes,
                               int conductor, std::vector<Character> characters,
                               std::shared_ptr<const ConjugacyClasses> conjugacy)
    : group_name_(std::move(group_name)),
      classes_(std::move(classes)),
      conductor_(conductor),
      characters_(std::move(characters)),
      conjugacy_(std::move(conjugacy)) {
    if (conductor_ < 1) {
        throw ParameterError("table conductor must be positive");
    }
    for (const auto &c : classes_) {
        group_order_ += c.size;
    }
    for (auto &chi : characters_) {
        if (chi.values.size() != classes_.size()) {
            throw ParameterError("character " + chi.label + " has " +
                                 std::to_string(chi.values.size()) + " values for " +
                                 std::to_string(classes_.size()) + " classes");
        }
        for (auto &v : chi.values) {
            if (v.conductor() != conductor_) {
                if (conductor_ % v.conductor() != 0) {
                    throw ParameterError("value " + v.to_string() + " of " + chi.label +
                                         " lies outside Q(zeta_" + std::to_string(conductor_) +
                                         ")");
                }
                v = v.embed(conductor_);
            }
        }
    }
    detect_linear(characters_, conductor_);
    for (std::size_t i = 0; i < characters_.size(); ++i) {
        if (!by_label_.emplace(characters_[i].label, i).second) {
            throw ParameterError("duplicate character label " + characters_[i].label);
        }
        if (characters_[i].exponents) {
            ++linear_count_;
            by_exponents_[hash_exponents(*characters_[i].exponents)].push_back(i);
        }
    }
}

std::optional<std::size_t> CharacterTable::find(const std::string &label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t CharacterTable::index_of(const std::string &label) const {
    auto i = find(label);
    if (!i) {
        throw ParameterError("no character labelled " + label + " in the table of " + group_name_);
    }
    return *i;
}

std::optional<std::size_t> CharacterTable::find_linear(
    const std::vector<std::int32_t> &exponents) const {
    auto it = by_exponents_.find(hash_exponents(exponents));
    if (it == by_exponents_.end()) {
        return std::nullopt;
    }
    for (std::size_t i : it->second) {
        if (*characters_[i].exponents == exponents) {
            return i;
        }
    }
    return std::nullopt;
}

const ConjugacyClasses &CharacterTable::require_conjugacy() const {
    if (!conjugacy_) {
        throw UnsupportedError("the table of " + group_name_ + " carries no group data");
    }
    return *conjugacy_;
}

void detect_linear(std::vector<Character> &characters, int conductor) {
    std::unordered_map<std::string, std::int32_t> root_index;
    auto ensure_roots = [&] {
        if (root_index.empty()) {
            for (int k = 0; k < conductor; ++k) {
                root_index.emplace(Cyclotomic::root_of_unity(conductor, k).to_string(conductor), k);
            }
        }
    };
    for (auto &chi : characters) {
        if (chi.exponents || chi.values.empty() || !(chi.values.front() == Cyclotomic(1))) {
            continue;
        }
        ensure_roots();
        std::vector<std::int32_t> e;
        e.reserve(chi.values.size());
        for (const auto &v : chi.values) {
            auto it = root_index.find(v.to_string(conductor));
            if (it == root_index.end()) {
                break;
            }
            e.push_back(it->second);
        }
        if (e.size() == chi.values.size()) {
            chi.exponents = std::move(e);
        }
    }
}

// ---------------------------------------------------------------------------------------
// Family constructors

TablePtr char_table_symmetric(int n) {
    if (n > default_caps().symmetric_degree) {
        throw SizeError("symmetric character tables are capped at degree " +
                        std::to_string(default_caps().symmetric_degree));
    }
    auto group = std::make_shared<const Group>(GroupSpec::symmetric(n));
    auto cc = std::make_shared<const ConjugacyClasses>(ConjugacyClasses::compute(group));
    std::vector<Partition> shapes = partitions_of(n);
    std::reverse(shapes.begin(), shapes.end());
    MurnaghanNakayama mn;
    std::vector<Character> chars;
    for (const auto &lambda : shapes) {
        Character chi;
        chi.label = lambda.to_string();
        for (const auto &mu : cc->cycle_types()) {
            chi.values.emplace_back(mn.value(lambda, mu));
        }
        chars.push_back(std::move(chi));
    }
    return std::make_shared<const CharacterTable>(group->name(), class_infos(*cc), 1,
                                                  std::move(chars), cc);
}

TablePtr char_table_abelian(std::shared_ptr<const Group> group) {
    Family f = group->spec().family;
    if (f != Family::abelian_product && f != Family::function_group) {
        throw ParameterError("abelian table requested for " + group->name());
    }
    auto cc = std::make_shared<const ConjugacyClasses>(ConjugacyClasses::compute(group));
    const std::vector<int> &radix = group->radix();
    int m = 1;
    for (int r : radix) {
        m = std::lcm(m, r);
    }
    std::vector<Cyclotomic> roots = roots_table(m);
    std::vector<int> scale;
    for (int r : radix) {
        scale.push_back(m / r);
    }
    std::vector<Character> chars;
    chars.reserve(cc->size());
    for (std::size_t a = 0; a < cc->size(); ++a) {
        // Character labels run through the same mixed-radix tuples as the elements.
        const Element &label = (*cc)[a].representative;
        Character chi;
        chi.label = "psi_{" + join(label, 0, label.size()) + "}";
        std::vector<std::int32_t> e(cc->size());
        chi.values.reserve(cc->size());
        for (std::size_t c = 0; c < cc->size(); ++c) {
            const Element &x = (*cc)[c].representative;
            std::int64_t s = 0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                s += static_cast<std::int64_t>(label[i]) * x[i] * scale[i];
            }
            e[c] = mod(s, m);
            chi.values.push_back(roots[static_cast<std::size_t>(e[c])]);
        }
        chi.exponents = std::move(e);
        chars.push_back(std::move(chi));
    }
    return std::make_shared<const CharacterTable>(group->name(), class_infos(*cc), m,
                                                  std::move(chars), cc);
}

TablePtr char_table_abelian(const std::vector<int> &orders) {
    return char_table_abelian(std::make_shared<const Group>(GroupSpec::abelian(orders)));
}

TablePtr char_table_heisenberg(int p, int n) {
    auto group = std::make_shared<const Group>(GroupSpec::heisenberg(p, n));
    auto cc = std::make_shared<const ConjugacyClasses>(ConjugacyClasses::compute(group));
    auto un = static_cast<std::size_t>(n);
    std::vector<Cyclotomic> roots = roots_table(p);
    std::int64_t pn = 1;
    for (int i = 0; i < n; ++i) {
        pn *= p;
    }
    std::vector<Character> chars;
    // chi_{a,b}: a, b in Z_p^n, enumerated in mixed radix with a most significant.
    Element ab(2 * un, 0);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < 2 * un; ++i) {
        count *= static_cast<std::uint64_t>(p);
    }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Character chi;
        chi.label = n == 1 ? "chi_{" + join(ab, 0, 2) + "}"
                           : "chi_{(" + join(ab, 0, un) + "),(" + join(ab, un, 2 * un) + ")}";
        std::vector<std::int32_t> e;
        for (const auto &c : cc->classes()) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < 2 * un; ++i) {
                s += static_cast<std::int64_t>(ab[i]) * c.representative[i];
            }
            e.push_back(mod(s, p));
            chi.values.push_back(roots[static_cast<std::size_t>(e.back())]);
        }
        chi.exponents = std::move(e);
        chars.push_back(std::move(chi));
        for (std::size_t i = 2 * un; i-- > 0;) {
            if (++ab[i] < p) {
                break;
            }
            ab[i] = 0;
        }
    }
    for (int c = 1; c < p; ++c) {
        Character theta;
        theta.label = "theta_{" + std::to_string(c) + "}";
        for (const auto &cls : cc->classes()) {
            const Element &g = cls.representative;
            bool central = std::all_of(g.begin(), g.end() - 1, [](auto v) { return v == 0; });
            if (central) {
                theta.values.push_back(Cyclotomic(pn) *
                                       roots[static_cast<std::size_t>(mod(
                                           static_cast<std::int64_t>(c) * g.back(), p))]);
            } else {
                theta.values.emplace_back(0);
            }
        }
        chars.push_back(std::move(theta));
    }
    return std::make_shared<const CharacterTable>(group->name(), class_infos(*cc), p,
                                                  std::move(chars), cc);
}

TablePtr char_table_dihedral(int n) {
    auto group = std::make_shared<const Group>(GroupSpec::dihedral(n));
    auto cc = std::make_shared<const ConjugacyClasses>(ConjugacyClasses::compute(group));
    int m = std::lcm(n, 2);
    std::vector<Cyclotomic> roots = roots_table(m);
    std::vector<Character> chars;
    struct Sign {
        const char *label;
        int on_r;
        int on_s;
    };
    std::vector<Sign> signs = {{"chi_{++}", 0, 0}, {"chi_{+-}", 0, 1}};
    if (n % 2 == 0) {
        signs.push_back({"chi_{-+}", 1, 0});
        signs.push_back({"chi_{--}", 1, 1});
    }
    for (const auto &s : signs) {
        Character chi;
        chi.label = s.label;
        std::vector<std::int32_t> e;
        for (const auto &c : cc->classes()) {
            int k = c.representative[0];
            int refl = c.representative[1];
            int parity = (s.on_r * k + s.on_s * refl) % 2;
            e.push_back(parity * (m / 2));
            chi.values.push_back(roots[static_cast<std::size_t>(e.back())]);
        }
        chi.exponents = std::move(e);
        chars.push_back(std::move(chi));
    }
    int step = m / n;
    for (int j = 1; 2 * j < n; ++j) {
        Character rho;
        rho.label = "rho_{" + std::to_string(j) + "}";
        for (const auto &c : cc->classes()) {
            int k = c.representative[0];
            if (c.representative[1] != 0) {
                rho.values.emplace_back(0);
            } else {
                rho.values.push_back(roots[static_cast<std::size_t>(mod(j * k * step, m))] +
                                     roots[static_cast<std::size_t>(mod(-j * k * step, m))]);
            }
        }
        chars.push_back(std::move(rho));
    }
    return std::make_shared<const CharacterTable>(group->name(), class_infos(*cc), m,
                                                  std::move(chars), cc);
}

TablePtr char_table_for(const GroupSpec &spec) {
    switch (spec.family) {
        case Family::symmetric:
            return char_table_symmetric(spec.n);
        case Family::abelian_product:
        case Family::function_group:
            return char_table_abelian(std::make_shared<const Group>(spec));
        case Family::heisenberg:
            return char_table_heisenberg(spec.p, spec.n);
        case Family::dihedral:
            return char_table_dihedral(spec.n);
        case Family::alternating:
            throw UnsupportedError(
                "alternating groups have no built-in table; their answers come from "
                "symmetric-group partition data or a loaded table");
        case Family::explicit_table:
            throw UnsupportedError("groups given by a multiplication table need a loaded table");
    }
    throw UnsupportedError("no table for " + spec.name());
}

// ---------------------------------------------------------------------------------------
// Validation

std::vector<std::string> validate_table(const CharacterTable &table) {
    std::vector<std::string> out;
    const auto &classes = table.classes();
    const auto &chars = table.characters();
    int m = table.conductor();
    std::uint64_t order = table.group_order();
    if (classes.empty()) {
        return {"table has no classes"};
    }
    if (chars.size() != classes.size()) {
        out.push_back("class count: " + std::to_string(chars.size()) + " characters for " +
                      std::to_string(classes.size()) + " classes");
    }
    if (classes[0].size != 1 || classes[0].order != 1) {
        out.push_back("identity class: first class must have size 1 and order 1");
    }
    if (table.conjugacy()) {
        const auto &cc = *table.conjugacy();
        if (cc.group().order() != order) {
            out.push_back("class equation: sizes sum to " + std::to_string(order) +
                          " but the group has order " + std::to_string(cc.group().order()));
        }
        for (std::size_t c = 0; c < classes.size() && c < cc.size(); ++c) {
            if (cc[c].size != classes[c].size) {
                out.push_back("class size mismatch at column " + std::to_string(c));
            }
        }
    }
    Rational degree_sum = 0;
    bool degrees_ok = true;
    for (const auto &chi : chars) {
        const Cyclotomic &d = chi.values.front();
        if (!d.is_integer() || d.to_integer() < 1) {
            out.push_back("degree of " + chi.label + " is not a positive integer: " +
                          d.to_string());
            degrees_ok = false;
            continue;
        }
        Rational deg(static_cast<long>(d.to_integer()));
        degree_sum += deg * deg;
    }
    if (degrees_ok && degree_sum != Rational(static_cast<unsigned long>(order))) {
        out.push_back("degree sum: sum of squared degrees is " + to_string(degree_sum) +
                      ", group order is " + std::to_string(order));
    }
    if (!out.empty() && chars.size() != classes.size()) {
        return out;
    }

    std::vector<std::vector<Cyclotomic>> conj(chars.size());
    for (std::size_t i = 0; i < chars.size(); ++i) {
        for (const auto &v : chars[i].values) {
            conj[i].push_back(v.conj());
        }
    }
    auto sizes = std::vector<std::int64_t>(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        sizes[c] = static_cast<std::int64_t>(classes[c].size);
    }

    const std::size_t max_reports = 20;
    std::size_t row_failures = 0;
    std::vector<std::int64_t> hist(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < chars.size(); ++i) {
        for (std::size_t j = i; j < chars.size(); ++j) {
            std::optional<Rational> ip;
            if (chars[i].exponents && chars[j].exponents) {
                std::fill(hist.begin(), hist.end(), 0);
                const auto &ei = *chars[i].exponents;
                const auto &ej = *chars[j].exponents;
                for (std::size_t c = 0; c < classes.size(); ++c) {
                    hist[static_cast<std::size_t>(mod(ei[c] - ej[c], m))] += sizes[c];
                }
                ip = histogram_value(m, hist, order);
            } else {
                Cyclotomic s;
                for (std::size_t c = 0; c < classes.size(); ++c) {
                    if (!chars[i].values[c].is_zero() && !conj[j][c].is_zero()) {
                        s += Cyclotomic(sizes[c]) * chars[i].values[c] * conj[j][c];
                    }
                }
                if (s.is_rational()) {
                    ip = s.to_rational() / Rational(static_cast<unsigned long>(order));
                }
            }
            Rational expected = i == j ? 1 : 0;
            if (!ip || *ip != expected) {
                if (++row_failures <= max_reports) {
                    out.push_back("row orthogonality: (" + chars[i].label + ", " +
                                  chars[j].label + ") = " + (ip ? to_string(*ip) : "irrational") +
                                  ", expected " + to_string(expected));
                }
            }
        }
    }

    std::size_t col_failures = 0;
    std::vector<std::size_t> nonlinear;
    for (std::size_t i = 0; i < chars.size(); ++i) {
        if (!chars[i].exponents) {
            nonlinear.push_back(i);
        }
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (std::size_t d = c; d < classes.size(); ++d) {
            std::fill(hist.begin(), hist.end(), 0);
            for (const auto &chi : chars) {
                if (chi.exponents) {
                    const auto &e = *chi.exponents;
                    hist[static_cast<std::size_t>(mod(e[c] - e[d], m))] += 1;
                }
            }
            Cyclotomic s = Cyclotomic::from_powers(m, hist);
            for (std::size_t i : nonlinear) {
                if (!chars[i].values[c].is_zero() && !conj[i][d].is_zero()) {
                    s += chars[i].values[c] * conj[i][d];
                }
            }
            Rational expected = 0;
            if (c == d) {
                expected = Rational(static_cast<unsigned long>(order)) /
                           Rational(static_cast<unsigned long>(classes[c].size));
            }
            if (!s.is_rational() || s.to_rational() != expected) {
                if (++col_failures <= max_reports) {
                    out.push_back("column orthogonality: columns " + std::to_string(c) + ", " +
                                  std::to_string(d) + " give " + s.to_string() + ", expected " +
                                  to_string(expected));
                }
            }
        }
    }
    if (row_failures > max_reports) {
        out.push_back("row orthogonality: " + std::to_string(row_failures - max_reports) +
                      " further failures");
    }
    if (col_failures > max_reports) {
        out.push_back("column orthogonality: " + std::to_string(col_failures - max_reports) +
                      " further failures");
    }
    return out;
}

// ---------------------------------------------------------------------------------------
// Permutation-equivalence of tables

bool same_table_up_to_permutation(const CharacterTable &a, const CharacterTable &b) {
    if (a.num_classes() != b.num_classes() || a.size() != b.size() ||
        a.group_order() != b.group_order()) {
        return false;
    }
    std::size_t k = a.num_classes();
    int m = std::lcm(a.conductor(), b.conductor());
    auto strings = [&](const CharacterTable &t) {
        std::vector<std::vector<std::string>> s(t.size(), std::vector<std::string>(k));
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (std::size_t c = 0; c < k; ++c) {
                s[i][c] = t[i].values[c].to_string(m);
            }
        }
        return s;
    };
    auto sa = strings(a);
    auto sb = strings(b);
    auto signature = [&](const CharacterTable &t, const std::vector<std::vector<std::string>> &s,
                         std::size_t c) {
        std::vector<std::string> col;
        for (const auto &row : s) {
            col.push_back(row[c]);
        }
        std::sort(col.begin(), col.end());
        col.push_back(std::to_string(t.classes()[c].size));
        col.push_back(std::to_string(t.classes()[c].order));
        return col;
    };
    std::vector<std::vector<std::string>> sig_a(k);
    std::vector<std::vector<std::string>> sig_b(k);
    for (std::size_t c = 0; c < k; ++c) {
        sig_a[c] = signature(a, sa, c);
        sig_b[c] = signature(b, sb, c);
    }

    // Assign columns of a to columns of b; prune when the multisets of row prefixes differ.
    std::vector<std::size_t> assign;
    std::vector<bool> used(k, false);
    std::uint64_t nodes = 0;
    auto prefixes_match = [&] {
        std::vector<std::vector<std::string>> pa;
        std::vector<std::vector<std::string>> pb;
        for (std::size_t i = 0; i < sa.size(); ++i) {
            std::vector<std::string> ra;
            std::vector<std::string> rb;
            for (std::size_t j = 0; j < assign.size(); ++j) {
                ra.push_back(sa[i][j]);
                rb.push_back(sb[i][assign[j]]);
            }
            pa.push_back(std::move(ra));
            pb.push_back(std::move(rb));
        }
        std::sort(pa.begin(), pa.end());
        std::sort(pb.begin(), pb.end());
        return pa == pb;
    };
    std::function<bool()> search = [&]() -> bool {
        if (++nodes > 1'000'000) {
            throw UnsupportedError("table comparison search exceeded its node budget");
        }
        if (!prefixes_match()) {
            return false;
        }
        if (assign.size() == k) {
            return true;
        }
        std::size_t c = assign.size();
        for (std::size_t d = 0; d < k; ++d) {
            if (used[d] || sig_a[c] != sig_b[d]) {
                continue;
            }
            used[d] = true;
            assign.push_back(d);
            if (search()) {
                return true;
            }
            assign.pop_back();
            used[d] = false;
        }
        return false;
    };
    return search();
}

}  // namespace symoracle

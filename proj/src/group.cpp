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

#include "symoracle/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

namespace symoracle {

namespace {

int mod(std::int64_t a, int m) {
    auto r = static_cast<int>(a % m);
    return r < 0 ? r + m : r;
}

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    if (r > (static_cast<unsigned __int128>(1) << 62)) {
        throw SizeError("group order exceeds 2^62");
    }
    return static_cast<std::uint64_t>(r);
}

bool is_permutation_family(Family f) {
    return f == Family::symmetric || f == Family::alternating;
}

bool is_even(const Element &perm) {
    std::vector<bool> seen(perm.size(), false);
    std::size_t transpositions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

std::string join_ints(const std::vector<int> &v, const char *sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            s += sep;
        }
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<int> split_ints(const std::string &text, char sep) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw ParseError("bad integer '" + item + "'");
            }
        } catch (const std::logic_error &) {
            throw ParseError("bad integer '" + item + "' in '" + text + "'");
        }
    }
    return out;
}

std::uint64_t resolve_cap(std::uint64_t cap) {
    return cap == 0 ? default_caps().enumeration : cap;
}

}  // namespace

// ---------------------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::symmetric(int n) {
    GroupSpec s;
    s.family = Family::symmetric;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::alternating(int n) {
    GroupSpec s;
    s.family = Family::alternating;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::dihedral(int n) {
    GroupSpec s;
    s.family = Family::dihedral;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::abelian(std::vector<int> orders) {
    GroupSpec s;
    s.family = Family::abelian_product;
    s.orders = std::move(orders);
    return s;
}

GroupSpec GroupSpec::heisenberg(int p, int n) {
    GroupSpec s;
    s.family = Family::heisenberg;
    s.p = p;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::function_group(int k, std::vector<int> orders) {
    GroupSpec s;
    s.family = Family::function_group;
    s.k = k;
    s.orders = std::move(orders);
    return s;
}

GroupSpec GroupSpec::explicit_table(std::vector<std::vector<int>> table) {
    GroupSpec s;
    s.family = Family::explicit_table;
    s.table = std::move(table);
    return s;
}

std::string GroupSpec::name() const {
    switch (family) {
        case Family::symmetric:
            return "S" + std::to_string(n);
        case Family::alternating:
            return "A" + std::to_string(n);
        case Family::dihedral:
            return "D" + std::to_string(n);
        case Family::abelian_product: {
            std::string s;
            for (std::size_t i = 0; i < orders.size(); ++i) {
                s += (i > 0 ? "xZ" : "Z") + std::to_string(orders[i]);
            }
            return s;
        }
        case Family::heisenberg:
            return "heisenberg:" + std::to_string(p) + "," + std::to_string(n);
        case Family::function_group:
            return "fun:" + std::to_string(k) + "," + join_ints(orders, ",");
        case Family::explicit_table:
            return "table:" + std::to_string(table.size());
    }
    return "?";
}

GroupSpec parse_group_name(const std::string &text) {
    if (text.empty()) {
        throw ParseError("empty group name");
    }
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::string head = text.substr(0, colon);
        std::vector<int> args = split_ints(text.substr(colon + 1), ',');
        if (head == "heisenberg" && args.size() == 2) {
            return GroupSpec::heisenberg(args[0], args[1]);
        }
        if ((head == "fun" || head == "function") && args.size() >= 2) {
            return GroupSpec::function_group(args[0], {args.begin() + 1, args.end()});
        }
        if ((head == "abelian" || head == "Z") && !args.empty()) {
            return GroupSpec::abelian(args);
        }
        if (args.size() == 1 && (head == "S" || head == "symmetric")) {
            return GroupSpec::symmetric(args[0]);
        }
        if (args.size() == 1 && (head == "A" || head == "alternating")) {
            return GroupSpec::alternating(args[0]);
        }
        if (args.size() == 1 && (head == "D" || head == "dihedral")) {
            return GroupSpec::dihedral(args[0]);
        }
        throw ParseError("unknown group '" + text + "'");
    }
    char head = text[0];
    if (head == 'Z') {
        std::vector<int> orders;
        std::size_t pos = 0;
        while (pos < text.size()) {
            if (text[pos] != 'Z') {
                throw ParseError("bad abelian group '" + text + "'");
            }
            auto next = text.find('x', pos);
            std::string piece = text.substr(pos + 1, next == std::string::npos ? std::string::npos
                                                                               : next - pos - 1);
            std::vector<int> v = split_ints(piece, ',');
            if (v.size() != 1) {
                throw ParseError("bad abelian group '" + text + "'");
            }
            orders.push_back(v[0]);
            if (next == std::string::npos) {
                break;
            }
            pos = next + 1;
        }
        return GroupSpec::abelian(orders);
    }
    std::vector<int> v = split_ints(text.substr(1), ',');
    if (v.size() != 1) {
        throw ParseError("unknown group '" + text + "'");
    }
    switch (head) {
        case 'S':
            return GroupSpec::symmetric(v[0]);
        case 'A':
            return GroupSpec::alternating(v[0]);
        case 'D':
            return GroupSpec::dihedral(v[0]);
        default:
            throw ParseError("unknown group '" + text + "'");
    }
}

bool is_prime(int p) {
    if (p < 2) {
        return false;
    }
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------------------
// Group

Group::Group(GroupSpec spec) : spec_(std::move(spec)) {
    switch (spec_.family) {
        case Family::symmetric:
        case Family::alternating: {
            if (spec_.n < 2 || spec_.n > 12) {
                throw ParameterError("permutation degree must lie in [2, 12], got " +
                                     std::to_string(spec_.n));
            }
            order_ = factorial(spec_.n);
            if (spec_.family == Family::alternating) {
                order_ /= 2;
            }
            radix_.assign(static_cast<std::size_t>(spec_.n), spec_.n);
            break;
        }
        case Family::dihedral:
            if (spec_.n < 3) {
                throw ParameterError("dihedral degree must be at least 3");
            }
            order_ = checked_product(2, static_cast<std::uint64_t>(spec_.n));
            radix_ = {spec_.n, 2};
            break;
        case Family::abelian_product:
        case Family::function_group: {
            if (spec_.orders.empty()) {
                throw ParameterError("abelian group needs at least one cyclic factor");
            }
            for (int m : spec_.orders) {
                if (m < 1) {
                    throw ParameterError("cyclic orders must be positive");
                }
            }
            int copies = 1;
            if (spec_.family == Family::function_group) {
                if (spec_.k < 1) {
                    throw ParameterError("function group arity must be at least 1");
                }
                copies = spec_.k;
            }
            for (int c = 0; c < copies; ++c) {
                for (int m : spec_.orders) {
                    order_ = checked_product(order_, static_cast<std::uint64_t>(m));
                    radix_.push_back(m);
                }
            }
            break;
        }
        case Family::heisenberg:
            if (!is_prime(spec_.p)) {
                throw ParameterError("heisenberg modulus must be prime, got " +
                                     std::to_string(spec_.p));
            }
            if (spec_.n < 1) {
                throw ParameterError("heisenberg dimension must be at least 1");
            }
            radix_.assign(static_cast<std::size_t>(2 * spec_.n + 1), spec_.p);
            for (int r : radix_) {
                order_ = checked_product(order_, static_cast<std::uint64_t>(r));
            }
            break;
        case Family::explicit_table: {
            const auto &t = spec_.table;
            std::size_t n = t.size();
            if (n == 0) {
                throw ParameterError("multiplication table is empty");
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (t[i].size() != n) {
                    throw ParameterError("multiplication table must be square");
                }
                std::vector<bool> row(n, false);
                std::vector<bool> col(n, false);
                for (std::size_t j = 0; j < n; ++j) {
                    int a = t[i][j];
                    int b = t[j].size() == n ? t[j][i] : -1;
                    if (a < 0 || static_cast<std::size_t>(a) >= n || b < 0 ||
                        static_cast<std::size_t>(b) >= n) {
                        throw ParameterError("multiplication table entry out of range");
                    }
                    if (row[static_cast<std::size_t>(a)] || col[static_cast<std::size_t>(b)]) {
                        throw ParameterError("multiplication table is not a Latin square");
                    }
                    row[static_cast<std::size_t>(a)] = true;
                    col[static_cast<std::size_t>(b)] = true;
                }
                if (t[0][i] != static_cast<int>(i) || t[i][0] != static_cast<int>(i)) {
                    throw ParameterError("element 0 of a multiplication table must be the identity");
                }
            }
            auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
                auto ab = static_cast<std::size_t>(t[a][b]);
                auto bc = static_cast<std::size_t>(t[b][c]);
                if (t[ab][c] != t[a][bc]) {
                    throw ParameterError("multiplication table is not associative");
                }
            };
            if (n <= 64) {
                for (std::size_t a = 0; a < n; ++a) {
                    for (std::size_t b = 0; b < n; ++b) {
                        for (std::size_t c = 0; c < n; ++c) {
                            check(a, b, c);
                        }
                    }
                }
            } else {
                std::mt19937_64 rng(0x5eed);
                std::uniform_int_distribution<std::size_t> pick(0, n - 1);
                for (int s = 0; s < 200'000; ++s) {
                    check(pick(rng), pick(rng), pick(rng));
                }
            }
            order_ = n;
            radix_ = {static_cast<int>(n)};
            break;
        }
    }
}

bool Group::is_abelian() const {
    switch (spec_.family) {
        case Family::abelian_product:
        case Family::function_group:
            return true;
        case Family::symmetric:
            return spec_.n <= 2;
        case Family::alternating:
            return spec_.n <= 3;
        case Family::dihedral:
        case Family::heisenberg:
            return false;
        case Family::explicit_table: {
            const auto &t = spec_.table;
            for (std::size_t i = 0; i < t.size(); ++i) {
                for (std::size_t j = i + 1; j < t.size(); ++j) {
                    if (t[i][j] != t[j][i]) {
                        return false;
                    }
                }
            }
            return true;
        }
    }
    return false;
}

Element Group::identity() const {
    if (is_permutation_family(spec_.family)) {
        Element e(static_cast<std::size_t>(spec_.n));
        std::iota(e.begin(), e.end(), 0);
        return e;
    }
    return Element(radix_.size(), 0);
}

Element Group::multiply(const Element &a, const Element &b) const {
    Element r(a.size());
    switch (spec_.family) {
        case Family::symmetric:
        case Family::alternating:
            for (std::size_t i = 0; i < a.size(); ++i) {
                r[i] = a[static_cast<std::size_t>(b[i])];
            }
            return r;
        case Family::dihedral:
            r[0] = mod(a[0] + (a[1] != 0 ? -b[0] : b[0]), spec_.n);
            r[1] = a[1] ^ b[1];
            return r;
        case Family::abelian_product:
        case Family::function_group:
            for (std::size_t i = 0; i < a.size(); ++i) {
                r[i] = mod(static_cast<std::int64_t>(a[i]) + b[i], radix_[i]);
            }
            return r;
        case Family::heisenberg: {
            auto n = static_cast<std::size_t>(spec_.n);
            int p = spec_.p;
            std::int64_t z = static_cast<std::int64_t>(a[2 * n]) + b[2 * n];
            for (std::size_t i = 0; i < 2 * n; ++i) {
                r[i] = mod(static_cast<std::int64_t>(a[i]) + b[i], p);
            }
            for (std::size_t i = 0; i < n; ++i) {
                z += static_cast<std::int64_t>(a[i]) * b[n + i];
            }
            r[2 * n] = mod(z, p);
            return r;
        }
        case Family::explicit_table:
            r[0] = spec_.table[static_cast<std::size_t>(a[0])][static_cast<std::size_t>(b[0])];
            return r;
    }
    return r;
}

Element Group::inverse(const Element &a) const {
    Element r(a.size());
    switch (spec_.family) {
        case Family::symmetric:
        case Family::alternating:
            for (std::size_t i = 0; i < a.size(); ++i) {
                r[static_cast<std::size_t>(a[i])] = static_cast<std::int32_t>(i);
            }
            return r;
        case Family::dihedral:
            r[0] = a[1] != 0 ? a[0] : mod(-a[0], spec_.n);
            r[1] = a[1];
            return r;
        case Family::abelian_product:
        case Family::function_group:
            for (std::size_t i = 0; i < a.size(); ++i) {
                r[i] = mod(-static_cast<std::int64_t>(a[i]), radix_[i]);
            }
            return r;
        case Family::heisenberg: {
            auto n = static_cast<std::size_t>(spec_.n);
            int p = spec_.p;
            std::int64_t z = -static_cast<std::int64_t>(a[2 * n]);
            for (std::size_t i = 0; i < 2 * n; ++i) {
                r[i] = mod(-static_cast<std::int64_t>(a[i]), p);
            }
            for (std::size_t i = 0; i < n; ++i) {
                z += static_cast<std::int64_t>(a[i]) * a[n + i];
            }
            r[2 * n] = mod(z, p);
            return r;
        }
        case Family::explicit_table: {
            const auto &row = spec_.table[static_cast<std::size_t>(a[0])];
            r[0] = static_cast<std::int32_t>(std::find(row.begin(), row.end(), 0) - row.begin());
            return r;
        }
    }
    return r;
}

Element Group::conjugate(const Element &g, const Element &x) const {
    return multiply(multiply(g, x), inverse(g));
}

Element Group::power(const Element &a, std::int64_t e) const {
    Element base = e < 0 ? inverse(a) : a;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    Element r = identity();
    while (k > 0) {
        if (k & 1) {
            r = multiply(r, base);
        }
        base = multiply(base, base);
        k >>= 1;
    }
    return r;
}

int Group::element_order(const Element &a) const {
    Element e = identity();
    Element x = a;
    int k = 1;
    while (x != e) {
        x = multiply(x, a);
        ++k;
        if (static_cast<std::uint64_t>(k) > order_) {
            throw ParameterError("element order exceeds group order");
        }
    }
    return k;
}

std::vector<Element> Group::generators() const {
    std::vector<Element> gens;
    switch (spec_.family) {
        case Family::symmetric: {
            Element t = identity();
            std::swap(t[0], t[1]);
            gens.push_back(t);
            if (spec_.n > 2) {
                Element c(static_cast<std::size_t>(spec_.n));
                for (int i = 0; i < spec_.n; ++i) {
                    c[static_cast<std::size_t>(i)] = (i + 1) % spec_.n;
                }
                gens.push_back(c);
            }
            return gens;
        }
        case Family::alternating:
            for (int i = 2; i < spec_.n; ++i) {
                Element c = identity();
                c[0] = 1;
                c[1] = i;
                c[static_cast<std::size_t>(i)] = 0;
                gens.push_back(c);
            }
            return gens;
        case Family::dihedral:
            return {{1, 0}, {0, 1}};
        case Family::abelian_product:
        case Family::function_group:
        case Family::heisenberg:
            for (std::size_t i = 0; i < radix_.size(); ++i) {
                if (radix_[i] > 1) {
                    Element g(radix_.size(), 0);
                    g[i] = 1;
                    gens.push_back(g);
                }
            }
            return gens;
        case Family::explicit_table: {
            // Greedy: keep an element when it is outside the subgroup generated so far.
            std::size_t n = spec_.table.size();
            std::vector<bool> in(n, false);
            in[0] = true;
            for (std::size_t g = 1; g < n; ++g) {
                if (in[g]) {
                    continue;
                }
                gens.push_back({static_cast<std::int32_t>(g)});
                std::deque<std::size_t> queue;
                for (std::size_t i = 0; i < n; ++i) {
                    if (in[i]) {
                        queue.push_back(i);
                    }
                }
                while (!queue.empty()) {
                    std::size_t x = queue.front();
                    queue.pop_front();
                    for (const auto &s : gens) {
                        auto y = static_cast<std::size_t>(spec_.table[x][static_cast<std::size_t>(s[0])]);
                        if (!in[y]) {
                            in[y] = true;
                            queue.push_back(y);
                        }
                    }
                }
            }
            return gens;
        }
    }
    return gens;
}

bool Group::contains(const Element &a) const {
    if (a.size() != radix_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || a[i] >= radix_[i]) {
            return false;
        }
    }
    if (is_permutation_family(spec_.family)) {
        std::vector<bool> seen(a.size(), false);
        for (auto v : a) {
            if (seen[static_cast<std::size_t>(v)]) {
                return false;
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
        if (spec_.family == Family::alternating && !is_even(a)) {
            return false;
        }
    }
    return true;
}

std::uint64_t Group::key(const Element &a) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        k = k * static_cast<std::uint64_t>(radix_[i]) + static_cast<std::uint64_t>(a[i]);
    }
    return k;
}

std::string Group::format(const Element &a) const {
    std::string s;
    switch (spec_.family) {
        case Family::symmetric:
        case Family::alternating: {
            std::vector<bool> seen(a.size(), false);
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (seen[i] || a[i] == static_cast<std::int32_t>(i)) {
                    continue;
                }
                s += "(";
                for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(a[j])) {
                    seen[j] = true;
                    if (j != i) {
                        s += " ";
                    }
                    s += std::to_string(j + 1);
                }
                s += ")";
            }
            return s.empty() ? "()" : s;
        }
        case Family::dihedral:
            if (a[0] == 0 && a[1] == 0) {
                return "e";
            }
            if (a[0] != 0) {
                s = "r^" + std::to_string(a[0]);
            }
            if (a[1] != 0) {
                s += s.empty() ? "s" : " s";
            }
            return s;
        case Family::explicit_table:
            return "#" + std::to_string(a[0]);
        case Family::heisenberg: {
            auto n = static_cast<std::size_t>(spec_.n);
            s = "(";
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (i > 0) {
                    s += (i == n || i == 2 * n) ? ";" : ",";
                }
                s += std::to_string(a[i]);
            }
            return s + ")";
        }
        case Family::abelian_product:
        case Family::function_group:
            s = "(";
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (i > 0) {
                    s += ",";
                }
                s += std::to_string(a[i]);
            }
            return s + ")";
    }
    return s;
}

std::vector<Element> enumerate(const Group &group, std::uint64_t cap) {
    cap = resolve_cap(cap);
    if (group.order() > cap) {
        throw SizeError("group " + group.name() + " of order " + std::to_string(group.order()) +
                        " exceeds the enumeration cap " + std::to_string(cap));
    }
    std::vector<Element> out;
    out.reserve(group.order());
    const GroupSpec &spec = group.spec();
    switch (spec.family) {
        case Family::symmetric:
        case Family::alternating: {
            Element p = group.identity();
            do {
                if (spec.family == Family::symmetric || is_even(p)) {
                    out.push_back(p);
                }
            } while (std::next_permutation(p.begin(), p.end()));
            return out;
        }
        case Family::dihedral:
            for (int s = 0; s < 2; ++s) {
                for (int k = 0; k < spec.n; ++k) {
                    out.push_back({k, s});
                }
            }
            return out;
        case Family::explicit_table:
            for (std::size_t i = 0; i < spec.table.size(); ++i) {
                out.push_back({static_cast<std::int32_t>(i)});
            }
            return out;
        case Family::abelian_product:
        case Family::function_group:
        case Family::heisenberg: {
            Element e = group.identity();
            const std::vector<int> &radix = group.radix();
            for (std::uint64_t idx = 0; idx < group.order(); ++idx) {
                out.push_back(e);
                for (std::size_t i = e.size(); i-- > 0;) {
                    if (++e[i] < radix[i]) {
                        break;
                    }
                    e[i] = 0;
                }
            }
            return out;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------------------
// ElementIndex

ElementIndex::ElementIndex(const Group &group, std::vector<Element> elements)
    : group_(&group), elements_(std::move(elements)) {
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (!index_.emplace(group.key(elements_[i]), i).second) {
            throw ParameterError("duplicate element in index");
        }
    }
}

std::optional<std::size_t> ElementIndex::find(const Element &e) const {
    auto it = index_.find(group_->key(e));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t ElementIndex::index_of(const Element &e) const {
    auto found = find(e);
    if (!found) {
        throw ParameterError("element " + group_->format(e) + " not in index");
    }
    return *found;
}

// ---------------------------------------------------------------------------------------
// Conjugacy classes

Partition cycle_type(const Element &perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> lens;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<>());
    return Partition(std::move(lens));
}

ConjugacyClasses ConjugacyClasses::compute(std::shared_ptr<const Group> group) {
    ConjugacyClasses out;
    out.group_ = group;
    const Group &g = *group;
    if (g.spec().family == Family::symmetric) {
        int n = g.spec().n;
        std::uint64_t nfact = factorial(n);
        for (const Partition &mu : partitions_of(n)) {
            Element rep(static_cast<std::size_t>(n));
            int start = 0;
            int order = 1;
            for (int len : mu.parts()) {
                for (int i = 0; i < len; ++i) {
                    rep[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
                }
                start += len;
                order = std::lcm(order, len);
            }
            out.class_by_cycle_type_.emplace(mu, out.classes_.size());
            out.cycle_types_.push_back(mu);
            out.classes_.push_back({rep, nfact / centralizer_order(mu), order, mu.to_string()});
        }
    } else if (g.spec().family == Family::abelian_product ||
               g.spec().family == Family::function_group) {
        for (Element &e : enumerate(g)) {
            out.class_by_key_.emplace(g.key(e), out.classes_.size());
            int order = g.element_order(e);
            std::string label = g.format(e);
            out.classes_.push_back({std::move(e), 1, order, std::move(label)});
        }
    } else {
        std::vector<Element> elements = enumerate(g);
        std::vector<Element> gens = g.generators();
        std::vector<Element> gens_inv;
        for (const auto &s : gens) {
            gens_inv.push_back(g.inverse(s));
        }
        for (const Element &e : elements) {
            std::uint64_t k = g.key(e);
            if (out.class_by_key_.count(k) != 0) {
                continue;
            }
            std::size_t id = out.classes_.size();
            std::deque<Element> queue{e};
            out.class_by_key_.emplace(k, id);
            std::uint64_t size = 0;
            while (!queue.empty()) {
                Element x = std::move(queue.front());
                queue.pop_front();
                ++size;
                for (std::size_t i = 0; i < gens.size(); ++i) {
                    Element y = g.multiply(g.multiply(gens[i], x), gens_inv[i]);
                    if (out.class_by_key_.emplace(g.key(y), id).second) {
                        queue.push_back(std::move(y));
                    }
                }
            }
            out.classes_.push_back({e, size, g.element_order(e), g.format(e)});
        }
    }
    for (const auto &c : out.classes_) {
        out.exponent_ = std::lcm(out.exponent_, static_cast<std::uint64_t>(c.element_order));
    }
    return out;
}

std::size_t ConjugacyClasses::class_of(const Element &e) const {
    if (!group_->contains(e)) {
        throw ParameterError("element " + group_->format(e) + " is not in " + group_->name());
    }
    if (group_->spec().family == Family::symmetric) {
        return class_by_cycle_type_.at(cycle_type(e));
    }
    auto it = class_by_key_.find(group_->key(e));
    if (it == class_by_key_.end()) {
        throw ParameterError("element " + group_->format(e) + " has no class");
    }
    return it->second;
}

// ---------------------------------------------------------------------------------------
// Class fusion

ClassFusion ClassFusion::build(const ConjugacyClasses &group_classes,
                               const ConjugacyClasses &subgroup_classes, Embedding embedding) {
    ClassFusion out;
    out.group_ = group_classes.group_ptr();
    out.subgroup_ = subgroup_classes.group_ptr();
    out.embedding_ = std::move(embedding);
    const Group &g = *out.group_;
    const Group &h = *out.subgroup_;
    if (g.order() % h.order() != 0) {
        throw EmbeddingError("|H| = " + std::to_string(h.order()) + " does not divide |G| = " +
                             std::to_string(g.order()));
    }
    out.index_ = g.order() / h.order();

    auto image = [&](const Element &x) {
        Element y = out.embedding_(x);
        if (!g.contains(y)) {
            throw EmbeddingError("image of " + h.format(x) + " is not an element of " + g.name());
        }
        return y;
    };
    if (image(h.identity()) != g.identity()) {
        throw EmbeddingError("embedding does not send identity to identity");
    }

    std::vector<Element> elements = enumerate(h);
    std::vector<Element> gens = h.generators();
    out.exhaustive_ = elements.size() <= default_caps().exhaustive_check;
    std::vector<std::size_t> sample(elements.size());
    std::iota(sample.begin(), sample.end(), 0);
    if (!out.exhaustive_) {
        std::mt19937_64 rng(0xf051);
        std::shuffle(sample.begin(), sample.end(), rng);
        sample.resize(default_caps().exhaustive_check);
    }

    std::unordered_set<std::uint64_t> keys;
    std::vector<Element> images(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        images[i] = image(elements[i]);
        if (!keys.insert(g.key(images[i])).second) {
            throw EmbeddingError("embedding is not injective");
        }
    }
    for (std::size_t i : sample) {
        for (const auto &s : gens) {
            Element lhs = image(h.multiply(elements[i], s));
            Element rhs = g.multiply(images[i], image(s));
            if (lhs != rhs) {
                throw EmbeddingError("embedding is not a homomorphism at " + h.format(elements[i]) +
                                     " * " + h.format(s));
            }
        }
    }

    for (const auto &c : subgroup_classes.classes()) {
        out.fusion_.push_back(group_classes.class_of(image(c.representative)));
    }
    for (std::size_t i : sample) {
        if (group_classes.class_of(images[i]) !=
            out.fusion_[subgroup_classes.class_of(elements[i])]) {
            throw EmbeddingError("class fusion is inconsistent at " + h.format(elements[i]));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------------------
// Actions

GroupAction::GroupAction(std::shared_ptr<const Group> group, std::size_t domain_size,
                         std::function<std::size_t(const Element &, std::size_t)> act,
                         std::string name)
    : group_(std::move(group)), domain_size_(domain_size), act_(std::move(act)),
      name_(std::move(name)) {}

std::size_t GroupAction::fixed_points(const Element &g) const {
    std::size_t count = 0;
    for (std::size_t w = 0; w < domain_size_; ++w) {
        if (act_(g, w) == w) {
            ++count;
        }
    }
    return count;
}

std::optional<std::string> GroupAction::check() const {
    const Group &g = *group_;
    Element e = g.identity();
    for (std::size_t w = 0; w < domain_size_; ++w) {
        if (act_(e, w) != w) {
            return "identity moves point " + std::to_string(w);
        }
    }
    std::vector<Element> gens = g.generators();
    std::vector<Element> elements;
    bool exhaustive = g.order() * domain_size_ <= 1'000'000;
    if (exhaustive) {
        elements = enumerate(g);
    } else {
        // Random words in the generators.
        std::mt19937_64 rng(0xac7);
        std::uniform_int_distribution<std::size_t> pick(0, gens.empty() ? 0 : gens.size() - 1);
        for (int s = 0; s < 64 && !gens.empty(); ++s) {
            Element x = e;
            for (int len = 0; len < 32; ++len) {
                x = g.multiply(gens[pick(rng)], x);
            }
            elements.push_back(std::move(x));
        }
    }
    std::vector<std::size_t> points(domain_size_);
    std::iota(points.begin(), points.end(), 0);
    if (!exhaustive && points.size() > 2048) {
        std::mt19937_64 rng(0xd0);
        std::shuffle(points.begin(), points.end(), rng);
        points.resize(2048);
    }
    for (const auto &x : elements) {
        for (std::size_t w : points) {
            std::size_t xw = act_(x, w);
            if (xw >= domain_size_) {
                return "point image out of range";
            }
            for (const auto &s : gens) {
                if (act_(g.multiply(s, x), w) != act_(s, xw)) {
                    return "action is not compatible with multiplication at " + g.format(s) +
                           " * " + g.format(x);
                }
            }
        }
    }
    return std::nullopt;
}

GroupAction natural_action(std::shared_ptr<const Group> group) {
    const GroupSpec &spec = group->spec();
    switch (spec.family) {
        case Family::symmetric:
        case Family::alternating:
            return GroupAction(group, static_cast<std::size_t>(spec.n),
                               [](const Element &g, std::size_t w) {
                                   return static_cast<std::size_t>(g[w]);
                               },
                               "natural");
        case Family::dihedral: {
            int n = spec.n;
            return GroupAction(group, static_cast<std::size_t>(n),
                               [n](const Element &g, std::size_t w) {
                                   auto v = static_cast<std::int64_t>(w);
                                   return static_cast<std::size_t>(
                                       mod(g[0] + (g[1] != 0 ? -v : v), n));
                               },
                               "natural");
        }
        case Family::heisenberg: {
            // Column vectors (v_0, v_1..v_n, v_last); v_0 += x.v_mid + z v_last, v_mid += y v_last.
            int p = spec.p;
            auto n = static_cast<std::size_t>(spec.n);
            std::size_t dim = n + 2;
            std::uint64_t size = 1;
            for (std::size_t i = 0; i < dim; ++i) {
                size = checked_product(size, static_cast<std::uint64_t>(p));
            }
            return GroupAction(
                group, size,
                [p, n, dim](const Element &g, std::size_t w) {
                    std::vector<std::int64_t> v(dim);
                    for (std::size_t i = dim; i-- > 0;) {
                        v[i] = static_cast<std::int64_t>(w % static_cast<std::size_t>(p));
                        w /= static_cast<std::size_t>(p);
                    }
                    std::int64_t last = v[dim - 1];
                    std::int64_t v0 = v[0] + static_cast<std::int64_t>(g[2 * n]) * last;
                    for (std::size_t i = 0; i < n; ++i) {
                        v0 += static_cast<std::int64_t>(g[i]) * v[1 + i];
                    }
                    v[0] = mod(v0, p);
                    for (std::size_t i = 0; i < n; ++i) {
                        v[1 + i] = mod(v[1 + i] + static_cast<std::int64_t>(g[n + i]) * last, p);
                    }
                    std::size_t out = 0;
                    for (std::size_t i = 0; i < dim; ++i) {
                        out = out * static_cast<std::size_t>(p) + static_cast<std::size_t>(v[i]);
                    }
                    return out;
                },
                "natural");
        }
        case Family::function_group: {
            // Point (i, b) encoded as i * |G| + mixed-radix(b); f acts by b -> b + f(i).
            std::vector<int> orders = spec.orders;
            std::size_t block = 1;
            for (int m : orders) {
                block *= static_cast<std::size_t>(m);
            }
            return GroupAction(
                group, block * static_cast<std::size_t>(spec.k),
                [orders, block](const Element &f, std::size_t w) {
                    std::size_t i = w / block;
                    std::size_t b = w % block;
                    std::size_t out = 0;
                    std::size_t scale = 1;
                    for (std::size_t c = orders.size(); c-- > 0;) {
                        auto m = static_cast<std::size_t>(orders[c]);
                        std::size_t digit = b % m;
                        b /= m;
                        auto shifted = (digit + static_cast<std::size_t>(
                                                    f[i * orders.size() + c])) % m;
                        out += shifted * scale;
                        scale *= m;
                    }
                    return i * block + out;
                },
                "natural");
        }
        case Family::abelian_product:
        case Family::explicit_table:
            break;
    }
    throw UnsupportedError("no natural action declared for " + group->name() +
                           "; use the regular action");
}

GroupAction regular_action(std::shared_ptr<const Group> group) {
    auto index = std::make_shared<ElementIndex>(*group, enumerate(*group));
    const Group *g = group.get();
    std::size_t size = index->size();
    return GroupAction(std::move(group), size,
                       [index, g](const Element &x, std::size_t w) {
                           return index->index_of(g->multiply(x, index->elements()[w]));
                       },
                       "regular");
}

// ---------------------------------------------------------------------------------------
// Named subgroups

NamedSubgroup klein_four_in_s4() {
    return {GroupSpec::abelian({2, 2}),
            [](const Element &h) {
                Element a{1, 0, 3, 2};
                Element b{2, 3, 0, 1};
                if (h[0] == 0) {
                    return h[1] == 0 ? Element{0, 1, 2, 3} : b;
                }
                return h[1] == 0 ? a : Element{3, 2, 1, 0};
            },
            "klein4"};
}

NamedSubgroup alternating_in_symmetric(int n) {
    return {GroupSpec::alternating(n), [](const Element &h) { return h; }, "alternating"};
}

NamedSubgroup cyclic_a3_in_s3() {
    return {GroupSpec::abelian({3}),
            [](const Element &h) {
                switch (h[0]) {
                    case 0:
                        return Element{0, 1, 2};
                    case 1:
                        return Element{1, 2, 0};
                    default:
                        return Element{2, 0, 1};
                }
            },
            "cyclic3"};
}

NamedSubgroup heisenberg_center(int p, int n) {
    auto len = static_cast<std::size_t>(2 * n + 1);
    return {GroupSpec::abelian({p}),
            [len](const Element &h) {
                Element r(len, 0);
                r[len - 1] = h[0];
                return r;
            },
            "center"};
}

NamedSubgroup zero_sum_subgroup(int k, const std::vector<int> &orders) {
    if (k < 1) {
        throw ParameterError("function group arity must be at least 1");
    }
    std::size_t width = orders.size();
    if (k == 1) {
        return {GroupSpec::abelian({1}),
                [width](const Element &) { return Element(width, 0); }, "zero-sum"};
    }
    std::vector<int> sub;
    for (int i = 0; i < k - 1; ++i) {
        sub.insert(sub.end(), orders.begin(), orders.end());
    }
    return {GroupSpec::abelian(sub),
            [orders, width, k](const Element &h) {
                Element r = h;
                for (std::size_t c = 0; c < width; ++c) {
                    std::int64_t sum = 0;
                    for (int i = 0; i < k - 1; ++i) {
                        sum += h[static_cast<std::size_t>(i) * width + c];
                    }
                    r.push_back(mod(-sum, orders[c]));
                }
                return r;
            },
            "zero-sum"};
}

NamedSubgroup trivial_subgroup(const GroupSpec &group) {
    Element e = Group(group).identity();
    return {GroupSpec::abelian({1}), [e](const Element &) { return e; }, "trivial"};
}

}  // namespace symoracle

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

#include "symoracle/class_function.hpp"

#include <algorithm>

namespace symoracle {

namespace {

Cyclotomic into_field(const Cyclotomic &v, int conductor) {
    if (v.conductor() == conductor) {
        return v;
    }
    if (conductor % v.conductor() == 0) {
        return v.embed(conductor);
    }
    Cyclotomic small = v.minimized();
    if (conductor % small.conductor() != 0) {
        throw ParameterError("value " + v.to_string() + " does not lie in Q(zeta_" +
                             std::to_string(conductor) + ")");
    }
    return small.embed(conductor);
}

int mod(std::int64_t a, int m) {
    auto r = static_cast<int>(a % m);
    return r < 0 ? r + m : r;
}

void require_same_table(const ClassFunction &a, const ClassFunction &b) {
    if (a.table_ptr() != b.table_ptr()) {
        throw ParameterError("class functions belong to different tables");
    }
}

// (f, chi) for linear chi with integral f: multiply by roots of unity as index shifts.
Rational linear_multiplicity(const ClassFunction &f, const Character &chi) {
    const CharacterTable &t = f.table();
    int m = t.conductor();
    std::vector<std::int64_t> hist(static_cast<std::size_t>(m), 0);
    const auto &e = *chi.exponents;
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
        auto size = static_cast<std::int64_t>(t.classes()[c].size);
        auto nums = f[c].numerators();
        for (std::size_t j = 0; j < nums.size(); ++j) {
            if (nums[j] != 0) {
                hist[static_cast<std::size_t>(mod(static_cast<std::int64_t>(j) - e[c], m))] +=
                    size * nums[j];
            }
        }
    }
    Cyclotomic s = Cyclotomic::from_powers(m, hist);
    if (!s.is_rational()) {
        throw ParameterError("inner product is not rational");
    }
    return s.to_rational() / Rational(static_cast<unsigned long>(t.group_order()));
}

bool all_denominators_one(const ClassFunction &f) {
    return std::all_of(f.values().begin(), f.values().end(),
                       [](const Cyclotomic &v) { return v.denominator() == 1; });
}

void require_group(const CharacterTable &table, const Group &group, const char *what) {
    const auto &cc = table.require_conjugacy();
    if (!(cc.group().spec() == group.spec())) {
        throw ParameterError(std::string(what) + ": table of " + table.group_name() +
                             " does not describe " + group.name());
    }
}

}  // namespace

// ---------------------------------------------------------------------------------------

ClassFunction::ClassFunction(TablePtr table, std::vector<Cyclotomic> values)
    : table_(std::move(table)), values_(std::move(values)) {
    if (values_.size() != table_->num_classes()) {
        throw ParameterError("class function has " + std::to_string(values_.size()) +
                             " values for " + std::to_string(table_->num_classes()) + " classes");
    }
    for (auto &v : values_) {
        v = into_field(v, table_->conductor());
    }
}

ClassFunction ClassFunction::irreducible(TablePtr table, std::size_t index) {
    auto values = (*table)[index].values;
    return ClassFunction(std::move(table), std::move(values));
}

ClassFunction ClassFunction::trivial(TablePtr table) {
    std::vector<Cyclotomic> values(table->num_classes(), Cyclotomic(1));
    return ClassFunction(std::move(table), std::move(values));
}

ClassFunction ClassFunction::regular(TablePtr table) {
    std::vector<Cyclotomic> values(table->num_classes(), Cyclotomic(0));
    values[0] = Cyclotomic(static_cast<std::int64_t>(table->group_order()));
    return ClassFunction(std::move(table), std::move(values));
}

ClassFunction ClassFunction::from_irreducibles(
    TablePtr table, const std::vector<std::pair<std::size_t, std::int64_t>> &terms) {
    std::vector<Cyclotomic> values(table->num_classes(), Cyclotomic(0));
    for (auto [i, mult] : terms) {
        if (i >= table->size()) {
            throw ParameterError("irreducible index out of range");
        }
        for (std::size_t c = 0; c < values.size(); ++c) {
            values[c] += Cyclotomic(mult) * (*table)[i].values[c];
        }
    }
    return ClassFunction(std::move(table), std::move(values));
}

bool ClassFunction::has_integer_values() const {
    return std::all_of(values_.begin(), values_.end(), [](const auto &v) { return v.is_integer(); });
}

// ---------------------------------------------------------------------------------------

IrrepSet::IrrepSet(TablePtr table) : table_(std::move(table)), bits_(table_->size()) {
}

IrrepSet IrrepSet::full(TablePtr table) {
    IrrepSet s(std::move(table));
    s.bits_.set();
    return s;
}

IrrepSet IrrepSet::of(TablePtr table, const std::vector<std::size_t> &indices) {
    IrrepSet s(std::move(table));
    for (auto i : indices) {
        s.insert(i);
    }
    return s;
}

IrrepSet IrrepSet::complement() const {
    IrrepSet s(table_);
    s.bits_ = ~bits_;
    return s;
}

std::vector<std::size_t> IrrepSet::indices() const {
    std::vector<std::size_t> out;
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i)) {
        out.push_back(i);
    }
    return out;
}

std::vector<std::string> IrrepSet::labels() const {
    std::vector<std::string> out;
    for (auto i : indices()) {
        out.push_back((*table_)[i].label);
    }
    return out;
}

std::string IrrepSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto &label : labels()) {
        s += first ? label : ", " + label;
        first = false;
    }
    return s + "}";
}

std::uint64_t IrrepSet::hash() const {
    std::vector<boost::dynamic_bitset<>::block_type> blocks;
    boost::to_block_range(bits_, std::back_inserter(blocks));
    std::uint64_t h = 1469598103934665603ull;
    for (auto b : blocks) {
        h ^= static_cast<std::uint64_t>(b);
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------------------------------

ClassFunction perm_character(const GroupAction &action, TablePtr table) {
    require_group(*table, action.group(), "permutation character");
    const auto &cc = table->require_conjugacy();
    std::vector<Cyclotomic> values;
    for (const auto &c : cc.classes()) {
        values.emplace_back(static_cast<std::int64_t>(action.fixed_points(c.representative)));
    }
    return ClassFunction(std::move(table), std::move(values));
}

Rational inner_product(const ClassFunction &a, const ClassFunction &b) {
    require_same_table(a, b);
    const CharacterTable &t = a.table();
    Cyclotomic s;
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
        if (a[c].is_zero() || b[c].is_zero()) {
            continue;
        }
        s += Cyclotomic(static_cast<std::int64_t>(t.classes()[c].size)) * a[c] * b[c].conj();
    }
    if (!s.is_rational()) {
        throw ParameterError("inner product is not rational: " + s.to_string());
    }
    return s.to_rational() / Rational(static_cast<unsigned long>(t.group_order()));
}

std::vector<Rational> multiplicities(const ClassFunction &f) {
    const CharacterTable &t = f.table();
    bool integral = all_denominators_one(f);
    std::vector<Rational> out;
    out.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (integral && t[i].exponents) {
            out.push_back(linear_multiplicity(f, t[i]));
        } else {
            out.push_back(inner_product(f, ClassFunction::irreducible(f.table_ptr(), i)));
        }
    }
    return out;
}

ClassFunction tensor(const ClassFunction &a, const ClassFunction &b) {
    require_same_table(a, b);
    std::vector<Cyclotomic> values;
    values.reserve(a.values().size());
    for (std::size_t c = 0; c < a.values().size(); ++c) {
        values.push_back(a[c] * b[c]);
    }
    return ClassFunction(a.table_ptr(), std::move(values));
}

ClassFusion fusion_between(const CharacterTable &group_table, const CharacterTable &subgroup_table,
                           Embedding embedding) {
    return ClassFusion::build(group_table.require_conjugacy(), subgroup_table.require_conjugacy(),
                              std::move(embedding));
}

ClassFunction restrict(const ClassFunction &f, const ClassFusion &fusion, TablePtr subgroup_table) {
    require_group(f.table(), fusion.group(), "restriction");
    require_group(*subgroup_table, fusion.subgroup(), "restriction");
    std::vector<Cyclotomic> values;
    for (std::size_t target : fusion.fusion()) {
        values.push_back(f[target]);
    }
    return ClassFunction(std::move(subgroup_table), std::move(values));
}

ClassFunction induce(const ClassFunction &f, const ClassFusion &fusion, TablePtr group_table) {
    require_group(f.table(), fusion.subgroup(), "induction");
    require_group(*group_table, fusion.group(), "induction");
    const CharacterTable &h = f.table();
    std::vector<Cyclotomic> sums(group_table->num_classes(), Cyclotomic(0));
    for (std::size_t d = 0; d < h.num_classes(); ++d) {
        sums[fusion.fusion()[d]] += Cyclotomic(static_cast<std::int64_t>(h.classes()[d].size)) * f[d];
    }
    std::vector<Cyclotomic> values;
    for (std::size_t c = 0; c < sums.size(); ++c) {
        // |C_G(g)| / |H| = |G| / (|class| |H|).
        Rational scale(static_cast<unsigned long>(group_table->group_order()));
        scale /= Rational(static_cast<unsigned long>(group_table->classes()[c].size)) *
                 Rational(static_cast<unsigned long>(h.group_order()));
        values.push_back(Cyclotomic(scale) * sums[c]);
    }
    return ClassFunction(std::move(group_table), std::move(values));
}

std::int64_t induced_multiplicity(std::size_t y, TablePtr subgroup_table, std::size_t chi,
                                  TablePtr group_table, const ClassFusion &fusion) {
    ClassFunction down = restrict(ClassFunction::irreducible(group_table, chi), fusion, subgroup_table);
    Rational m = inner_product(down, ClassFunction::irreducible(subgroup_table, y));
    if (m.get_den() != 1 || m < 0) {
        throw NotACharacterError("restriction multiplicity " + to_string(m) + " is not a count");
    }
    return m.get_num().get_si();
}

IrrepSet support(const ClassFunction &f) {
    IrrepSet out(f.table_ptr());
    auto mults = multiplicities(f);
    for (std::size_t i = 0; i < mults.size(); ++i) {
        if (mults[i].get_den() != 1 || mults[i] < 0) {
            throw NotACharacterError("multiplicity of " + f.table()[i].label + " is " +
                                     to_string(mults[i]));
        }
        if (mults[i] > 0) {
            out.insert(i);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------------------

SupportMap::SupportMap(ClassFunction v)
    : v_(std::move(v)), base_(support(v_)), cache_(v_.table().size()) {
    base_linear_ = true;
    for (auto k : base_.indices()) {
        base_linear_ = base_linear_ && v_.table()[k].is_linear();
    }
}

const IrrepSet &SupportMap::neighbours(std::size_t i) {
    if (cache_[i]) {
        return *cache_[i];
    }
    const CharacterTable &t = v_.table();
    const Character &chi = t[i];
    if (chi.is_linear() && base_linear_) {
        IrrepSet out(v_.table_ptr());
        int m = t.conductor();
        bool complete = true;
        for (auto k : base_.indices()) {
            const auto &a = *chi.exponents;
            const auto &b = *t[k].exponents;
            std::vector<std::int32_t> sum(a.size());
            for (std::size_t c = 0; c < a.size(); ++c) {
                sum[c] = static_cast<std::int32_t>((a[c] + b[c]) % m);
            }
            auto j = t.find_linear(sum);
            if (!j) {
                complete = false;
                break;
            }
            out.insert(*j);
        }
        if (complete) {
            cache_[i] = std::move(out);
            return *cache_[i];
        }
    }
    cache_[i] = support(tensor(ClassFunction::irreducible(v_.table_ptr(), i), v_));
    return *cache_[i];
}

IrrepSet SupportMap::apply(const IrrepSet &set) {
    IrrepSet out(v_.table_ptr());
    for (auto i : set.indices()) {
        out |= neighbours(i);
    }
    return out;
}

// ---------------------------------------------------------------------------------------

IrrepSet PowerTrace::at(int t) const {
    if (t < 1) {
        throw ParameterError("tensor powers start at t = 1");
    }
    if (static_cast<std::size_t>(t) <= sets.size()) {
        return sets[static_cast<std::size_t>(t - 1)];
    }
    switch (status) {
        case Status::reached_full:
            return sets.back();
        case Status::cycle_detected: {
            int s = cycle_start + (t - cycle_start) % period;
            return sets[static_cast<std::size_t>(s - 1)];
        }
        case Status::cap_hit:
            break;
    }
    throw SizeError("tensor power " + std::to_string(t) + " lies beyond the computed trace");
}

std::optional<int> PowerTrace::first_full() const {
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].is_full()) {
            return static_cast<int>(i + 1);
        }
    }
    return std::nullopt;
}

std::string to_string(PowerTrace::Status status) {
    switch (status) {
        case PowerTrace::Status::reached_full:
            return "reached-full";
        case PowerTrace::Status::cycle_detected:
            return "cycle-detected";
        case PowerTrace::Status::cap_hit:
            return "cap-hit";
    }
    return "?";
}

PowerTrace power_trace(SupportMap &map, int max_steps) {
    PowerTrace trace;
    std::unordered_map<std::uint64_t, std::vector<int>> seen;
    IrrepSet current = map.base();
    for (int t = 1;; ++t) {
        if (current.is_full()) {
            trace.sets.push_back(current);
            trace.status = PowerTrace::Status::reached_full;
            return trace;
        }
        auto &bucket = seen[current.hash()];
        for (int r : bucket) {
            if (trace.sets[static_cast<std::size_t>(r - 1)] == current) {
                trace.status = PowerTrace::Status::cycle_detected;
                trace.cycle_start = r;
                trace.period = t - r;
                return trace;
            }
        }
        if (t > max_steps) {
            trace.status = PowerTrace::Status::cap_hit;
            return trace;
        }
        bucket.push_back(t);
        trace.sets.push_back(current);
        current = map.apply(current);
    }
}

PowerTrace power_trace(const ClassFunction &v, int max_steps) {
    SupportMap map(v);
    return power_trace(map, max_steps);
}

IrrepSet power_support(const ClassFunction &v, int t) {
    if (t < 1) {
        throw ParameterError("tensor powers start at t = 1");
    }
    SupportMap map(v);
    IrrepSet current = map.base();
    for (int s = 1; s < t && !current.is_full(); ++s) {
        current = map.apply(current);
    }
    return current;
}

}  // namespace symoracle

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

#ifndef SYMORACLE_CLASS_FUNCTION_HPP
#define SYMORACLE_CLASS_FUNCTION_HPP

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "symoracle/character_table.hpp"

namespace symoracle {

/// A class function on the group of a character table, one value per class.
class ClassFunction {
   public:
    ClassFunction(TablePtr table, std::vector<Cyclotomic> values);

    static ClassFunction irreducible(TablePtr table, std::size_t index);
    static ClassFunction trivial(TablePtr table);
    /// |G| at the identity, zero elsewhere.
    static ClassFunction regular(TablePtr table);
    /// Sum of the named irreducibles with the given multiplicities.
    static ClassFunction from_irreducibles(TablePtr table,
                                           const std::vector<std::pair<std::size_t, std::int64_t>> &terms);

    const CharacterTable &table() const {
        return *table_;
    }
    const TablePtr &table_ptr() const {
        return table_;
    }
    const std::vector<Cyclotomic> &values() const {
        return values_;
    }
    const Cyclotomic &operator[](std::size_t c) const {
        return values_[c];
    }
    const Cyclotomic &at_identity() const {
        return values_.front();
    }
    bool has_integer_values() const;

    friend bool operator==(const ClassFunction &a, const ClassFunction &b) {
        return a.table_ == b.table_ && a.values_ == b.values_;
    }

   private:
    TablePtr table_;
    std::vector<Cyclotomic> values_;
};

/// A subset of the irreducible characters of one table.
class IrrepSet {
   public:
    explicit IrrepSet(TablePtr table);
    static IrrepSet full(TablePtr table);
    static IrrepSet of(TablePtr table, const std::vector<std::size_t> &indices);

    const CharacterTable &table() const {
        return *table_;
    }
    bool contains(std::size_t i) const {
        return bits_.test(i);
    }
    void insert(std::size_t i) {
        bits_.set(i);
    }
    std::size_t count() const {
        return bits_.count();
    }
    bool empty() const {
        return bits_.none();
    }
    bool is_full() const {
        return bits_.all();
    }
    bool is_subset_of(const IrrepSet &other) const {
        return bits_.is_subset_of(other.bits_);
    }
    IrrepSet &operator|=(const IrrepSet &other) {
        bits_ |= other.bits_;
        return *this;
    }
    IrrepSet complement() const;
    std::vector<std::size_t> indices() const;
    std::vector<std::string> labels() const;
    /// "{[4], [3,1]}".
    std::string to_string() const;
    std::uint64_t hash() const;

    friend bool operator==(const IrrepSet &a, const IrrepSet &b) {
        return a.bits_ == b.bits_;
    }

   private:
    TablePtr table_;
    boost::dynamic_bitset<> bits_;
};

/// Fixed-point counts of the class representatives. The action and the table must
/// describe the same group.
ClassFunction perm_character(const GroupAction &action, TablePtr table);

/// (a, b) = (1/|G|) sum_c |c| a(c) conj(b(c)); throws ParameterError if irrational.
Rational inner_product(const ClassFunction &a, const ClassFunction &b);
/// (f, chi_i) for every irreducible chi_i.
std::vector<Rational> multiplicities(const ClassFunction &f);
ClassFunction tensor(const ClassFunction &a, const ClassFunction &b);

/// Builds the fusion of two tables' groups from their attached class data.
ClassFusion fusion_between(const CharacterTable &group_table, const CharacterTable &subgroup_table,
                           Embedding embedding);
/// Values on H read through the fusion map.
ClassFunction restrict(const ClassFunction &f, const ClassFusion &fusion, TablePtr subgroup_table);
/// Induced class function by the class-sum formula
/// f^G(g) = |C_G(g)| / |H| * sum over H-classes d fusing to the class of g of |d| f(d).
ClassFunction induce(const ClassFunction &f, const ClassFusion &fusion, TablePtr group_table);
/// Multiplicity of chi in Y induced to G, computed as (chi restricted, Y)_H.
std::int64_t induced_multiplicity(std::size_t y, TablePtr subgroup_table, std::size_t chi,
                                  TablePtr group_table, const ClassFusion &fusion);

/// Irreducibles with positive multiplicity; throws NotACharacterError when a multiplicity
/// is negative or not an integer.
IrrepSet support(const ClassFunction &f);

/// The map I(A) -> I(A (x) V) on irrep subsets, with per-irrep neighbour sets cached.
class SupportMap {
   public:
    explicit SupportMap(ClassFunction v);

    const ClassFunction &character() const {
        return v_;
    }
    const IrrepSet &base() const {
        return base_;
    }
    /// support(chi_i (x) V).
    const IrrepSet &neighbours(std::size_t i);
    IrrepSet apply(const IrrepSet &set);

   private:
    ClassFunction v_;
    IrrepSet base_;
    bool base_linear_;
    std::vector<std::optional<IrrepSet>> cache_;
};

/// I(V), I(V^2), ... until the full set is reached (absorbing), a subset repeats, or
/// the step cap is hit.
struct PowerTrace {
    enum class Status { reached_full, cycle_detected, cap_hit };

    /// sets[t - 1] = I(V^t).
    std::vector<IrrepSet> sets;
    Status status = Status::cap_hit;
    /// For cycle_detected: I(V^(t + period)) = I(V^t) for all t >= cycle_start.
    int cycle_start = 0;
    int period = 0;

    /// I(V^t) for any t >= 1, extended through the absorbing or periodic tail.
    IrrepSet at(int t) const;
    /// First t with I(V^t) = Irr(G), if any.
    std::optional<int> first_full() const;
};

std::string to_string(PowerTrace::Status status);

PowerTrace power_trace(const ClassFunction &v, int max_steps = 256);
PowerTrace power_trace(SupportMap &map, int max_steps = 256);
IrrepSet power_support(const ClassFunction &v, int t);

}  // namespace symoracle

#endif

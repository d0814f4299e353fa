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

#ifndef SYMORACLE_CHARACTER_TABLE_HPP
#define SYMORACLE_CHARACTER_TABLE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "symoracle/cyclotomic.hpp"
#include "symoracle/group.hpp"

namespace symoracle {

/// Column data. Tables built from a group mirror ConjugacyClasses; loaded tables may carry
/// only sizes and orders.
struct ClassInfo {
    std::uint64_t size = 1;
    int order = 1;
    std::string label;
};

struct Character {
    std::string label;
    /// One value per class, all in Q(zeta_conductor) of the owning table.
    std::vector<Cyclotomic> values;
    /// For linear characters: values[c] = zeta^exponents[c] with zeta = zeta_conductor.
    std::optional<std::vector<std::int32_t>> exponents;

    std::int64_t degree() const {
        return values.front().to_integer();
    }
    bool is_linear() const {
        return exponents.has_value();
    }
};

/// Irreducible characters of one group. Construction does not validate; call
/// validate_table (the loaders do).
class CharacterTable {
   public:
    CharacterTable(std::string group_name, std::vector<ClassInfo> classes, int conductor,
                   std::vector<Character> characters,
                   std::shared_ptr<const ConjugacyClasses> conjugacy = nullptr);

    const std::string &group_name() const {
        return group_name_;
    }
    std::uint64_t group_order() const {
        return group_order_;
    }
    int conductor() const {
        return conductor_;
    }
    const std::vector<ClassInfo> &classes() const {
        return classes_;
    }
    std::size_t num_classes() const {
        return classes_.size();
    }
    const std::vector<Character> &characters() const {
        return characters_;
    }
    std::size_t size() const {
        return characters_.size();
    }
    const Character &operator[](std::size_t i) const {
        return characters_[i];
    }
    std::optional<std::size_t> find(const std::string &label) const;
    /// Throws ParameterError on unknown labels.
    std::size_t index_of(const std::string &label) const;
    /// The linear character with the given exponent vector, if any.
    std::optional<std::size_t> find_linear(const std::vector<std::int32_t> &exponents) const;
    bool all_linear() const {
        return linear_count_ == characters_.size();
    }

    /// Null for tables loaded without group data.
    const std::shared_ptr<const ConjugacyClasses> &conjugacy() const {
        return conjugacy_;
    }
    /// Throws UnsupportedError when the table has no group attached.
    const ConjugacyClasses &require_conjugacy() const;

   private:
    std::string group_name_;
    std::vector<ClassInfo> classes_;
    int conductor_;
    std::vector<Character> characters_;
    std::shared_ptr<const ConjugacyClasses> conjugacy_;
    std::uint64_t group_order_ = 0;
    std::size_t linear_count_ = 0;
    std::unordered_map<std::string, std::size_t> by_label_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_exponents_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

/// Fills Character::exponents for every degree-1 character whose values are roots of unity.
void detect_linear(std::vector<Character> &characters, int conductor);

/// Rows ordered by partition, [n] first; columns by cycle type, [1^n] first.
TablePtr char_table_symmetric(int n);
/// Abelian products and function groups: psi_{a_1,...,a_r}(x) = zeta^(sum a_i x_i m / m_i).
TablePtr char_table_abelian(std::shared_ptr<const Group> group);
TablePtr char_table_abelian(const std::vector<int> &orders);
/// chi_{a,b} (p^(2n) linear characters) followed by theta_{c}, c = 1..p-1.
TablePtr char_table_heisenberg(int p, int n);
/// chi_{++}, chi_{+-} (and chi_{-+}, chi_{--} for even n) then rho_{j}.
TablePtr char_table_dihedral(int n);
/// Dispatches on the family; alternating and explicit tables are unsupported.
TablePtr char_table_for(const GroupSpec &spec);

/// Named violations of the table identities; empty when the table is valid.
std::vector<std::string> validate_table(const CharacterTable &table);

/// Whether two tables agree after some permutation of rows and columns (labels ignored).
bool same_table_up_to_permutation(const CharacterTable &a, const CharacterTable &b);

}  // namespace symoracle

#endif

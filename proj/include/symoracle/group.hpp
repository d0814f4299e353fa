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

#ifndef SYMORACLE_GROUP_HPP
#define SYMORACLE_GROUP_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "symoracle/error.hpp"
#include "symoracle/partition.hpp"

namespace symoracle {

/// Family-specific encoding:
///   symmetric/alternating: image array, g(i) = e[i], composition (gh)(i) = g(h(i));
///   dihedral(n): {k, s} for r^k s^s acting on vertices v -> k + (-1)^s v;
///   abelian/function group: coordinate tuple;
///   heisenberg(p, n): x_1..x_n, y_1..y_n, z;
///   explicit table: {index}.
using Element = std::vector<std::int32_t>;

enum class Family {
    symmetric,
    alternating,
    dihedral,
    abelian_product,
    heisenberg,
    function_group,
    explicit_table,
};

struct GroupSpec {
    Family family = Family::symmetric;
    int n = 0;                           // S_n, A_n, D_n, Heisenberg dimension
    int p = 0;                           // Heisenberg prime
    int k = 0;                           // function group arity
    std::vector<int> orders;             // cyclic orders (abelian, function group codomain)
    std::vector<std::vector<int>> table; // explicit multiplication table, row-major

    static GroupSpec symmetric(int n);
    static GroupSpec alternating(int n);
    static GroupSpec dihedral(int n);
    static GroupSpec abelian(std::vector<int> orders);
    static GroupSpec heisenberg(int p, int n);
    static GroupSpec function_group(int k, std::vector<int> orders);
    static GroupSpec explicit_table(std::vector<std::vector<int>> table);

    /// Short name such as "S4", "A5", "D6", "Z2xZ2", "heisenberg:3,1", "fun:3,2".
    std::string name() const;

    friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

/// Parses the short names produced by GroupSpec::name (plus "abelian:2,2").
GroupSpec parse_group_name(const std::string &text);

bool is_prime(int p);

class Group {
   public:
    explicit Group(GroupSpec spec);

    const GroupSpec &spec() const {
        return spec_;
    }
    std::string name() const {
        return spec_.name();
    }
    std::uint64_t order() const {
        return order_;
    }
    bool is_abelian() const;

    Element identity() const;
    Element multiply(const Element &a, const Element &b) const;
    Element inverse(const Element &a) const;
    Element conjugate(const Element &g, const Element &x) const;  // g x g^-1
    Element power(const Element &a, std::int64_t e) const;
    int element_order(const Element &a) const;
    std::vector<Element> generators() const;
    bool contains(const Element &a) const;

    /// Injective packing of an element into 64 bits.
    std::uint64_t key(const Element &a) const;
    std::string format(const Element &a) const;
    /// Per-coordinate value bound; coordinate i of a valid element lies in [0, radix[i]).
    const std::vector<int> &radix() const {
        return radix_;
    }

   private:
    GroupSpec spec_;
    std::uint64_t order_ = 1;
    std::vector<int> radix_;  // per-coordinate radix for key()
};

/// All elements, identity first, in a deterministic per-family order.
/// cap == 0 means default_caps().enumeration; exceeding it throws SizeError.
std::vector<Element> enumerate(const Group &group, std::uint64_t cap = 0);

/// Element -> enumeration index.
class ElementIndex {
   public:
    ElementIndex(const Group &group, std::vector<Element> elements);
    const std::vector<Element> &elements() const {
        return elements_;
    }
    std::size_t size() const {
        return elements_.size();
    }
    std::size_t index_of(const Element &e) const;
    std::optional<std::size_t> find(const Element &e) const;

   private:
    const Group *group_;
    std::vector<Element> elements_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

struct ConjugacyClass {
    Element representative;
    std::uint64_t size = 0;
    int element_order = 1;
    std::string label;
};

/// Conjugacy classes with identity at index 0. Symmetric groups are classified by cycle
/// type without enumeration; every other family by orbit computation under conjugation
/// by generators, with the least element (enumeration order) as representative.
class ConjugacyClasses {
   public:
    static ConjugacyClasses compute(std::shared_ptr<const Group> group);

    const Group &group() const {
        return *group_;
    }
    std::shared_ptr<const Group> group_ptr() const {
        return group_;
    }
    const std::vector<ConjugacyClass> &classes() const {
        return classes_;
    }
    std::size_t size() const {
        return classes_.size();
    }
    const ConjugacyClass &operator[](std::size_t i) const {
        return classes_[i];
    }
    int identity_index() const {
        return 0;
    }
    /// lcm of element orders.
    std::uint64_t exponent() const {
        return exponent_;
    }
    std::size_t class_of(const Element &e) const;
    /// Cycle types of the columns (symmetric groups only).
    const std::vector<Partition> &cycle_types() const {
        return cycle_types_;
    }

   private:
    std::shared_ptr<const Group> group_;
    std::vector<ConjugacyClass> classes_;
    std::uint64_t exponent_ = 1;
    std::unordered_map<std::uint64_t, std::size_t> class_by_key_;
    std::map<Partition, std::size_t> class_by_cycle_type_;
    std::vector<Partition> cycle_types_;
};

Partition cycle_type(const Element &permutation);

using Embedding = std::function<Element(const Element &)>;

/// H <= G via a verified injective homomorphism together with the class fusion map.
class ClassFusion {
   public:
    /// Throws EmbeddingError when the map is not an injective homomorphism into G.
    static ClassFusion build(const ConjugacyClasses &group_classes,
                             const ConjugacyClasses &subgroup_classes, Embedding embedding);

    const Group &group() const {
        return *group_;
    }
    const Group &subgroup() const {
        return *subgroup_;
    }
    std::shared_ptr<const Group> group_ptr() const {
        return group_;
    }
    std::shared_ptr<const Group> subgroup_ptr() const {
        return subgroup_;
    }
    const Embedding &embedding() const {
        return embedding_;
    }
    /// H class index -> G class index.
    const std::vector<std::size_t> &fusion() const {
        return fusion_;
    }
    std::uint64_t index() const {
        return index_;
    }
    /// Whether the homomorphism and injectivity checks covered every element.
    bool exhaustive() const {
        return exhaustive_;
    }

   private:
    std::shared_ptr<const Group> group_;
    std::shared_ptr<const Group> subgroup_;
    Embedding embedding_;
    std::vector<std::size_t> fusion_;
    std::uint64_t index_ = 1;
    bool exhaustive_ = true;
};

/// A permutation action on {0, ..., domain_size - 1}.
class GroupAction {
   public:
    GroupAction(std::shared_ptr<const Group> group, std::size_t domain_size,
                std::function<std::size_t(const Element &, std::size_t)> act, std::string name);

    const Group &group() const {
        return *group_;
    }
    std::shared_ptr<const Group> group_ptr() const {
        return group_;
    }
    std::size_t domain_size() const {
        return domain_size_;
    }
    std::size_t act(const Element &g, std::size_t point) const {
        return act_(g, point);
    }
    const std::string &name() const {
        return name_;
    }
    std::size_t fixed_points(const Element &g) const;
    /// Identity acts trivially and (s g).w = s.(g.w) for generators s; exhaustive when
    /// |G| * |domain| <= 10^6, sampled otherwise. Returns the first violation.
    std::optional<std::string> check() const;

   private:
    std::shared_ptr<const Group> group_;
    std::size_t domain_size_;
    std::function<std::size_t(const Element &, std::size_t)> act_;
    std::string name_;
};

/// The standard action of each family: S_n/A_n on n points, D_n on n vertices, Heisenberg
/// on Z_p^(n+2) column vectors, Fun([k], G) on the k*|G| pairs (i, b) by b -> b + f(i).
GroupAction natural_action(std::shared_ptr<const Group> group);

/// Left multiplication on the enumerated elements.
GroupAction regular_action(std::shared_ptr<const Group> group);

// Named subgroups used throughout: embeddings plus the subgroup spec.
struct NamedSubgroup {
    GroupSpec subgroup;
    Embedding embedding;
    std::string name;
};

/// {e, (12)(34), (13)(24), (14)(23)} <= S_4 as Z2xZ2 with generators (12)(34), (13)(24).
NamedSubgroup klein_four_in_s4();
NamedSubgroup alternating_in_symmetric(int n);
/// A_3 as Z3 generated by the 3-cycle 0->1->2->0.
NamedSubgroup cyclic_a3_in_s3();
/// The center {(0,0,z)} as Z_p.
NamedSubgroup heisenberg_center(int p, int n);
/// {f : sum f(i) = 0} <= Fun([k], G), identified with G^(k-1).
NamedSubgroup zero_sum_subgroup(int k, const std::vector<int> &orders);
NamedSubgroup trivial_subgroup(const GroupSpec &group);

}  // namespace symoracle

#endif

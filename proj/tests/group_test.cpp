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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace symoracle;

namespace {

std::vector<GroupSpec> small_groups() {
    return {GroupSpec::symmetric(3),      GroupSpec::symmetric(4),
            GroupSpec::alternating(4),    GroupSpec::alternating(5),
            GroupSpec::dihedral(5),       GroupSpec::dihedral(6),
            GroupSpec::abelian({2, 3}),   GroupSpec::heisenberg(2, 1),
            GroupSpec::heisenberg(3, 1),  GroupSpec::function_group(3, {2}),
            GroupSpec::heisenberg(2, 2)};
}

// Class sizes by conjugating with every element.
std::multiset<std::uint64_t> brute_class_sizes(const Group &g) {
    auto elements = enumerate(g);
    std::set<std::uint64_t> seen;
    std::multiset<std::uint64_t> sizes;
    for (const auto &x : elements) {
        if (seen.count(g.key(x))) {
            continue;
        }
        std::set<std::uint64_t> orbit;
        for (const auto &y : elements) {
            orbit.insert(g.key(g.conjugate(y, x)));
        }
        seen.insert(orbit.begin(), orbit.end());
        sizes.insert(orbit.size());
    }
    return sizes;
}

}  // namespace

TEST(group, group_axioms_hold_on_small_families) {
    for (const auto &spec : small_groups()) {
        Group g(spec);
        auto elements = enumerate(g);
        ASSERT_EQ(elements.size(), g.order()) << g.name();
        EXPECT_EQ(elements.front(), g.identity());
        std::set<std::uint64_t> keys;
        for (const auto &x : elements) {
            EXPECT_TRUE(g.contains(x));
            keys.insert(g.key(x));
            EXPECT_EQ(g.multiply(x, g.inverse(x)), g.identity()) << g.name();
            EXPECT_EQ(g.power(x, g.element_order(x)), g.identity());
        }
        EXPECT_EQ(keys.size(), elements.size());
        for (std::size_t i = 0; i < elements.size(); i += 3) {
            for (std::size_t j = 0; j < elements.size(); j += 5) {
                const auto &a = elements[i];
                const auto &b = elements[j];
                const auto &c = elements[(i + j) % elements.size()];
                EXPECT_EQ(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c)));
            }
        }
    }
}

TEST(group, generators_generate) {
    for (const auto &spec : small_groups()) {
        Group g(spec);
        std::set<std::uint64_t> reached{g.key(g.identity())};
        std::vector<Element> frontier{g.identity()};
        while (!frontier.empty()) {
            Element x = frontier.back();
            frontier.pop_back();
            for (const auto &s : g.generators()) {
                Element y = g.multiply(s, x);
                if (reached.insert(g.key(y)).second) {
                    frontier.push_back(y);
                }
            }
        }
        EXPECT_EQ(reached.size(), g.order()) << g.name();
    }
}

TEST(group, classes_match_brute_force) {
    for (const auto &spec : small_groups()) {
        auto g = std::make_shared<const Group>(spec);
        auto classes = ConjugacyClasses::compute(g);
        std::multiset<std::uint64_t> sizes;
        for (const auto &c : classes.classes()) {
            sizes.insert(c.size);
        }
        EXPECT_EQ(sizes, brute_class_sizes(*g)) << g->name();
        EXPECT_EQ(classes[0].representative, g->identity());
        for (const auto &x : enumerate(*g)) {
            std::size_t c = classes.class_of(x);
            EXPECT_EQ(classes.class_of(g->conjugate(g->generators().front(), x)), c);
        }
    }
}

TEST(group, class_counts) {
    auto count = [](GroupSpec s) {
        return ConjugacyClasses::compute(std::make_shared<const Group>(s)).size();
    };
    EXPECT_EQ(count(GroupSpec::symmetric(5)), 7u);
    EXPECT_EQ(count(GroupSpec::symmetric(10)), 42u);
    EXPECT_EQ(count(GroupSpec::alternating(5)), 5u);
    EXPECT_EQ(count(GroupSpec::dihedral(6)), 6u);
    EXPECT_EQ(count(GroupSpec::dihedral(7)), 5u);
    EXPECT_EQ(count(GroupSpec::heisenberg(3, 1)), 11u);
    EXPECT_EQ(count(GroupSpec::heisenberg(2, 1)), 5u);
}

TEST(group, symmetric_classes_without_enumeration) {
    auto g = std::make_shared<const Group>(GroupSpec::symmetric(12));
    auto classes = ConjugacyClasses::compute(g);
    EXPECT_EQ(classes.size(), 77u);
    EXPECT_EQ(classes.exponent(), 27720u);
}

TEST(group, parse_names) {
    for (const auto &spec : small_groups()) {
        EXPECT_EQ(parse_group_name(spec.name()), spec);
    }
    EXPECT_EQ(parse_group_name("abelian:2,2"), GroupSpec::abelian({2, 2}));
    EXPECT_THROW(parse_group_name("Q8"), ParseError);
    EXPECT_THROW(Group(GroupSpec::heisenberg(4, 1)), ParameterError);
}

TEST(group, cycle_notation) {
    Group s4(GroupSpec::symmetric(4));
    EXPECT_EQ(s4.format({1, 0, 3, 2}), "(1 2)(3 4)");
    EXPECT_EQ(s4.format(s4.identity()), "()");
}

TEST(group, explicit_table_checks_axioms) {
    Group z3(GroupSpec::explicit_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
    EXPECT_TRUE(z3.is_abelian());
    EXPECT_EQ(z3.inverse({1}), Element{2});
    EXPECT_THROW(Group(GroupSpec::explicit_table({{0, 1}, {1, 1}})), ParameterError);
    EXPECT_THROW(Group(GroupSpec::explicit_table({{1, 0}, {0, 1}})), ParameterError);
}

TEST(fusion, named_subgroups_embed) {
    struct Case {
        GroupSpec group;
        NamedSubgroup sub;
    };
    std::vector<Case> cases = {
        {GroupSpec::symmetric(4), klein_four_in_s4()},
        {GroupSpec::symmetric(5), alternating_in_symmetric(5)},
        {GroupSpec::symmetric(3), cyclic_a3_in_s3()},
        {GroupSpec::heisenberg(3, 1), heisenberg_center(3, 1)},
        {GroupSpec::function_group(4, {2, 3}), zero_sum_subgroup(4, {2, 3})},
        {GroupSpec::function_group(1, {3}), zero_sum_subgroup(1, {3})},
        {GroupSpec::dihedral(5), trivial_subgroup(GroupSpec::dihedral(5))},
    };
    for (const auto &c : cases) {
        auto g = std::make_shared<const Group>(c.group);
        auto h = std::make_shared<const Group>(c.sub.subgroup);
        auto fusion = ClassFusion::build(ConjugacyClasses::compute(g),
                                         ConjugacyClasses::compute(h), c.sub.embedding);
        EXPECT_EQ(fusion.index() * h->order(), g->order());
        EXPECT_TRUE(fusion.exhaustive());
    }
}

TEST(fusion, klein_lands_in_double_transpositions) {
    auto g = std::make_shared<const Group>(GroupSpec::symmetric(4));
    auto h = std::make_shared<const Group>(GroupSpec::abelian({2, 2}));
    auto gc = ConjugacyClasses::compute(g);
    auto fusion = ClassFusion::build(gc, ConjugacyClasses::compute(h), klein_four_in_s4().embedding);
    EXPECT_EQ(gc[fusion.fusion()[0]].label, "[1,1,1,1]");
    for (std::size_t i = 1; i < 4; ++i) {
        EXPECT_EQ(gc[fusion.fusion()[i]].label, "[2,2]");
    }
}

TEST(fusion, rejects_bad_maps) {
    auto g = std::make_shared<const Group>(GroupSpec::symmetric(3));
    auto h = std::make_shared<const Group>(GroupSpec::abelian({3}));
    auto gc = ConjugacyClasses::compute(g);
    auto hc = ConjugacyClasses::compute(h);
    Embedding collapse = [](const Element &) { return Element{0, 1, 2}; };
    EXPECT_THROW(ClassFusion::build(gc, hc, collapse), EmbeddingError);
    Embedding not_hom = [](const Element &x) {
        return x[0] == 0 ? Element{0, 1, 2} : x[0] == 1 ? Element{1, 0, 2} : Element{0, 2, 1};
    };
    EXPECT_THROW(ClassFusion::build(gc, hc, not_hom), EmbeddingError);
}

TEST(action, natural_actions_are_actions) {
    for (const auto &spec : small_groups()) {
        if (spec.family == Family::abelian_product) {
            continue;
        }
        auto g = std::make_shared<const Group>(spec);
        auto action = natural_action(g);
        EXPECT_EQ(action.check(), std::nullopt) << g->name();
        EXPECT_EQ(action.fixed_points(g->identity()), action.domain_size());
    }
}

TEST(action, regular_action_fixes_nothing) {
    auto g = std::make_shared<const Group>(GroupSpec::dihedral(5));
    auto action = regular_action(g);
    EXPECT_EQ(action.check(), std::nullopt);
    for (const auto &x : enumerate(*g)) {
        EXPECT_EQ(action.fixed_points(x), x == g->identity() ? 10u : 0u);
    }
}

TEST(enumeration, cap_is_enforced) {
    Group g(GroupSpec::symmetric(8));
    EXPECT_THROW(enumerate(g, 1000), SizeError);
}

TEST(action, tables_and_products_have_no_natural_action) {
    auto g = std::make_shared<const Group>(GroupSpec::abelian({2, 2}));
    EXPECT_THROW(natural_action(g), UnsupportedError);
}

TEST(group, inverse_reverses_products_on_random_pairs) {
    std::mt19937_64 rng(11);
    for (const auto &spec : small_groups()) {
        Group g(spec);
        auto elements = enumerate(g);
        std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
        for (int trial = 0; trial < 10'000; ++trial) {
            const auto &a = elements[pick(rng)];
            const auto &b = elements[pick(rng)];
            Element ab = g.multiply(a, b);
            ASSERT_TRUE(g.contains(ab));
            ASSERT_EQ(g.inverse(ab), g.multiply(g.inverse(b), g.inverse(a)));
        }
    }
}

// (x, y, z) as the unitriangular matrix with x in row 0, y in the last column, z in the corner.
TEST(group, heisenberg_product_matches_matrix_product) {
    for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
        Group g(GroupSpec::heisenberg(p, n));
        auto dim = static_cast<std::size_t>(n + 2);
        auto to_matrix = [&](const Element &e) {
            std::vector<std::vector<int>> m(dim, std::vector<int>(dim, 0));
            for (std::size_t i = 0; i < dim; ++i) {
                m[i][i] = 1;
            }
            for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
                m[0][1 + i] = e[i];
                m[1 + i][dim - 1] = e[static_cast<std::size_t>(n) + i];
            }
            m[0][dim - 1] = e[2 * static_cast<std::size_t>(n)];
            return m;
        };
        auto elements = enumerate(g);
        for (std::size_t i = 0; i < elements.size(); i += 3) {
            for (std::size_t j = 0; j < elements.size(); j += 7) {
                auto a = to_matrix(elements[i]);
                auto b = to_matrix(elements[j]);
                std::vector<std::vector<int>> c(dim, std::vector<int>(dim, 0));
                for (std::size_t r = 0; r < dim; ++r) {
                    for (std::size_t s = 0; s < dim; ++s) {
                        for (std::size_t k = 0; k < dim; ++k) {
                            c[r][s] = (c[r][s] + a[r][k] * b[k][s]) % p;
                        }
                    }
                }
                EXPECT_EQ(c, to_matrix(g.multiply(elements[i], elements[j])));
            }
        }
    }
}

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

#include <gtest/gtest.h>

#include <set>

using namespace symoracle;

namespace {

ClassFunction natural(const TablePtr &t) {
    return perm_character(natural_action(t->require_conjugacy().group_ptr()), t);
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
    }
    return r;
}

ClassFunction literal_power(const ClassFunction &v, int t) {
    ClassFunction out = v;
    for (int s = 1; s < t; ++s) {
        out = tensor(out, v);
    }
    return out;
}

}  // namespace

TEST(perm_character, heisenberg_fixed_point_formula) {
    for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
        auto t = char_table_heisenberg(p, n);
        auto v = natural(t);
        const auto &cc = t->require_conjugacy();
        for (std::size_t c = 0; c < cc.size(); ++c) {
            const auto &g = cc[c].representative;
            auto un = static_cast<std::size_t>(n);
            bool x = std::any_of(g.begin(), g.begin() + static_cast<long>(un), [](int a) { return a != 0; });
            bool y = std::any_of(g.begin() + static_cast<long>(un), g.begin() + static_cast<long>(2 * un),
                                 [](int a) { return a != 0; });
            std::int64_t expected = c == 0 ? ipow(p, n + 2) : (x && y) ? ipow(p, n) : ipow(p, n + 1);
            EXPECT_EQ(v[c], Cyclotomic(expected));
        }
    }
}

TEST(perm_character, symmetric_natural) {
    auto t = char_table_symmetric(3);
    auto v = natural(t);
    EXPECT_EQ(v.at_identity(), Cyclotomic(3));
    EXPECT_EQ(v[t->require_conjugacy().class_of({1, 2, 0})], Cyclotomic(0));
    EXPECT_EQ(inner_product(v, ClassFunction::trivial(t)), 1);
}

TEST(inner_product, heisenberg_multiplicities) {
    for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        auto t = char_table_heisenberg(p, n);
        auto v = natural(t);
        auto chi00 = ClassFunction::irreducible(t, 0);
        EXPECT_EQ(inner_product(v, chi00), Rational(ipow(p, n) + 2 * (p - 1)));
        for (int c = 1; c < p; ++c) {
            auto theta = ClassFunction::irreducible(t, t->index_of("theta_{" + std::to_string(c) + "}"));
            EXPECT_EQ(inner_product(v, theta), Rational(p - 1));
        }
        // The fast and general paths agree.
        auto mults = multiplicities(v);
        for (std::size_t i = 0; i < t->size(); ++i) {
            EXPECT_EQ(mults[i], inner_product(v, ClassFunction::irreducible(t, i)));
        }
    }
}

TEST(tensor, identities) {
    auto s4 = char_table_symmetric(4);
    auto sign = ClassFunction::irreducible(s4, s4->index_of("[1,1,1,1]"));
    EXPECT_EQ(tensor(sign, sign), ClassFunction::trivial(s4));
    auto chi = ClassFunction::irreducible(s4, 1);
    EXPECT_EQ(tensor(chi, ClassFunction::trivial(s4)), chi);
    auto h = char_table_heisenberg(3, 1);
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            auto lhs = tensor(ClassFunction::irreducible(h, h->index_of("chi_{" + std::to_string(a) + ",0}")),
                              ClassFunction::irreducible(h, h->index_of("chi_{0," + std::to_string(b) + "}")));
            auto rhs = ClassFunction::irreducible(
                h, h->index_of("chi_{" + std::to_string(a) + "," + std::to_string(b) + "}"));
            EXPECT_EQ(lhs, rhs);
        }
    }
}

TEST(restriction, klein_four_in_s4) {
    auto g = char_table_symmetric(4);
    auto h = char_table_abelian(std::vector<int>{2, 2});
    auto fusion = fusion_between(*g, *h, klein_four_in_s4().embedding);
    EXPECT_EQ(fusion.index(), 6u);
    auto down = restrict(ClassFunction::irreducible(g, g->index_of("[2,1,1]")), fusion, h);
    EXPECT_EQ(support(down).to_string(), "{psi_{0,1}, psi_{1,0}, psi_{1,1}}");
    EXPECT_EQ(restrict(ClassFunction::trivial(g), fusion, h), ClassFunction::trivial(h));
    for (std::size_t i = 0; i < g->size(); ++i) {
        EXPECT_EQ(restrict(ClassFunction::irreducible(g, i), fusion, h).at_identity(),
                  (*g)[i].values[0]);
    }
    // psi_{0,0} induced = [4] + 2[2,2] + [1^4].
    std::size_t y = h->index_of("psi_{0,0}");
    std::vector<std::pair<std::string, std::int64_t>> expected = {
        {"[4]", 1}, {"[3,1]", 0}, {"[2,2]", 2}, {"[2,1,1]", 0}, {"[1,1,1,1]", 1}};
    for (const auto &[label, mult] : expected) {
        EXPECT_EQ(induced_multiplicity(y, h, g->index_of(label), g, fusion), mult) << label;
    }
}

// Reciprocity against the explicit induced character, plus the induced dimension count.
TEST(restriction, frobenius_reciprocity) {
    struct Case {
        TablePtr g;
        TablePtr h;
        Embedding embedding;
    };
    std::vector<Case> cases = {
        {char_table_symmetric(4), char_table_abelian(std::vector<int>{2, 2}), klein_four_in_s4().embedding},
        {char_table_heisenberg(2, 1), char_table_abelian(std::vector<int>{2}), heisenberg_center(2, 1).embedding},
        {char_table_heisenberg(3, 1), char_table_abelian(std::vector<int>{3}), heisenberg_center(3, 1).embedding},
        {char_table_heisenberg(5, 1), char_table_abelian(std::vector<int>{5}), heisenberg_center(5, 1).embedding},
        {char_table_symmetric(3), char_table_abelian(std::vector<int>{3}), cyclic_a3_in_s3().embedding},
    };
    for (const auto &c : cases) {
        auto fusion = fusion_between(*c.g, *c.h, c.embedding);
        for (std::size_t y = 0; y < c.h->size(); ++y) {
            auto up = induce(ClassFunction::irreducible(c.h, y), fusion, c.g);
            std::int64_t dim = 0;
            for (std::size_t chi = 0; chi < c.g->size(); ++chi) {
                std::int64_t m = induced_multiplicity(y, c.h, chi, c.g, fusion);
                EXPECT_EQ(Rational(m), inner_product(up, ClassFunction::irreducible(c.g, chi)));
                dim += m * (*c.g)[chi].degree();
            }
            EXPECT_EQ(dim, static_cast<std::int64_t>(fusion.index()) * (*c.h)[y].degree());
        }
    }
}

TEST(restriction, heisenberg_center_induces_copies_of_theta) {
    for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
        auto g = char_table_heisenberg(p, n);
        auto h = char_table_abelian(std::vector<int>{p});
        auto fusion = fusion_between(*g, *h, heisenberg_center(p, n).embedding);
        EXPECT_EQ(fusion.index(), static_cast<std::uint64_t>(ipow(p, 2 * n)));
        for (int c = 1; c < p; ++c) {
            auto s = support(induce(ClassFunction::irreducible(h, static_cast<std::size_t>(c)), fusion, g));
            EXPECT_EQ(s.count(), 1u);
            std::size_t theta = s.indices().front();
            EXPECT_EQ(induced_multiplicity(static_cast<std::size_t>(c), h, theta, g, fusion), ipow(p, n));
        }
    }
}

TEST(support, named_examples) {
    auto s4 = char_table_symmetric(4);
    EXPECT_EQ(support(natural(s4)).to_string(), "{[4], [3,1]}");
    auto h = char_table_heisenberg(3, 1);
    auto s = support(natural(h));
    for (std::size_t i = 0; i < h->size(); ++i) {
        const auto &label = (*h)[i].label;
        bool both_nonzero = label.rfind("chi_", 0) == 0 && label[5] != '0' && label[7] != '0';
        EXPECT_EQ(s.contains(i), !both_nonzero) << label;
    }
    for (auto t : {s4, h, char_table_dihedral(6)}) {
        EXPECT_TRUE(support(ClassFunction::regular(t)).is_full());
    }
    auto bad = ClassFunction::from_irreducibles(s4, {{0, 1}, {4, -1}});
    EXPECT_THROW(support(bad), NotACharacterError);
}

TEST(power_support, symmetric_first_row_rule) {
    for (int n = 3; n <= 7; ++n) {
        auto t = char_table_symmetric(n);
        auto trace = power_trace(natural(t));
        EXPECT_EQ(trace.status, PowerTrace::Status::reached_full);
        EXPECT_EQ(trace.first_full(), n - 1);
        for (int s = 1; s <= n; ++s) {
            auto set = trace.at(s);
            for (std::size_t i = 0; i < t->size(); ++i) {
                Partition lambda = Partition::parse((*t)[i].label);
                EXPECT_EQ(set.contains(i), lambda.first() >= n - s);
            }
        }
    }
    auto s4 = char_table_symmetric(4);
    EXPECT_EQ(power_support(natural(s4), 2).complement().to_string(), "{[1,1,1,1]}");
}

TEST(power_support, branching_rule) {
    for (int n = 2; n <= 7; ++n) {
        auto t = char_table_symmetric(n);
        auto v = natural(t);
        for (std::size_t i = 0; i < t->size(); ++i) {
            auto s = support(tensor(ClassFunction::irreducible(t, i), v));
            std::set<std::string> expected;
            for (const auto &mu : add_remove_box(Partition::parse((*t)[i].label))) {
                expected.insert(mu.to_string());
            }
            auto labels = s.labels();
            EXPECT_EQ(std::set<std::string>(labels.begin(), labels.end()), expected);
        }
    }
}

TEST(power_support, agrees_with_literal_powers) {
    std::vector<ClassFunction> reps;
    for (auto t : {char_table_symmetric(4), char_table_symmetric(5), char_table_dihedral(5),
                   char_table_dihedral(8), char_table_heisenberg(3, 1), char_table_heisenberg(2, 2)}) {
        reps.push_back(natural(t));
    }
    auto z = char_table_abelian(std::make_shared<const Group>(GroupSpec::function_group(3, {2})));
    reps.push_back(natural(z));
    auto z55 = char_table_abelian(std::vector<int>{5, 5});
    reps.push_back(ClassFunction::from_irreducibles(z55, {{0, 1}, {1, 2}, {6, 1}}));
    reps.push_back(ClassFunction::from_irreducibles(z55, {{7, 1}}));
    for (const auto &v : reps) {
        SupportMap map(v);
        IrrepSet current = map.base();
        for (int t = 1; t <= 4; ++t) {
            EXPECT_EQ(current, support(literal_power(v, t))) << v.table().group_name() << " t=" << t;
            EXPECT_EQ(power_support(v, t), current);
            current = map.apply(current);
        }
    }
}

TEST(power_support, monotone_when_trivial_present) {
    for (auto t : {char_table_symmetric(6), char_table_heisenberg(3, 1), char_table_dihedral(7)}) {
        auto trace = power_trace(natural(t));
        for (std::size_t s = 1; s < trace.sets.size(); ++s) {
            EXPECT_TRUE(trace.sets[s - 1].is_subset_of(trace.sets[s]));
        }
    }
}

TEST(power_trace, cycles) {
    auto z2 = char_table_abelian(std::vector<int>{2});
    auto trace = power_trace(ClassFunction::trivial(z2));
    EXPECT_EQ(trace.status, PowerTrace::Status::cycle_detected);
    EXPECT_EQ(trace.cycle_start, 1);
    EXPECT_EQ(trace.period, 1);
    EXPECT_EQ(trace.at(50).to_string(), "{psi_{0}}");
    EXPECT_FALSE(trace.first_full().has_value());
    // The sign character alone alternates between the two irreducibles.
    auto sign = power_trace(ClassFunction::irreducible(z2, 1));
    EXPECT_EQ(sign.status, PowerTrace::Status::cycle_detected);
    EXPECT_EQ(sign.period, 2);
    EXPECT_EQ(sign.at(7).to_string(), "{psi_{1}}");
    EXPECT_EQ(sign.at(8).to_string(), "{psi_{0}}");
}

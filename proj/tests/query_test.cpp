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

#include "symoracle/query.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace symoracle;

namespace {

std::string data_path(const std::string &name) {
    return std::string(SYMORACLE_TEST_DATA_DIR) + "/" + name;
}

ClassFunction natural(const TablePtr &t) {
    return perm_character(natural_action(t->require_conjugacy().group_ptr()), t);
}

CosetEngine engine_for(const TablePtr &g, const NamedSubgroup &named, TablePtr h = nullptr) {
    if (!h) {
        h = char_table_for(named.subgroup);
    }
    return CosetEngine(g, h, fusion_between(*g, *h, named.embedding));
}

// Rank modulo a large prime of the |G| x |G| Gram matrix fix(g^-1 h)^t: the dimension of the
// span of the operators of the t-th tensor power, computed without any character theory.
std::int64_t operator_span_dimension(const GroupAction &action, int t) {
    const std::uint64_t mod = 1'000'000'007ULL;
    auto elements = enumerate(action.group());
    const std::size_t n = elements.size();
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        auto inv = action.group().inverse(elements[i]);
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t f = action.fixed_points(action.group().multiply(inv, elements[j]));
            std::uint64_t v = 1;
            for (int s = 0; s < t; ++s) {
                v = v * f % mod;
            }
            m[i][j] = v;
        }
    }
    auto power = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        for (b %= mod; e; e >>= 1, b = b * b % mod) {
            if (e & 1) {
                r = r * b % mod;
            }
        }
        return r;
    };
    std::int64_t rank = 0;
    for (std::size_t col = 0, row = 0; col < n && row < n; ++col) {
        std::size_t pivot = row;
        while (pivot < n && m[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            continue;
        }
        std::swap(m[pivot], m[row]);
        std::uint64_t inv = power(m[row][col], mod - 2);
        for (std::size_t r = row + 1; r < n; ++r) {
            if (m[r][col] == 0) {
                continue;
            }
            std::uint64_t f = m[r][col] * inv % mod;
            for (std::size_t c = col; c < n; ++c) {
                m[r][c] = (m[r][c] + mod - f * m[row][c] % mod) % mod;
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Shortest base by trying every ordered tuple of each length.
int brute_force_base(const GroupAction &action) {
    auto elements = enumerate(action.group());
    const std::size_t points = action.domain_size();
    for (int len = 0;; ++len) {
        std::vector<std::size_t> tuple(static_cast<std::size_t>(len), 0);
        while (true) {
            std::size_t fixing = 0;
            for (const auto &g : elements) {
                bool fixes = true;
                for (auto w : tuple) {
                    fixes = fixes && action.act(g, w) == w;
                }
                fixing += fixes;
            }
            if (fixing == 1) {
                return len;
            }
            std::size_t i = 0;
            while (i < tuple.size() && ++tuple[i] == points) {
                tuple[i++] = 0;
            }
            if (i == tuple.size()) {
                break;
            }
        }
    }
}

ProblemSpec make_spec(GroupSpec g, Mode mode = Mode::sod, std::string subgroup = "") {
    ProblemSpec s;
    s.group = std::move(g);
    s.mode = mode;
    s.subgroup = std::move(subgroup);
    return s;
}

}  // namespace

TEST(sod_success, named_values) {
    auto s4 = char_table_symmetric(4);
    EXPECT_EQ(sod_success(natural(s4), 1), Rational(5, 12));
    EXPECT_EQ(sod_success(natural(s4), 3), Rational(1));
    for (auto t : {s4, char_table_heisenberg(3, 1), char_table_dihedral(5)}) {
        EXPECT_EQ(sod_success(ClassFunction::regular(t), 1), Rational(1));
    }
    EXPECT_EQ(sod_success(natural(char_table_heisenberg(2, 1)), 1), Rational(7, 8));
    EXPECT_EQ(sod_success(natural(char_table_heisenberg(3, 1)), 1), Rational(23, 27));
    EXPECT_EQ(sod_success(natural(char_table_heisenberg(3, 1)), 2), Rational(1));
}

// d_V equals the dimension of the operator span, computed by elimination.
TEST(sod_success, matches_operator_span_dimension) {
    for (const auto &spec : {GroupSpec::symmetric(3), GroupSpec::symmetric(4), GroupSpec::dihedral(5),
                             GroupSpec::dihedral(6), GroupSpec::heisenberg(2, 1), GroupSpec::heisenberg(3, 1)}) {
        auto t = char_table_for(spec);
        auto action = natural_action(t->require_conjugacy().group_ptr());
        auto v = perm_character(action, t);
        for (int s = 1; s <= 3; ++s) {
            EXPECT_EQ(degree_square_sum(power_support(v, s)), Rational(operator_span_dimension(action, s)))
                << spec.name() << " t=" << s;
        }
    }
}

TEST(coset_success, klein_four) {
    auto s4 = char_table_symmetric(4);
    auto engine = engine_for(s4, klein_four_in_s4());
    auto v = natural(s4);
    auto one = engine.success(power_support(v, 1));
    EXPECT_EQ(one.probability, Rational(1, 2));
    std::vector<std::string> labels;
    for (auto y : one.maximizers) {
        labels.push_back(engine.subgroup_table()[y].label);
    }
    EXPECT_EQ(labels, (std::vector<std::string>{"psi_{0,1}", "psi_{1,0}", "psi_{1,1}"}));
    EXPECT_FALSE(engine.zero_error(power_support(v, 1)));
    EXPECT_EQ(engine.success(power_support(v, 2)).probability, Rational(1));
    EXPECT_TRUE(engine.zero_error(power_support(v, 2)));
}

TEST(coset_success, heisenberg_center_single_query) {
    for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
        auto g = char_table_heisenberg(p, n);
        auto engine = engine_for(g, heisenberg_center(p, n));
        auto s = power_support(natural(g), 1);
        EXPECT_EQ(engine.success(s).probability, Rational(1));
        EXPECT_TRUE(engine.zero_error(s));
    }
}

TEST(coset_success, trivial_subgroup_is_identification) {
    for (const auto &spec : {GroupSpec::symmetric(3), GroupSpec::symmetric(4), GroupSpec::dihedral(5),
                             GroupSpec::dihedral(6), GroupSpec::heisenberg(2, 1), GroupSpec::heisenberg(3, 1),
                             GroupSpec::abelian({2, 4})}) {
        auto g = char_table_for(spec);
        auto engine = engine_for(g, trivial_subgroup(spec));
        ClassFunction v = spec.family == Family::abelian_product
                              ? ClassFunction::from_irreducibles(g, {{0, 1}, {1, 1}, {4, 1}})
                              : natural(g);
        for (int t = 1; t <= 4; ++t) {
            auto s = power_support(v, t);
            EXPECT_EQ(engine.success(s).probability, sod_success(s)) << spec.name() << " t=" << t;
        }
    }
}

// Probability one exactly when some induced irrep lives inside the support.
TEST(coset_success, certainty_iff_zero_error_criterion) {
    struct Case {
        TablePtr g;
        NamedSubgroup h;
    };
    std::vector<Case> cases = {
        {char_table_symmetric(4), klein_four_in_s4()},
        {char_table_symmetric(3), cyclic_a3_in_s3()},
        {char_table_heisenberg(3, 1), heisenberg_center(3, 1)},
        {char_table_for(GroupSpec::function_group(3, {2})), zero_sum_subgroup(3, {2})},
        {char_table_for(GroupSpec::function_group(4, {3})), zero_sum_subgroup(4, {3})},
    };
    for (auto &c : cases) {
        auto engine = engine_for(c.g, c.h);
        auto v = natural(c.g);
        for (int t = 1; t <= 4; ++t) {
            auto s = power_support(v, t);
            auto res = engine.success(s);
            EXPECT_EQ(res.probability == 1, engine.zero_error(s));
            EXPECT_GE(res.probability, 0);
            EXPECT_LE(res.probability, 1);
            // Every maximizer meets the support when the value is positive.
            if (res.probability > 0) {
                for (auto y : res.maximizers) {
                    std::int64_t overlap = 0;
                    for (auto chi : s.indices()) {
                        overlap += engine.multiplicity(chi, y);
                    }
                    EXPECT_GT(overlap, 0);
                }
            }
        }
    }
}

TEST(coset_success, abelian_formula_agrees) {
    for (int k = 1; k <= 4; ++k) {
        for (int m = 2; m <= 5; ++m) {
            auto spec = GroupSpec::function_group(k, {m});
            auto g = char_table_for(spec);
            auto named = zero_sum_subgroup(k, {m});
            auto engine = engine_for(g, named);
            auto v = natural(g);
            for (int t = 1; t <= k + 1; ++t) {
                auto s = power_support(v, t);
                EXPECT_EQ(engine.success(s).probability, abelian_coset_success(*g, engine.fusion(), s))
                    << spec.name() << " t=" << t;
            }
        }
    }
    auto g = char_table_abelian(std::vector<int>{2, 2, 2});
    auto h = char_table_abelian(std::vector<int>{2});
    CosetEngine engine(g, h, fusion_between(*g, *h, [](const Element &x) { return Element{x[0], 0, 0}; }));
    auto v = ClassFunction::from_irreducibles(g, {{0, 1}, {1, 1}, {2, 1}, {4, 1}});
    for (int t = 1; t <= 3; ++t) {
        auto s = power_support(v, t);
        EXPECT_EQ(engine.success(s).probability, abelian_coset_success(*g, engine.fusion(), s));
    }
}

TEST(partition_path, symmetric_agrees_with_tables) {
    for (int n = 3; n <= 7; ++n) {
        auto t = char_table_symmetric(n);
        auto trace = power_trace(natural(t));
        auto supports = symmetric_power_supports(n, n);
        for (int s = 1; s <= n; ++s) {
            std::set<Partition> from_table;
            for (const auto &label : trace.at(s).labels()) {
                from_table.insert(Partition::parse(label));
            }
            EXPECT_EQ(from_table, supports[static_cast<std::size_t>(s - 1)]);
            EXPECT_EQ(partition_degree_square_sum(supports[static_cast<std::size_t>(s - 1)]) /
                          Rational(static_cast<unsigned long>(factorial(n))),
                      sod_success(trace.at(s)));
        }
        EXPECT_EQ(trace.first_full(), n - 1);
    }
}

TEST(partition_path, alternating_bounds_and_gamma) {
    for (int n = 4; n <= 8; ++n) {
        std::optional<int> gamma;
        for (int t = 1; t <= n; ++t) {
            auto r = alternating_sod_success(n, t);
            EXPECT_LE(r.symmetric, r.alternating);
            EXPECT_LE(r.alternating, 2 * r.symmetric);
            EXPECT_LE(r.alternating, 1);
            if (!gamma && r.alternating == 1) {
                gamma = t;
            }
        }
        EXPECT_EQ(gamma, n - static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))));
    }
    EXPECT_EQ(alternating_sod_success(4, 2).alternating, Rational(1));
    EXPECT_THROW(alternating_sod_success(3, 1), ParameterError);
}

// A_4 through its loaded table and A_4..A_6 through the operator-span dimension.
TEST(partition_path, alternating_independent_oracles) {
    auto a4 = load_char_table_file(data_path("a4_table.json"));
    auto v = natural(a4);
    for (int t = 1; t <= 3; ++t) {
        EXPECT_EQ(sod_success(v, t), alternating_sod_success(4, t).alternating);
    }
    for (int n = 4; n <= 6; ++n) {
        auto group = std::make_shared<Group>(GroupSpec::alternating(n));
        auto action = natural_action(group);
        for (int t = 1; t <= 2; ++t) {
            Rational expected = Rational(operator_span_dimension(action, t)) /
                                Rational(static_cast<unsigned long>(group->order()));
            EXPECT_EQ(alternating_sod_success(n, t).alternating, expected) << "A" << n << " t=" << t;
        }
    }
}

TEST(partition_path, sign_rule) {
    for (int n = 3; n <= 8; ++n) {
        for (int t = 1; t <= n; ++t) {
            std::vector<std::string> labels;
            auto r = sign_coset_success(n, t, &labels);
            EXPECT_EQ(r.probability, t < n / 2 ? Rational(1, 2) : Rational(1)) << n << " " << t;
            EXPECT_EQ(labels.size(), r.maximizers.size());
        }
    }
    // The parity problem through real tables: A_3 as Z3 and A_4 from file.
    auto s3 = char_table_symmetric(3);
    auto e3 = engine_for(s3, cyclic_a3_in_s3());
    EXPECT_EQ(e3.success(power_support(natural(s3), 1)).probability, sign_coset_success(3, 1).probability);
    auto s4 = char_table_symmetric(4);
    auto a4 = load_char_table_file(data_path("a4_table.json"));
    auto e4 = engine_for(s4, alternating_in_symmetric(4), a4);
    for (int t = 1; t <= 3; ++t) {
        EXPECT_EQ(e4.success(power_support(natural(s4), t)).probability, sign_coset_success(4, t).probability);
    }
}

TEST(classical_base_size, families) {
    for (int n = 3; n <= 7; ++n) {
        auto g = std::make_shared<Group>(GroupSpec::symmetric(n));
        EXPECT_EQ(classical_base_size(natural_action(g)), n - 1);
    }
    for (int n = 4; n <= 7; ++n) {
        auto g = std::make_shared<Group>(GroupSpec::alternating(n));
        EXPECT_EQ(classical_base_size(natural_action(g)), n - 2);
    }
    for (int n = 3; n <= 8; ++n) {
        auto g = std::make_shared<Group>(GroupSpec::dihedral(n));
        EXPECT_EQ(classical_base_size(natural_action(g)), 2);
    }
    for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
        auto g = std::make_shared<Group>(GroupSpec::heisenberg(p, n));
        EXPECT_EQ(classical_base_size(natural_action(g)), n + 1);
    }
}

TEST(classical_base_size, matches_brute_force) {
    for (const auto &spec : {GroupSpec::symmetric(4), GroupSpec::alternating(5), GroupSpec::dihedral(6),
                             GroupSpec::heisenberg(2, 1), GroupSpec::function_group(2, {3})}) {
        auto g = std::make_shared<Group>(spec);
        auto action = natural_action(g);
        EXPECT_EQ(classical_base_size(action), brute_force_base(action)) << spec.name();
    }
    auto g = std::make_shared<Group>(GroupSpec::abelian({6}));
    EXPECT_EQ(classical_base_size(regular_action(g)), 1);
}

TEST(classical_base_size, rejects_unfaithful) {
    auto g = std::make_shared<Group>(GroupSpec::symmetric(3));
    GroupAction parity(g, 2, [](const Element &e, std::size_t w) {
        int inversions = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                inversions += e[i] > e[j];
            }
        }
        return inversions % 2 ? 1 - w : w;
    }, "parity");
    EXPECT_THROW(classical_base_size(parity), ParameterError);
}

TEST(solve, coset_example) {
    auto r = solve(make_spec(GroupSpec::symmetric(4), Mode::coset, "klein4"), 1, 2);
    ASSERT_EQ(r.steps.size(), 2u);
    EXPECT_EQ(to_string(r.steps[0].probability), "1/2");
    EXPECT_EQ(to_string(r.steps[1].probability), "1/1");
    EXPECT_EQ(r.steps[0].maximizers.front(), "psi_{0,1}");
    EXPECT_EQ(r.gamma, 2);
    EXPECT_EQ(r.gamma_bounded, 2);
    EXPECT_EQ(r.base_size, 3);
}

TEST(solve, heisenberg_identification) {
    auto r = solve(make_spec(GroupSpec::heisenberg(3, 1)), 1, 2);
    EXPECT_EQ(r.steps[0].probability, Rational(23, 27));
    EXPECT_EQ(r.steps[1].probability, Rational(1));
    EXPECT_EQ(r.gamma, 2);
    EXPECT_EQ(r.gamma_bounded, 1);
    EXPECT_EQ(r.base_size, 2);
    EXPECT_EQ(r.trace_status, "reached-full");
}

TEST(solve, partition_routes) {
    auto s8 = solve(make_spec(GroupSpec::symmetric(8)), 1, 8, false);
    EXPECT_EQ(s8.gamma, 7);
    EXPECT_EQ(s8.steps[0].probability, make_rational(1 + 49, 40320));
    auto a5 = solve(make_spec(GroupSpec::alternating(5)), 1, 3);
    EXPECT_EQ(a5.gamma, 2);
    EXPECT_EQ(a5.base_size, 3);
    auto sign = solve(make_spec(GroupSpec::symmetric(6), Mode::coset, "alternating"), 1, 4);
    EXPECT_EQ(sign.gamma, 3);
    EXPECT_EQ(sign.steps[1].probability, Rational(1, 2));
    EXPECT_EQ(sign.steps[2].probability, Rational(1));
    // Small degrees go through the tables and must give the same answers.
    for (int n = 3; n <= 7; ++n) {
        auto r = solve(make_spec(GroupSpec::symmetric(n)), 1, n, false);
        auto supports = symmetric_power_supports(n, n);
        for (int t = 1; t <= n; ++t) {
            EXPECT_EQ(r.steps[static_cast<std::size_t>(t - 1)].probability,
                      partition_degree_square_sum(supports[static_cast<std::size_t>(t - 1)]) /
                          Rational(static_cast<unsigned long>(factorial(n))));
        }
    }
}

TEST(solve, small_alternating_cases) {
    auto a3 = solve(make_spec(GroupSpec::alternating(3)), 1, 1);
    EXPECT_EQ(a3.steps[0].probability, Rational(1));
    EXPECT_NE(a3.provenance.front().find("abelian special case"), std::string::npos);
    auto s3 = solve(make_spec(GroupSpec::symmetric(3), Mode::coset, "alternating"), 1, 1);
    EXPECT_EQ(s3.gamma, 1);
    ProblemSpec a4 = make_spec(GroupSpec::alternating(4));
    a4.table_file = data_path("a4_table.json");
    auto r = solve(a4, 1, 3);
    EXPECT_EQ(r.gamma, 2);
    EXPECT_EQ(r.steps[1].probability, Rational(1));
    ProblemSpec sign4 = make_spec(GroupSpec::symmetric(4), Mode::coset, "alternating");
    sign4.subgroup_table_file = data_path("a4_table.json");
    EXPECT_EQ(solve(sign4, 1, 3).gamma, 2);
}

TEST(solve, infinite_complexity_has_witness) {
    ProblemSpec spec = make_spec(GroupSpec::abelian({2}));
    spec.representation = "psi_{1}";
    auto r = solve(spec, 1, 3);
    EXPECT_FALSE(r.gamma.has_value());
    EXPECT_EQ(r.gamma_witness, (std::vector<std::string>{"{psi_{1}}", "{psi_{0}}"}));
    EXPECT_EQ(r.trace_status, "cycle-detected");
    EXPECT_EQ(r.steps[0].probability, Rational(1, 2));
}

TEST(solve, representation_forms) {
    ProblemSpec sum = make_spec(GroupSpec::symmetric(4));
    sum.representation = "[4] + [3,1]";
    ProblemSpec values = make_spec(GroupSpec::symmetric(4));
    auto s4 = char_table_symmetric(4);
    std::vector<std::string> v;
    auto perm = natural(s4);
    for (const auto &x : perm.values()) {
        v.push_back(x.to_string());
    }
    values.character_values = v;
    auto base = solve(make_spec(GroupSpec::symmetric(4)), 1, 3, false);
    EXPECT_EQ(solve(sum, 1, 3, false).steps, base.steps);
    EXPECT_EQ(solve(values, 1, 3, false).steps, base.steps);
    ProblemSpec doubled = make_spec(GroupSpec::symmetric(4));
    doubled.representation = "2[4] + 3 [2,2]";
    EXPECT_EQ(solve(doubled, 1, 1, false).steps[0].support, (std::vector<std::string>{"[4]", "[2,2]"}));
    ProblemSpec dihedral = make_spec(GroupSpec::dihedral(4));
    dihedral.representation = "chi_{++} + chi_{+-}";
    EXPECT_EQ(solve(dihedral, 1, 1, false).steps[0].support.size(), 2u);
}

TEST(solve, generator_images_define_subgroups) {
    ProblemSpec spec = make_spec(GroupSpec::symmetric(4), Mode::coset);
    spec.subgroup_group = GroupSpec::abelian({2, 2});
    auto named = klein_four_in_s4();
    Group h(GroupSpec::abelian({2, 2}));
    for (const auto &gen : h.generators()) {
        spec.generator_images.push_back(named.embedding(gen));
    }
    auto r = solve(spec, 1, 2);
    EXPECT_EQ(r.steps[0].probability, Rational(1, 2));
    EXPECT_EQ(r.steps[1].probability, Rational(1));
    spec.generator_images[0] = {1, 0, 2, 3};
    spec.generator_images[1] = {1, 2, 0, 3};
    EXPECT_THROW(solve(spec, 1, 1), EmbeddingError);
}

TEST(solve, rejects_bad_requests) {
    ProblemSpec spec = make_spec(GroupSpec::symmetric(4));
    spec.threshold = Rational(1, 2);
    EXPECT_THROW(solve(spec, 1, 1), ParameterError);
    spec.threshold = Rational(2, 3);
    EXPECT_THROW(solve(spec, 2, 1), ParameterError);
    EXPECT_THROW(solve(make_spec(GroupSpec::symmetric(4), Mode::coset, "center"), 1, 1), ParameterError);
    EXPECT_THROW(solve(make_spec(GroupSpec::symmetric(4), Mode::coset, "nope"), 1, 1), ParameterError);
    spec.representation = "[5]";
    EXPECT_THROW(solve(spec, 1, 1), ParameterError);
}

TEST(json, problem_spec_round_trip) {
    ProblemSpec spec = make_spec(GroupSpec::heisenberg(3, 1), Mode::coset, "center");
    spec.threshold = Rational(3, 4);
    auto back = problem_spec_from_json(problem_spec_to_json(spec));
    EXPECT_EQ(back.group, spec.group);
    EXPECT_EQ(back.subgroup, "center");
    EXPECT_EQ(back.mode, Mode::coset);
    EXPECT_EQ(back.threshold, Rational(3, 4));
    ProblemSpec custom = make_spec(GroupSpec::symmetric(4), Mode::coset);
    custom.subgroup_group = GroupSpec::abelian({2});
    custom.generator_images = {{1, 0, 3, 2}};
    auto doc = problem_spec_to_json(custom);
    auto again = problem_spec_from_json(doc);
    EXPECT_EQ(again.generator_images, custom.generator_images);
    EXPECT_EQ(solve(again, 1, 1).steps, solve(custom, 1, 1).steps);
    EXPECT_THROW(problem_spec_from_json(Json::parse(R"({"mode": "sod"})")), ParseError);
}

TEST(json, report_round_trip) {
    for (const auto &spec : {make_spec(GroupSpec::symmetric(4), Mode::coset, "klein4"),
                             make_spec(GroupSpec::alternating(6)),
                             make_spec(GroupSpec::heisenberg(2, 1))}) {
        auto r = solve(spec, 1, 3);
        auto doc = report_to_json(r);
        EXPECT_EQ(report_from_json(Json::parse(doc.dump())), r);
        // Text and JSON carry the same rationals.
        auto text = report_to_text(r);
        for (const auto &s : doc["steps"]) {
            EXPECT_NE(text.find("P=" + s["probability"].get<std::string>()), std::string::npos);
        }
    }
}

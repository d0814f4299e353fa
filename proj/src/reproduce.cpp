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

#include "symoracle/reproduce.hpp"

#include <cstdio>
#include <functional>
#include <map>

#include "symoracle/families.hpp"
#include "symoracle/matrix_verify.hpp"
#include "symoracle/query.hpp"

namespace symoracle {

namespace {

class Recorder {
   public:
    explicit Recorder(std::string target) : target_(std::move(target)) {
    }

    void exact(const std::string &item, const Rational &expected, const Rational &computed) {
        push(item, to_string(expected), to_string(computed), expected == computed);
    }
    void integer(const std::string &item, std::int64_t expected, const std::optional<int> &computed) {
        push(item, std::to_string(expected), computed ? std::to_string(*computed) : "inf",
             computed && *computed == expected);
    }
    void holds(const std::string &item, bool ok, const std::string &detail = "") {
        push(item, "true", ok ? "true" : "false" + (detail.empty() ? "" : " (" + detail + ")"), ok);
    }
    void numeric(const std::string &item, const VerificationResult &r) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12f", r.simulated);
        push(item, to_string(r.formula) + " within 1e-8", buf, r.pass);
    }

    std::vector<Check> take() {
        return std::move(checks_);
    }

   private:
    void push(const std::string &item, std::string expected, std::string computed, bool pass) {
        checks_.push_back({target_, item, std::move(expected), std::move(computed), pass});
    }

    std::string target_;
    std::vector<Check> checks_;
};

ProblemSpec spec_for(GroupSpec group, Mode mode = Mode::sod, std::string subgroup = "") {
    ProblemSpec s;
    s.group = std::move(group);
    s.mode = mode;
    s.subgroup = std::move(subgroup);
    return s;
}

std::shared_ptr<const Group> group_of(const TablePtr &t) {
    return t->require_conjugacy().group_ptr();
}

void symmetric_identification(Recorder &rec) {
    for (int n = 3; n <= 7; ++n) {
        auto table_path = solve(spec_for(GroupSpec::symmetric(n)), 1, n, false);
        rec.integer("S" + std::to_string(n) + " exact complexity (table path)", sn_gamma(n), table_path.gamma);
        auto supports = symmetric_power_supports(n, n);
        bool agree = true;
        std::optional<int> gamma;
        for (int t = 1; t <= n; ++t) {
            Rational p = partition_degree_square_sum(supports[static_cast<std::size_t>(t - 1)]) /
                         Rational(static_cast<unsigned long>(factorial(n)));
            agree = agree && p == table_path.steps[static_cast<std::size_t>(t - 1)].probability;
            if (!gamma && p == 1) {
                gamma = t;
            }
        }
        rec.integer("S" + std::to_string(n) + " exact complexity (partition path)", sn_gamma(n), gamma);
        rec.holds("S" + std::to_string(n) + " table and partition paths agree for every t", agree);
    }
    auto s8 = solve(spec_for(GroupSpec::symmetric(8)), 1, 1, false);
    rec.integer("S8 exact complexity (partition path)", sn_gamma(8), s8.gamma);
    for (int n = 2; n <= 8; ++n) {
        auto supports = symmetric_power_supports(n, n);
        for (int t = 1; t < n; ++t) {
            rec.exact("S" + std::to_string(n) + " t=" + std::to_string(t) + " squared-degree sum vs LIS count",
                      Rational(static_cast<unsigned long>(lis_count(n, n - t))),
                      partition_degree_square_sum(supports[static_cast<std::size_t>(t - 1)]));
        }
    }
}

void alternating_identification(Recorder &rec) {
    for (int n = 4; n <= 8; ++n) {
        auto r = solve(spec_for(GroupSpec::alternating(n)), 1, 1, false);
        rec.integer("A" + std::to_string(n) + " exact complexity", an_gamma(n), r.gamma);
        bool bounded = true;
        for (int t = 1; t <= n; ++t) {
            auto s = alternating_sod_success(n, t);
            bounded = bounded && s.symmetric <= s.alternating && s.alternating <= 2 * s.symmetric;
        }
        rec.holds("A" + std::to_string(n) + " S_n value <= A_n value <= twice S_n value", bounded);
    }
}

void heisenberg_identification(Recorder &rec) {
    for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {5, 1}, {2, 2}}) {
        std::string name = "heisenberg(" + std::to_string(p) + "," + std::to_string(n) + ")";
        auto r = solve(spec_for(GroupSpec::heisenberg(p, n)), 1, 2, false);
        rec.exact(name + " one query", heisenberg_sod(p, n), r.steps[0].probability);
        rec.integer(name + " exact complexity", 2, r.gamma);
    }
}

void heisenberg_center(Recorder &rec) {
    for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
        std::string name = "heisenberg(" + std::to_string(p) + "," + std::to_string(n) + ") mod center";
        auto r = solve(spec_for(GroupSpec::heisenberg(p, n), Mode::coset, "center"), 1, 1, false);
        rec.exact(name + " one query", Rational(1), r.steps[0].probability);
    }
    auto g = char_table_heisenberg(2, 1);
    auto named = symoracle::heisenberg_center(2, 1);
    auto h = char_table_for(named.subgroup);
    auto result = verify_instance("heisenberg-center", g, h, named.embedding, natural_action(group_of(g)), 1,
                                  Rational(1));
    rec.numeric("heisenberg(2,1) mod center simulated", result);
}

void parity(Recorder &rec) {
    for (int n = 3; n <= 8; ++n) {
        auto r = solve(spec_for(GroupSpec::symmetric(n), Mode::coset, "alternating"), 1, n, false);
        rec.integer("S" + std::to_string(n) + " parity exact complexity", sign_complexity(n), r.gamma);
        bool guessing = true;
        for (const auto &step : r.steps) {
            if (step.t < sign_complexity(n)) {
                guessing = guessing && step.probability == Rational(1, 2);
            }
        }
        rec.holds("S" + std::to_string(n) + " parity success is 1/2 below the complexity", guessing);
    }
}

void klein_four(Recorder &rec) {
    auto r = solve(spec_for(GroupSpec::symmetric(4), Mode::coset, "klein4"), 1, 2, false);
    rec.exact("t=1", Rational(1, 2), r.steps[0].probability);
    rec.exact("t=2", Rational(1), r.steps[1].probability);
    auto g = char_table_symmetric(4);
    auto named = klein_four_in_s4();
    auto h = char_table_for(named.subgroup);
    for (int t = 1; t <= 2; ++t) {
        auto result = verify_instance("klein-four", g, h, named.embedding, natural_action(group_of(g)), t,
                                      r.steps[static_cast<std::size_t>(t - 1)].probability);
        rec.numeric("t=" + std::to_string(t) + " simulated", result);
    }
}

void interpolation(Recorder &rec) {
    for (auto [q, d] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
        auto v = interpolation_character(q, d);
        auto sizes = interpolation_sumset_sizes(q, d, 4);
        rec.exact("q=" + std::to_string(q) + " d=" + std::to_string(d) + " |Z_1|",
                  Rational(q * (q - 1) + 1), Rational(static_cast<unsigned long>(sizes[0])));
        for (int t = 1; t <= 4; ++t) {
            rec.exact("q=" + std::to_string(q) + " d=" + std::to_string(d) + " t=" + std::to_string(t),
                      interpolation_success(q, d, t), sod_success(v, t));
        }
    }
}

void group_summation_target(Recorder &rec) {
    for (int m = 2; m <= 5; ++m) {
        for (int k = 1; k <= 4; ++k) {
            auto spec = spec_for(GroupSpec::function_group(k, {m}), Mode::coset, "zero-sum");
            auto r = solve(spec, 1, k, false);
            for (const auto &step : r.steps) {
                rec.exact("m=" + std::to_string(m) + " k=" + std::to_string(k) + " t=" + std::to_string(step.t),
                          group_summation(m, k, step.t), step.probability);
            }
        }
    }
}

void van_dam_target(Recorder &rec) {
    for (int n = 1; n <= 6; ++n) {
        auto v = van_dam_character(n);
        for (int t = 1; t <= n; ++t) {
            rec.exact("n=" + std::to_string(n) + " t=" + std::to_string(t), van_dam(n, t), sod_success(v, t));
        }
    }
}

void base_sizes(Recorder &rec) {
    auto run = [&](const GroupSpec &spec, int expected) {
        auto g = std::make_shared<Group>(spec);
        rec.integer(spec.name(), expected, classical_base_size(natural_action(g)));
    };
    for (int n = 3; n <= 7; ++n) {
        run(GroupSpec::symmetric(n), n - 1);
    }
    for (int n = 4; n <= 7; ++n) {
        run(GroupSpec::alternating(n), n - 2);
    }
    for (int n = 3; n <= 8; ++n) {
        run(GroupSpec::dihedral(n), 2);
    }
    for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
        run(GroupSpec::heisenberg(p, n), n + 1);
    }
}

const std::map<std::string, std::function<void(Recorder &)>> &registry() {
    static const std::map<std::string, std::function<void(Recorder &)>> r = {
        {"symmetric-identification", symmetric_identification},
        {"alternating-identification", alternating_identification},
        {"heisenberg-identification", heisenberg_identification},
        {"heisenberg-center", heisenberg_center},
        {"parity", parity},
        {"klein-four", klein_four},
        {"interpolation", interpolation},
        {"group-summation", group_summation_target},
        {"van-dam", van_dam_target},
        {"base-sizes", base_sizes},
    };
    return r;
}

}  // namespace

const std::vector<std::string> &reproduce_targets() {
    static const std::vector<std::string> names = {
        "klein-four",     "heisenberg-identification", "heisenberg-center", "symmetric-identification",
        "alternating-identification", "parity", "van-dam", "group-summation", "interpolation", "base-sizes"};
    return names;
}

std::vector<Check> reproduce(const std::string &target) {
    auto it = registry().find(target);
    if (it == registry().end()) {
        std::string known;
        for (const auto &n : reproduce_targets()) {
            known += (known.empty() ? "" : ", ") + n;
        }
        throw ParameterError("unknown target '" + target + "' (known: " + known + ")");
    }
    Recorder rec(target);
    it->second(rec);
    return rec.take();
}

Json checks_to_json(const std::vector<Check> &checks) {
    Json doc = Json::array();
    for (const auto &c : checks) {
        doc.push_back({{"target", c.target},
                       {"item", c.item},
                       {"expected", c.expected},
                       {"computed", c.computed},
                       {"pass", c.pass}});
    }
    return doc;
}

}  // namespace symoracle

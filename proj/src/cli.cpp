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

#include "symoracle/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "symoracle/families.hpp"
#include "symoracle/matrix_verify.hpp"
#include "symoracle/query.hpp"
#include "symoracle/reproduce.hpp"

namespace symoracle {

namespace {

struct Options {
    std::string group;
    std::string subgroup;
    std::string rep = "natural";
    std::string t_range = "1..1";
    std::string threshold;
    std::string format = "text";
    std::string spec_file;
    std::string out_file;
    std::string table_file;
    std::string action = "natural";
    std::string formula;
    bool no_base_size = false;
    bool all = false;
    bool list = false;
    std::uint64_t seed = 1;
    std::vector<std::string> positional;
};

std::pair<int, int> parse_t_range(const std::string &text) {
    auto parse_int = [&](const std::string &part) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != part.size()) {
            throw ParseError("bad t-range '" + text + "' (expected N or A..B)");
        }
        return v;
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int t = parse_int(text);
        return {t, t};
    }
    int a = parse_int(text.substr(0, dots));
    int b = parse_int(text.substr(dots + 2));
    if (a < 1 || b < a) {
        throw ParameterError("empty t-range '" + text + "'");
    }
    return {a, b};
}

void emit(const Options &o, std::ostream &out, const Json &doc, const std::string &text) {
    if (o.format == "json") {
        out << doc.dump(2) << "\n";
    } else {
        out << text;
    }
    if (!o.out_file.empty()) {
        std::ofstream file(o.out_file);
        if (!file) {
            throw ParameterError("cannot write '" + o.out_file + "'");
        }
        file << doc.dump(2) << "\n";
    }
}

GroupSpec require_group(const Options &o) {
    if (o.group.empty()) {
        throw ParameterError("--group is required");
    }
    return parse_group_name(o.group);
}

// ---------------------------------------------------------------------------

int cmd_table(const Options &o, std::ostream &out) {
    TablePtr table;
    if (!o.table_file.empty()) {
        table = load_char_table_file(o.table_file);
    } else {
        table = char_table_for(require_group(o));
    }
    auto violations = validate_table(*table);
    if (!violations.empty()) {
        throw ValidationError(violations);
    }
    std::ostringstream text;
    text << "group " << table->group_name() << "  order " << table->group_order() << "  conductor "
         << table->conductor() << "\n";
    text << "classes:";
    for (const auto &c : table->classes()) {
        text << "  " << (c.label.empty() ? "?" : c.label) << "(" << c.size << ")";
    }
    text << "\n";
    for (const auto &chi : table->characters()) {
        text << chi.label << ":";
        for (const auto &v : chi.values) {
            text << "  " << v.to_string();
        }
        text << "\n";
    }
    emit(o, out, dump_char_table(*table), text.str());
    return kExitOk;
}

ProblemSpec build_spec(const Options &o, Mode mode) {
    ProblemSpec spec;
    if (!o.spec_file.empty()) {
        std::ifstream file(o.spec_file);
        if (!file) {
            throw ParameterError("cannot read '" + o.spec_file + "'");
        }
        Json doc;
        try {
            doc = Json::parse(file);
        } catch (const Json::exception &e) {
            throw ParseError(o.spec_file + ": " + e.what());
        }
        spec = problem_spec_from_json(doc);
        if (!o.group.empty()) {
            spec.group = parse_group_name(o.group);
        }
    } else {
        spec.group = require_group(o);
    }
    spec.mode = mode;
    if (!o.rep.empty() && (o.spec_file.empty() || o.rep != "natural")) {
        spec.representation = o.rep;
    }
    if (!o.subgroup.empty()) {
        spec.subgroup = o.subgroup;
        spec.subgroup_group.reset();
    }
    if (!o.table_file.empty()) {
        spec.table_file = o.table_file;
    }
    if (!o.threshold.empty()) {
        spec.threshold = parse_rational(o.threshold);
    }
    if (mode == Mode::coset && spec.subgroup.empty() && !spec.subgroup_group) {
        throw ParameterError("coset needs --subgroup or a subgroup in --spec");
    }
    return spec;
}

int cmd_query(const Options &o, Mode mode, std::ostream &out) {
    auto spec = build_spec(o, mode);
    auto [from, to] = parse_t_range(o.t_range);
    auto report = solve(spec, from, to, !o.no_base_size);
    emit(o, out, report_to_json(report), report_to_text(report));
    return kExitOk;
}

int cmd_base_size(const Options &o, std::ostream &out) {
    auto group = std::make_shared<Group>(require_group(o));
    GroupAction action = o.action == "regular"   ? regular_action(group)
                         : o.action == "natural" ? natural_action(group)
                                                 : throw ParameterError("--action must be natural or regular");
    int b = classical_base_size(action);
    Json doc = {{"group", group->name()}, {"action", o.action}, {"domain", action.domain_size()}, {"base_size", b}};
    emit(o, out, doc,
         "group " + group->name() + "  action " + o.action + "  base_size=" + std::to_string(b) + "\n");
    return kExitOk;
}

std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

int cmd_verify(const Options &o, std::ostream &out) {
    ProblemSpec spec;
    spec.group = require_group(o);
    spec.mode = Mode::coset;
    spec.subgroup = o.subgroup.empty() ? "trivial" : o.subgroup;
    if (o.rep != "natural" && o.rep != "regular") {
        throw ParameterError("verify needs --rep natural or regular");
    }
    spec.representation = o.rep;
    auto [from, to] = parse_t_range(o.t_range);
    auto report = solve(spec, from, to, false);

    auto g_table = char_table_for(spec.group);
    auto named = named_subgroup(spec);
    auto h_table = char_table_for(named.subgroup);
    auto group = g_table->require_conjugacy().group_ptr();
    auto action = o.rep == "regular" ? regular_action(group) : natural_action(group);

    Json doc = Json::array();
    std::ostringstream text;
    bool all_pass = true;
    for (const auto &step : report.steps) {
        Rational claimed = o.formula.empty() ? step.probability : parse_rational(o.formula);
        auto r = verify_instance(spec.group.name() + " / " + spec.subgroup, g_table, h_table, named.embedding,
                                 action, step.t, claimed, o.seed);
        all_pass = all_pass && r.pass;
        doc.push_back(verification_to_json(r));
        text << "t=" << step.t << "  formula=" << to_string(r.formula) << "  simulated=" << fixed(r.simulated)
             << "  delta=" << r.delta << "  " << (r.pass ? "PASS" : "FAIL") << "\n";
        for (const auto &f : r.failures) {
            text << "  failure: " << f << "\n";
        }
    }
    emit(o, out, doc, text.str());
    return all_pass ? kExitOk : kExitMismatch;
}

int cmd_reproduce(const Options &o, std::ostream &out) {
    if (o.list) {
        for (const auto &t : reproduce_targets()) {
            out << t << "\n";
        }
        return kExitOk;
    }
    std::vector<std::string> targets = o.all ? reproduce_targets() : o.positional;
    if (targets.empty()) {
        throw ParameterError("name a target, or pass --all or --list");
    }
    std::vector<Check> checks;
    for (const auto &t : targets) {
        auto part = reproduce(t);
        checks.insert(checks.end(), part.begin(), part.end());
    }
    std::size_t failed = std::count_if(checks.begin(), checks.end(), [](const Check &c) { return !c.pass; });
    std::ostringstream text;
    for (const auto &c : checks) {
        text << (c.pass ? "PASS" : "FAIL") << "  " << c.target << "  " << c.item << "  expected " << c.expected
             << "  computed " << c.computed << "\n";
    }
    text << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    emit(o, out, checks_to_json(checks), text.str());
    return failed == 0 ? kExitOk : kExitMismatch;
}

int cmd_families(const Options &o, std::ostream &out) {
    if (o.positional.empty()) {
        throw ParameterError(
            "families needs a name: van-dam N T, group-summation M K T, heisenberg P N, lis N L, "
            "lis-histogram N, interpolation Q D T, sumsets Q D T, complexity N");
    }
    const std::string &name = o.positional.front();
    std::vector<int> a;
    for (std::size_t i = 1; i < o.positional.size(); ++i) {
        try {
            a.push_back(std::stoi(o.positional[i]));
        } catch (const std::exception &) {
            throw ParseError("'" + o.positional[i] + "' is not an integer");
        }
    }
    auto arity = [&](std::size_t k) {
        if (a.size() != k) {
            throw ParameterError(name + " takes " + std::to_string(k) + " integer arguments");
        }
    };
    Json value;
    std::string text;
    auto set_rational = [&](const Rational &r) {
        value = to_string(r);
        text = to_string(r);
    };
    auto set_list = [&](const std::vector<std::uint64_t> &v) {
        value = v;
        for (auto x : v) {
            text += (text.empty() ? "" : " ") + std::to_string(x);
        }
    };
    if (name == "van-dam") {
        arity(2);
        set_rational(van_dam(a[0], a[1]));
    } else if (name == "group-summation") {
        arity(3);
        set_rational(group_summation(a[0], a[1], a[2]));
    } else if (name == "heisenberg") {
        arity(2);
        set_rational(heisenberg_sod(a[0], a[1]));
    } else if (name == "lis") {
        arity(2);
        value = lis_count(a[0], a[1]);
        text = std::to_string(lis_count(a[0], a[1]));
    } else if (name == "lis-histogram") {
        arity(1);
        set_list(lis_histogram(a[0]));
    } else if (name == "interpolation") {
        arity(3);
        set_rational(interpolation_success(a[0], a[1], a[2]));
    } else if (name == "sumsets") {
        arity(3);
        set_list(interpolation_sumset_sizes(a[0], a[1], a[2]));
    } else if (name == "complexity") {
        arity(1);
        value = {{"symmetric", sn_gamma(a[0])}, {"alternating", an_gamma(a[0])}, {"parity", sign_complexity(a[0])}};
        text = "symmetric=" + std::to_string(sn_gamma(a[0])) + " alternating=" + std::to_string(an_gamma(a[0])) +
               " parity=" + std::to_string(sign_complexity(a[0]));
    } else {
        throw ParameterError("unknown family '" + name + "'");
    }
    Json doc = {{"family", name}, {"arguments", a}, {"value", value}};
    emit(o, out, doc, text + "\n");
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact success probabilities and query complexities of group oracle problems", "symoracle"};
    app.require_subcommand(1, 1);
    Options o;

    auto common = [&](CLI::App *sub) {
        sub->add_option("--group", o.group, "Group name, e.g. S4, A5, D6, Z2xZ3, heisenberg:3,1, fun:3,2");
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", o.out_file, "Also write the JSON report to this file");
    };
    auto query = [&](CLI::App *sub) {
        common(sub);
        sub->add_option("--rep", o.rep, "natural, regular, or a sum of irreducibles such as \"[3] + [2,1]\"");
        sub->add_option("--t", o.t_range, "Query count N or range A..B");
        sub->add_option("--threshold", o.threshold, "Bounded-error threshold in (1/2, 1], default 2/3");
        sub->add_option("--spec", o.spec_file, "Problem specification JSON file");
        sub->add_option("--table-file", o.table_file, "Character table JSON file");
        sub->add_flag("--no-base-size", o.no_base_size, "Skip the classical base size");
    };

    auto *table = app.add_subcommand("table", "Print and validate a character table");
    common(table);
    table->add_option("--table-file", o.table_file, "Load the table from a JSON file instead");

    auto *sod = app.add_subcommand("sod", "Identify a hidden group element");
    query(sod);
    auto *coset = app.add_subcommand("coset", "Identify the coset of a hidden element");
    query(coset);
    coset->add_option("--subgroup", o.subgroup, "klein4, alternating, a3, center, zero-sum or trivial");

    auto *base = app.add_subcommand("base-size", "Classical base size of a permutation action");
    common(base);
    base->add_option("--action", o.action, "natural or regular");

    auto *verify = app.add_subcommand("verify", "Check formula values against a matrix simulation");
    common(verify);
    verify->add_option("--subgroup", o.subgroup, "Named subgroup (default trivial)");
    verify->add_option("--rep", o.rep, "natural or regular");
    verify->add_option("--t", o.t_range, "Query count N or range A..B");
    verify->add_option("--seed", o.seed, "Seed for the random-state check");
    verify->add_option("--formula", o.formula, "Check this value instead of the engine's");

    auto *repro = app.add_subcommand("reproduce", "Run the regression suite of known values");
    repro->add_option("targets", o.positional, "Targets to run");
    repro->add_flag("--all", o.all, "Run every target");
    repro->add_flag("--list", o.list, "List targets");
    repro->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    repro->add_option("--out", o.out_file, "Also write the JSON results to this file");

    auto *fam = app.add_subcommand("families", "Evaluate closed forms of the built-in problem families");
    fam->add_option("args", o.positional, "Family name followed by integer arguments");
    fam->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    fam->add_option("--out", o.out_file, "Also write the JSON result to this file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitSpecError;
    }

    try {
        if (table->parsed()) {
            return cmd_table(o, out);
        }
        if (sod->parsed()) {
            return cmd_query(o, Mode::sod, out);
        }
        if (coset->parsed()) {
            return cmd_query(o, Mode::coset, out);
        }
        if (base->parsed()) {
            return cmd_base_size(o, out);
        }
        if (verify->parsed()) {
            return cmd_verify(o, out);
        }
        if (repro->parsed()) {
            return cmd_reproduce(o, out);
        }
        return cmd_families(o, out);
    } catch (const SizeError &e) {
        err << "error: cap exceeded: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const OverflowError &e) {
        err << "error: cap exceeded: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const NumericalError &e) {
        err << "error: verification: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitSpecError;
    }
}

}  // namespace symoracle

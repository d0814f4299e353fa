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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace symoracle {

namespace {

Rational from_u64(std::uint64_t v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return Rational(z);
}

std::vector<std::size_t> label_order(const CharacterTable &t) {
    std::vector<std::size_t> order(t.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return t[a].label < t[b].label; });
    return order;
}

}  // namespace

Rational degree_square_sum(const IrrepSet &set) {
    mpz_class sum = 0;
    for (auto i : set.indices()) {
        mpz_class d = static_cast<long>(set.table()[i].degree());
        sum += d * d;
    }
    return Rational(sum);
}

Rational sod_success(const IrrepSet &support) {
    return degree_square_sum(support) / from_u64(support.table().group_order());
}

Rational sod_success(const ClassFunction &v, int t) {
    return sod_success(power_support(v, t));
}

// ---------------------------------------------------------------------------------------

CosetEngine::CosetEngine(TablePtr group_table, TablePtr subgroup_table, ClassFusion fusion)
    : group_table_(std::move(group_table)),
      subgroup_table_(std::move(subgroup_table)),
      fusion_(std::move(fusion)) {
    const std::size_t ng = group_table_->size();
    const std::size_t nh = subgroup_table_->size();
    mults_.assign(ng, std::vector<std::int64_t>(nh, 0));
    induced_support_.assign(nh, IrrepSet(group_table_));
    for (std::size_t chi = 0; chi < ng; ++chi) {
        auto down = restrict(ClassFunction::irreducible(group_table_, chi), fusion_, subgroup_table_);
        auto m = multiplicities(down);
        for (std::size_t y = 0; y < nh; ++y) {
            if (m[y].get_den() != 1 || m[y] < 0) {
                throw NotACharacterError("restriction of " + (*group_table_)[chi].label +
                                         " has multiplicity " + to_string(m[y]));
            }
            mults_[chi][y] = m[y].get_num().get_si();
            if (mults_[chi][y] > 0) {
                induced_support_[y].insert(chi);
            }
        }
    }
    label_order_ = label_order(*subgroup_table_);
}

CosetResult CosetEngine::success(const IrrepSet &support) const {
    CosetResult best;
    best.probability = -1;
    const Rational index = from_u64(fusion_.index());
    for (std::size_t y : label_order_) {
        std::int64_t num = 0;
        for (auto chi : support.indices()) {
            num += mults_[chi][y] * (*group_table_)[chi].degree();
        }
        Rational p = Rational(static_cast<long>(num)) /
                     (index * Rational(static_cast<long>((*subgroup_table_)[y].degree())));
        if (p > best.probability) {
            best.probability = p;
            best.maximizers = {y};
        } else if (p == best.probability) {
            best.maximizers.push_back(y);
        }
    }
    return best;
}

bool CosetEngine::zero_error(const IrrepSet &support) const {
    return std::any_of(induced_support_.begin(), induced_support_.end(),
                       [&](const IrrepSet &s) { return s.is_subset_of(support); });
}

Rational abelian_coset_success(const CharacterTable &group_table, const ClassFusion &fusion,
                               const IrrepSet &support) {
    if (!fusion.group().is_abelian()) {
        throw ParameterError("abelian coset formula needs an abelian group");
    }
    std::map<std::vector<std::string>, std::int64_t> classes;
    std::int64_t best = 0;
    for (auto chi : support.indices()) {
        std::vector<std::string> key;
        for (std::size_t target : fusion.fusion()) {
            key.push_back(group_table[chi].values[target].to_string(group_table.conductor()));
        }
        best = std::max(best, ++classes[key]);
    }
    return Rational(static_cast<long>(best)) / from_u64(fusion.index());
}

// ---------------------------------------------------------------------------------------

std::vector<std::set<Partition>> symmetric_power_supports(int n, int t_max) {
    if (n < 1 || n > kPartitionDegreeCap) {
        throw SizeError("the partition path is capped at degree " + std::to_string(kPartitionDegreeCap) + ", got " +
                        std::to_string(n));
    }
    std::vector<std::set<Partition>> out;
    std::set<Partition> current = {Partition({n})};
    for (int t = 1; t <= t_max; ++t) {
        std::set<Partition> next;
        for (const auto &lambda : current) {
            for (auto &mu : add_remove_box(lambda)) {
                next.insert(std::move(mu));
            }
        }
        current = std::move(next);
        out.push_back(current);
    }
    return out;
}

Rational partition_degree_square_sum(const std::set<Partition> &set) {
    mpz_class sum = 0;
    for (const auto &lambda : set) {
        mpz_class d = static_cast<unsigned long>(hook_length_dimension(lambda));
        sum += d * d;
    }
    return Rational(sum);
}

AlternatingSuccess alternating_sod_success(int n, int t) {
    if (n < 4) {
        throw ParameterError("alternating partition path needs n >= 4 (A_3 is abelian)");
    }
    if (t < 1) {
        throw ParameterError("query count must be positive");
    }
    const auto support = symmetric_power_supports(n, t).back();
    const Rational order = from_u64(factorial(n));
    AlternatingSuccess out;
    out.symmetric = partition_degree_square_sum(support) / order;

    mpz_class sum = 0;
    for (const auto &lambda : partitions_of(n)) {
        Partition dual = lambda.conjugate();
        mpz_class d = static_cast<unsigned long>(hook_length_dimension(lambda));
        if (lambda == dual) {
            // Two halves of degree d/2 each: 2 (d/2)^2 over n!/2.
            if (support.count(lambda)) {
                sum += d * d;
            }
        } else if (dual < lambda && (support.count(lambda) || support.count(dual))) {
            // One restricted irrep of degree d shared by the pair: d^2 over n!/2.
            sum += 2 * d * d;
        }
    }
    out.alternating = Rational(sum) / order;
    return out;
}

CosetResult sign_coset_success(int n, int t, std::vector<std::string> *maximizer_labels) {
    if (n < 2 || t < 1) {
        throw ParameterError("parity problem needs n >= 2 and t >= 1");
    }
    const auto support = symmetric_power_supports(n, t).back();
    struct Irrep {
        std::string label;
        Rational p;
    };
    std::vector<Irrep> irreps;
    for (const auto &lambda : partitions_of(n)) {
        Partition dual = lambda.conjugate();
        if (lambda == dual) {
            // Each half induces to chi_lambda alone.
            Rational p = support.count(lambda) ? 1 : 0;
            irreps.push_back({"W_" + lambda.to_string() + "^+", p});
            irreps.push_back({"W_" + lambda.to_string() + "^-", p});
        } else if (dual < lambda) {
            // Induces to chi_lambda + chi_dual.
            int hits = static_cast<int>(support.count(lambda) + support.count(dual));
            irreps.push_back({"W_" + lambda.to_string(), make_rational(hits, 2)});
        }
    }
    std::sort(irreps.begin(), irreps.end(), [](const Irrep &a, const Irrep &b) { return a.label < b.label; });
    CosetResult out;
    out.probability = -1;
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        if (irreps[i].p > out.probability) {
            out.probability = irreps[i].p;
            out.maximizers = {i};
        } else if (irreps[i].p == out.probability) {
            out.maximizers.push_back(i);
        }
    }
    if (maximizer_labels != nullptr) {
        maximizer_labels->clear();
        for (auto i : out.maximizers) {
            maximizer_labels->push_back(irreps[i].label);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------------------

namespace {

class BaseSearch {
   public:
    BaseSearch(std::size_t points, std::vector<std::vector<std::uint32_t>> images)
        : points_(points), images_(std::move(images)) {
    }

    std::vector<std::size_t> fixing(const std::vector<std::size_t> &alive, std::size_t w) const {
        std::vector<std::size_t> out;
        for (auto g : alive) {
            if (images_[g][w] == w) {
                out.push_back(g);
            }
        }
        return out;
    }

    int greedy(const std::vector<std::size_t> &all) const {
        auto alive = all;
        int length = 0;
        while (alive.size() > 1) {
            std::vector<std::size_t> best;
            bool first = true;
            for (std::size_t w = 0; w < points_; ++w) {
                auto next = fixing(alive, w);
                if (first || next.size() < best.size()) {
                    best = std::move(next);
                    first = false;
                }
            }
            alive = std::move(best);
            ++length;
        }
        return length;
    }

    bool exists(const std::vector<std::size_t> &alive, std::size_t start, int remaining) {
        if (alive.size() == 1) {
            return true;
        }
        if (remaining == 0) {
            return false;
        }
        // Each further point cuts the stabilizer by at most its orbit length <= |domain|.
        double bound = std::pow(static_cast<double>(points_), remaining);
        if (static_cast<double>(alive.size()) > bound) {
            return false;
        }
        for (std::size_t w = start; w < points_; ++w) {
            if (++nodes_ > budget_) {
                throw SizeError("base size search exceeded " + std::to_string(budget_) + " nodes");
            }
            auto next = fixing(alive, w);
            if (next.size() == alive.size()) {
                continue;  // w is fixed by everything left; it cannot help
            }
            if (exists(next, w + 1, remaining - 1)) {
                return true;
            }
        }
        return false;
    }

   private:
    std::size_t points_;
    std::vector<std::vector<std::uint32_t>> images_;
    std::uint64_t nodes_ = 0;
    std::uint64_t budget_ = 20'000'000;
};

}  // namespace

int classical_base_size(const GroupAction &action) {
    const Group &g = action.group();
    const std::size_t points = action.domain_size();
    if (g.order() * points > 50'000'000ULL) {
        throw SizeError("base size search needs |G| * |domain| <= 5e7");
    }
    auto elements = enumerate(g);
    std::vector<std::vector<std::uint32_t>> images(elements.size(), std::vector<std::uint32_t>(points));
    for (std::size_t i = 0; i < elements.size(); ++i) {
        bool moves = false;
        for (std::size_t w = 0; w < points; ++w) {
            images[i][w] = static_cast<std::uint32_t>(action.act(elements[i], w));
            moves = moves || images[i][w] != w;
        }
        if (i > 0 && !moves) {
            throw ParameterError("action " + action.name() + " is not faithful: " +
                                 g.format(elements[i]) + " fixes every point");
        }
    }
    BaseSearch search(points, std::move(images));
    std::vector<std::size_t> all(elements.size());
    std::iota(all.begin(), all.end(), 0);
    const int upper = search.greedy(all);
    int lower = 0;
    for (double reach = 1; reach < static_cast<double>(g.order()); reach *= static_cast<double>(points)) {
        ++lower;
    }
    for (int length = lower; length < upper; ++length) {
        if (search.exists(all, 0, length)) {
            return length;
        }
    }
    return upper;
}

// ---------------------------------------------------------------------------------------

std::string to_string(Mode mode) {
    return mode == Mode::sod ? "sod" : "coset";
}

Mode parse_mode(const std::string &text) {
    if (text == "sod") {
        return Mode::sod;
    }
    if (text == "coset") {
        return Mode::coset;
    }
    throw ParseError("unknown mode '" + text + "' (expected sod or coset)");
}

Json problem_spec_to_json(const ProblemSpec &spec) {
    Json doc;
    doc["group"] = group_spec_to_json(spec.group);
    doc["representation"] = spec.representation;
    if (spec.character_values) {
        doc["character"] = *spec.character_values;
    }
    if (spec.table_file) {
        doc["table_file"] = *spec.table_file;
    }
    doc["mode"] = to_string(spec.mode);
    if (spec.subgroup_group) {
        Json sub;
        sub["group"] = group_spec_to_json(*spec.subgroup_group);
        sub["generator_images"] = spec.generator_images;
        if (spec.subgroup_table_file) {
            sub["table_file"] = *spec.subgroup_table_file;
        }
        doc["subgroup"] = sub;
    } else if (!spec.subgroup.empty()) {
        doc["subgroup"] = spec.subgroup;
    }
    doc["threshold"] = to_string(spec.threshold);
    return doc;
}

ProblemSpec problem_spec_from_json(const Json &doc) {
    try {
        ProblemSpec spec;
        spec.group = group_spec_from_json(doc.at("group"));
        spec.representation = doc.value("representation", std::string("natural"));
        if (doc.contains("character")) {
            spec.character_values = doc.at("character").get<std::vector<std::string>>();
        }
        if (doc.contains("table_file")) {
            spec.table_file = doc.at("table_file").get<std::string>();
        }
        spec.mode = parse_mode(doc.value("mode", std::string("sod")));
        if (doc.contains("subgroup")) {
            const Json &sub = doc.at("subgroup");
            if (sub.is_string()) {
                spec.subgroup = sub.get<std::string>();
            } else {
                spec.subgroup_group = group_spec_from_json(sub.at("group"));
                spec.generator_images = sub.at("generator_images").get<std::vector<Element>>();
                if (sub.contains("table_file")) {
                    spec.subgroup_table_file = sub.at("table_file").get<std::string>();
                }
            }
        }
        if (doc.contains("threshold")) {
            spec.threshold = parse_rational(doc.at("threshold").get<std::string>());
        }
        return spec;
    } catch (const Json::exception &e) {
        throw ParseError(std::string("malformed problem spec: ") + e.what());
    }
}

Embedding embedding_from_generators(const Group &subgroup, const Group &group,
                                    const std::vector<Element> &images) {
    auto gens = subgroup.generators();
    if (gens.size() != images.size()) {
        throw ParameterError("subgroup has " + std::to_string(gens.size()) + " generators but " +
                             std::to_string(images.size()) + " images were given");
    }
    for (const auto &img : images) {
        if (!group.contains(img)) {
            throw EmbeddingError("generator image is not an element of " + group.name());
        }
    }
    auto table = std::make_shared<std::unordered_map<std::uint64_t, Element>>();
    std::vector<Element> queue = {subgroup.identity()};
    (*table)[subgroup.key(subgroup.identity())] = group.identity();
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Element h = queue[head];
        const Element image = (*table)[subgroup.key(h)];
        for (std::size_t s = 0; s < gens.size(); ++s) {
            Element next = subgroup.multiply(h, gens[s]);
            if (table->emplace(subgroup.key(next), group.multiply(image, images[s])).second) {
                queue.push_back(std::move(next));
            }
        }
        if (queue.size() > default_caps().enumeration) {
            throw SizeError("subgroup exceeds the enumeration cap");
        }
    }
    auto owner = std::make_shared<Group>(subgroup.spec());
    return [table, owner](const Element &h) {
        auto it = table->find(owner->key(h));
        if (it == table->end()) {
            throw EmbeddingError("element outside the generated subgroup");
        }
        return it->second;
    };
}

// ---------------------------------------------------------------------------------------

namespace {

Json optional_int(const std::optional<int> &v) {
    return v ? Json(*v) : Json(nullptr);
}

std::optional<int> read_optional_int(const Json &doc, const char *key) {
    if (!doc.contains(key) || doc.at(key).is_null()) {
        return std::nullopt;
    }
    return doc.at(key).get<int>();
}

std::string join(const std::vector<std::string> &items, const std::string &sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += (i ? sep : "") + items[i];
    }
    return out;
}

}  // namespace

Json report_to_json(const QueryReport &report) {
    Json doc;
    doc["group"] = report.group;
    doc["subgroup"] = report.subgroup;
    doc["representation"] = report.representation;
    doc["mode"] = to_string(report.mode);
    doc["threshold"] = to_string(report.threshold);
    doc["steps"] = Json::array();
    for (const auto &s : report.steps) {
        doc["steps"].push_back({{"t", s.t},
                                {"probability", to_string(s.probability)},
                                {"maximizers", s.maximizers},
                                {"support", s.support},
                                {"zero_error", s.zero_error}});
    }
    doc["gamma"] = optional_int(report.gamma);
    doc["gamma_bounded"] = optional_int(report.gamma_bounded);
    doc["gamma_witness"] = report.gamma_witness;
    doc["trace"] = {{"status", report.trace_status},
                    {"cycle_start", report.cycle_start},
                    {"period", report.period}};
    doc["base_size"] = optional_int(report.base_size);
    doc["provenance"] = report.provenance;
    return doc;
}

QueryReport report_from_json(const Json &doc) {
    try {
        QueryReport r;
        r.group = doc.at("group").get<std::string>();
        r.subgroup = doc.at("subgroup").get<std::string>();
        r.representation = doc.at("representation").get<std::string>();
        r.mode = parse_mode(doc.at("mode").get<std::string>());
        r.threshold = parse_rational(doc.at("threshold").get<std::string>());
        for (const auto &s : doc.at("steps")) {
            StepResult step;
            step.t = s.at("t").get<int>();
            step.probability = parse_rational(s.at("probability").get<std::string>());
            step.maximizers = s.at("maximizers").get<std::vector<std::string>>();
            step.support = s.at("support").get<std::vector<std::string>>();
            step.zero_error = s.at("zero_error").get<bool>();
            r.steps.push_back(std::move(step));
        }
        r.gamma = read_optional_int(doc, "gamma");
        r.gamma_bounded = read_optional_int(doc, "gamma_bounded");
        r.gamma_witness = doc.at("gamma_witness").get<std::vector<std::string>>();
        r.trace_status = doc.at("trace").at("status").get<std::string>();
        r.cycle_start = doc.at("trace").at("cycle_start").get<int>();
        r.period = doc.at("trace").at("period").get<int>();
        r.base_size = read_optional_int(doc, "base_size");
        r.provenance = doc.at("provenance").get<std::vector<std::string>>();
        return r;
    } catch (const Json::exception &e) {
        throw ParseError(std::string("malformed query report: ") + e.what());
    }
}

std::string report_to_text(const QueryReport &r) {
    std::ostringstream out;
    out << "group " << r.group;
    if (r.mode == Mode::coset) {
        out << "  subgroup " << r.subgroup;
    }
    out << "  representation " << r.representation << "  mode " << to_string(r.mode) << "\n";
    for (const auto &s : r.steps) {
        out << "t=" << s.t << "  P=" << to_string(s.probability);
        if (!s.maximizers.empty()) {
            out << "  argmax " << join(s.maximizers, ", ");
        }
        out << "  support {" << join(s.support, ", ") << "}\n";
    }
    auto show = [](const std::optional<int> &v) { return v ? std::to_string(*v) : std::string("inf"); };
    out << "gamma=" << show(r.gamma);
    if (!r.gamma && !r.gamma_witness.empty()) {
        out << "  witness cycle " << join(r.gamma_witness, " -> ");
    }
    out << "\n";
    out << "gamma_bounded(" << to_string(r.threshold) << ")=" << show(r.gamma_bounded) << "\n";
    if (r.base_size) {
        out << "base_size=" << *r.base_size << "\n";
    }
    out << "trace " << r.trace_status;
    if (r.trace_status == "cycle-detected") {
        out << " start " << r.cycle_start << " period " << r.period;
    }
    out << "\n";
    for (const auto &p : r.provenance) {
        out << "# " << p << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------------------

namespace {

void check_request(const ProblemSpec &spec, int t_from, int t_to) {
    if (t_from < 1 || t_to < t_from) {
        throw ParameterError("query range must satisfy 1 <= from <= to");
    }
    if (spec.threshold <= Rational(1, 2) || spec.threshold > 1) {
        throw ParameterError("threshold must lie in (1/2, 1], got " + to_string(spec.threshold));
    }
}

QueryReport blank_report(const ProblemSpec &spec) {
    QueryReport r;
    r.group = spec.group.name();
    r.subgroup = spec.subgroup_group ? spec.subgroup_group->name() : spec.subgroup;
    r.representation = spec.character_values ? "character" : spec.representation;
    r.mode = spec.mode;
    r.threshold = spec.threshold;
    return r;
}

std::vector<std::string> partition_labels(const std::set<Partition> &set) {
    std::vector<std::string> out;
    // Descending, so [n] comes first as in the table rows.
    for (auto it = set.rbegin(); it != set.rend(); ++it) {
        out.push_back(it->to_string());
    }
    return out;
}

std::vector<std::string> alternating_labels(const std::set<Partition> &set) {
    std::set<std::string> out;
    for (const auto &lambda : set) {
        Partition dual = lambda.conjugate();
        if (lambda == dual) {
            out.insert("W_" + lambda.to_string() + "^+");
            out.insert("W_" + lambda.to_string() + "^-");
        } else {
            out.insert("W_" + std::max(lambda, dual).to_string());
        }
    }
    return {out.begin(), out.end()};
}

void add_base_size(QueryReport &report, const std::function<GroupAction()> &make_action) {
    try {
        report.base_size = classical_base_size(make_action());
        report.provenance.push_back("base size: greedy stabilizer bound, then exhaustive point-tuple search");
    } catch (const ParameterError &e) {
        report.provenance.push_back(std::string("base size: not defined (") + e.what() + ")");
    } catch (const SizeError &e) {
        report.provenance.push_back(std::string("base size: skipped (") + e.what() + ")");
    }
}

/// Partition path shared by S_n and A_n identification and the parity problem.
QueryReport solve_by_partitions(const ProblemSpec &spec, int t_from, int t_to, bool with_base_size) {
    const int n = spec.group.n;
    QueryReport r = blank_report(spec);
    // The support is full from t = n - 1 on, so this horizon settles both complexities.
    const int horizon = std::max(t_to, n);
    const auto supports = symmetric_power_supports(n, horizon);
    const std::size_t all = partitions_of(n).size();

    auto probability_at = [&](int t, StepResult &step) {
        const auto &set = supports[static_cast<std::size_t>(t - 1)];
        if (spec.mode == Mode::coset) {
            step.probability = sign_coset_success(n, t, &step.maximizers).probability;
            step.support = partition_labels(set);
        } else if (spec.group.family == Family::alternating) {
            step.probability = alternating_sod_success(n, t).alternating;
            step.support = alternating_labels(set);
        } else {
            step.probability = partition_degree_square_sum(set) / from_u64(factorial(n));
            step.support = partition_labels(set);
        }
        step.zero_error = step.probability == 1;
    };

    std::vector<StepResult> all_steps;
    for (int t = 1; t <= horizon; ++t) {
        StepResult step;
        step.t = t;
        probability_at(t, step);
        all_steps.push_back(step);
        if (t >= t_from && t <= t_to) {
            r.steps.push_back(step);
        }
    }
    for (const auto &s : all_steps) {
        if (!r.gamma && s.zero_error) {
            r.gamma = s.t;
        }
        if (!r.gamma_bounded && s.probability >= spec.threshold) {
            r.gamma_bounded = s.t;
        }
    }
    int full_at = 0;
    for (std::size_t i = 0; i < supports.size() && full_at == 0; ++i) {
        if (supports[i].size() == all) {
            full_at = static_cast<int>(i) + 1;
        }
    }
    r.trace_status = full_at ? "reached-full" : "cap-hit";
    r.provenance.push_back("support: add-then-remove-a-box iteration from the trivial partition");
    if (spec.mode == Mode::coset) {
        r.provenance.push_back("success: parity rule on induced alternating irreps (self-conjugate or conjugate pair)");
    } else if (spec.group.family == Family::alternating) {
        r.provenance.push_back("success: alternating irreps from restricted symmetric irreps (pair and half rule)");
    } else {
        r.provenance.push_back("success: squared hook-length degrees over n!");
    }
    if (with_base_size && spec.mode == Mode::sod) {
        add_base_size(r, [&] { return natural_action(std::make_shared<Group>(spec.group)); });
    }
    return r;
}

TablePtr table_for(const GroupSpec &group, const std::optional<std::string> &file) {
    if (!file) {
        return char_table_for(group);
    }
    auto table = load_char_table_file(*file);
    if (!table->conjugacy() || !(table->conjugacy()->group().spec() == group)) {
        throw ParameterError("table file " + *file + " does not describe " + group.name() +
                             " with class representatives");
    }
    return table;
}

ClassFunction parse_irreducible_sum(const TablePtr &table, const std::string &text) {
    std::vector<std::pair<std::size_t, std::int64_t>> terms;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(" + ", pos);
        std::string term = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        auto first = term.find_first_not_of(' ');
        auto last = term.find_last_not_of(' ');
        if (first == std::string::npos) {
            throw ParseError("empty term in representation '" + text + "'");
        }
        term = term.substr(first, last - first + 1);
        std::size_t digits = 0;
        while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) {
            ++digits;
        }
        std::int64_t mult = 1;
        std::string label = term;
        // A leading count belongs to the term unless the whole term is a label ("1" is not).
        if (digits > 0 && digits < term.size() && !table->find(term)) {
            mult = std::stoll(term.substr(0, digits));
            label = term.substr(digits);
            if (!label.empty() && label.front() == '*') {
                label.erase(0, 1);
            }
            auto lf = label.find_first_not_of(' ');
            label = lf == std::string::npos ? "" : label.substr(lf);
        }
        terms.emplace_back(table->index_of(label), mult);
        if (end == std::string::npos) {
            break;
        }
        pos = end + 3;
    }
    return ClassFunction::from_irreducibles(table, terms);
}

struct Resolved {
    TablePtr table;
    std::optional<ClassFunction> v;
    std::optional<GroupAction> action;
    std::vector<std::string> notes;
};

Resolved resolve_representation(const ProblemSpec &spec, TablePtr table) {
    Resolved out;
    out.table = table;
    auto group = table->require_conjugacy().group_ptr();
    if (spec.character_values) {
        if (spec.character_values->size() != table->num_classes()) {
            throw ParameterError("character has " + std::to_string(spec.character_values->size()) +
                                 " values but the table has " + std::to_string(table->num_classes()) +
                                 " classes");
        }
        std::vector<Cyclotomic> values;
        for (const auto &s : *spec.character_values) {
            values.push_back(Cyclotomic::parse(s, table->conductor()));
        }
        out.v.emplace(table, std::move(values));
        out.notes.push_back("representation: explicit character values");
    } else if (spec.representation == "natural" || spec.representation == "regular") {
        out.action.emplace(spec.representation == "natural" ? natural_action(group) : regular_action(group));
        out.v.emplace(perm_character(*out.action, table));
        out.notes.push_back("representation: permutation character of the " + spec.representation + " action");
    } else {
        out.v.emplace(parse_irreducible_sum(table, spec.representation));
        out.notes.push_back("representation: sum of named irreducibles");
    }
    return out;
}

}  // namespace

NamedSubgroup named_subgroup(const ProblemSpec &spec) {
    const GroupSpec &g = spec.group;
    const std::string &name = spec.subgroup;
    auto need = [&](bool ok, const char *what) {
        if (!ok) {
            throw ParameterError("subgroup '" + name + "' needs " + what + ", got " + g.name());
        }
    };
    if (name == "klein4") {
        need(g == GroupSpec::symmetric(4), "S4");
        return klein_four_in_s4();
    }
    if (name == "alternating") {
        need(g.family == Family::symmetric, "a symmetric group");
        return g.n == 3 ? cyclic_a3_in_s3() : alternating_in_symmetric(g.n);
    }
    if (name == "a3") {
        need(g == GroupSpec::symmetric(3), "S3");
        return cyclic_a3_in_s3();
    }
    if (name == "center") {
        need(g.family == Family::heisenberg, "a Heisenberg group");
        return heisenberg_center(g.p, g.n);
    }
    if (name == "zero-sum") {
        need(g.family == Family::function_group, "a function group");
        return zero_sum_subgroup(g.k, g.orders);
    }
    if (name == "trivial") {
        return trivial_subgroup(g);
    }
    throw ParameterError("unknown subgroup '" + name +
                         "' (expected klein4, alternating, a3, center, zero-sum or trivial)");
}

QueryReport solve(const ProblemSpec &spec, int t_from, int t_to, bool with_base_size) {
    check_request(spec, t_from, t_to);
    const bool natural = !spec.character_values && spec.representation == "natural";
    const Family family = spec.group.family;

    if (spec.mode == Mode::sod && natural && !spec.table_file &&
        ((family == Family::symmetric && spec.group.n > 7) ||
         (family == Family::alternating && spec.group.n >= 4))) {
        return solve_by_partitions(spec, t_from, t_to, with_base_size);
    }
    if (spec.mode == Mode::coset && natural && spec.subgroup == "alternating" &&
        !spec.subgroup_table_file && family == Family::symmetric && spec.group.n != 3) {
        return solve_by_partitions(spec, t_from, t_to, with_base_size);
    }

    QueryReport r = blank_report(spec);
    TablePtr table;
    Resolved rep;
    if (family == Family::alternating && spec.group.n == 3 && !spec.table_file) {
        // A_3 is cyclic: use the Z3 table and pull the action back through the 3-cycle.
        table = char_table_abelian(std::vector<int>{3});
        auto a3 = cyclic_a3_in_s3();
        auto s3 = std::make_shared<Group>(GroupSpec::symmetric(3));
        auto z3 = table->require_conjugacy().group_ptr();
        auto s3_natural = natural_action(s3);
        if (spec.representation == "natural" && !spec.character_values) {
            rep.action.emplace(z3, 3, [a3, s3_natural](const Element &h, std::size_t w) {
                return s3_natural.act(a3.embedding(h), w);
            }, "natural");
            rep.v.emplace(perm_character(*rep.action, table));
            rep.table = table;
        } else {
            rep = resolve_representation(spec, table);
        }
        r.provenance.push_back("A_3 handled as the cyclic group Z3 (abelian special case)");
    } else {
        table = table_for(spec.group, spec.table_file);
        rep = resolve_representation(spec, table);
    }
    for (auto &note : rep.notes) {
        r.provenance.push_back(note);
    }
    const ClassFunction &v = *rep.v;

    std::optional<CosetEngine> engine;
    if (spec.mode == Mode::coset) {
        TablePtr sub_table;
        Embedding embedding;
        if (spec.subgroup_group) {
            sub_table = table_for(*spec.subgroup_group, spec.subgroup_table_file);
            embedding = embedding_from_generators(sub_table->require_conjugacy().group(),
                                                  table->require_conjugacy().group(), spec.generator_images);
        } else {
            if (spec.subgroup.empty()) {
                throw ParameterError("coset mode needs a subgroup");
            }
            auto named = named_subgroup(spec);
            sub_table = table_for(named.subgroup, spec.subgroup_table_file);
            embedding = named.embedding;
            if (named.subgroup.family == Family::abelian_product && spec.subgroup == "alternating") {
                r.provenance.push_back("A_3 subgroup handled as Z3 (abelian special case)");
            }
        }
        engine.emplace(table, sub_table, fusion_between(*table, *sub_table, std::move(embedding)));
        r.provenance.push_back("success: best subgroup irrep, multiplicities by reciprocity from restrictions");
    } else {
        r.provenance.push_back("success: squared degrees over the support divided by |G|");
    }

    SupportMap map(v);
    PowerTrace trace = power_trace(map, std::max(256, t_to));
    r.provenance.push_back("support: iterated support map on irreducible subsets");
    r.trace_status = to_string(trace.status);
    r.cycle_start = trace.cycle_start;
    r.period = trace.period;

    auto evaluate = [&](const IrrepSet &set, StepResult &step) {
        if (engine) {
            auto res = engine->success(set);
            step.probability = res.probability;
            for (auto y : res.maximizers) {
                step.maximizers.push_back(engine->subgroup_table()[y].label);
            }
            step.zero_error = engine->zero_error(set);
        } else {
            step.probability = sod_success(set);
            step.zero_error = set.is_full();
        }
        step.support = set.labels();
    };

    for (int t = t_from; t <= t_to; ++t) {
        StepResult step;
        step.t = t;
        evaluate(trace.at(t), step);
        r.steps.push_back(std::move(step));
    }

    if (engine) {
        r.gamma = first_power_where(trace, [&](const IrrepSet &s) { return engine->zero_error(s); });
    } else {
        r.gamma = trace.first_full();
    }
    r.gamma_bounded = first_power_where(trace, [&](const IrrepSet &s) {
        StepResult step;
        evaluate(s, step);
        return step.probability >= spec.threshold;
    });
    if (!r.gamma && trace.status == PowerTrace::Status::cycle_detected) {
        for (std::size_t i = static_cast<std::size_t>(trace.cycle_start - 1); i < trace.sets.size(); ++i) {
            r.gamma_witness.push_back(trace.sets[i].to_string());
        }
    }
    if (with_base_size && rep.action) {
        add_base_size(r, [&] { return *rep.action; });
    }
    return r;
}

}  // namespace symoracle

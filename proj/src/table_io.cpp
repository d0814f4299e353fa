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

#include "symoracle/table_io.hpp"

#include <fstream>

namespace symoracle {

namespace {

const char *family_name(Family f) {
    switch (f) {
        case Family::symmetric:
            return "symmetric";
        case Family::alternating:
            return "alternating";
        case Family::dihedral:
            return "dihedral";
        case Family::abelian_product:
            return "abelian";
        case Family::heisenberg:
            return "heisenberg";
        case Family::function_group:
            return "function";
        case Family::explicit_table:
            return "table";
    }
    return "?";
}

template <typename T>
T field(const Json &doc, const char *key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    try {
        return doc.at(key).get<T>();
    } catch (const Json::exception &e) {
        throw ParseError(std::string("bad field '") + key + "': " + e.what());
    }
}

}  // namespace

Json group_spec_to_json(const GroupSpec &spec) {
    Json params = Json::object();
    switch (spec.family) {
        case Family::symmetric:
        case Family::alternating:
        case Family::dihedral:
            params["n"] = spec.n;
            break;
        case Family::abelian_product:
            params["orders"] = spec.orders;
            break;
        case Family::heisenberg:
            params["p"] = spec.p;
            params["n"] = spec.n;
            break;
        case Family::function_group:
            params["k"] = spec.k;
            params["orders"] = spec.orders;
            break;
        case Family::explicit_table:
            params["table"] = spec.table;
            break;
    }
    return {{"family", family_name(spec.family)}, {"params", params}};
}

GroupSpec group_spec_from_json(const Json &doc) {
    if (doc.is_string()) {
        return parse_group_name(doc.get<std::string>());
    }
    auto family = field<std::string>(doc, "family");
    Json params = doc.contains("params") ? doc.at("params") : Json::object();
    if (family == "symmetric") {
        return GroupSpec::symmetric(field<int>(params, "n"));
    }
    if (family == "alternating") {
        return GroupSpec::alternating(field<int>(params, "n"));
    }
    if (family == "dihedral") {
        return GroupSpec::dihedral(field<int>(params, "n"));
    }
    if (family == "abelian") {
        return GroupSpec::abelian(field<std::vector<int>>(params, "orders"));
    }
    if (family == "heisenberg") {
        return GroupSpec::heisenberg(field<int>(params, "p"), field<int>(params, "n"));
    }
    if (family == "function") {
        return GroupSpec::function_group(field<int>(params, "k"),
                                         field<std::vector<int>>(params, "orders"));
    }
    if (family == "table") {
        return GroupSpec::explicit_table(field<std::vector<std::vector<int>>>(params, "table"));
    }
    throw ParseError("unknown group family '" + family + "'");
}

Json dump_char_table(const CharacterTable &table) {
    Json doc;
    doc["version"] = 1;
    if (table.conjugacy()) {
        doc["group"] = group_spec_to_json(table.conjugacy()->group().spec());
    } else {
        doc["group_name"] = table.group_name();
    }
    doc["conductor"] = table.conductor();
    Json classes = Json::array();
    for (std::size_t c = 0; c < table.num_classes(); ++c) {
        const auto &info = table.classes()[c];
        Json entry = {{"size", info.size}, {"order", info.order}, {"label", info.label}};
        if (table.conjugacy()) {
            entry["representative"] = (*table.conjugacy())[c].representative;
        }
        classes.push_back(entry);
    }
    doc["classes"] = classes;
    Json chars = Json::array();
    for (const auto &chi : table.characters()) {
        Json values = Json::array();
        for (const auto &v : chi.values) {
            values.push_back(v.to_string(table.conductor()));
        }
        chars.push_back({{"label", chi.label}, {"values", values}});
    }
    doc["characters"] = chars;
    return doc;
}

TablePtr load_char_table(const Json &doc) {
    if (!doc.is_object()) {
        throw ParseError("table document must be a JSON object");
    }
    if (doc.contains("version") && doc.at("version") != 1) {
        throw ParseError("unsupported table schema version");
    }
    int m = field<int>(doc, "conductor");
    const Json &class_docs = doc.contains("classes") ? doc.at("classes") : Json();
    const Json &char_docs = doc.contains("characters") ? doc.at("characters") : Json();
    if (!class_docs.is_array() || !char_docs.is_array() || class_docs.empty()) {
        throw ParseError("table needs non-empty 'classes' and 'characters' arrays");
    }
    std::size_t k = class_docs.size();
    std::vector<ClassInfo> infos;
    std::vector<std::optional<Element>> reps;
    for (const auto &c : class_docs) {
        ClassInfo info;
        info.size = field<std::uint64_t>(c, "size");
        info.order = field<int>(c, "order");
        info.label = c.contains("label") ? field<std::string>(c, "label")
                                         : "class" + std::to_string(infos.size());
        infos.push_back(info);
        reps.push_back(c.contains("representative")
                           ? std::optional<Element>(field<Element>(c, "representative"))
                           : std::nullopt);
    }
    std::vector<Character> chars;
    for (const auto &cd : char_docs) {
        Character chi;
        chi.label = field<std::string>(cd, "label");
        auto values = field<std::vector<std::string>>(cd, "values");
        if (values.size() != k) {
            throw ParseError("character " + chi.label + " has " + std::to_string(values.size()) +
                             " values for " + std::to_string(k) + " classes");
        }
        for (const auto &v : values) {
            chi.values.push_back(Cyclotomic::parse(v, m));
        }
        chars.push_back(std::move(chi));
    }

    std::shared_ptr<const ConjugacyClasses> cc;
    std::string name = doc.contains("group_name") ? field<std::string>(doc, "group_name") : "";
    bool all_reps = std::all_of(reps.begin(), reps.end(), [](const auto &r) { return r.has_value(); });
    if (doc.contains("group")) {
        auto group = std::make_shared<const Group>(group_spec_from_json(doc.at("group")));
        name = group->name();
        if (all_reps) {
            cc = std::make_shared<const ConjugacyClasses>(ConjugacyClasses::compute(group));
            if (cc->size() != k) {
                throw ValidationError({"class count: document has " + std::to_string(k) +
                                       " classes, " + name + " has " + std::to_string(cc->size())});
            }
            // Reorder the columns to the computed class order.
            std::vector<std::size_t> target(k);
            std::vector<bool> hit(k, false);
            for (std::size_t c = 0; c < k; ++c) {
                if (!group->contains(*reps[c])) {
                    throw ParseError("representative of column " + std::to_string(c) +
                                     " is not an element of " + name);
                }
                target[c] = cc->class_of(*reps[c]);
                if (hit[target[c]]) {
                    throw ValidationError({"columns: two representatives lie in the class of " +
                                           (*cc)[target[c]].label});
                }
                hit[target[c]] = true;
            }
            std::vector<ClassInfo> reordered(k);
            for (std::size_t c = 0; c < k; ++c) {
                reordered[target[c]] = infos[c];
                reordered[target[c]].label = (*cc)[target[c]].label;
            }
            infos = std::move(reordered);
            for (auto &chi : chars) {
                std::vector<Cyclotomic> values(k);
                for (std::size_t c = 0; c < k; ++c) {
                    values[target[c]] = chi.values[c];
                }
                chi.values = std::move(values);
            }
        }
    }
    if (name.empty()) {
        name = "loaded";
    }
    TablePtr table;
    try {
        table = std::make_shared<const CharacterTable>(name, infos, m, std::move(chars), cc);
    } catch (const ParameterError &e) {
        throw ParseError(e.what());
    }
    auto violations = validate_table(*table);
    if (!violations.empty()) {
        throw ValidationError(violations);
    }
    return table;
}

TablePtr load_char_table_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw ParseError(path + ": " + e.what());
    }
    return load_char_table(doc);
}

}  // namespace symoracle

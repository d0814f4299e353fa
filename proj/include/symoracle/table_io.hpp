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

#ifndef SYMORACLE_TABLE_IO_HPP
#define SYMORACLE_TABLE_IO_HPP

#include <string>

#include "json.hpp"
#include "symoracle/character_table.hpp"

namespace symoracle {

using Json = nlohmann::json;

/// {"family": "symmetric", "params": {"n": 4}}. Reading also accepts a short name string.
Json group_spec_to_json(const GroupSpec &spec);
GroupSpec group_spec_from_json(const Json &doc);

/// Table document, schema version 1:
///   {"version": 1, "group": <group spec>, "conductor": m,
///    "classes": [{"size": s, "order": o, "representative": [...]}, ...],
///    "characters": [{"label": "...", "values": ["1", "-1", "z + z^2", ...]}, ...]}
/// Values are polynomials in z = zeta_m. "group" and "representative" are optional; with
/// both present the columns are matched to the computed classes of the group and the
/// table supports restriction.
Json dump_char_table(const CharacterTable &table);
/// Throws ParseError for malformed documents and ValidationError when an identity fails.
TablePtr load_char_table(const Json &doc);
TablePtr load_char_table_file(const std::string &path);

}  // namespace symoracle

#endif

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

#ifndef SYMORACLE_REPRODUCE_HPP
#define SYMORACLE_REPRODUCE_HPP

#include <string>
#include <vector>

#include "symoracle/table_io.hpp"

namespace symoracle {

/// One expected-versus-computed comparison of the regression suite.
struct Check {
    std::string target;
    std::string item;
    std::string expected;
    std::string computed;
    bool pass = false;
};

/// Target names in suite order.
const std::vector<std::string> &reproduce_targets();

/// Runs one target; throws ParameterError for unknown names.
std::vector<Check> reproduce(const std::string &target);

Json checks_to_json(const std::vector<Check> &checks);

}  // namespace symoracle

#endif

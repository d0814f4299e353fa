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

#ifndef SYMORACLE_RATIONAL_HPP
#define SYMORACLE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace symoracle {

using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Always renders "num/den", including integers ("1/1").
std::string to_string(const Rational &value);

/// Accepts "a", "-a", "a/b".
Rational parse_rational(std::string_view text);

}  // namespace symoracle

#endif

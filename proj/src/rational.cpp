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

#include "symoracle/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "symoracle/error.hpp"

namespace symoracle {

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error([&] {
          std::string msg = "character table validation failed:";
          for (const auto &v : violations) {
              msg += " [" + v + "]";
          }
          return msg;
      }()),
      violations_(std::move(violations)) {
}

namespace {

std::uint64_t env_u64(const char *name, std::uint64_t fallback) {
    const char *raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') {
        return fallback;
    }
    char *end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0) {
        return fallback;
    }
    return v;
}

}  // namespace

const Caps &default_caps() {
    static const Caps caps = [] {
        Caps c;
        c.enumeration = env_u64("SYMORACLE_GROUP_CAP", c.enumeration);
        c.exhaustive_check = env_u64("SYMORACLE_CHECK_CAP", c.exhaustive_check);
        c.symmetric_degree = static_cast<int>(env_u64("SYMORACLE_SN_CAP", c.symmetric_degree));
        return c;
    }();
    return caps;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw ParameterError("rational with zero denominator");
    }
    mpz_class n;
    mpz_class d;
    mpz_set_si(n.get_mpz_t(), num);
    mpz_set_si(d.get_mpz_t(), den);
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    auto valid_int = [](std::string_view part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i >= part.size()) {
            return false;
        }
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
                return false;
            }
        }
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    if (num[0] == '+') {
        num.erase(0, 1);
    }
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) {
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace symoracle

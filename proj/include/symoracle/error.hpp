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

#ifndef SYMORACLE_ERROR_HPP
#define SYMORACLE_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace symoracle {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A configured size cap (group order, table size, matrix dimension) was exceeded.
class SizeError : public Error {
   public:
    using Error::Error;
};

class ParameterError : public Error {
   public:
    using Error::Error;
};

/// A supplied subgroup embedding is not an injective homomorphism.
class EmbeddingError : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

class UnsupportedError : public Error {
   public:
    using Error::Error;
};

/// A class function that was expected to be a genuine character has a negative multiplicity.
class NotACharacterError : public Error {
   public:
    using Error::Error;
};

/// Exact integer arithmetic left the 64-bit range.
class OverflowError : public Error {
   public:
    using Error::Error;
};

class NumericalError : public Error {
   public:
    using Error::Error;
};

/// Thrown when a character table fails one or more of its defining identities.
class ValidationError : public Error {
   public:
    explicit ValidationError(std::vector<std::string> violations);
    const std::vector<std::string> &violations() const {
        return violations_;
    }

   private:
    std::vector<std::string> violations_;
};

struct Caps {
    std::uint64_t enumeration = 1'000'000;
    std::uint64_t exhaustive_check = 10'000;
    int symmetric_degree = 10;
    int max_conductor = 4096;
};

/// Caps with overrides from SYMORACLE_GROUP_CAP, SYMORACLE_CHECK_CAP and SYMORACLE_SN_CAP.
const Caps &default_caps();

}  // namespace symoracle

#endif

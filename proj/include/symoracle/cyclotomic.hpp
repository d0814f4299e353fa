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

#ifndef SYMORACLE_CYCLOTOMIC_HPP
#define SYMORACLE_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symoracle/rational.hpp"

namespace symoracle {

/// Arithmetic data for Q(zeta_m): the cyclotomic polynomial and the reduction of
/// every power zeta^k (0 <= k < m) onto the power basis 1, zeta, ..., zeta^(phi(m)-1).
class CyclotomicField {
   public:
    /// Cached, never freed; safe to call from several threads.
    static const CyclotomicField &get(int conductor);

    int conductor() const {
        return conductor_;
    }
    int degree() const {
        return degree_;
    }
    std::span<const std::int64_t> minimal_polynomial() const {
        return minimal_polynomial_;
    }
    /// Reduced coefficients of zeta^k, k taken mod m.
    std::span<const std::int64_t> power(std::int64_t k) const;

   private:
    explicit CyclotomicField(int conductor);

    int conductor_;
    int degree_;
    std::vector<std::int64_t> minimal_polynomial_;
    std::vector<std::int64_t> powers_;  // m rows of length degree_
};

/// An element of Q(zeta_m) stored as integer coefficients over the power basis of
/// Q(zeta_m) (reduced modulo the m-th cyclotomic polynomial) and one positive common
/// denominator. The representation is canonical for a fixed conductor, so equality
/// within a conductor is coefficient equality; values of different conductors are
/// compared inside Q(zeta_lcm). Arithmetic is exact; leaving int64 throws OverflowError.
class Cyclotomic {
   public:
    Cyclotomic();
    explicit Cyclotomic(std::int64_t value);
    explicit Cyclotomic(const Rational &value);

    static Cyclotomic integer(std::int64_t value) {
        return Cyclotomic(value);
    }
    /// zeta_m^k.
    static Cyclotomic root_of_unity(int conductor, std::int64_t exponent);
    /// Sum of coefficient[k] * zeta_m^k over any k in [0, m).
    static Cyclotomic from_powers(int conductor, std::span<const std::int64_t> coefficients,
                                  std::int64_t denominator = 1);
    /// Parses "a0 + a1*z^k - 3/2*z" with z = zeta_m.
    static Cyclotomic parse(std::string_view text, int conductor);

    int conductor() const {
        return field_->conductor();
    }
    std::span<const std::int64_t> numerators() const {
        return numerators_;
    }
    std::int64_t denominator() const {
        return denominator_;
    }

    bool is_zero() const;
    bool is_rational() const;
    bool is_integer() const;
    /// Throws ParameterError when the value is not rational.
    Rational to_rational() const;
    std::int64_t to_integer() const;

    Cyclotomic conj() const;
    /// The Galois automorphism zeta -> zeta^a, gcd(a, m) = 1.
    Cyclotomic galois(std::int64_t a) const;
    /// Same value viewed in Q(zeta_target); target must be a multiple of the conductor.
    Cyclotomic embed(int target) const;
    /// Same value with the smallest conductor whose field contains it.
    Cyclotomic minimized() const;

    std::complex<double> to_complex() const;

    /// Canonical text in z = zeta_m, m = the given conductor (default: own conductor).
    std::string to_string() const;
    std::string to_string(int conductor) const;

    Cyclotomic &operator+=(const Cyclotomic &other);
    Cyclotomic &operator-=(const Cyclotomic &other);
    Cyclotomic &operator*=(const Cyclotomic &other);
    Cyclotomic operator-() const;

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) {
        a += b;
        return a;
    }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) {
        a -= b;
        return a;
    }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic &b) {
        a *= b;
        return a;
    }
    friend bool operator==(const Cyclotomic &a, const Cyclotomic &b);

   private:
    Cyclotomic(const CyclotomicField *field, std::vector<std::int64_t> numerators,
               std::int64_t denominator);
    void normalize();
    const CyclotomicField &common_field(const Cyclotomic &other) const;

    const CyclotomicField *field_;
    std::vector<std::int64_t> numerators_;
    std::int64_t denominator_ = 1;
};

std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

}  // namespace symoracle

#endif

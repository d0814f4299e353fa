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

#ifndef SYMORACLE_FAMILIES_HPP
#define SYMORACLE_FAMILIES_HPP

#include <cstdint>
#include <vector>

#include "symoracle/class_function.hpp"

namespace symoracle {

// Closed forms for standard oracle problems, and brute-force counts to check them against.

/// Learning an n-bit string from t queries to its bits: sum_{i<=t} C(n, i) / 2^n.
Rational van_dam(int n, int t);
/// Learning the sum of k values in a group of order m from t evaluations:
/// min(floor(k / (k - t)), m) / m, and 1 once t >= k.
Rational group_summation(int m, int k, int t);
/// One query to the natural action of the Heisenberg group: 1 - 1/p + 2/p^(n+1) - 1/p^(2n+1).
Rational heisenberg_sod(int p, int n);

int sn_gamma(int n);
/// n - ceil(sqrt(n)), n >= 4.
int an_gamma(int n);
/// floor(n / 2).
int sign_complexity(int n);

/// Permutations of n whose longest increasing subsequence has length >= min_length, by
/// enumeration of all n! orderings (n <= 9).
std::uint64_t lis_count(int n, int min_length);
/// Entry L counts the permutations whose longest increasing subsequence is exactly L.
std::vector<std::uint64_t> lis_histogram(int n);

/// Arithmetic in F_q for q in {2, 3, 4, 5, 7, 8, 9}. Elements are 0..q-1 read as base-p digit
/// vectors of polynomials modulo a fixed irreducible.
class FiniteField {
   public:
    explicit FiniteField(int q);

    int order() const {
        return q_;
    }
    int characteristic() const {
        return p_;
    }
    int degree() const {
        return r_;
    }
    int add(int a, int b) const {
        return add_[static_cast<std::size_t>(a * q_ + b)];
    }
    int mul(int a, int b) const {
        return mul_[static_cast<std::size_t>(a * q_ + b)];
    }
    /// Base-p digits, lowest first.
    std::vector<int> digits(int a) const;

   private:
    int q_;
    int p_;
    int r_;
    std::vector<int> add_;
    std::vector<int> mul_;
};

/// |Z_1|, ..., |Z_t_max| for the t-fold sumsets of the curve {(y, yx, ..., yx^d)} in F_q^(d+1).
std::vector<std::uint64_t> interpolation_sumset_sizes(int q, int d, int t_max);
/// |Z_t| / q^(d+1).
Rational interpolation_success(int q, int d, int t);

/// The curve's characters as a representation of (Z_p)^(r (d+1)), each field element spread
/// over its r base-p digits, so that tensor powers realise the sumsets.
ClassFunction interpolation_character(int q, int d);
/// Characters of (Z_2)^n of Hamming weight at most one.
ClassFunction van_dam_character(int n);

}  // namespace symoracle

#endif

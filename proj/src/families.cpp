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

#include "symoracle/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace symoracle {

namespace {

mpz_class binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class ipow(int b, int e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
    return r;
}

std::string join_label(const std::vector<int> &coords) {
    std::string s = "psi_{";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        s += (i ? "," : "") + std::to_string(coords[i]);
    }
    return s + "}";
}

}  // namespace

Rational van_dam(int n, int t) {
    if (n < 1 || t < 0 || t > n) {
        throw ParameterError("van Dam formula needs 0 <= t <= n, n >= 1");
    }
    mpz_class sum = 0;
    for (int i = 0; i <= t; ++i) {
        sum += binomial(n, i);
    }
    Rational r(sum, ipow(2, n));
    r.canonicalize();
    return r;
}

Rational group_summation(int m, int k, int t) {
    if (m < 1 || k < 1 || t < 0) {
        throw ParameterError("group summation needs m, k >= 1 and t >= 0");
    }
    if (t >= k) {
        return 1;
    }
    return make_rational(std::min(k / (k - t), m), m);
}

Rational heisenberg_sod(int p, int n) {
    if (!is_prime(p) || n < 1) {
        throw ParameterError("Heisenberg formula needs p prime and n >= 1");
    }
    Rational r = Rational(1) - Rational(1, p) + Rational(mpz_class(2), ipow(p, n + 1)) -
                 Rational(mpz_class(1), ipow(p, 2 * n + 1));
    r.canonicalize();
    return r;
}

int sn_gamma(int n) {
    if (n < 2) {
        throw ParameterError("symmetric group degree must be at least 2");
    }
    return n - 1;
}

int an_gamma(int n) {
    if (n < 4) {
        throw ParameterError("alternating formula needs n >= 4");
    }
    int root = 0;
    while (root * root < n) {
        ++root;
    }
    return n - root;
}

int sign_complexity(int n) {
    if (n < 2) {
        throw ParameterError("parity problem needs n >= 2");
    }
    return n / 2;
}

std::vector<std::uint64_t> lis_histogram(int n) {
    if (n < 1 || n > 9) {
        throw SizeError("longest increasing subsequence enumeration supports 1 <= n <= 9");
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> tails;
    do {
        // Patience sorting.
        tails.clear();
        for (int v : perm) {
            auto it = std::lower_bound(tails.begin(), tails.end(), v);
            if (it == tails.end()) {
                tails.push_back(v);
            } else {
                *it = v;
            }
        }
        ++hist[tails.size()];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return hist;
}

std::uint64_t lis_count(int n, int min_length) {
    auto hist = lis_histogram(n);
    std::uint64_t total = 0;
    for (int l = std::max(min_length, 0); l <= n; ++l) {
        total += hist[static_cast<std::size_t>(l)];
    }
    return total;
}

// ---------------------------------------------------------------------------------------

FiniteField::FiniteField(int q) : q_(q) {
    // Monic irreducible of degree r, low coefficients first (leading 1 omitted).
    std::vector<int> modulus;
    switch (q) {
        case 2: case 3: case 5: case 7:
            p_ = q;
            r_ = 1;
            break;
        case 4:
            p_ = 2, r_ = 2, modulus = {1, 1};     // x^2 + x + 1
            break;
        case 8:
            p_ = 2, r_ = 3, modulus = {1, 1, 0};  // x^3 + x + 1
            break;
        case 9:
            p_ = 3, r_ = 2, modulus = {1, 0};     // x^2 + 1
            break;
        default:
            throw UnsupportedError("field of order " + std::to_string(q) + " is not tabulated");
    }
    auto encode = [&](const std::vector<int> &d) {
        int v = 0;
        for (int i = r_ - 1; i >= 0; --i) {
            v = v * p_ + d[static_cast<std::size_t>(i)];
        }
        return v;
    };
    add_.resize(static_cast<std::size_t>(q * q));
    mul_.resize(static_cast<std::size_t>(q * q));
    for (int a = 0; a < q; ++a) {
        auto da = digits(a);
        for (int b = 0; b < q; ++b) {
            auto db = digits(b);
            std::vector<int> sum(static_cast<std::size_t>(r_));
            for (int i = 0; i < r_; ++i) {
                sum[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
            }
            add_[static_cast<std::size_t>(a * q + b)] = encode(sum);
            std::vector<int> prod(static_cast<std::size_t>(2 * r_ - 1), 0);
            for (int i = 0; i < r_; ++i) {
                for (int j = 0; j < r_; ++j) {
                    auto &c = prod[static_cast<std::size_t>(i + j)];
                    c = (c + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
                }
            }
            // x^r = -modulus.
            for (int k = 2 * r_ - 2; k >= r_; --k) {
                int c = prod[static_cast<std::size_t>(k)];
                prod[static_cast<std::size_t>(k)] = 0;
                for (int i = 0; i < r_; ++i) {
                    auto &t = prod[static_cast<std::size_t>(k - r_ + i)];
                    t = ((t - c * modulus[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
                }
            }
            prod.resize(static_cast<std::size_t>(r_));
            mul_[static_cast<std::size_t>(a * q + b)] = encode(prod);
        }
    }
}

std::vector<int> FiniteField::digits(int a) const {
    std::vector<int> out(static_cast<std::size_t>(r_));
    for (int i = 0; i < r_; ++i) {
        out[static_cast<std::size_t>(i)] = a % p_;
        a /= p_;
    }
    return out;
}

namespace {

void check_interpolation(int q, int d, int t) {
    if (d < 1 || d > 3 || t < 1 || t > 4) {
        throw ParameterError("interpolation sumsets support 1 <= d <= 3 and 1 <= t <= 4");
    }
    (void)q;
}

// Curve points encoded base q, coordinate 0 most significant.
std::vector<int> curve_points(const FiniteField &f, int d) {
    std::set<int> pts;
    const int q = f.order();
    for (int x = 0; x < q; ++x) {
        for (int y = 0; y < q; ++y) {
            int code = 0;
            int term = y;
            for (int i = 0; i <= d; ++i) {
                code = code * q + term;
                term = f.mul(term, x);
            }
            pts.insert(code);
        }
    }
    return {pts.begin(), pts.end()};
}

}  // namespace

std::vector<std::uint64_t> interpolation_sumset_sizes(int q, int d, int t_max) {
    check_interpolation(q, d, t_max);
    FiniteField f(q);
    const auto curve = curve_points(f, d);
    auto add_points = [&](int a, int b) {
        int out = 0;
        int scale = 1;
        for (int i = 0; i <= d; ++i) {
            out += f.add(a % q, b % q) * scale;
            a /= q;
            b /= q;
            scale *= q;
        }
        return out;
    };
    std::vector<std::uint64_t> sizes;
    std::set<int> current(curve.begin(), curve.end());
    sizes.push_back(current.size());
    for (int t = 2; t <= t_max; ++t) {
        std::set<int> next;
        for (int a : current) {
            for (int b : curve) {
                next.insert(add_points(a, b));
            }
        }
        current = std::move(next);
        sizes.push_back(current.size());
    }
    return sizes;
}

Rational interpolation_success(int q, int d, int t) {
    auto sizes = interpolation_sumset_sizes(q, d, t);
    Rational r(mpz_class(static_cast<unsigned long>(sizes.back())), ipow(q, d + 1));
    r.canonicalize();
    return r;
}

ClassFunction interpolation_character(int q, int d) {
    check_interpolation(q, d, 1);
    FiniteField f(q);
    const int coords = f.degree() * (d + 1);
    auto table = char_table_abelian(std::vector<int>(static_cast<std::size_t>(coords), f.characteristic()));
    std::vector<std::pair<std::size_t, std::int64_t>> terms;
    for (int code : curve_points(f, d)) {
        std::vector<int> flat;
        std::vector<int> components;
        for (int i = 0; i <= d; ++i) {
            components.push_back(code % q);
            code /= q;
        }
        std::reverse(components.begin(), components.end());
        for (int c : components) {
            for (int digit : f.digits(c)) {
                flat.push_back(digit);
            }
        }
        terms.emplace_back(table->index_of(join_label(flat)), 1);
    }
    return ClassFunction::from_irreducibles(table, terms);
}

ClassFunction van_dam_character(int n) {
    auto table = char_table_abelian(std::vector<int>(static_cast<std::size_t>(n), 2));
    std::vector<std::pair<std::size_t, std::int64_t>> terms = {
        {table->index_of(join_label(std::vector<int>(static_cast<std::size_t>(n), 0))), 1}};
    for (int i = 0; i < n; ++i) {
        std::vector<int> a(static_cast<std::size_t>(n), 0);
        a[static_cast<std::size_t>(i)] = 1;
        terms.emplace_back(table->index_of(join_label(a)), 1);
    }
    return ClassFunction::from_irreducibles(table, terms);
}

}  // namespace symoracle

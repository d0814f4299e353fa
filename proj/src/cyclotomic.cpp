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

#include "symoracle/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "symoracle/error.hpp"

namespace symoracle {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
    if (v > static_cast<i128>(INT64_MAX) || v < static_cast<i128>(INT64_MIN)) {
        throw OverflowError("cyclotomic coefficient left the int64 range");
    }
    return static_cast<std::int64_t>(v);
}

i128 mul128(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("cyclotomic intermediate overflow");
    }
    return r;
}

i128 add128(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("cyclotomic intermediate overflow");
    }
    return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

using Poly = std::vector<std::int64_t>;  // ascending coefficients

Poly poly_mul(const Poly &a, const Poly &b) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = narrow(add128(r[i + j], mul128(a[i], b[j])));
        }
    }
    return r;
}

// Exact division by a monic polynomial.
Poly poly_div_monic(Poly num, const Poly &den) {
    std::size_t dn = den.size() - 1;
    Poly q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        std::int64_t c = num[i];
        q[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) {
            num[i - dn + j] = narrow(num[i - dn + j] - mul128(c, den[j]));
        }
    }
    for (std::size_t i = 0; i < dn; ++i) {
        if (num[i] != 0) {
            throw ParameterError("cyclotomic polynomial division left a remainder");
        }
    }
    return q;
}

Poly cyclotomic_polynomial(int m) {
    Poly prod{1};
    for (int d = 1; d < m; ++d) {
        if (m % d == 0) {
            prod = poly_mul(prod, cyclotomic_polynomial(d));
        }
    }
    Poly xm(static_cast<std::size_t>(m) + 1, 0);
    xm[0] = -1;
    xm[static_cast<std::size_t>(m)] = 1;
    return poly_div_monic(xm, prod);
}

// Coefficients of the value in Q(zeta_target), sharing the original denominator.
std::vector<i128> lift(std::span<const std::int64_t> nums, int from, const CyclotomicField &field) {
    std::vector<i128> out(static_cast<std::size_t>(field.degree()), 0);
    if (from == field.conductor()) {
        std::copy(nums.begin(), nums.end(), out.begin());
        return out;
    }
    std::int64_t step = field.conductor() / from;
    for (std::size_t j = 0; j < nums.size(); ++j) {
        if (nums[j] == 0) {
            continue;
        }
        auto p = field.power(static_cast<std::int64_t>(j) * step);
        for (std::size_t t = 0; t < out.size(); ++t) {
            if (p[t] != 0) {
                out[t] = add128(out[t], mul128(nums[j], p[t]));
            }
        }
    }
    return out;
}

std::vector<std::int64_t> reduce_dense(const CyclotomicField &field, const std::vector<i128> &dense) {
    std::vector<i128> acc(static_cast<std::size_t>(field.degree()), 0);
    for (std::size_t k = 0; k < dense.size(); ++k) {
        if (dense[k] == 0) {
            continue;
        }
        auto p = field.power(static_cast<std::int64_t>(k));
        for (std::size_t t = 0; t < acc.size(); ++t) {
            if (p[t] != 0) {
                acc[t] = add128(acc[t], mul128(dense[k], p[t]));
            }
        }
    }
    std::vector<std::int64_t> out(acc.size());
    for (std::size_t t = 0; t < acc.size(); ++t) {
        out[t] = narrow(acc[t]);
    }
    return out;
}

}  // namespace

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    return narrow(mul128(a / gcd64(a, b), b));
}

CyclotomicField::CyclotomicField(int conductor) : conductor_(conductor) {
    minimal_polynomial_ = cyclotomic_polynomial(conductor);
    degree_ = static_cast<int>(minimal_polynomial_.size()) - 1;
    auto m = static_cast<std::size_t>(conductor);
    auto deg = static_cast<std::size_t>(degree_);
    powers_.assign(m * deg, 0);
    std::vector<std::int64_t> cur(deg, 0);
    cur[0] = 1;
    for (std::size_t k = 0; k < m; ++k) {
        std::copy(cur.begin(), cur.end(), powers_.begin() + static_cast<std::ptrdiff_t>(k * deg));
        // multiply by x and reduce modulo the monic minimal polynomial
        std::int64_t top = cur[deg - 1];
        for (std::size_t j = deg - 1; j > 0; --j) {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if (top != 0) {
            for (std::size_t j = 0; j < deg; ++j) {
                cur[j] = narrow(cur[j] - mul128(top, minimal_polynomial_[j]));
            }
        }
    }
}

const CyclotomicField &CyclotomicField::get(int conductor) {
    if (conductor < 1) {
        throw ParameterError("cyclotomic conductor must be positive");
    }
    if (conductor > default_caps().max_conductor) {
        throw SizeError("cyclotomic conductor " + std::to_string(conductor) + " exceeds cap " +
                        std::to_string(default_caps().max_conductor));
    }
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CyclotomicField>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(conductor);
    if (it == cache.end()) {
        it = cache.emplace(conductor, std::unique_ptr<CyclotomicField>(new CyclotomicField(conductor)))
                 .first;
    }
    return *it->second;
}

std::span<const std::int64_t> CyclotomicField::power(std::int64_t k) const {
    std::int64_t r = k % conductor_;
    if (r < 0) {
        r += conductor_;
    }
    auto deg = static_cast<std::size_t>(degree_);
    return {powers_.data() + static_cast<std::size_t>(r) * deg, deg};
}

Cyclotomic::Cyclotomic() : Cyclotomic(std::int64_t{0}) {
}

namespace {
const CyclotomicField *rational_field() {
    static const CyclotomicField *field = &CyclotomicField::get(1);
    return field;
}
}  // namespace

Cyclotomic::Cyclotomic(std::int64_t value) : field_(rational_field()), numerators_{value} {
}

Cyclotomic::Cyclotomic(const Rational &value) : field_(rational_field()) {
    if (!value.get_num().fits_slong_p() || !value.get_den().fits_slong_p()) {
        throw OverflowError("rational does not fit a cyclotomic coefficient");
    }
    numerators_ = {value.get_num().get_si()};
    denominator_ = value.get_den().get_si();
}

Cyclotomic::Cyclotomic(const CyclotomicField *field, std::vector<std::int64_t> numerators,
                       std::int64_t denominator)
    : field_(field), numerators_(std::move(numerators)), denominator_(denominator) {
    normalize();
}

void Cyclotomic::normalize() {
    if (denominator_ == 0) {
        throw ParameterError("cyclotomic with zero denominator");
    }
    if (denominator_ < 0) {
        denominator_ = -denominator_;
        for (auto &c : numerators_) {
            c = -c;
        }
    }
    std::int64_t g = denominator_;
    for (auto c : numerators_) {
        g = gcd64(g, c);
        if (g == 1) {
            return;
        }
    }
    bool all_zero = std::all_of(numerators_.begin(), numerators_.end(), [](auto c) { return c == 0; });
    if (all_zero) {
        denominator_ = 1;
        return;
    }
    for (auto &c : numerators_) {
        c /= g;
    }
    denominator_ /= g;
}

Cyclotomic Cyclotomic::root_of_unity(int conductor, std::int64_t exponent) {
    const auto &field = CyclotomicField::get(conductor);
    auto p = field.power(exponent);
    return Cyclotomic(&field, std::vector<std::int64_t>(p.begin(), p.end()), 1);
}

Cyclotomic Cyclotomic::from_powers(int conductor, std::span<const std::int64_t> coefficients,
                                   std::int64_t denominator) {
    const auto &field = CyclotomicField::get(conductor);
    std::vector<i128> dense(static_cast<std::size_t>(conductor), 0);
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        auto &slot = dense[k % static_cast<std::size_t>(conductor)];
        slot = add128(slot, coefficients[k]);
    }
    return Cyclotomic(&field, reduce_dense(field, dense), denominator);
}

bool Cyclotomic::is_zero() const {
    return std::all_of(numerators_.begin(), numerators_.end(), [](auto c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
    return std::all_of(numerators_.begin() + 1, numerators_.end(), [](auto c) { return c == 0; });
}

bool Cyclotomic::is_integer() const {
    return is_rational() && denominator_ == 1;
}

Rational Cyclotomic::to_rational() const {
    if (!is_rational()) {
        throw ParameterError("cyclotomic value " + to_string() + " is not rational");
    }
    return make_rational(numerators_[0], denominator_);
}

std::int64_t Cyclotomic::to_integer() const {
    if (!is_integer()) {
        throw ParameterError("cyclotomic value " + to_string() + " is not an integer");
    }
    return numerators_[0];
}

Cyclotomic Cyclotomic::galois(std::int64_t a) const {
    int m = conductor();
    if (std::gcd(((a % m) + m) % m, static_cast<std::int64_t>(m)) != 1 && m > 1) {
        throw ParameterError("Galois exponent must be coprime to the conductor");
    }
    std::vector<i128> dense(static_cast<std::size_t>(m), 0);
    for (std::size_t j = 0; j < numerators_.size(); ++j) {
        std::int64_t e = ((static_cast<std::int64_t>(j) * (a % m)) % m + m) % m;
        dense[static_cast<std::size_t>(e)] = add128(dense[static_cast<std::size_t>(e)], numerators_[j]);
    }
    return Cyclotomic(field_, reduce_dense(*field_, dense), denominator_);
}

Cyclotomic Cyclotomic::conj() const {
    return galois(-1);
}

Cyclotomic Cyclotomic::embed(int target) const {
    if (target % conductor() != 0) {
        throw ParameterError("cannot embed Q(zeta_" + std::to_string(conductor()) + ") into Q(zeta_" +
                             std::to_string(target) + ")");
    }
    if (target == conductor()) {
        return *this;
    }
    auto lifted = lift(numerators_, conductor(), CyclotomicField::get(target));
    std::vector<std::int64_t> nums(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) {
        nums[i] = narrow(lifted[i]);
    }
    return Cyclotomic(&CyclotomicField::get(target), std::move(nums), denominator_);
}

Cyclotomic Cyclotomic::minimized() const {
    if (is_rational()) {
        return Cyclotomic(rational_field(), {numerators_[0]}, denominator_);
    }
    int m = conductor();
    for (int d = 2; d < m; ++d) {
        if (m % d != 0) {
            continue;
        }
        bool fixed = true;
        for (int a = 1 + d; a < m && fixed; a += d) {
            if (std::gcd(a, m) == 1 && !(galois(a) == *this)) {
                fixed = false;
            }
        }
        if (!fixed) {
            continue;
        }
        // Solve sum_i c_i * zeta_d^i = value over the power basis of Q(zeta_m).
        const auto &small = CyclotomicField::get(d);
        auto rows = static_cast<std::size_t>(field_->degree());
        auto cols = static_cast<std::size_t>(small.degree());
        std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
        for (std::size_t i = 0; i < cols; ++i) {
            auto p = field_->power(static_cast<std::int64_t>(i) * (m / d));
            for (std::size_t r = 0; r < rows; ++r) {
                a[r][i] = static_cast<long>(p[r]);
            }
        }
        for (std::size_t r = 0; r < rows; ++r) {
            a[r][cols] = static_cast<long>(numerators_[r]);
        }
        std::size_t pivot_row = 0;
        std::vector<std::size_t> pivot_col_of_row;
        for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
            std::size_t sel = pivot_row;
            while (sel < rows && a[sel][c] == 0) {
                ++sel;
            }
            if (sel == rows) {
                continue;
            }
            std::swap(a[sel], a[pivot_row]);
            for (std::size_t r = 0; r < rows; ++r) {
                if (r != pivot_row && a[r][c] != 0) {
                    Rational f = a[r][c] / a[pivot_row][c];
                    for (std::size_t k = c; k <= cols; ++k) {
                        a[r][k] -= f * a[pivot_row][k];
                    }
                }
            }
            pivot_col_of_row.push_back(c);
            ++pivot_row;
        }
        std::vector<Rational> sol(cols, 0);
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            sol[pivot_col_of_row[r]] = a[r][cols] / a[r][pivot_col_of_row[r]];
        }
        Cyclotomic out;
        for (std::size_t i = 0; i < cols; ++i) {
            if (sol[i] != 0) {
                out += Cyclotomic(sol[i]) * Cyclotomic::root_of_unity(d, static_cast<std::int64_t>(i));
            }
        }
        out = out * Cyclotomic(make_rational(1, denominator_));
        if (out.conductor() != d) {
            out = out.embed(d);
        }
        return out;
    }
    return *this;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> sum = 0.0;
    int m = conductor();
    for (std::size_t j = 0; j < numerators_.size(); ++j) {
        if (numerators_[j] != 0) {
            double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / m;
            sum += static_cast<double>(numerators_[j]) * std::polar(1.0, angle);
        }
    }
    return sum / static_cast<double>(denominator_);
}

std::string Cyclotomic::to_string() const {
    return minimized().to_string(minimized().conductor());
}

std::string Cyclotomic::to_string(int target) const {
    Cyclotomic v = *this;
    if (target % v.conductor() != 0) {
        v = v.minimized();
    }
    v = v.embed(target);
    std::string out;
    for (std::size_t j = 0; j < v.numerators_.size(); ++j) {
        std::int64_t c = v.numerators_[j];
        if (c == 0) {
            continue;
        }
        Rational coef = make_rational(c, v.denominator_);
        bool negative = coef < 0;
        Rational mag = negative ? Rational(-coef) : coef;
        std::string mag_text =
            mag.get_den() == 1 ? mag.get_num().get_str() : mag.get_num().get_str() + "/" + mag.get_den().get_str();
        std::string term;
        if (j == 0) {
            term = mag_text;
        } else {
            std::string power = j == 1 ? "z" : "z^" + std::to_string(j);
            term = mag == 1 ? power : mag_text + "*" + power;
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " + term : " + " + term;
        }
    }
    return out.empty() ? "0" : out;
}

Cyclotomic Cyclotomic::parse(std::string_view text, int conductor) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw ParseError("empty cyclotomic string");
    }
    Cyclotomic total = Cyclotomic(0).embed(conductor);
    std::size_t i = 0;
    auto fail = [&](const std::string &why) {
        throw ParseError("bad cyclotomic '" + std::string(text) + "': " + why);
    };
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        } else if (i != 0) {
            fail("expected '+' or '-'");
        }
        std::size_t end = i;
        while (end < s.size() && s[end] != '+' && s[end] != '-') {
            if (s[end] == '^') {
                ++end;  // exponent may carry a sign
                if (end < s.size() && (s[end] == '-' || s[end] == '+')) {
                    ++end;
                }
                continue;
            }
            ++end;
        }
        std::string term = s.substr(i, end - i);
        if (term.empty()) {
            fail("empty term");
        }
        Rational coef = 1;
        std::int64_t exponent = 0;
        auto zpos = term.find('z');
        if (zpos == std::string::npos) {
            coef = parse_rational(term);
        } else {
            std::string before = term.substr(0, zpos);
            if (!before.empty() && before.back() == '*') {
                before.pop_back();
            }
            if (!before.empty()) {
                coef = parse_rational(before);
            }
            std::string after = term.substr(zpos + 1);
            if (!after.empty()) {
                if (after[0] != '^' || after.size() < 2) {
                    fail("malformed power");
                }
                try {
                    std::size_t used = 0;
                    exponent = std::stoll(after.substr(1), &used);
                    if (used != after.size() - 1) {
                        fail("malformed exponent");
                    }
                } catch (const std::logic_error &) {
                    fail("malformed exponent");
                }
            } else {
                exponent = 1;
            }
        }
        if (negative) {
            coef = -coef;
        }
        total += Cyclotomic(coef) * Cyclotomic::root_of_unity(conductor, exponent);
        i = end;
    }
    return total.conductor() == conductor ? total : total.embed(conductor);
}

const CyclotomicField &Cyclotomic::common_field(const Cyclotomic &other) const {
    if (conductor() == other.conductor()) {
        return *field_;
    }
    if (other.conductor() == 1) {
        return *field_;
    }
    if (conductor() == 1) {
        return *other.field_;
    }
    return CyclotomicField::get(static_cast<int>(lcm_checked(conductor(), other.conductor())));
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &other) {
    const auto &field = common_field(other);
    auto a = lift(numerators_, conductor(), field);
    auto b = lift(other.numerators_, other.conductor(), field);
    std::int64_t den = lcm_checked(denominator_, other.denominator_);
    i128 fa = den / denominator_;
    i128 fb = den / other.denominator_;
    std::vector<std::int64_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = narrow(add128(mul128(a[i], fa), mul128(b[i], fb)));
    }
    field_ = &field;
    numerators_ = std::move(out);
    denominator_ = den;
    normalize();
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto &c : r.numerators_) {
        c = -c;
    }
    return r;
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &other) {
    return *this += -other;
}

Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &other) {
    const auto &field = common_field(other);
    int target = field.conductor();
    auto a = lift(numerators_, conductor(), field);
    auto b = lift(other.numerators_, other.conductor(), field);
    std::vector<i128> dense(static_cast<std::size_t>(target), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] != 0) {
                auto &slot = dense[(i + j) % static_cast<std::size_t>(target)];
                slot = add128(slot, mul128(a[i], b[j]));
            }
        }
    }
    std::int64_t den = narrow(mul128(denominator_, other.denominator_));
    field_ = &field;
    numerators_ = reduce_dense(field, dense);
    denominator_ = den;
    normalize();
    return *this;
}

bool operator==(const Cyclotomic &a, const Cyclotomic &b) {
    if (a.conductor() == b.conductor()) {
        return a.denominator_ == b.denominator_ && a.numerators_ == b.numerators_;
    }
    const auto &field = a.common_field(b);
    auto x = lift(a.numerators_, a.conductor(), field);
    auto y = lift(b.numerators_, b.conductor(), field);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (mul128(x[i], b.denominator_) != mul128(y[i], a.denominator_)) {
            return false;
        }
    }
    return true;
}

}  // namespace symoracle

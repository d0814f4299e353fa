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

#include "symoracle/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "symoracle/error.hpp"

namespace symoracle {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw ParameterError("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw ParameterError("partition parts must be weakly decreasing");
        }
        size_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
        if (token.empty()) {
            return;
        }
        auto caret = token.find('^');
        try {
            int part = std::stoi(token.substr(0, caret));
            int repeat = caret == std::string::npos ? 1 : std::stoi(token.substr(caret + 1));
            if (repeat < 0) {
                throw ParseError("negative repeat");
            }
            parts.insert(parts.end(), static_cast<std::size_t>(repeat), part);
        } catch (const std::logic_error &) {
            throw ParseError("bad partition '" + std::string(text) + "'");
        }
        token.clear();
    };
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '^') {
            token.push_back(c);
        } else if (c == ',' || c == ' ' || c == '[' || c == ']' || c == '(' || c == ')') {
            flush();
        } else {
            throw ParseError("bad partition '" + std::string(text) + "'");
        }
    }
    flush();
    std::vector<int> sorted = parts;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted != parts) {
        throw ParseError("partition parts must be weakly decreasing: '" + std::string(text) + "'");
    }
    try {
        return Partition(std::move(parts));
    } catch (const ParameterError &e) {
        throw ParseError(e.what());
    }
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    for (int j = 1; j <= first(); ++j) {
        int count = 0;
        for (int p : parts_) {
            if (p >= j) {
                ++count;
            }
        }
        out.push_back(count);
    }
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            s += ",";
        }
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) {
        throw ParameterError("partitions of a negative integer");
    }
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> gen = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            gen(remaining - p, p);
            cur.pop_back();
        }
    };
    gen(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t factorial(int n) {
    if (n > 20) {
        throw SizeError("factorial exceeds 64 bits");
    }
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) {
        r *= static_cast<std::uint64_t>(i);
    }
    return r;
}

std::uint64_t hook_length_dimension(const Partition &lambda) {
    Partition conj = lambda.conjugate();
    // n!/prod(hooks) evaluated with rational cancellation via prime-free running product.
    std::vector<int> numer;
    std::vector<int> denom;
    for (int i = 2; i <= lambda.size(); ++i) {
        numer.push_back(i);
    }
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            int hook = (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
            denom.push_back(hook);
        }
    }
    unsigned __int128 num = 1;
    for (int v : numer) {
        num *= static_cast<unsigned>(v);
    }
    unsigned __int128 den = 1;
    for (int v : denom) {
        den *= static_cast<unsigned>(v);
    }
    if (den == 0 || num % den != 0) {
        throw ParameterError("hook length formula did not divide exactly");
    }
    return static_cast<std::uint64_t>(num / den);
}

std::vector<Partition> add_remove_box(const Partition &lambda) {
    std::set<Partition> out;
    std::vector<int> base(lambda.parts().begin(), lambda.parts().end());
    base.push_back(0);
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (i > 0 && base[i] + 1 > base[i - 1]) {
            continue;
        }
        std::vector<int> added = base;
        added[i] += 1;
        for (std::size_t k = 0; k < added.size(); ++k) {
            if (added[k] == 0) {
                continue;
            }
            if (k + 1 < added.size() && added[k] - 1 < added[k + 1]) {
                continue;
            }
            std::vector<int> removed = added;
            removed[k] -= 1;
            out.insert(Partition(removed));
        }
    }
    return {out.begin(), out.end()};
}

std::uint64_t centralizer_order(const Partition &cycle_type) {
    std::map<int, int> mult;
    for (int p : cycle_type.parts()) {
        ++mult[p];
    }
    std::uint64_t z = 1;
    for (auto [k, m] : mult) {
        for (int i = 0; i < m; ++i) {
            z *= static_cast<std::uint64_t>(k);
        }
        z *= factorial(m);
    }
    return z;
}

std::int64_t MurnaghanNakayama::value(const Partition &shape, const Partition &cycle_type) {
    if (shape.size() != cycle_type.size()) {
        throw ParameterError("shape and cycle type must partition the same n");
    }
    std::vector<int> s(shape.parts().begin(), shape.parts().end());
    return recurse(s, cycle_type.parts());
}

std::int64_t MurnaghanNakayama::recurse(const std::vector<int> &shape, std::span<const int> cycles) {
    if (cycles.empty()) {
        return shape.empty() ? 1 : 0;
    }
    auto key = std::make_pair(shape, std::vector<int>(cycles.begin(), cycles.end()));
    if (auto it = memo_.find(key); it != memo_.end()) {
        return it->second;
    }
    int r = cycles.front();
    auto len = static_cast<int>(shape.size());
    std::vector<int> beta(shape.size());
    for (int i = 0; i < len; ++i) {
        beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (len - 1 - i);
    }
    std::int64_t total = 0;
    for (std::size_t idx = 0; idx < beta.size(); ++idx) {
        int b = beta[idx];
        int target = b - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) {
            continue;
        }
        int between = 0;
        for (int other : beta) {
            if (other > target && other < b) {
                ++between;
            }
        }
        std::vector<int> moved = beta;
        moved[idx] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> next;
        for (int i = 0; i < len; ++i) {
            int part = moved[static_cast<std::size_t>(i)] - (len - 1 - i);
            if (part > 0) {
                next.push_back(part);
            }
        }
        std::int64_t sub = recurse(next, cycles.subspan(1));
        total += (between % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
}

}  // namespace symoracle

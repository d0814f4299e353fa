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

#ifndef SYMORACLE_PARTITION_HPP
#define SYMORACLE_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symoracle {

/// Weakly decreasing positive parts. Orders lexicographically on the parts.
class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// "[3,1,1]", "[3,1^2]", "3 1 1" and "(3,1,1)" are accepted.
    static Partition parse(std::string_view text);

    int size() const {
        return size_;
    }
    int length() const {
        return static_cast<int>(parts_.size());
    }
    std::span<const int> parts() const {
        return parts_;
    }
    int operator[](int i) const {
        return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    int first() const {
        return parts_.empty() ? 0 : parts_.front();
    }

    Partition conjugate() const;
    bool is_self_conjugate() const {
        return *this == conjugate();
    }

    /// "[3,1,1]".
    std::string to_string() const;

    friend auto operator<=>(const Partition &a, const Partition &b) {
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Partition &a, const Partition &b) {
        return a.parts_ == b.parts_;
    }

   private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n in increasing lexicographic order: [1^n] first, [n] last.
std::vector<Partition> partitions_of(int n);

/// Number of standard Young tableaux, n! / prod(hooks).
std::uint64_t hook_length_dimension(const Partition &lambda);

/// Partitions obtained by adding one box and then removing one box (lambda itself included).
std::vector<Partition> add_remove_box(const Partition &lambda);

/// |centralizer| of a permutation of the given cycle type: prod_k k^{m_k} m_k!.
std::uint64_t centralizer_order(const Partition &cycle_type);

std::uint64_t factorial(int n);

/// Irreducible S_n character values by border-strip removal on beta-sets, memoized on
/// (shape, remaining cycle type).
class MurnaghanNakayama {
   public:
    std::int64_t value(const Partition &shape, const Partition &cycle_type);

    std::size_t memo_size() const {
        return memo_.size();
    }

   private:
    std::int64_t recurse(const std::vector<int> &shape, std::span<const int> cycles);

    std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> memo_;
};

}  // namespace symoracle

#endif

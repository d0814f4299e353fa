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

#include <gtest/gtest.h>

#include "symoracle/error.hpp"

using namespace symoracle;

TEST(partition, counts_and_order) {
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        EXPECT_EQ(partitions_of(n).size(), static_cast<std::size_t>(counts[n]));
    }
    auto p4 = partitions_of(4);
    EXPECT_EQ(p4.front().to_string(), "[1,1,1,1]");
    EXPECT_EQ(p4.back().to_string(), "[4]");
}

TEST(partition, parse_forms) {
    EXPECT_EQ(Partition::parse("[3,1^2]"), Partition({3, 1, 1}));
    EXPECT_EQ(Partition::parse("3 1 1"), Partition({3, 1, 1}));
    EXPECT_EQ(Partition::parse("(3,1,1)"), Partition({3, 1, 1}));
    EXPECT_THROW(Partition::parse("1,3"), ParseError);
    EXPECT_THROW(Partition::parse("x"), ParseError);
}

TEST(partition, conjugation) {
    EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
    EXPECT_TRUE(Partition({2, 1}).is_self_conjugate());
    EXPECT_TRUE(Partition({3, 2, 1}).is_self_conjugate());
    for (int n = 1; n <= 8; ++n) {
        for (const auto &p : partitions_of(n)) {
            EXPECT_EQ(p.conjugate().conjugate(), p);
        }
    }
}

TEST(partition, dimensions_square_sum_to_factorial) {
    for (int n = 1; n <= 12; ++n) {
        std::uint64_t sum = 0;
        for (const auto &p : partitions_of(n)) {
            std::uint64_t d = hook_length_dimension(p);
            sum += d * d;
        }
        EXPECT_EQ(sum, factorial(n)) << n;
    }
    EXPECT_EQ(hook_length_dimension(Partition({3, 2})), 5u);
}

TEST(partition, class_sizes_sum_to_factorial) {
    for (int n = 1; n <= 12; ++n) {
        std::uint64_t sum = 0;
        for (const auto &p : partitions_of(n)) {
            sum += factorial(n) / centralizer_order(p);
        }
        EXPECT_EQ(sum, factorial(n));
    }
}

TEST(partition, add_remove_box_neighbours) {
    auto nb = add_remove_box(Partition({2}));
    // [2] -> {[3],[2,1]} -> remove a box: [2], [1,1].
    ASSERT_EQ(nb.size(), 2u);
    EXPECT_EQ(nb[0], Partition({1, 1}));
    EXPECT_EQ(nb[1], Partition({2}));
}

TEST(murnaghan_nakayama, s4_table) {
    MurnaghanNakayama mn;
    // Rows [4],[3,1],[2,2],[2,1,1],[1^4]; columns 1^4, 2 1^2, 2^2, 3 1, 4.
    const std::vector<Partition> shapes = {Partition({4}), Partition({3, 1}), Partition({2, 2}),
                                           Partition({2, 1, 1}), Partition({1, 1, 1, 1})};
    const std::vector<Partition> types = {Partition({1, 1, 1, 1}), Partition({2, 1, 1}),
                                          Partition({2, 2}), Partition({3, 1}), Partition({4})};
    const int expected[5][5] = {{1, 1, 1, 1, 1},
                                {3, 1, -1, 0, -1},
                                {2, 0, 2, -1, 0},
                                {3, -1, -1, 0, 1},
                                {1, -1, 1, 1, -1}};
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            EXPECT_EQ(mn.value(shapes[i], types[j]), expected[i][j]) << i << "," << j;
        }
    }
}

TEST(murnaghan_nakayama, identity_column_is_dimension) {
    MurnaghanNakayama mn;
    for (int n = 1; n <= 9; ++n) {
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        for (const auto &p : partitions_of(n)) {
            EXPECT_EQ(static_cast<std::uint64_t>(mn.value(p, Partition(ones))),
                      hook_length_dimension(p));
        }
    }
}

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

#include <gtest/gtest.h>

#include "symoracle/error.hpp"

using namespace symoracle;

TEST(rational, always_renders_fraction) {
    EXPECT_EQ(to_string(make_rational(1)), "1/1");
    EXPECT_EQ(to_string(make_rational(0)), "0/1");
    EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
}

TEST(rational, parse_round_trip) {
    for (const char *text : {"0/1", "7/8", "-23/27", "1/1"}) {
        EXPECT_EQ(to_string(parse_rational(text)), text);
    }
    EXPECT_EQ(parse_rational("5"), make_rational(5));
    EXPECT_EQ(parse_rational("-2/4"), make_rational(-1, 2));
}

TEST(rational, parse_rejects_garbage) {
    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("1.5"), ParseError);
    EXPECT_THROW(parse_rational("a/b"), ParseError);
}

// Copyright 2026 The zeno-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <bit>
#include <cstdint>
#include <vector>

#include "zeno/counting.hpp"
#include "zeno/error.hpp"

using namespace zeno;

namespace {

// Table of counts by (ones, transitions) for all n-bit strings, built
// independently of the library enumerator.
std::vector<std::vector<std::uint64_t>> local_table(int n) {
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n, 0));
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int ones = std::popcount(s);
    const std::uint32_t diff = (s ^ (s >> 1)) & ((1u << (n - 1)) - 1u);
    t[ones][std::popcount(diff)] += 1;
  }
  return t;
}

}  // namespace

TEST(Counting, WorkedExamples) {
  EXPECT_EQ(counting_closed_form(1, 4, 2), 2u);  // AABB, BBAA
  EXPECT_EQ(counting_closed_form(0, 4, 2), 0u);
  EXPECT_EQ(counting_closed_form(3, 4, 2), 2u);  // ABAB, BABA
  EXPECT_EQ(counting_closed_form(2, 4, 2), 2u);  // ABBA, BAAB
}

TEST(Counting, ExhaustiveAgreement) {
  for (int n = 1; n <= 14; ++n) {
    const auto table = local_table(n);
    for (int k = 0; k <= n; ++k) {
      std::uint64_t row = 0;
      for (int j = 0; j <= n; ++j) {
        const std::uint64_t closed = counting_closed_form(j, n, k);
        const std::uint64_t expect = j < n ? table[k][j] : 0u;
        ASSERT_EQ(closed, expect) << "j=" << j << " n=" << n << " k=" << k;
        ASSERT_EQ(counting_brute_force(j, n, k), expect) << "j=" << j << " n=" << n << " k=" << k;
        row += closed;
      }
      EXPECT_EQ(row, binomial(n, k)) << n << " " << k;
    }
  }
}

TEST(Counting, ConstantStrings) {
  for (int n = 1; n <= 20; ++n) {
    EXPECT_EQ(counting_brute_force(0, n, 0), 1u);
    EXPECT_EQ(counting_brute_force(1, n, 0), 0u);
    EXPECT_EQ(counting_closed_form(0, n, n), 1u);
  }
}

TEST(Counting, Binomial) {
  EXPECT_EQ(binomial(0, 0), 1u);
  EXPECT_EQ(binomial(10, 3), 120u);
  EXPECT_EQ(binomial(60, 30), 118264581564861424u);
  EXPECT_EQ(binomial(5, 7), 0u);
}

TEST(Counting, Errors) {
  EXPECT_THROW(counting_brute_force(0, 25, 3), ResourceLimit);
  EXPECT_THROW(counting_closed_form(0, 0, 0), InvalidInput);
  EXPECT_THROW(counting_closed_form(0, 4, 5), InvalidInput);
  EXPECT_THROW(counting_closed_form(-1, 4, 2), InvalidInput);
  EXPECT_THROW(counting_closed_form(0, 4, -1), InvalidInput);
  EXPECT_NO_THROW(counting_brute_force(0, kBruteForceMaxN, 1));
}

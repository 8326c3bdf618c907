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

#include "zeno/counting.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "zeno/error.hpp"

namespace zeno {

namespace {

using u128 = unsigned __int128;

void check_args(long long j, long long n, long long k, const char* op) {
  if (n < 1 || k < 0 || k > n || j < 0) {
    throw InvalidInput(std::string(op) + ": need n >= 1, 0 <= k <= n, j >= 0 (got j=" +
                       std::to_string(j) + " n=" + std::to_string(n) +
                       " k=" + std::to_string(k) + ")");
  }
}

u128 binom128(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    r = r * static_cast<u128>(n - k + i) / static_cast<u128>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) {
      throw ResourceLimit("binomial coefficient exceeds 64 bits");
    }
  }
  return r;
}

std::uint64_t narrow(u128 v) {
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw ResourceLimit("count exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::uint64_t binomial(long long n, long long k) { return narrow(binom128(n, k)); }

std::uint64_t counting_closed_form(long long j, long long n, long long k) {
  check_args(j, n, k, "counting_closed_form");
  if (j == 0) return (k == 0 || k == n) ? 1 : 0;
  const long long limit = 2 * std::min(k, n - k) - (2 * k == n ? 1 : 0);
  if (j > limit) return 0;
  const long long l = (j + 1) / 2;
  const u128 runs = binom128(n - k - 1, l - 1) * binom128(k - 1, l - 1);
  if (j % 2 == 1) return narrow(2 * runs);
  return narrow(static_cast<u128>(n - 2 * l) * runs / static_cast<u128>(l));
}

std::uint64_t counting_brute_force(long long j, long long n, long long k) {
  check_args(j, n, k, "counting_brute_force");
  if (n > kBruteForceMaxN) {
    throw ResourceLimit("counting_brute_force: n = " + std::to_string(n) + " exceeds " +
                        std::to_string(kBruteForceMaxN));
  }
  const std::uint32_t total = 1u << n;
  const std::uint32_t inner = (1u << (n - 1)) - 1u;
  std::uint64_t count = 0;
  for (std::uint32_t s = 0; s < total; ++s) {
    if (std::popcount(s) != k) continue;
    if (std::popcount((s ^ (s >> 1)) & inner) == j) ++count;
  }
  return count;
}

}  // namespace zeno

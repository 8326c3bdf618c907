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

#pragma once

#include <cstdint>

namespace zeno {

// Number of length-n strings over {A, B} with k letters A and exactly j
// adjacent changes AB or BA.
std::uint64_t counting_closed_form(long long j, long long n, long long k);
// Enumerates all 2^n strings; n <= 24.
std::uint64_t counting_brute_force(long long j, long long n, long long k);

inline constexpr long long kBruteForceMaxN = 24;

std::uint64_t binomial(long long n, long long k);

}  // namespace zeno

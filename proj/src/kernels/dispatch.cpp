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

#include <cstdlib>
#include <cstring>

#include "zeno/error.hpp"
#include "zeno/kernels.hpp"

namespace zeno::kernels {

bool cpu_supports(SimdLevel level) {
  switch (level) {
    case SimdLevel::scalar:
      return true;
    case SimdLevel::avx2:
#if defined(ZENO_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const char* level_name(SimdLevel level) {
  return level == SimdLevel::avx2 ? "avx2" : "scalar";
}

KernelTable table_for(SimdLevel level) {
  if (!cpu_supports(level)) {
    throw InvalidInput(std::string("SIMD level not available: ") + level_name(level));
  }
#if defined(ZENO_HAVE_AVX2)
  if (level == SimdLevel::avx2) {
    return {SimdLevel::avx2, &avx2::gemm, &avx2::axpy, &avx2::sum_abs2};
  }
#endif
  return {SimdLevel::scalar, &scalar::gemm, &scalar::axpy, &scalar::sum_abs2};
}

namespace {

SimdLevel pick_level() {
  if (const char* env = std::getenv("ZENO_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return SimdLevel::scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_supports(SimdLevel::avx2)) {
      return SimdLevel::avx2;
    }
  }
  return cpu_supports(SimdLevel::avx2) ? SimdLevel::avx2 : SimdLevel::scalar;
}

}  // namespace

const KernelTable& active() {
  static const KernelTable table = table_for(pick_level());
  return table;
}

}  // namespace zeno::kernels

// Copyright 2026 The mqsearch Authors
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

#include <cstdlib>
#include <stdexcept>

#include "mqs/kernels.hpp"

namespace mqs::kernels {

const Ops& scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();
#endif

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::scalar: return "scalar";
    case Variant::avx2: return "avx2";
  }
  return "?";
}

bool cpu_supports_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Ops& ops(Variant v) {
  switch (v) {
    case Variant::scalar: return scalar_ops();
    case Variant::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      if (cpu_supports_avx2()) return avx2_ops();
#endif
      throw std::runtime_error("avx2 kernels not available on this CPU");
  }
  return scalar_ops();
}

namespace {

Variant select_variant() {
  if (const char* env = std::getenv("MQS_KERNEL")) {
    const std::string want(env);
    if (want == "scalar") return Variant::scalar;
    if (want == "avx2") {
      if (!cpu_supports_avx2())
        throw std::runtime_error("MQS_KERNEL=avx2 requested but CPU lacks AVX2");
      return Variant::avx2;
    }
    throw std::runtime_error("MQS_KERNEL: unknown variant '" + want + "'");
  }
  return cpu_supports_avx2() ? Variant::avx2 : Variant::scalar;
}

}  // namespace

Variant active_variant() {
  static const Variant v = select_variant();
  return v;
}

const Ops& active() { return ops(active_variant()); }

}  // namespace mqs::kernels

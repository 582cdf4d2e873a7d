#include <cstdlib>
#include <cstring>

#include "milnor/errors.hpp"
#include "milnor/simd/kernels.hpp"

namespace milnor::simd {

#ifndef MILNOR_HAVE_AVX2
namespace detail {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace detail
#endif

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "?";
}

bool available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return detail::avx2_kernels() != nullptr && __builtin_cpu_supports("avx2") &&
             __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const Kernels& kernels(Isa isa) {
  if (!available(isa)) throw PreconditionError("SIMD variant not available: " + std::string(isa_name(isa)));
  return isa == Isa::Avx2 ? *detail::avx2_kernels() : detail::kScalarKernels;
}

const Kernels& kernels() {
  static const Kernels& active = [] () -> const Kernels& {
    const char* env = std::getenv("MILNOR_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return detail::kScalarKernels;
    return available(Isa::Avx2) ? *detail::avx2_kernels() : detail::kScalarKernels;
  }();
  return active;
}

}  // namespace milnor::simd

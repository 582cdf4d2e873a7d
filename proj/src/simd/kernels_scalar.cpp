#include "milnor/simd/kernels.hpp"

namespace milnor::simd::detail {
namespace {

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
}

void mul_mod_scalar(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b, std::uint32_t p,
                    std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[i]) * b[i] % p);
}

std::ptrdiff_t find_divisor_scalar(const std::uint64_t* leads, std::size_t n, std::uint64_t target) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t a = leads[i];
    bool ok = true;
    for (int byte = 0; byte < 8 && ok; ++byte)
      ok = ((a >> (8 * byte)) & 0xFF) <= ((target >> (8 * byte)) & 0xFF);
    if (ok) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

}  // namespace

const Kernels kScalarKernels{Isa::Scalar, axpy_mod_scalar, mul_mod_scalar, find_divisor_scalar};

}  // namespace milnor::simd::detail

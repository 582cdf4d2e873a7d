#pragma once

// Data-parallel inner loops shared by the exact linear algebra, the Groebner
// reducer and the finite-field enumeration oracle. Every kernel has a scalar
// reference implementation; vector variants are selected at runtime and are
// required to agree with the reference bit for bit.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace milnor::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

struct Kernels {
  Isa isa;
  /// dst[i] = (dst[i] + c * src[i]) mod p. Inputs are residues, p < 2^26.
  void (*axpy_mod)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
                   std::size_t n);
  /// dst[i] = a[i] * b[i] mod p. dst may alias a or b.
  void (*mul_mod)(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b, std::uint32_t p,
                  std::size_t n);
  /// Index of the first packed exponent word in `leads` that divides
  /// `target` byte-wise, or -1.
  std::ptrdiff_t (*find_divisor)(const std::uint64_t* leads, std::size_t n, std::uint64_t target);
};

bool available(Isa isa);

/// Kernels for a specific ISA; throws PreconditionError when unsupported.
const Kernels& kernels(Isa isa);

/// The active kernel table: the best available ISA, unless the environment
/// variable MILNOR_SIMD=scalar forces the reference path.
const Kernels& kernels();

namespace detail {
extern const Kernels kScalarKernels;
const Kernels* avx2_kernels();  // nullptr when not compiled in
}  // namespace detail

}  // namespace milnor::simd

#pragma once

#include <string>
#include <vector>

#include "milnor/polynomial.hpp"

namespace testing_support {

using milnor::PrimeField;
using milnor::RationalField;

inline milnor::RingPtr<PrimeField> ring4(std::uint32_t p = 32003) {
  return milnor::make_ring<PrimeField>({"x", "y", "z", "w"}, PrimeField(p));
}
inline milnor::RingPtr<PrimeField> ring3(std::uint32_t p = 32003) {
  return milnor::make_ring<PrimeField>({"x", "y", "z"}, PrimeField(p));
}
inline milnor::RingPtr<PrimeField> ring2(std::uint32_t p = 32003) {
  return milnor::make_ring<PrimeField>({"x", "y"}, PrimeField(p));
}
inline milnor::RingPtr<RationalField> qring4() {
  return milnor::make_ring<RationalField>({"x", "y", "z", "w"}, RationalField());
}

template <class K>
milnor::Polynomial<K> P(const milnor::RingPtr<K>& ring, const std::string& text) {
  return milnor::parse_polynomial(text, ring);
}

}  // namespace testing_support

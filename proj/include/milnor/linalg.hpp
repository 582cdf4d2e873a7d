#pragma once

// Exact linear algebra over Z/p, independent of the Groebner engine. Used as
// an oracle (Macaulay ranks) and for minimal polynomials in finite algebras.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace milnor::linalg {

/// Sparse row: (column, value) pairs, columns strictly increasing, values nonzero mod p.
using SparseRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Rank of the matrix with the given rows, by leading-column elimination.
std::size_t sparse_rank(std::vector<SparseRow> rows, std::uint32_t p);

/// Incrementally maintained echelon basis of dense vectors in (Z/p)^n that
/// also tracks how each reduced vector combines the inserted ones.
class IncrementalBasis {
 public:
  IncrementalBasis(std::size_t dim, std::uint32_t p) : dim_(dim), p_(p) {}

  /// Inserts v. When v depends on the earlier insertions returns the
  /// coefficients c with sum_i c_i v_i = 0 and c_last = 1; otherwise nullopt.
  std::optional<std::vector<std::uint32_t>> insert(std::vector<std::uint32_t> v);
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::uint32_t p_;
  std::vector<std::vector<std::uint32_t>> rows_;    // reduced vectors, pivot entry 1
  std::vector<std::vector<std::uint32_t>> combos_;  // coefficients over inserted vectors
  std::vector<std::size_t> pivots_;
  std::size_t inserted_ = 0;
};

/// Rank of a dense matrix mod p (rows are consumed).
std::size_t dense_rank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p);

/// Polynomials over Z/p, low degree first, no trailing zeros.
using PolyModP = std::vector<std::uint32_t>;

PolyModP poly_gcd(PolyModP a, PolyModP b, std::uint32_t p);
PolyModP poly_derivative(const PolyModP& a, std::uint32_t p);
/// Degree of the squarefree part a / gcd(a, a'); valid when p exceeds deg a.
int squarefree_degree(const PolyModP& a, std::uint32_t p);

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

}  // namespace milnor::linalg

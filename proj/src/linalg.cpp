#include "milnor/linalg.hpp"

#include <algorithm>
#include <unordered_map>

#include "milnor/errors.hpp"
#include "milnor/simd/kernels.hpp"

namespace milnor::linalg {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  if (new_r == 0) throw DomainError("inverse of zero mod p");
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

namespace {

std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

/// row += c * pivot, both sparse and sorted.
SparseRow sparse_axpy(const SparseRow& row, const SparseRow& pivot, std::uint32_t c, std::uint32_t p) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, mulm(c, pivot[j].second, p));
      ++j;
    } else {
      std::uint32_t v = static_cast<std::uint32_t>((row[i].second + static_cast<std::uint64_t>(c) * pivot[j].second) % p);
      if (v) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t sparse_rank(std::vector<SparseRow> rows, std::uint32_t p) {
  // Shorter rows first keeps pivots sparse.
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::unordered_map<std::uint32_t, SparseRow> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      // Pivot rows are monic.
      row = sparse_axpy(row, it->second, p - row.front().second, p);
    }
    if (row.empty()) continue;
    std::uint32_t inv = inv_mod(row.front().second, p);
    for (auto& e : row) e.second = mulm(e.second, inv, p);
    pivots.emplace(row.front().first, std::move(row));
  }
  return pivots.size();
}

std::optional<std::vector<std::uint32_t>> IncrementalBasis::insert(std::vector<std::uint32_t> v) {
  if (v.size() != dim_) throw PreconditionError("vector dimension mismatch");
  const auto& k = simd::kernels();
  const std::size_t id = inserted_++;
  std::vector<std::uint32_t> combo(inserted_, 0);
  combo[id] = 1;
  for (auto& c : combos_) c.resize(inserted_, 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::uint32_t c = v[pivots_[r]];
    if (!c) continue;
    std::uint32_t neg = p_ - c;
    k.axpy_mod(v.data(), rows_[r].data(), neg, p_, dim_);
    k.axpy_mod(combo.data(), combos_[r].data(), neg, p_, combos_[r].size());
  }
  auto nz = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
  if (nz == v.end()) return combo;
  std::size_t piv = static_cast<std::size_t>(nz - v.begin());
  std::uint32_t inv = inv_mod(*nz, p_);
  std::vector<std::uint32_t> scale(dim_, inv);
  k.mul_mod(v.data(), v.data(), scale.data(), p_, dim_);
  scale.assign(combo.size(), inv);
  k.mul_mod(combo.data(), combo.data(), scale.data(), p_, combo.size());
  rows_.push_back(std::move(v));
  combos_.push_back(std::move(combo));
  pivots_.push_back(piv);
  return std::nullopt;
}

std::size_t dense_rank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  const auto& k = simd::kernels();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::uint32_t inv = inv_mod(rows[rank][col], p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      std::uint32_t c = rows[r][col];
      if (!c) continue;
      k.axpy_mod(rows[r].data() + col, rows[rank].data() + col, p - mulm(c, inv, p), p, n - col);
    }
    ++rank;
  }
  return rank;
}

namespace {

void trim(PolyModP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

PolyModP poly_derivative(const PolyModP& a, std::uint32_t p) {
  PolyModP d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mulm(a[i], static_cast<std::uint32_t>(i % p), p));
  trim(d);
  return d;
}

PolyModP poly_gcd(PolyModP a, PolyModP b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    std::uint32_t inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
      std::uint32_t c = mulm(a.back(), inv, p);
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[off + i] = static_cast<std::uint32_t>((a[off + i] + static_cast<std::uint64_t>(p - c) * b[i]) % p);
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    std::uint32_t inv = inv_mod(a.back(), p);
    for (auto& c : a) c = mulm(c, inv, p);
  }
  return a;
}

int squarefree_degree(const PolyModP& a, std::uint32_t p) {
  PolyModP t = a;
  trim(t);
  if (t.empty()) throw PreconditionError("squarefree part of the zero polynomial");
  PolyModP g = poly_gcd(t, poly_derivative(t, p), p);
  return static_cast<int>(t.size()) - static_cast<int>(g.empty() ? 1 : g.size());
}

}  // namespace milnor::linalg

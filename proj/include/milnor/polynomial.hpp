#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/field.hpp"
#include "milnor/monomial.hpp"

namespace milnor {

template <class K>
struct Term {
  Monomial m;
  typename K::Elem c;
};

/// S = k[x_0, ..., x_n] with named variables, x_0 > x_1 > ... .
template <class K>
class Ring {
 public:
  Ring(std::vector<std::string> names, K field);

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  int index_of(std::string_view name) const;
  const K& field() const { return field_; }
  CoefficientField descriptor() const { return field_.descriptor(); }

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_ && a.field_ == b.field_; }

 private:
  std::vector<std::string> names_;
  K field_;
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <class K>
RingPtr<K> make_ring(std::vector<std::string> names, K field) {
  return std::make_shared<const Ring<K>>(std::move(names), std::move(field));
}

/// Sparse polynomial: terms sorted by decreasing graded reverse lex order,
/// no zero coefficients.
template <class K>
class Polynomial {
 public:
  using Elem = typename K::Elem;
  using TermT = Term<K>;

  explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}
  /// Sorts and merges arbitrary terms; zero coefficients are dropped.
  Polynomial(RingPtr<K> ring, std::vector<TermT> terms);

  static Polynomial constant(RingPtr<K> ring, const Elem& c);
  static Polynomial variable(RingPtr<K> ring, int i);
  static Polynomial monomial(RingPtr<K> ring, const Monomial& m, const Elem& c);

  const RingPtr<K>& ring() const { return ring_; }
  const K& field() const { return ring_->field(); }
  int nvars() const { return ring_->nvars(); }

  const std::vector<TermT>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  const TermT& leading_term() const { return terms_.front(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().m.deg); }
  int degree_in(int var) const;
  bool is_homogeneous() const { return homogeneous_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.multiply(b); }
  Polynomial scaled(const Elem& c) const;
  Polynomial times_monomial(const Monomial& m, const Elem& c) const;
  Polynomial pow(unsigned e) const;

  Polynomial derivative(int var) const;
  Elem evaluate(std::span<const Elem> point) const;
  /// x_i -> images[i]; images live in the target ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Same polynomial viewed in another ring over the same field, mapping
  /// variable i to variable var_map[i] of the target.
  Polynomial remap(RingPtr<K> target, std::span<const int> var_map) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;
  /// Exact division; throws PreconditionError when the divisor does not divide.
  Polynomial divide_exact(const Polynomial& divisor) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
    return true;
  }

 private:
  Polynomial multiply(const Polynomial& o) const;
  void normalize();
  void refresh_flags();

  RingPtr<K> ring_;
  std::vector<TermT> terms_;
  bool homogeneous_ = true;
};

/// Field-independent parse result: exponent vectors over `variables`.
struct ParsedPolynomial {
  std::vector<std::string> variables;
  std::vector<std::pair<std::vector<int>, mpq_class>> terms;
};

/// Parses the polynomial grammar: terms joined by `+`/`-`, each an optional
/// integer or `p/q` coefficient followed by `*`-separated powers `name^k`.
/// Variables must belong to `variables`; throws ParseError otherwise.
ParsedPolynomial parse_terms(std::string_view text, const std::vector<std::string>& variables);

/// Variable names occurring in `text`, in canonical order: x, y, z, w first,
/// then the rest alphabetically.
std::vector<std::string> infer_variables(std::string_view text);

template <class K>
Polynomial<K> to_polynomial(const ParsedPolynomial& parsed, const RingPtr<K>& ring);

template <class K>
Polynomial<K> parse_polynomial(std::string_view text, const RingPtr<K>& ring) {
  return to_polynomial(parse_terms(text, ring->names()), ring);
}

/// The list of first partial derivatives (f_0, ..., f_n).
template <class K>
std::vector<Polynomial<K>> partial_derivatives(const Polynomial<K>& f);

/// Euler sum  sum_j x_j * df/dx_j.
template <class K>
Polynomial<K> euler_sum(const Polynomial<K>& f);

extern template class Ring<PrimeField>;
extern template class Ring<RationalField>;
extern template class Polynomial<PrimeField>;
extern template class Polynomial<RationalField>;

}  // namespace milnor

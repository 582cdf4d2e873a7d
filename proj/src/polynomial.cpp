#include "milnor/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace milnor {

namespace {

template <class K>
bool term_greater(const Term<K>& a, const Term<K>& b) {
  return MonomialOrder::compare_grevlex(a.m, b.m) > 0;
}

}  // namespace

template <class K>
Ring<K>::Ring(std::vector<std::string> names, K field) : names_(std::move(names)), field_(std::move(field)) {
  if (names_.size() < 2) throw PreconditionError("a ring needs at least two variables");
  if (names_.size() > static_cast<std::size_t>(kMaxVars))
    throw ResourceLimit("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw PreconditionError("variable names must be distinct");
}

template <class K>
int Ring<K>::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

template <class K>
Polynomial<K>::Polynomial(RingPtr<K> ring, std::vector<TermT> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

template <class K>
void Polynomial<K>::normalize() {
  const K& f = field();
  std::sort(terms_.begin(), terms_.end(), term_greater<K>);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    TermT acc = terms_[i];
    std::size_t j = i + 1;
    while (j < terms_.size() && terms_[j].m == acc.m) acc.c = f.add(acc.c, terms_[j++].c);
    if (!f.is_zero(acc.c)) terms_[out++] = std::move(acc);
    i = j;
  }
  terms_.resize(out);
  refresh_flags();
}

template <class K>
void Polynomial<K>::refresh_flags() {
  homogeneous_ = true;
  for (const auto& t : terms_)
    if (t.m.deg != terms_.front().m.deg) {
      homogeneous_ = false;
      break;
    }
}

template <class K>
Polynomial<K> Polynomial<K>::constant(RingPtr<K> ring, const Elem& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({Monomial{}, c});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::variable(RingPtr<K> ring, int i) {
  if (i < 0 || i >= ring->nvars()) throw PreconditionError("variable index out of range");
  Polynomial p(std::move(ring));
  p.terms_.push_back({Monomial::variable(i), p.field().one()});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::monomial(RingPtr<K> ring, const Monomial& m, const Elem& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

template <class K>
int Polynomial<K>::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.m[var]);
  return d;
}

template <class K>
Polynomial<K> Polynomial<K>::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c = field().neg(t.c);
  return r;
}

template <class K>
Polynomial<K>& Polynomial<K>::operator+=(const Polynomial& o) {
  const K& f = field();
  std::vector<TermT> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = MonomialOrder::compare_grevlex(terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Elem s = f.add(terms_[i].c, o.terms_[j].c);
      if (!f.is_zero(s)) out.push_back({terms_[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  terms_ = std::move(out);
  refresh_flags();
  return *this;
}

template <class K>
Polynomial<K>& Polynomial<K>::operator-=(const Polynomial& o) {
  return *this += -o;
}

template <class K>
Polynomial<K> Polynomial<K>::scaled(const Elem& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.c = field().mul(t.c, c);
  return r;
}

template <class K>
Polynomial<K> Polynomial<K>::times_monomial(const Monomial& m, const Elem& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.m = t.m * m;
    t.c = field().mul(t.c, c);
  }
  return r;
}

template <class K>
Polynomial<K> Polynomial<K>::multiply(const Polynomial& o) const {
  const K& f = field();
  std::vector<TermT> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.m * b.m, f.mul(a.c, b.c)});
  return Polynomial(ring_, std::move(prod));
}

template <class K>
Polynomial<K> Polynomial<K>::pow(unsigned e) const {
  Polynomial result = constant(ring_, field().one());
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

template <class K>
Polynomial<K> Polynomial<K>::derivative(int var) const {
  const K& f = field();
  std::vector<TermT> out;
  for (const auto& t : terms_) {
    int e = t.m[var];
    if (e == 0) continue;
    Monomial m = quotient(t.m, Monomial::variable(var));
    out.push_back({m, f.mul(t.c, f.from_int(e))});
  }
  return Polynomial(ring_, std::move(out));
}

template <class K>
typename K::Elem Polynomial<K>::evaluate(std::span<const Elem> point) const {
  const K& f = field();
  if (static_cast<int>(point.size()) != nvars()) throw PreconditionError("evaluation point has wrong length");
  Elem acc = f.zero();
  for (const auto& t : terms_) {
    Elem v = t.c;
    for (int i = 0; i < nvars(); ++i)
      if (int e = t.m[i]; e > 0) v = f.mul(v, f.pow(point[static_cast<std::size_t>(i)], static_cast<std::uint64_t>(e)));
    acc = f.add(acc, v);
  }
  return acc;
}

template <class K>
Polynomial<K> Polynomial<K>::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != nvars()) throw PreconditionError("substitution needs one image per variable");
  if (images.empty()) throw PreconditionError("empty substitution");
  const RingPtr<K>& target = images.front().ring();
  // powers[i][e] = images[i]^e, filled lazily.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, field().one()));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.c);
    for (int i = 0; i < nvars(); ++i)
      if (int e = t.m[i]; e > 0) prod = prod * power(static_cast<std::size_t>(i), e);
    result += prod;
  }
  return result;
}

template <class K>
Polynomial<K> Polynomial<K>::remap(RingPtr<K> target, std::span<const int> var_map) const {
  if (static_cast<int>(var_map.size()) != nvars()) throw PreconditionError("remap needs one index per variable");
  std::vector<TermT> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> e(static_cast<std::size_t>(target->nvars()), 0);
    for (int i = 0; i < nvars(); ++i) {
      if (t.m[i] == 0) continue;
      int j = var_map[static_cast<std::size_t>(i)];
      if (j < 0 || j >= target->nvars()) throw PreconditionError("remap drops a variable in use");
      e[static_cast<std::size_t>(j)] += t.m[i];
    }
    out.push_back({Monomial::from_exponents(e), t.c});
  }
  return Polynomial(std::move(target), std::move(out));
}

template <class K>
Polynomial<K> Polynomial<K>::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(terms_.front().c));
}

template <class K>
Polynomial<K> Polynomial<K>::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw PreconditionError("division by the zero polynomial");
  const K& f = field();
  Polynomial rem = *this;
  std::vector<TermT> quot;
  const TermT& lead = divisor.leading_term();
  Elem lead_inv = f.inv(lead.c);
  while (!rem.is_zero()) {
    const TermT& t = rem.leading_term();
    if (!divides(lead.m, t.m)) throw PreconditionError("polynomial division is not exact");
    TermT q{quotient(t.m, lead.m), f.mul(t.c, lead_inv)};
    rem -= divisor.times_monomial(q.m, q.c);
    quot.push_back(q);
  }
  return Polynomial(ring_, std::move(quot));
}

template <class K>
std::string Polynomial<K>::to_string() const {
  if (terms_.empty()) return "0";
  const K& f = field();
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = f.negative(t.c);
    Elem mag = neg ? f.neg(t.c) : t.c;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first = false;
    bool need_star = false;
    if (t.m.is_one() || !f.is_one(mag)) {
      out << f.to_string(mag);
      need_star = true;
    }
    for (int i = 0; i < nvars(); ++i) {
      int e = t.m[i];
      if (e == 0) continue;
      if (need_star) out << '*';
      out << ring_->name(i);
      if (e > 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::size_t pos() const { return pos_; }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) throw ParseError("expected a variable name", start);
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedPolynomial parse_terms(std::string_view text, const std::vector<std::string>& variables) {
  ParsedPolynomial out;
  out.variables = variables;
  Lexer lex(text);
  if (lex.done()) throw ParseError("empty polynomial", 0);
  bool first = true;
  while (!lex.done()) {
    int sign = 1;
    char c = lex.peek();
    if (c == '+' || c == '-') {
      lex.accept(c);
      sign = c == '-' ? -1 : 1;
    } else if (!first) {
      throw ParseError(std::string("expected '+' or '-', found '") + c + "'", lex.pos());
    }
    first = false;

    mpq_class coeff = sign;
    std::vector<int> exps(variables.size(), 0);
    bool expect_factor = true;
    while (expect_factor) {
      char p = lex.peek();
      if (std::isdigit(static_cast<unsigned char>(p))) {
        mpz_class num = lex.integer();
        mpz_class den = 1;
        if (lex.accept('/')) {
          std::size_t at = lex.pos();
          den = lex.integer();
          if (den == 0) throw ParseError("zero denominator", at);
        }
        coeff *= mpq_class(num, den);
        coeff.canonicalize();
      } else if (ident_start(p)) {
        std::size_t at = lex.pos();
        std::string name = lex.identifier();
        auto it = std::find(variables.begin(), variables.end(), name);
        if (it == variables.end()) throw ParseError("unknown variable '" + name + "'", at);
        long k = 1;
        if (lex.accept('^')) {
          std::size_t kat = lex.pos();
          mpz_class e = lex.integer();
          if (e < 1 || e > kMaxExponent) throw ParseError("exponent must be between 1 and 127", kat);
          k = e.get_si();
        }
        auto& slot = exps[static_cast<std::size_t>(it - variables.begin())];
        slot += static_cast<int>(k);
        if (slot > kMaxExponent) throw ParseError("exponent must be between 1 and 127", at);
      } else {
        throw ParseError(p == '\0' ? std::string("unexpected end of input") : std::string("unexpected character '") + p + "'",
                         lex.pos());
      }
      expect_factor = lex.accept('*');
    }
    out.terms.emplace_back(std::move(exps), std::move(coeff));
  }
  return out;
}

namespace {

// Natural order: x, y, z, w first; then alphabetical with numeric suffixes
// compared as numbers (x2 < x10).
bool canonical_less(const std::string& a, const std::string& b) {
  static const std::vector<std::string> head{"x", "y", "z", "w"};
  auto rank = [&](const std::string& s) {
    auto it = std::find(head.begin(), head.end(), s);
    return it == head.end() ? static_cast<long>(head.size()) : static_cast<long>(it - head.begin());
  };
  long ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb;
  auto split = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    long num = k < s.size() && s.size() - k < 10 ? std::stol(s.substr(k)) : -1;
    return std::make_pair(s.substr(0, k), num);
  };
  auto [pa, na] = split(a);
  auto [pb, nb] = split(b);
  if (pa != pb) return pa < pb;
  if (na != nb) return na < nb;
  return a < b;
}

}  // namespace

std::vector<std::string> infer_variables(std::string_view text) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    if (ident_start(text[i])) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string name(text.substr(i, j - i));
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      while (i < text.size() && ident_char(text[i])) ++i;
    } else {
      ++i;
    }
  }
  std::sort(names.begin(), names.end(), canonical_less);
  return names;
}

template <class K>
Polynomial<K> to_polynomial(const ParsedPolynomial& parsed, const RingPtr<K>& ring) {
  std::vector<int> map;
  for (const auto& v : parsed.variables) {
    int idx = ring->index_of(v);
    map.push_back(idx);
  }
  std::vector<Term<K>> terms;
  for (const auto& [exps, c] : parsed.terms) {
    std::vector<int> e(static_cast<std::size_t>(ring->nvars()), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (map[i] < 0) throw PreconditionError("variable '" + parsed.variables[i] + "' is not in the ring");
      e[static_cast<std::size_t>(map[i])] += exps[i];
    }
    terms.push_back({Monomial::from_exponents(e), ring->field().from_rational(c)});
  }
  return Polynomial<K>(ring, std::move(terms));
}

template <class K>
std::vector<Polynomial<K>> partial_derivatives(const Polynomial<K>& f) {
  std::vector<Polynomial<K>> out;
  for (int j = 0; j < f.nvars(); ++j) out.push_back(f.derivative(j));
  return out;
}

template <class K>
Polynomial<K> euler_sum(const Polynomial<K>& f) {
  Polynomial<K> acc(f.ring());
  for (int j = 0; j < f.nvars(); ++j) acc += Polynomial<K>::variable(f.ring(), j) * f.derivative(j);
  return acc;
}

template class Ring<PrimeField>;
template class Ring<RationalField>;
template class Polynomial<PrimeField>;
template class Polynomial<RationalField>;
template Polynomial<PrimeField> to_polynomial(const ParsedPolynomial&, const RingPtr<PrimeField>&);
template Polynomial<RationalField> to_polynomial(const ParsedPolynomial&, const RingPtr<RationalField>&);
template std::vector<Polynomial<PrimeField>> partial_derivatives(const Polynomial<PrimeField>&);
template std::vector<Polynomial<RationalField>> partial_derivatives(const Polynomial<RationalField>&);
template Polynomial<PrimeField> euler_sum(const Polynomial<PrimeField>&);
template Polynomial<RationalField> euler_sum(const Polynomial<RationalField>&);

}  // namespace milnor

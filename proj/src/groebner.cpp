#include "coxcheck/groebner.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace coxcheck {

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  auto at = [&](const Monomial& m, std::size_t k) { return priority.empty() ? m[k] : m[priority[k]]; };
  if (kind != Kind::lex) {
    unsigned long da = 0, db = 0;
    for (std::size_t k = 0; k < n; ++k) {
      da += a[k];
      db += b[k];
    }
    if (da != db) return da <=> db;
  }
  if (kind == Kind::degrevlex) {
    for (std::size_t k = n; k-- > 0;)
      if (at(a, k) != at(b, k)) return at(b, k) <=> at(a, k);
    return std::strong_ordering::equal;
  }
  for (std::size_t k = 0; k < n; ++k)
    if (at(a, k) != at(b, k)) return at(a, k) <=> at(b, k);
  return std::strong_ordering::equal;
}

namespace {

using Terms = std::vector<Term>;

void sort_terms(Terms& t, const TermOrder& order) {
  std::sort(t.begin(), t.end(), [&](const Term& x, const Term& y) {
    return order.compare(x.monomial, y.monomial) == std::strong_ordering::greater;
  });
  Terms merged;
  for (auto& term : t) {
    if (!merged.empty() && merged.back().monomial == term.monomial) {
      merged.back().coefficient += term.coefficient;
    } else {
      merged.push_back(std::move(term));
    }
  }
  std::erase_if(merged, [](const Term& x) { return x.coefficient == 0; });
  t = std::move(merged);
}

// a + f * b, both sorted under `order`.
Terms add_scaled(const Terms& a, const Terms& b, const Rational& f, const TermOrder& order) {
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering c = i == a.size()   ? std::strong_ordering::less
                             : j == b.size() ? std::strong_ordering::greater
                                             : order.compare(a[i].monomial, b[j].monomial);
    if (c == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back({b[j].monomial, f * b[j].coefficient});
      ++j;
    } else {
      Rational s = a[i].coefficient + f * b[j].coefficient;
      if (s != 0) out.push_back({a[i].monomial, s});
      ++i;
      ++j;
    }
  }
  return out;
}

Terms mul_term(const Terms& p, const Monomial& m, const Rational& c) {
  Terms out;
  out.reserve(p.size());
  for (const auto& t : p) {
    Monomial e = t.monomial;
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += m[k];
    out.push_back({std::move(e), t.coefficient * c});
  }
  return out;  // multiplication by a monomial preserves a monomial order
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial q(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) q[k] = b[k] - a[k];
  return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial l(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) l[k] = std::max(a[k], b[k]);
  return l;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] && b[k]) return false;
  return true;
}

void make_monic(Terms& p) {
  if (p.empty()) return;
  Rational inv = 1 / p.front().coefficient;
  for (auto& t : p) t.coefficient *= inv;
}

Terms reduce_terms(Terms p, const std::vector<Terms>& basis, const TermOrder& order) {
  Terms remainder;
  while (!p.empty()) {
    const Term lead = p.front();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.empty() || !divides(g.front().monomial, lead.monomial)) continue;
      Rational f = -lead.coefficient / g.front().coefficient;
      p = add_scaled(p, mul_term(g, quotient(lead.monomial, g.front().monomial), Rational(1)), f, order);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lead);
      p.erase(p.begin());
    }
  }
  return remainder;
}

Terms s_polynomial(const Terms& f, const Terms& g, const TermOrder& order) {
  Monomial l = lcm(f.front().monomial, g.front().monomial);
  Terms a = mul_term(f, quotient(l, f.front().monomial), 1 / f.front().coefficient);
  Terms b = mul_term(g, quotient(l, g.front().monomial), 1 / g.front().coefficient);
  return add_scaled(a, b, Rational(-1), order);
}

Terms sorted_copy(const Polynomial& p, const TermOrder& order) {
  Terms t = p.terms();
  sort_terms(t, order);
  return t;
}

}  // namespace

// ---------------------------------------------------------------------------

Polynomial make_polynomial(std::size_t variables, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.monomial.size() != variables) throw std::invalid_argument("polynomial: exponent vector length");
  Polynomial p(variables);
  sort_terms(terms, TermOrder{});
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(std::size_t variables, const Rational& c) {
  return make_polynomial(variables, {{Monomial(variables, 0), c}});
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index) {
  Monomial m(variables, 0);
  m.at(index) = 1;
  return make_polynomial(variables, {{std::move(m), Rational(1)}});
}

Polynomial Polynomial::monomial(std::size_t variables, Monomial m, const Rational& c) {
  return make_polynomial(variables, {{std::move(m), c}});
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_[0].monomial.begin(), terms_[0].monomial.end(),
                                            [](unsigned e) { return e == 0; }));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial: ring mismatch");
  Polynomial p(nvars_);
  p.terms_ = add_scaled(terms_, o.terms_, Rational(1), TermOrder{});
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial: ring mismatch");
  Polynomial p(nvars_);
  p.terms_ = add_scaled(terms_, o.terms_, Rational(-1), TermOrder{});
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial: ring mismatch");
  std::vector<Term> all;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m = a.monomial;
      for (std::size_t k = 0; k < m.size(); ++k) m[k] += b.monomial[k];
      all.push_back({std::move(m), a.coefficient * b.coefficient});
    }
  return make_polynomial(nvars_, std::move(all));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].monomial != o.terms_[i].monomial || terms_[i].coefficient != o.terms_[i].coefficient)
      return false;
  return true;
}

Polynomial Polynomial::extend(std::size_t variables) const {
  if (variables < nvars_) throw std::invalid_argument("polynomial: cannot shrink ring");
  std::vector<Term> t = terms_;
  for (auto& term : t) term.monomial.resize(variables, 0);
  return make_polynomial(variables, std::move(t));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    bool constant = std::all_of(t.monomial.begin(), t.monomial.end(), [](unsigned e) { return e == 0; });
    bool need_star = false;
    if (c != 1 || constant) {
      os << c;
      need_star = true;
    }
    for (std::size_t k = 0; k < t.monomial.size(); ++k) {
      if (t.monomial[k] == 0) continue;
      if (need_star) os << '*';
      os << 'T' << k + 1;
      if (t.monomial[k] > 1) os << '^' << t.monomial[k];
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars) : s_(text), n_(nvars) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip();
    bool negative = false;
    if (peek('+') || peek('-')) negative = s_[pos_++] == '-';
    terms.push_back(term(negative));
    for (;;) {
      skip();
      if (pos_ == s_.size()) break;
      if (!peek('+') && !peek('-')) fail("expected '+' or '-'");
      negative = s_[pos_++] == '-';
      terms.push_back(term(negative));
    }
    return make_polynomial(n_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PolynomialParseError("polynomial column " + std::to_string(pos_ + 1) + ": " + what, pos_);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  Term term(bool negative) {
    Term t{Monomial(n_, 0), Rational(negative ? -1 : 1)};
    factor(t);
    for (;;) {
      skip();
      if (!peek('*')) break;
      ++pos_;
      factor(t);
    }
    return t;
  }

  void factor(Term& t) {
    skip();
    if (peek('T')) {
      ++pos_;
      std::size_t at = pos_;
      unsigned long index = std::stoul(digits());
      if (index == 0 || index > n_) {
        pos_ = at;
        fail("variable T" + std::to_string(index) + " out of range");
      }
      unsigned long exp = 1;
      skip();
      if (peek('^')) {
        ++pos_;
        exp = std::stoul(digits());
      }
      t.monomial[index - 1] += static_cast<unsigned>(exp);
      return;
    }
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
      fail("floating-point literals are not allowed");
    Integer num(digits());
    Integer den(1);
    skip();
    if (peek('.')) fail("floating-point literals are not allowed");
    if (peek('/')) {
      ++pos_;
      den = Integer(digits());
      if (den == 0) fail("zero denominator");
    }
    Rational c(num, den);
    c.canonicalize();
    t.coefficient *= c;
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t variables) {
  return Parser(text, variables).parse();
}

// ---------------------------------------------------------------------------

bool GroebnerBasis::is_unit_ideal() const {
  return std::any_of(basis_.begin(), basis_.end(),
                     [](const Polynomial& p) { return !p.is_zero() && p.is_constant(); });
}

Polynomial GroebnerBasis::reduce(const Polynomial& f) const {
  std::vector<Terms> basis;
  for (const auto& g : basis_) basis.push_back(sorted_copy(g, order_));
  return make_polynomial(f.variables(), reduce_terms(sorted_copy(f, order_), basis, order_));
}

bool satisfies_s_pair_criterion(std::span<const Polynomial> basis, const TermOrder& order) {
  std::vector<Terms> g;
  for (const auto& p : basis)
    if (!p.is_zero()) g.push_back(sorted_copy(p, order));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!reduce_terms(s_polynomial(g[i], g[j], order), g, order).empty()) return false;
  return true;
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const TermOrder& order) {
  const std::size_t nvars = generators.empty() ? 0 : generators[0].variables();
  std::vector<Terms> g;
  auto unit = [&]() {
    return GroebnerBasis({Polynomial::constant(nvars, 1)}, order);
  };
  for (const auto& p : generators) {
    if (p.variables() != nvars) throw std::invalid_argument("buchberger: ring mismatch");
    if (p.is_zero()) continue;
    if (p.is_constant()) return unit();
    Terms t = sorted_copy(p, order);
    make_monic(t);
    g.push_back(std::move(t));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    // normal selection strategy: smallest lcm first
    auto best = pairs.begin();
    Monomial best_lcm = lcm(g[best->first].front().monomial, g[best->second].front().monomial);
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      Monomial l = lcm(g[it->first].front().monomial, g[it->second].front().monomial);
      if (order.compare(l, best_lcm) == std::strong_ordering::less) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pairs.erase(best);
    if (coprime(g[i].front().monomial, g[j].front().monomial)) continue;
    Terms r = reduce_terms(s_polynomial(g[i], g[j], order), g, order);
    if (r.empty()) continue;
    make_monic(r);
    if (r.size() == 1 && std::all_of(r[0].monomial.begin(), r[0].monomial.end(), [](unsigned e) { return e == 0; }))
      return unit();
    g.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimalise, then interreduce.
  std::vector<Terms> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(g[j].front().monomial, g[i].front().monomial)) continue;
      // equal leading monomials: keep the first one
      redundant = g[j].front().monomial != g[i].front().monomial || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Terms> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Terms> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Terms lead{minimal[i].front()};
    Terms tail(minimal[i].begin() + 1, minimal[i].end());
    Terms r = reduce_terms(tail, others, order);
    lead.insert(lead.end(), r.begin(), r.end());
    make_monic(lead);
    reduced.push_back(std::move(lead));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Terms& a, const Terms& b) {
    return order.compare(a.front().monomial, b.front().monomial) == std::strong_ordering::less;
  });
  std::vector<Polynomial> out;
  for (auto& t : reduced) out.push_back(make_polynomial(nvars, std::move(t)));
  if (!satisfies_s_pair_criterion(out, order))
    throw std::logic_error("buchberger: result fails the S-pair criterion");
  return GroebnerBasis(std::move(out), order);
}

bool ideal_membership(const Polynomial& f, std::span<const Polynomial> generators) {
  if (f.is_zero()) return true;
  if (generators.empty()) return false;
  return buchberger(generators).contains(f);
}

bool radical_membership(const Polynomial& f, std::span<const Polynomial> generators) {
  if (f.is_zero()) return true;
  const std::size_t n = f.variables();
  std::vector<Polynomial> extended;
  for (const auto& g : generators) extended.push_back(g.extend(n + 1));
  Polynomial y = Polynomial::variable(n + 1, n);
  extended.push_back(Polynomial::constant(n + 1, 1) - y * f.extend(n + 1));
  return buchberger(extended).is_unit_ideal();
}

std::optional<IntVector> graded_degree(const Polynomial& f, std::span<const IntVector> degrees) {
  if (degrees.size() != f.variables()) throw std::invalid_argument("graded_degree: degree count");
  if (f.is_zero()) return std::nullopt;
  const std::size_t rho = degrees.empty() ? 0 : degrees[0].size();
  std::optional<IntVector> common;
  for (const auto& t : f.terms()) {
    IntVector deg(rho);
    for (std::size_t k = 0; k < t.monomial.size(); ++k)
      for (std::size_t q = 0; q < rho; ++q) deg[q] += Integer(t.monomial[k]) * degrees[k][q];
    if (!common) {
      common = std::move(deg);
    } else if (*common != deg) {
      return std::nullopt;
    }
  }
  return common;
}

}  // namespace coxcheck

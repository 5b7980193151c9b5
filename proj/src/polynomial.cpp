#include "predraw/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace predraw {

Monomial Monomial::variable(int var, int exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back({var, exp});
  return m;
}

int Monomial::total_degree() const {
  int deg = 0;
  for (const auto& [var, exp] : factors_) deg += exp;
  return deg;
}

int Monomial::degree_in(int var) const {
  for (const auto& [v, e] : factors_)
    if (v == var) return e;
  return 0;
}

int Monomial::max_exponent() const {
  int m = 0;
  for (const auto& [var, exp] : factors_) m = std::max(m, exp);
  return m;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + rhs.factors_.size());
  auto a = factors_.begin(), b = rhs.factors_.begin();
  while (a != factors_.end() || b != rhs.factors_.end()) {
    if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& [var, exp] : factors_) {
    while (it != other.factors_.end() && it->first < var) ++it;
    if (it == other.factors_.end() || it->first != var || it->second < exp)
      return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  auto it = factors_.begin();
  for (const auto& [var, exp] : other.factors_) {
    int sub = 0;
    while (it != factors_.end() && it->first < var) ++it;
    if (it != factors_.end() && it->first == var) sub = it->second;
    if (exp - sub > 0) out.factors_.push_back({var, exp - sub});
  }
  return out;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.rbegin();
  auto ib = fb.rbegin();
  while (ia != fa.rend() && ib != fb.rend()) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia;
    ++ib;
  }
  // Equal degrees with identical tails force identical monomials.
  return 0;
}

Polynomial::Polynomial(long value) {
  if (value != 0) terms_.emplace(Monomial{}, Int(value));
}

Polynomial::Polynomial(const Int& value) {
  if (value != 0) terms_.emplace(Monomial{}, value);
}

Polynomial Polynomial::variable(int var, int exp) {
  Polynomial p;
  p.terms_.emplace(Monomial::variable(var, exp), Int(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  // grlex is graded, so the leading monomial carries the total degree.
  return terms_.rbegin()->first.total_degree();
}

int Polynomial::degree_in(int var) const {
  int deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree_in(var));
  return deg;
}

int Polynomial::max_exponent() const {
  int m = 0;
  for (const auto& [mono, c] : terms_) m = std::max(m, mono.max_exponent());
  return m;
}

std::vector<int> Polynomial::variables() const {
  std::vector<int> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw Error("leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

const Int& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

Int Polynomial::content() const {
  Int g = 0;
  for (const auto& [m, c] : terms_) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

void Polynomial::add_term(const Monomial& m, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out(*this);
  out += rhs;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out(*this);
  out -= rhs;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial Polynomial::times(const Int& scalar) const {
  Polynomial out;
  if (scalar == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * scalar);
  return out;
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error("polynomial division by zero");
  Polynomial quotient;
  Polynomial rem(*this);
  const Monomial& dm = divisor.leading_monomial();
  const Int& dc = divisor.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    const Int& rc = rem.leading_coefficient();
    if (!dm.divides(rm) || rc % dc != 0)
      throw Error("inexact polynomial division");
    Monomial qm = dm.quotient_of(rm);
    Int qc = rc / dc;
    Polynomial step;
    step.terms_.emplace(qm, qc);
    quotient += step;
    rem -= step * divisor;
  }
  return quotient;
}

Rational Polynomial::evaluate(const std::vector<Rational>& values) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational term(c);
    for (const auto& [var, exp] : m.factors()) {
      if (var < 0 || static_cast<std::size_t>(var) >= values.size())
        throw Error("polynomial evaluation: missing value for variable");
      for (int i = 0; i < exp; ++i) term *= values[var];
    }
    acc += term;
  }
  return acc;
}

std::string Polynomial::to_string(
    const std::function<std::string(int)>& var_name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    Int mag = abs(c);
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    const bool show_coeff = mag != 1 || m.is_one();
    if (show_coeff) os << mag.get_str();
    bool need_star = show_coeff;
    for (const auto& [var, exp] : m.factors()) {
      if (need_star) os << "*";
      os << var_name(var);
      if (exp > 1) os << "^" << exp;
      need_star = true;
    }
  }
  return os.str();
}

std::pair<Polynomial, Rational> poly_canonicalize(const Polynomial& p) {
  if (p.is_zero())
    throw Error("poly_canonicalize: zero polynomial has no canonical form");
  Int c = p.content();
  if (p.leading_coefficient() < 0) c = -c;
  Polynomial q;
  for (const auto& [m, coeff] : p.terms()) q.add_term(m, coeff / c);
  return {q, Rational(c)};
}

std::function<std::string(int)> normal_variable_namer(
    const std::vector<std::string>& hyperplane_labels, int d) {
  return [hyperplane_labels, d](int var) -> std::string {
    const int h = var / d;
    const int k = var % d;
    std::string label = (h >= 0 && static_cast<std::size_t>(h) <
                                       hyperplane_labels.size())
                            ? hyperplane_labels[h]
                            : "?" + std::to_string(h);
    if (d == 2) return (k == 0 ? "f_" : "g_") + label;
    return "n_" + label + "_" + std::to_string(k + 1);
  };
}

}  // namespace predraw

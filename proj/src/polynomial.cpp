/*
   Copyright 2026 The xhermite authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "xhermite/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace xhermite {

namespace {
const Rational kZero(0);
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(int power, const Rational& c) {
  if (power < 0) throw std::invalid_argument("Poly::monomial: negative power");
  if (c == 0) return Poly();
  std::vector<Rational> cs(power + 1, Rational(0));
  cs.back() = c;
  return Poly(std::move(cs));
}

const Rational& Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

const Rational& Poly::leading() const {
  if (is_zero()) throw std::logic_error("Poly::leading: zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base(*this);
  while (e) {
    if (e & 1u) result *= base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Poly Poly::derivative(int order) const {
  if (order < 0) throw std::invalid_argument("Poly::derivative: negative order");
  Poly r(*this);
  for (int k = 0; k < order; ++k) {
    if (r.is_zero()) break;
    std::vector<Rational> d;
    d.reserve(r.c_.size());
    for (size_t i = 1; i < r.c_.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * r.c_[i]);
    r = Poly(std::move(d));
  }
  return r;
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigFloat Poly::eval(const BigFloat& x) const {
  BigFloat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_bigfloat(*it);
  return acc;
}

BigComplex Poly::eval(const BigComplex& x) const {
  BigComplex acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc.re += to_bigfloat(*it);
  }
  return acc;
}

PolyDivMod Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("Poly::divmod: division by zero polynomial");
  Poly rem(*this);
  if (rem.degree() < divisor.degree()) return {Poly(), rem};
  std::vector<Rational> q(rem.degree() - divisor.degree() + 1, Rational(0));
  const Rational& lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    int shift = rem.degree() - divisor.degree();
    Rational f = rem.leading() / lead;
    q[shift] = f;
    // rem -= f * x^shift * divisor
    for (size_t i = 0; i < divisor.c_.size(); ++i) rem.c_[i + shift] -= f * divisor.c_[i];
    rem.normalize();
  }
  return {Poly(std::move(q)), rem};
}

Poly Poly::div_exact(const Poly& divisor) const {
  PolyDivMod dm = divmod(divisor);
  if (!dm.rem.is_zero()) throw std::logic_error("Poly::div_exact: division was not exact");
  return dm.quot;
}

Poly Poly::monic() const {
  if (is_zero()) throw std::logic_error("Poly::monic: zero polynomial");
  Poly r(*this);
  const Rational inv = Rational(1) / leading();
  for (auto& c : r.c_) c *= inv;
  return r;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x(a), y(b);
  while (!y.is_zero()) {
    Poly r = x.divmod(y).rem;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.monic();
}

namespace {

// Determinant of a polynomial matrix by fraction-free Bareiss elimination.
// Divisions by the previous pivot are exact over the integral domain Q[x].
Poly bareiss_determinant(std::vector<std::vector<Poly>> m) {
  const size_t n = m.size();
  if (n == 0) return Poly(1);
  int sign = 1;
  Poly prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return Poly();  // singular
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).div_exact(prev);
      }
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  Poly det = std::move(m[n - 1][n - 1]);
  return sign < 0 ? -det : det;
}

}  // namespace

Poly wronskian(std::span<const Poly> fs) {
  const size_t n = fs.size();
  if (n == 0) return Poly(1);
  if (n == 1) return fs[0];
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (size_t col = 0; col < n; ++col) {
    m[0][col] = fs[col];
    for (size_t row = 1; row < n; ++row) m[row][col] = m[row - 1][col].derivative();
  }
  return bareiss_determinant(std::move(m));
}

Poly wronskian(std::initializer_list<Poly> fs) {
  std::vector<Poly> v(fs);
  return wronskian(std::span<const Poly>(v));
}

Poly SquareFreeDecomposition::reconstruct() const {
  Poly r(constant);
  for (const auto& part : parts) r *= part.factor.pow(static_cast<unsigned>(part.multiplicity));
  return r;
}

SquareFreeDecomposition squarefree(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree: zero polynomial");
  SquareFreeDecomposition out;
  out.constant = p.leading();
  Poly f = p.monic();
  if (f.degree() == 0) return out;

  // Yun's algorithm over Q[x].
  Poly d = gcd(f, f.derivative());
  Poly w = f.div_exact(d);
  Poly y = f.derivative().div_exact(d);
  Poly z = y - w.derivative();
  int mult = 1;
  while (w.degree() > 0) {
    Poly g = gcd(w, z);
    if (g.degree() > 0) out.parts.push_back({g, mult});
    w = w.div_exact(g);
    y = z.div_exact(g);
    z = y - w.derivative();
    ++mult;
  }
  return out;
}

int root_multiplicity(const Poly& p, const Rational& xi) {
  if (p.is_zero()) throw std::invalid_argument("root_multiplicity: zero polynomial");
  const Poly lin = Poly(std::vector<Rational>{-xi, Rational(1)});
  int mult = 0;
  Poly cur(p);
  while (cur(xi) == 0) {
    cur = cur.div_exact(lin);
    ++mult;
  }
  return mult;
}

std::vector<BigComplex> taylor_shift(const Poly& p, const BigComplex& center) {
  const int d = p.degree();
  if (d < 0) return {};
  std::vector<BigComplex> a(d + 1);
  for (int i = 0; i <= d; ++i) a[i] = BigComplex(to_bigfloat(p.coeff(i)), BigFloat(0));
  for (int k = 0; k < d; ++k) {
    for (int j = d - 1; j >= k; --j) a[j] += center * a[j + 1];
  }
  return a;
}

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

namespace {

std::string rational_str(const Rational& q) {
  return q.get_str();  // "p" or "p/q"
}

void skip_ws(std::string_view& s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

// one term: [rational] ['*'] ['x' ['^' int]]
struct Term {
  Rational coeff;
  int power;
};

Term parse_term(std::string_view& s) {
  skip_ws(s);
  Term t{Rational(1), 0};
  bool have_number = false;
  size_t i = 0;
  while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
  if (i > 0) {
    t.coeff = Rational(std::string(s.substr(0, i)));
    t.coeff.canonicalize();
    s.remove_prefix(i);
    have_number = true;
  }
  skip_ws(s);
  if (!s.empty() && s.front() == '*') {
    s.remove_prefix(1);
    skip_ws(s);
  }
  if (!s.empty() && s.front() == 'x') {
    s.remove_prefix(1);
    t.power = 1;
    if (!s.empty() && s.front() == '^') {
      s.remove_prefix(1);
      size_t j = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == 0) throw std::invalid_argument("Poly::parse: missing exponent");
      t.power = std::stoi(std::string(s.substr(0, j)));
      s.remove_prefix(j);
    }
  } else if (!have_number) {
    throw std::invalid_argument("Poly::parse: expected coefficient or 'x'");
  }
  return t;
}

}  // namespace

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    const Rational& c = coeff(k);
    if (c == 0) continue;
    Rational a = c > 0 ? c : Rational(-c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += rational_str(a);
    } else {
      if (a != 1) {
        out += rational_str(a);
        out += "*";
      }
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Poly Poly::parse(std::string_view text) {
  Poly acc;
  std::string_view s = text;
  skip_ws(s);
  if (s.empty()) throw std::invalid_argument("Poly::parse: empty input");
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  while (true) {
    Term t = parse_term(s);
    if (negative) t.coeff = -t.coeff;
    acc += Poly::monomial(t.power, t.coeff);
    skip_ws(s);
    if (s.empty()) break;
    if (s.front() == '+' || s.front() == '-') {
      negative = s.front() == '-';
      s.remove_prefix(1);
    } else {
      throw std::invalid_argument("Poly::parse: unexpected character '" + std::string(1, s.front()) + "'");
    }
  }
  return acc;
}

}  // namespace xhermite

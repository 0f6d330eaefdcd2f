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

#ifndef XHERMITE_POLYNOMIAL_HPP
#define XHERMITE_POLYNOMIAL_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xhermite/numeric.hpp"

namespace xhermite {

struct PolyDivMod;

/// Univariate polynomial with exact rational coefficients.
///
/// Coefficients are stored low to high and kept canonical: the vector is
/// either empty (the zero polynomial) or ends in a nonzero coefficient.
/// Values are immutable in practice -- every operation returns a fresh
/// polynomial -- so they are safe to share across threads.
class Poly {
 public:
  /// Degree reported for the zero polynomial. All degree formulas in this
  /// library branch on is_zero() before using degree() arithmetically.
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  Poly(int c) : Poly(Rational(c)) {}
  Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
  }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly variable() { return monomial(1); }
  static Poly monomial(int power, const Rational& c = Rational(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  /// Coefficient of x^k; zero outside the stored range.
  const Rational& coeff(int k) const;
  const Rational& leading() const;  // requires a nonzero polynomial
  const std::vector<Rational>& coeffs() const { return c_; }

  bool operator==(const Poly&) const = default;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  Poly pow(unsigned e) const;

  /// Formal derivative of the given order (order 0 returns the input).
  Poly derivative(int order = 1) const;

  /// Horner evaluation, exact.
  Rational operator()(const Rational& x) const;

  /// Horner evaluation at the current working precision.
  BigFloat eval(const BigFloat& x) const;
  BigComplex eval(const BigComplex& x) const;

  /// Euclidean division over Q; divisor must be nonzero.
  PolyDivMod divmod(const Poly& divisor) const;
  /// Division known to be exact; throws std::logic_error on a remainder.
  Poly div_exact(const Poly& divisor) const;

  Poly monic() const;  // requires a nonzero polynomial

  /// Renders as "c0 + c1*x + c2*x^2" with rational coefficients "p/q",
  /// skipping zero terms; the zero polynomial renders as "0".
  std::string str() const;
  /// Parses the str() format (signs, optional "c*", "x", "x^k").
  static Poly parse(std::string_view text);

 private:
  void normalize();
  std::vector<Rational> c_;
};

struct PolyDivMod {
  Poly quot, rem;
};

/// Monic gcd over Q[x]; gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Wronskian determinant: entry (row j, column i) is the j-th derivative of
/// fs[i]. Computed by fraction-free Bareiss elimination on the polynomial
/// matrix; the empty list yields the constant 1. Linearly dependent inputs
/// yield the zero polynomial.
Poly wronskian(std::span<const Poly> fs);
Poly wronskian(std::initializer_list<Poly> fs);

struct SquareFreeFactor {
  Poly factor;       // monic, square-free
  int multiplicity;  // >= 1
};

/// Yun decomposition: factors are pairwise coprime, square-free and monic;
/// constant * prod(factor^multiplicity) reconstructs the input exactly.
struct SquareFreeDecomposition {
  std::vector<SquareFreeFactor> parts;
  Rational constant;
  Poly reconstruct() const;
};

SquareFreeDecomposition squarefree(const Poly& p);  // rejects the zero polynomial

/// Multiplicity of xi as a root of p (0 if not a root); p must be nonzero.
int root_multiplicity(const Poly& p, const Rational& xi);

/// Coefficients of p(center + t) in powers of t (length deg+1), computed by
/// repeated synthetic division in complex extended precision.
std::vector<BigComplex> taylor_shift(const Poly& p, const BigComplex& center);

}  // namespace xhermite

#endif  // XHERMITE_POLYNOMIAL_HPP

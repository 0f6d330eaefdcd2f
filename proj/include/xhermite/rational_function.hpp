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

#ifndef XHERMITE_RATIONAL_FUNCTION_HPP
#define XHERMITE_RATIONAL_FUNCTION_HPP

#include <string>

#include "xhermite/polynomial.hpp"

namespace xhermite {

/// Quotient of two exact polynomials, kept reduced: gcd(num, den) is
/// constant and the denominator is monic and nonzero.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}  // canonical zero 0/1
  explicit RationalFunction(Poly num) : num_(std::move(num)), den_(1) {}
  RationalFunction(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  bool operator==(const RationalFunction&) const = default;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  RationalFunction derivative() const;  // quotient rule, reduced

  /// Exact evaluation; throws std::domain_error at a pole.
  Rational operator()(const Rational& x) const;

  std::string str() const;

 private:
  Poly num_, den_;
};

/// Order of xi as a root (positive) or pole (negative) of f; 0 otherwise.
/// Rejects the identically-zero function.
int order_at(const RationalFunction& f, const Rational& xi);

}  // namespace xhermite

#endif  // XHERMITE_RATIONAL_FUNCTION_HPP

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

#include "xhermite/rational_function.hpp"

#include <stdexcept>
#include <utility>

namespace xhermite {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::invalid_argument("RationalFunction: division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (d == 0) throw std::domain_error("RationalFunction: evaluation at a pole");
  return num_(x) / d;
}

std::string RationalFunction::str() const {
  if (is_polynomial()) {
    Poly scaled = num_;
    if (den_.coeff(0) != 1) scaled *= Rational(1) / den_.coeff(0);
    return scaled.str();
  }
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

int order_at(const RationalFunction& f, const Rational& xi) {
  if (f.is_zero()) throw std::invalid_argument("order_at: identically zero function");
  return root_multiplicity(f.num(), xi) - root_multiplicity(f.den(), xi);
}

}  // namespace xhermite

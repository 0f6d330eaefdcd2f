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

#ifndef XHERMITE_NUMERIC_HPP
#define XHERMITE_NUMERIC_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace xhermite {

/// Exact rational scalar. All algebraic carriers are built on this.
using Rational = mpq_class;

/// Extended-precision real with runtime-selectable decimal precision.
using BigFloat = boost::multiprecision::mpfr_float;

/// Raised when a numeric routine cannot meet its accuracy contract at the
/// current working precision. Callers should retry with more digits.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/// Sets the working precision (decimal digits) for subsequently created
/// BigFloat values. Must be called in every thread that does extended
/// arithmetic; existing values keep the precision they were created with.
inline void set_working_digits(unsigned digits) {
  BigFloat::default_precision(digits);
}

inline unsigned working_digits() { return BigFloat::default_precision(); }

inline BigFloat to_bigfloat(const Rational& q) {
  return BigFloat(q.get_mpq_t());
}

/// Minimal complex arithmetic over BigFloat. std::complex is only specified
/// for built-in floating types, so the handful of operations needed here are
/// spelled out.
struct BigComplex {
  BigFloat re{0};
  BigFloat im{0};

  BigComplex() = default;
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(BigFloat r) : re(std::move(r)) {}
  explicit BigComplex(double r) : re(r) {}
  explicit BigComplex(const Rational& q) : re(to_bigfloat(q)) {}

  bool is_real() const { return im.is_zero(); }

  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  BigComplex& operator*=(const BigComplex& o) {
    BigFloat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  BigComplex& operator*=(const BigFloat& s) {
    re *= s;
    im *= s;
    return *this;
  }
  BigComplex& operator/=(const BigFloat& s) {
    re /= s;
    im /= s;
    return *this;
  }
  BigComplex& operator/=(const BigComplex& o) {
    BigFloat d = o.re * o.re + o.im * o.im;
    BigFloat r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = r;
    return *this;
  }

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator*(BigComplex a, const BigFloat& s) { return a *= s; }
  friend BigComplex operator*(const BigFloat& s, BigComplex a) { return a *= s; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator/(BigComplex a, const BigFloat& s) { return a /= s; }
  friend BigComplex operator-(const BigComplex& a) { return BigComplex(-a.re, -a.im); }

  friend BigFloat norm2(const BigComplex& a) { return a.re * a.re + a.im * a.im; }
  friend BigFloat abs(const BigComplex& a) { return sqrt(norm2(a)); }
  friend BigComplex conj(const BigComplex& a) { return BigComplex(a.re, -a.im); }

  friend BigComplex exp(const BigComplex& a) {
    BigFloat m = exp(a.re);
    return BigComplex(m * cos(a.im), m * sin(a.im));
  }

  std::string str(unsigned digits = 0) const {
    return "(" + re.str(digits) + (im.sign() < 0 ? "" : "+") + im.str(digits) + "i)";
  }
};

}  // namespace xhermite

#endif  // XHERMITE_NUMERIC_HPP

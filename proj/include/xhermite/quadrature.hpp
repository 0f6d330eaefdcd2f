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

#ifndef XHERMITE_QUADRATURE_HPP
#define XHERMITE_QUADRATURE_HPP

#include <memory>
#include <vector>

#include "xhermite/numeric.hpp"

namespace xhermite {

/// Gaussian quadrature families used here: exp(-x^2) on the real line and
/// y^alpha exp(-y) on the half line with the two half-integer exponents the
/// even/odd split of the line problem produces.
enum class QuadFamily { Hermite, LaguerreHalf, LaguerreThreeHalves };

struct QuadratureRule {
  std::vector<BigFloat> nodes;
  std::vector<BigFloat> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

/// Golub-Welsch rule at the given working precision: nodes are eigenvalues of
/// the symmetric tridiagonal Jacobi matrix of the family's three-term
/// recurrence, weights come from the first eigenvector components. Rules are
/// cached per (family, n, digits); population is serialized, reads are
/// concurrent.
std::shared_ptr<const QuadratureRule> quadrature_rule(QuadFamily family, int n, unsigned digits);

}  // namespace xhermite

#endif  // XHERMITE_QUADRATURE_HPP

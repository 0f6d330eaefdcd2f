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

#ifndef XHERMITE_ORTHOGONALITY_HPP
#define XHERMITE_ORTHOGONALITY_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "xhermite/hermite.hpp"
#include "xhermite/numeric.hpp"
#include "xhermite/partitions.hpp"
#include "xhermite/polynomial.hpp"

namespace xhermite {

using RealFn = std::function<BigFloat(const BigFloat&)>;

/// Evaluable view of an exact polynomial at the current working precision.
RealFn poly_fn(const Poly& p);

/// Weight exp(-x^2) / H_lambda(x)^2 on the real line. Only even partitions
/// keep H_lambda free of real zeros, so others are rejected outright.
class WeightSpec {
 public:
  explicit WeightSpec(Partition lam);
  const Partition& partition() const { return lam_; }
  const Poly& h() const { return h_; }
  BigFloat eval(const BigFloat& x) const;

 private:
  Partition lam_;
  Poly h_;
};

struct QuadOptions {
  int start_nodes = 64;
  int max_nodes = 4096;
  double rel_tol = 1e-12;
  unsigned digits = 64;
};

struct IntegralResult {
  BigFloat value;
  double last_rel_change = 0.0;
  bool converged = false;
  int nodes_used = 0;
};

/// Weighted inner product by Gauss-Hermite quadrature after factoring out
/// exp(-x^2); the node count doubles until two successive values agree to
/// rel_tol (with an absolute floor for vanishing integrals) or the ceiling is
/// hit, in which case the value is returned with converged = false.
IntegralResult inner_product(const WeightSpec& spec, const RealFn& f, const RealFn& g,
                             const QuadOptions& opts = {});

struct GramReport {
  Partition lam;
  std::vector<int> indices;
  std::vector<std::vector<BigFloat>> matrix;
  double max_offdiag_rel = 0.0;  // relative to the geometric mean of the diagonal
  int quadrature_nodes_used = 0;
  bool all_converged = true;
};

/// Gram matrix of the first `count` admissible basis elements in the weighted
/// inner product. The parallel version distributes entries across OpenMP
/// threads; the serial reference is kept for testing and must produce
/// identical values.
GramReport gram_matrix(const Partition& lam, int count, const QuadOptions& opts = {});
GramReport gram_matrix_ref(const Partition& lam, int count, const QuadOptions& opts = {});

std::string gram_csv(const GramReport& report);

struct DensityPoint {
  int degree_cap = 0;
  BigFloat error;
};

struct DensityReport {
  Partition lam;
  std::vector<DensityPoint> points;
  int nodes_used = 0;
  bool all_converged = true;
};

/// Projects f onto span{basis elements of degree <= D} for each cap D using
/// the quadrature inner product and modified Gram-Schmidt with one
/// reorthogonalization pass; degree caps must be strictly increasing, and the
/// reported errors are non-increasing by construction.
DensityReport density_demo(const Partition& lam, const RealFn& f, std::span<const int> degree_caps,
                           const QuadOptions& opts = {});

nlohmann::json density_json(const DensityReport& report);

/// Polynomial with extended-precision coefficients (output of the
/// least-squares constructions).
struct FloatPoly {
  std::vector<BigFloat> c;  // low to high
  BigFloat eval(const BigFloat& x) const;
  int degree() const { return static_cast<int>(c.size()) - 1; }
};

struct LemmaConstruction {
  FloatPoly p;
  BigFloat achieved_error;  // || q - (1 + x^{2m}) p || in the Hermite space
  bool met_target = false;
  int degree_used = 0;
};

/// Constructs p with || q - (1 + x^{2m}) p || <= target_eps in
/// L^2(R, exp(-x^2)) following the even/odd split into two half-line
/// least-squares problems (exponents 1/2 and 3/2), raising the degree until
/// the target is met or a ceiling is reached (met_target = false). The
/// achieved error is re-measured independently with Hermite quadrature.
LemmaConstruction lemma_d2_construct(const Poly& q, int m, double target_eps,
                                     const QuadOptions& opts = {});

}  // namespace xhermite

#endif  // XHERMITE_ORTHOGONALITY_HPP

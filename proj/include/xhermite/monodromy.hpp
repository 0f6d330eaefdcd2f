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

#ifndef XHERMITE_MONODROMY_HPP
#define XHERMITE_MONODROMY_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "xhermite/hermite.hpp"
#include "xhermite/numeric.hpp"
#include "xhermite/partitions.hpp"
#include "xhermite/rational_function.hpp"

namespace xhermite {

/// Knobs shared by the numeric monodromy routines. Exact routines ignore it.
struct NumericContext {
  unsigned digits = 64;  // working precision, decimal digits (>= 32)
  double tol = 1e-8;     // relative tolerance for residual checks
};

/// Rational part of the Schroedinger potential attached to lambda:
/// -2 (H'' H - H'^2) / H^2 in reduced form. The full potential is
/// x^2 + 2*length + this; poles sit exactly at the roots of H_lambda.
RationalFunction potential_rational(const Partition& lam);

/// Triangular index nu with m = nu(nu+1)/2, if m is triangular.
std::optional<int> nu_from_multiplicity(int m);

/// Derivative orders constrained at a root with index nu:
/// {j < nu(nu-1)/2} plus {2j-1 + nu(nu-1)/2 : j = 1..nu}; nu(nu+1)/2 in all.
std::vector<int> constraint_orders(int nu);

/// One root of H_lambda: location (exact when available), multiplicity from
/// the square-free decomposition, triangular index, and constraint orders.
struct RootProfile {
  BigComplex xi;
  std::optional<Rational> xi_exact;
  int m = 0;
  int nu = 0;
  std::vector<int> orders;  // the set M for this root
};

/// Exact multiplicities first (Yun), then numeric roots of each square-free
/// factor by companion-matrix eigenvalues refined with Newton steps at the
/// working precision. Non-triangular multiplicities raise std::logic_error;
/// roots of distinct factors closer than the separation threshold raise
/// PrecisionError. Requires |lambda| >= 1.
std::vector<RootProfile> root_profiles(const Partition& lam, const NumericContext& ctx = {});

/// Truncated Laurent expansion about a (possibly complex) numeric center.
struct LaurentSeries {
  BigComplex center;
  int start_order = 0;
  std::vector<BigComplex> coeffs;  // orders start_order, start_order+1, ...
  double coeff_error_bound = 0.0;

  int truncation_order() const { return start_order + static_cast<int>(coeffs.size()) - 1; }
  bool covers(int order) const { return order >= start_order && order <= truncation_order(); }
  const BigComplex& coeff(int order) const;
};

/// Laurent expansion of the full potential (x^2 + 2*length included) about
/// the given root, through the requested order. Requires order >= 2 nu + 1.
LaurentSeries laurent_potential(const Partition& lam, const RootProfile& profile, int order,
                                const NumericContext& ctx = {});

struct CheckCondition {
  std::string name;
  double residual = 0.0;  // relative to the report's scale
  bool pass = false;
};

struct CheckReport {
  std::vector<CheckCondition> conditions;
  double scale = 0.0;
  bool all_pass = true;
  double worst_residual() const;
};

/// Duistermaat-Gruenbaum trivial-monodromy conditions at one pole:
/// c_{-2} = nu(nu+1) and c_{2j-1} = 0 for j = 0..nu, each within
/// tol * max|c_j| over the inspected window.
CheckReport check_dg(const LaurentSeries& series, int nu, double tol);

/// Exact residual of the formal eigenfunction relation for
/// psi = (H_{lambda,k}/H_lambda) e^{-x^2/2} with eigenvalue 2k+1: returns the
/// coefficient of e^{-x^2/2} in (L - (2k+1)) psi as a rational function,
/// which must be identically zero. Requires k outside K_lambda.
RationalFunction eigenfunction_residual(const Partition& lam, int k);

/// Laurent-side eigenfunction check at one root: the series of
/// H_{lambda,k} * F about xi must start at order >= nu(nu-1)/2 and have
/// vanishing coefficients at odd offsets 1, 3, ..., 2nu-1 from that base,
/// where F carries the other roots' inverse factors and the Gaussian.
CheckReport check_eigen_laurent(const Partition& lam, int k, const RootProfile& profile, double tol,
                                const NumericContext& ctx = {});

/// How F at one root is realized as a series about xi: invert the shifted
/// polynomial part after dropping strip_order leading coefficients (exactly
/// zero by construction), then multiply by the Gaussian series. When the
/// root is exact, the division happens in exact arithmetic up front and
/// nothing needs stripping.
struct CofactorDescription {
  Poly polynomial_part;        // H_lambda, or H_lambda / (x - xi)^m when xi is exact
  int strip_order = 0;         // 0 for the exact case, m otherwise
  bool gaussian_factor = true;  // carries e^{-x^2/2} as a series about xi
};

/// Everything needed to evaluate the derivative constraints of one
/// partition: the root profiles plus the per-root cofactor realizations.
/// The total constraint count equals |lambda|.
struct ConstraintSystem {
  Partition lam;
  std::vector<RootProfile> profiles;
  std::vector<CofactorDescription> cofactors;  // parallel to profiles
  int total_constraints() const;
};
ConstraintSystem constraint_system(const Partition& lam, const NumericContext& ctx = {});

enum class ConstraintScale {
  ReferencePoly,   // residuals scaled by the same constraints of a reference polynomial
  CofactorValue,   // additionally normalized by |F(xi)| at each root
};

struct ConstraintDecision {
  bool member = false;
  double worst_residual = 0.0;  // relative
  double scale = 0.0;
  struct RootResiduals {
    int root_index;
    std::vector<std::pair<int, double>> residuals;  // (derivative order j, relative residual)
  };
  std::vector<RootResiduals> per_root;
};

/// Numeric membership oracle: evaluates the derivative constraints
/// (p F_i)^(j)(xi_i) = 0 for j in M_i through truncated series and compares
/// them, relative to a degree-matched reference polynomial, against tol.
ConstraintDecision constraint_membership(const Partition& lam, const Poly& p, double tol,
                                         const NumericContext& ctx = {},
                                         ConstraintScale scale = ConstraintScale::ReferencePoly);
ConstraintDecision constraint_membership(const Partition& lam, const Poly& p,
                                         const std::vector<RootProfile>& profiles, double tol,
                                         const NumericContext& ctx,
                                         ConstraintScale scale = ConstraintScale::ReferencePoly);
ConstraintDecision constraint_membership(const ConstraintSystem& system, const Poly& p, double tol,
                                         const NumericContext& ctx,
                                         ConstraintScale scale = ConstraintScale::ReferencePoly);

/// Exact multiple-root census row: everything here comes from the
/// square-free decomposition, no floating point involved.
struct VeselovRow {
  Partition lam;
  int origin_multiplicity = 0;        // order of the root at x = 0 (0 if none)
  bool has_multiple_root = false;     // any root with m > 1
  bool multiple_root_off_origin = false;
  int worst_nu = 0;                   // largest triangular index among the roots
  bool all_triangular = true;
};
std::vector<VeselovRow> veselov_scan(int max_size);
VeselovRow veselov_row(const Partition& lam);

/// Aggregated per-partition verification used by the CLI and the scans.
struct MonodromyChecks {
  Partition lam;
  std::vector<RootProfile> profiles;
  std::vector<CheckReport> dg_reports;          // one per root
  std::vector<std::pair<int, bool>> eigen_exact;  // (k, residual identically zero)
  int constraint_count = 0;
  bool triangular_ok = true;
  bool constraint_count_ok = true;
  bool dg_ok = true;
  bool eigen_ok = true;
  bool pass = false;
  std::string failure;  // first failing condition, empty when pass
};

/// Runs profile extraction, the trivial-monodromy conditions at every root,
/// the exact eigenfunction residuals for k <= |lambda|+5 outside K, and the
/// constraint-count identity. max_eigen_k < 0 selects that default range.
MonodromyChecks run_monodromy_checks(const Partition& lam, const NumericContext& ctx = {},
                                     int max_eigen_k = -1);

nlohmann::json monodromy_certificate(const MonodromyChecks& checks);

}  // namespace xhermite

#endif  // XHERMITE_MONODROMY_HPP

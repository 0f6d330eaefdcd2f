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

#include "xhermite/monodromy.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

namespace xhermite {

namespace {

// ---------------------------------------------------------------------------
// Truncated power series over BigComplex (index = power of t)
// ---------------------------------------------------------------------------

using Series = std::vector<BigComplex>;

Series pad(Series s, size_t len) {
  s.resize(len, BigComplex());
  return s;
}

Series mul_trunc(const Series& a, const Series& b, size_t len) {
  Series r(len);
  for (size_t i = 0; i < a.size() && i < len; ++i) {
    for (size_t j = 0; j < b.size() && i + j < len; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// 1 / a with a[0] != 0, by the direct recurrence.
Series inv_trunc(const Series& a, size_t len) {
  Series r(len);
  r[0] = BigComplex(BigFloat(1)) / a[0];
  for (size_t n = 1; n < len; ++n) {
    BigComplex acc;
    for (size_t k = 1; k <= n && k < a.size(); ++k) acc += a[k] * r[n - k];
    r[n] = -(acc / a[0]);
  }
  return r;
}

// e^{-(xi+t)^2/2} = e^{-xi^2/2} * e^{-xi t} * e^{-t^2/2}; each right-hand
// factor has a closed coefficient law, so no symbolic transcendentals are
// needed.
Series gauss_series(const BigComplex& xi, size_t len) {
  Series lin(len), quad(len);
  BigComplex term(BigFloat(1));
  lin[0] = term;
  for (size_t k = 1; k < len; ++k) {
    term = term * (-xi) / BigFloat(static_cast<unsigned>(k));
    lin[k] = term;
  }
  BigFloat qterm(1);
  for (size_t j = 0; 2 * j < len; ++j) {
    if (j > 0) qterm *= BigFloat(-0.5) / BigFloat(static_cast<unsigned>(j));
    quad[2 * j] = BigComplex(qterm);
  }
  Series r = mul_trunc(lin, quad, len);
  const BigComplex c0 = exp(-(xi * xi) / BigFloat(2));
  for (auto& c : r) c *= c0;
  return r;
}

BigFloat max_abs(const Series& s) {
  BigFloat m(0);
  for (const auto& c : s) m = max(m, abs(c));
  return m;
}

// numeric-zero threshold: well above roundoff at the working precision,
// well below any genuine coefficient
BigFloat strip_threshold(unsigned digits) {
  return pow(BigFloat(10), -static_cast<int>(digits * 3 / 5));
}

// Strips `count` leading coefficients that must be numerically zero; raises
// PrecisionError when one of them is not. Returns the largest magnitude seen
// among the stripped entries (an empirical error bound for the rest).
std::pair<Series, BigFloat> strip_leading_zeros(const Series& s, size_t count, unsigned digits,
                                                const char* what) {
  const BigFloat scale = max_abs(s);
  const BigFloat thresh = strip_threshold(digits) * scale;
  BigFloat worst(0);
  for (size_t j = 0; j < count && j < s.size(); ++j) {
    const BigFloat a = abs(s[j]);
    worst = max(worst, a);
    if (a > thresh)
      throw PrecisionError(std::string(what) +
                           ": leading series coefficient fails to vanish at the working precision");
  }
  Series rest(s.begin() + static_cast<long>(std::min(count, s.size())), s.end());
  return {std::move(rest), worst};
}

// How to realize F at this root: divide the vanishing factor out exactly
// when the root is exact, otherwise strip its (structurally zero) leading
// series coefficients at expansion time.
CofactorDescription describe_cofactor(const Poly& h, const RootProfile& profile) {
  if (profile.xi_exact) {
    const Poly lin(std::vector<Rational>{-*profile.xi_exact, Rational(1)});
    return {h.div_exact(lin.pow(static_cast<unsigned>(profile.m))), 0, true};
  }
  return {h, profile.m, true};
}

// Series of the cofactor F(xi + t) = prod_{other roots}(x - xi_j)^{-m_j}
// e^{-x^2/2}: with H(xi+t) = t^m G(t) and c the leading coefficient,
// F = c * gauss / G. G(0) != 0 because the other roots are separated
// from xi.
Series cofactor_series(const CofactorDescription& cof, const BigComplex& xi, size_t len,
                       unsigned digits) {
  Series g;
  if (cof.strip_order == 0) {
    g = pad(taylor_shift(cof.polynomial_part, xi), len);
  } else {
    Series sh = pad(taylor_shift(cof.polynomial_part, xi), len + static_cast<size_t>(cof.strip_order));
    const BigFloat scale = max_abs(sh);
    auto [rest, worst] =
        strip_leading_zeros(sh, static_cast<size_t>(cof.strip_order), digits, "cofactor_series");
    (void)worst;
    g = pad(std::move(rest), len);
    if (abs(g[0]) <= strip_threshold(digits) * scale)
      throw PrecisionError("cofactor_series: reduced leading coefficient is numerically zero");
  }
  Series f = mul_trunc(gauss_series(xi, len), inv_trunc(g, len), len);
  const BigFloat c = to_bigfloat(cof.polynomial_part.leading());
  for (auto& v : f) v *= c;
  return f;
}

Series cofactor_series(const Poly& h, const RootProfile& profile, size_t len, unsigned digits) {
  return cofactor_series(describe_cofactor(h, profile), profile.xi, len, digits);
}

double to_double(const BigFloat& x) { return x.convert_to<double>(); }

// ---------------------------------------------------------------------------
// Numeric roots of an exact square-free polynomial
// ---------------------------------------------------------------------------

std::vector<BigComplex> refined_roots(const Poly& g, unsigned digits) {
  const int d = g.degree();
  std::vector<BigComplex> roots;
  if (d < 1) return roots;

  // companion-matrix eigenvalues in double precision as seeds
  const Poly monic = g.monic();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -monic.coeff(i).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw PrecisionError("refined_roots: eigenvalue iteration failed");

  // Newton refinement at the working precision; the factor is square-free,
  // so every root is simple and the iteration contracts quadratically.
  const Poly gd = g.derivative();
  const BigFloat target = pow(BigFloat(10), -static_cast<int>(digits) + 6);
  for (int i = 0; i < d; ++i) {
    const auto seed = solver.eigenvalues()[i];
    BigComplex z(BigFloat(seed.real()), BigFloat(seed.imag()));
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      const BigComplex step = g.eval(z) / gd.eval(z);
      z -= step;
      if (abs(step) <= target * max(BigFloat(1), abs(z))) {
        converged = true;
        break;
      }
    }
    if (!converged) throw PrecisionError("refined_roots: Newton refinement did not converge");
    roots.push_back(std::move(z));
  }
  return roots;
}

bool complex_less(const BigComplex& a, const BigComplex& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

int pole_multiplicity_at(const Poly& den, const RootProfile& profile, unsigned digits) {
  if (profile.xi_exact) return root_multiplicity(den, *profile.xi_exact);
  // identify the square-free factor of the denominator that vanishes at xi
  const auto sf = squarefree(den);
  int mult = 0;
  int hits = 0;
  const BigFloat thresh = strip_threshold(digits);
  for (const auto& part : sf.parts) {
    const BigFloat value = abs(part.factor.eval(profile.xi));
    const BigFloat scale = max(BigFloat(1), max_abs(taylor_shift(part.factor, profile.xi)));
    if (value <= thresh * scale) {
      mult = part.multiplicity;
      ++hits;
    }
  }
  if (hits > 1) throw PrecisionError("pole_multiplicity_at: ambiguous factor identification");
  return mult;
}

// Laurent coefficients of num/den about xi: shift both, remove the
// pole-order factor from the denominator (exactly when xi is exact, by
// stripping its vanishing series coefficients otherwise), and divide the
// power series.
LaurentSeries laurent_of_quotient(const RationalFunction& f, const RootProfile& profile, int order,
                                  unsigned digits) {
  const int s = pole_multiplicity_at(f.den(), profile, digits);
  const size_t len = static_cast<size_t>(order + s + 1);
  Series num = pad(taylor_shift(f.num(), profile.xi), len);

  Series reduced;
  BigFloat worst(0);
  if (profile.xi_exact) {
    const Poly lin(std::vector<Rational>{-*profile.xi_exact, Rational(1)});
    const Poly den_reduced = f.den().div_exact(lin.pow(static_cast<unsigned>(s)));
    reduced = pad(taylor_shift(den_reduced, profile.xi), len);
  } else {
    Series den = pad(taylor_shift(f.den(), profile.xi), len + static_cast<size_t>(s));
    const BigFloat den_scale = max_abs(den);
    auto stripped = strip_leading_zeros(den, static_cast<size_t>(s), digits, "laurent");
    reduced = pad(std::move(stripped.first), len);
    worst = stripped.second / max(den_scale, BigFloat(1));
    if (abs(reduced[0]) <= strip_threshold(digits) * den_scale)
      throw PrecisionError("laurent: reduced denominator is numerically zero");
  }

  LaurentSeries out;
  out.center = profile.xi;
  out.start_order = -s;
  out.coeffs = mul_trunc(num, inv_trunc(reduced, len), len);
  out.coeff_error_bound = to_double(worst);
  return out;
}

}  // namespace

const BigComplex& LaurentSeries::coeff(int order) const {
  if (!covers(order)) throw std::out_of_range("LaurentSeries::coeff: order outside truncation");
  return coeffs[static_cast<size_t>(order - start_order)];
}

double CheckReport::worst_residual() const {
  double w = 0.0;
  for (const auto& c : conditions) w = std::max(w, c.residual);
  return w;
}

RationalFunction potential_rational(const Partition& lam) {
  const Poly& h = cached_h_lambda(lam);
  const Poly dh = h.derivative();
  const Poly ddh = dh.derivative();
  return RationalFunction(Rational(-2) * (ddh * h - dh * dh), h * h);
}

std::optional<int> nu_from_multiplicity(int m) {
  if (m < 1) return std::nullopt;
  // solve nu(nu+1)/2 = m in integers
  long nu = std::lround((std::sqrt(8.0 * m + 1.0) - 1.0) / 2.0);
  for (long cand = std::max(1L, nu - 1); cand <= nu + 1; ++cand) {
    if (cand * (cand + 1) / 2 == m) return static_cast<int>(cand);
  }
  return std::nullopt;
}

std::vector<int> constraint_orders(int nu) {
  if (nu < 1) throw std::invalid_argument("constraint_orders: nu must be >= 1");
  const int base = nu * (nu - 1) / 2;
  std::vector<int> orders;
  orders.reserve(static_cast<size_t>(nu * (nu + 1) / 2));
  for (int j = 0; j < base; ++j) orders.push_back(j);
  for (int j = 1; j <= nu; ++j) orders.push_back(2 * j - 1 + base);
  return orders;
}

std::vector<RootProfile> root_profiles(const Partition& lam, const NumericContext& ctx) {
  if (lam.sum() < 1) throw std::invalid_argument("root_profiles: empty partition has no roots");
  set_working_digits(ctx.digits);

  const Poly& h = cached_h_lambda(lam);
  const auto sf = squarefree(h);
  std::vector<RootProfile> profiles;

  for (const auto& part : sf.parts) {
    Poly factor = part.factor;
    if (factor.coeff(0) == 0) {
      RootProfile origin;
      origin.xi = BigComplex();
      origin.xi_exact = Rational(0);
      origin.m = part.multiplicity;
      profiles.push_back(std::move(origin));
      factor = factor.div_exact(Poly::variable());
    }
    for (auto& z : refined_roots(factor, ctx.digits)) {
      RootProfile p;
      p.xi = std::move(z);
      p.m = part.multiplicity;
      profiles.push_back(std::move(p));
    }
  }

  int total = 0;
  for (auto& p : profiles) {
    auto nu = nu_from_multiplicity(p.m);
    if (!nu)
      throw std::logic_error("root_profiles: non-triangular multiplicity " + std::to_string(p.m) +
                             " for partition " + lam.str());
    p.nu = *nu;
    p.orders = constraint_orders(p.nu);
    total += p.m;
  }
  if (total != lam.sum())
    throw std::logic_error("root_profiles: multiplicities do not sum to |lambda|");

  std::sort(profiles.begin(), profiles.end(), [](const RootProfile& a, const RootProfile& b) {
    if (a.xi_exact && !b.xi_exact) return true;
    if (!a.xi_exact && b.xi_exact) return false;
    return complex_less(a.xi, b.xi);
  });

  // distinct roots must stay separated at the working precision, otherwise
  // the (root, multiplicity) pairing is ambiguous
  BigFloat scale(1);
  for (const auto& p : profiles) scale = max(scale, abs(p.xi));
  const BigFloat sep = strip_threshold(ctx.digits) * scale;
  for (size_t a = 0; a < profiles.size(); ++a) {
    for (size_t b = a + 1; b < profiles.size(); ++b) {
      if (abs(profiles[a].xi - profiles[b].xi) <= sep)
        throw PrecisionError("root_profiles: two roots are too close to pair at this precision; "
                             "increase the digit budget");
    }
  }
  return profiles;
}

LaurentSeries laurent_potential(const Partition& lam, const RootProfile& profile, int order,
                                const NumericContext& ctx) {
  if (lam.sum() < 1)
    throw std::invalid_argument("laurent_potential: empty partition has no poles to expand about");
  if (order < 2 * profile.nu + 1)
    throw std::invalid_argument("laurent_potential: truncation order too small for the DG window");
  set_working_digits(ctx.digits);

  LaurentSeries series = laurent_of_quotient(potential_rational(lam), profile, order, ctx.digits);

  // add the polynomial part x^2 + 2*length about xi: (xi+t)^2 = xi^2 + 2 xi t + t^2
  const BigComplex xi = profile.xi;
  const int l = lam.length();
  auto at = [&series](int o) -> BigComplex& {
    return series.coeffs[static_cast<size_t>(o - series.start_order)];
  };
  if (series.covers(0)) at(0) += xi * xi + BigComplex(BigFloat(2 * l));
  if (series.covers(1)) at(1) += BigComplex(BigFloat(2)) * xi;
  if (series.covers(2)) at(2) += BigComplex(BigFloat(1));
  return series;
}

CheckReport check_dg(const LaurentSeries& series, int nu, double tol) {
  if (nu < 1) throw std::invalid_argument("check_dg: nu must be >= 1");
  if (!series.covers(-2) || !series.covers(2 * nu - 1))
    throw std::invalid_argument("check_dg: series must cover orders -2 .. 2nu-1");

  CheckReport report;
  BigFloat scale(0);
  for (int o = -2; o <= 2 * nu - 1; ++o) scale = max(scale, abs(series.coeff(o)));
  scale = max(scale, BigFloat("1e-30"));
  report.scale = to_double(scale);

  auto add = [&](std::string name, const BigFloat& abs_residual) {
    CheckCondition c;
    c.name = std::move(name);
    c.residual = to_double(abs_residual / scale);
    c.pass = c.residual <= tol;
    report.all_pass = report.all_pass && c.pass;
    report.conditions.push_back(std::move(c));
  };

  add("c[-2] = nu(nu+1)", abs(series.coeff(-2) - BigComplex(BigFloat(nu * (nu + 1)))));
  for (int j = 0; j <= nu; ++j)
    add("c[" + std::to_string(2 * j - 1) + "] = 0", abs(series.coeff(2 * j - 1)));
  return report;
}

RationalFunction eigenfunction_residual(const Partition& lam, int k) {
  if (k < 0) throw std::invalid_argument("eigenfunction_residual: negative k");
  if (k_sequence(lam).contains(k))
    throw std::invalid_argument("eigenfunction_residual: k lies in K_lambda");

  const RationalFunction r(cached_h_lambda_i(lam, k), cached_h_lambda(lam));
  const RationalFunction dr = r.derivative();
  const RationalFunction u = potential_rational(lam);
  const RationalFunction two_x{Poly::monomial(1, 2)};
  const RationalFunction shift{Poly(Rational(2 * (lam.length() - k)))};
  // coefficient of e^{-x^2/2} in (L - (2k+1)) psi
  return -dr.derivative() + two_x * dr + (u + shift) * r;
}

CheckReport check_eigen_laurent(const Partition& lam, int k, const RootProfile& profile, double tol,
                                const NumericContext& ctx) {
  if (k < 0 || k_sequence(lam).contains(k))
    throw std::invalid_argument("check_eigen_laurent: k must be admissible");
  set_working_digits(ctx.digits);

  const int nu = profile.nu;
  const int base = nu * (nu - 1) / 2;
  const size_t len = static_cast<size_t>(base + 2 * nu + 6);

  const Series f = cofactor_series(cached_h_lambda(lam), profile, len, ctx.digits);
  const Series pk = pad(taylor_shift(cached_h_lambda_i(lam, k), profile.xi), len);
  const Series prod = mul_trunc(pk, f, len);

  CheckReport report;
  BigFloat scale(0);
  for (size_t j = 0; j < static_cast<size_t>(base + 2 * nu); ++j) scale = max(scale, abs(prod[j]));
  scale = max(scale, BigFloat("1e-30"));
  report.scale = to_double(scale);

  auto add = [&](std::string name, const BigFloat& abs_residual) {
    CheckCondition c;
    c.name = std::move(name);
    c.residual = to_double(abs_residual / scale);
    c.pass = c.residual <= tol;
    report.all_pass = report.all_pass && c.pass;
    report.conditions.push_back(std::move(c));
  };

  for (int j = 0; j < base; ++j)
    add("order " + std::to_string(j) + " below start", abs(prod[static_cast<size_t>(j)]));
  for (int r = 1; r <= 2 * nu - 1; r += 2)
    add("a[" + std::to_string(r) + "] = 0", abs(prod[static_cast<size_t>(base + r)]));
  return report;
}

int ConstraintSystem::total_constraints() const {
  int total = 0;
  for (const auto& p : profiles) total += static_cast<int>(p.orders.size());
  return total;
}

ConstraintSystem constraint_system(const Partition& lam, const NumericContext& ctx) {
  ConstraintSystem system;
  system.lam = lam;
  if (lam.sum() >= 1) {
    system.profiles = root_profiles(lam, ctx);
    const Poly& h = cached_h_lambda(lam);
    for (const auto& profile : system.profiles)
      system.cofactors.push_back(describe_cofactor(h, profile));
  }
  if (system.total_constraints() != lam.sum())
    throw std::logic_error("constraint_system: constraint count differs from |lambda|");
  return system;
}

namespace {

std::vector<std::vector<std::pair<int, BigFloat>>> constraint_values(const ConstraintSystem& system,
                                                                     const Poly& p,
                                                                     unsigned digits) {
  std::vector<std::vector<std::pair<int, BigFloat>>> values;
  for (size_t i = 0; i < system.profiles.size(); ++i) {
    const auto& profile = system.profiles[i];
    const int max_order = profile.orders.empty() ? 0 : profile.orders.back();
    const size_t len = static_cast<size_t>(max_order + 2);
    const Series f = cofactor_series(system.cofactors[i], profile.xi, len, digits);
    const Series sp = pad(taylor_shift(p, profile.xi), len);
    const Series prod = mul_trunc(sp, f, len);
    std::vector<std::pair<int, BigFloat>> vals;
    BigFloat factorial(1);
    int at = 0;
    for (int j : profile.orders) {
      while (at < j) {
        ++at;
        factorial *= at;
      }
      vals.emplace_back(j, factorial * abs(prod[static_cast<size_t>(j)]));
    }
    values.push_back(std::move(vals));
  }
  return values;
}

}  // namespace

ConstraintDecision constraint_membership(const Partition& lam, const Poly& p, double tol,
                                         const NumericContext& ctx, ConstraintScale scale) {
  return constraint_membership(constraint_system(lam, ctx), p, tol, ctx, scale);
}

ConstraintDecision constraint_membership(const Partition& lam, const Poly& p,
                                         const std::vector<RootProfile>& profiles, double tol,
                                         const NumericContext& ctx, ConstraintScale scale_mode) {
  ConstraintSystem system;
  system.lam = lam;
  system.profiles = profiles;
  const Poly& h = cached_h_lambda(lam);
  for (const auto& profile : profiles) system.cofactors.push_back(describe_cofactor(h, profile));
  return constraint_membership(system, p, tol, ctx, scale_mode);
}

ConstraintDecision constraint_membership(const ConstraintSystem& system, const Poly& p, double tol,
                                         const NumericContext& ctx, ConstraintScale scale_mode) {
  set_working_digits(ctx.digits);
  ConstraintDecision decision;
  if (p.is_zero()) {
    decision.member = true;
    return decision;
  }

  auto values = constraint_values(system, p, ctx.digits);

  // degree-matched reference polynomial fixes the scale of a "generically
  // nonzero" constraint
  std::vector<Rational> ones(static_cast<size_t>(std::max(p.degree(), 1)) + 1, Rational(1));
  const Poly reference{std::move(ones)};
  auto ref_values = constraint_values(system, reference, ctx.digits);

  if (scale_mode == ConstraintScale::CofactorValue) {
    for (size_t i = 0; i < system.profiles.size(); ++i) {
      const Series f = cofactor_series(system.cofactors[i], system.profiles[i].xi, 1, ctx.digits);
      const BigFloat f0 = abs(f[0]);
      for (auto& [j, v] : values[i]) v /= f0;
      for (auto& [j, v] : ref_values[i]) v /= f0;
    }
  }

  BigFloat scale(0);
  for (const auto& per_root : ref_values)
    for (const auto& [j, v] : per_root) scale = max(scale, v);
  scale = max(scale, BigFloat("1e-30"));
  decision.scale = to_double(scale);

  decision.member = true;
  for (size_t i = 0; i < system.profiles.size(); ++i) {
    ConstraintDecision::RootResiduals rr;
    rr.root_index = static_cast<int>(i);
    for (const auto& [j, v] : values[i]) {
      const double rel = to_double(v / scale);
      rr.residuals.emplace_back(j, rel);
      decision.worst_residual = std::max(decision.worst_residual, rel);
      if (rel > tol) decision.member = false;
    }
    decision.per_root.push_back(std::move(rr));
  }
  return decision;
}

VeselovRow veselov_row(const Partition& lam) {
  VeselovRow row;
  row.lam = lam;
  const Poly& h = cached_h_lambda(lam);
  const auto sf = squarefree(h);

  int origin_from_coeffs = 0;
  while (h.coeff(origin_from_coeffs) == 0) ++origin_from_coeffs;

  const Poly x = Poly::variable();
  for (const auto& part : sf.parts) {
    if (part.factor.coeff(0) == 0) row.origin_multiplicity = part.multiplicity;
    if (part.multiplicity > 1) {
      row.has_multiple_root = true;
      // square-free factor: it is supported at the origin only if it IS x
      if (part.factor != x) row.multiple_root_off_origin = true;
    }
    auto nu = nu_from_multiplicity(part.multiplicity);
    if (!nu)
      row.all_triangular = false;
    else
      row.worst_nu = std::max(row.worst_nu, *nu);
  }
  // two independent routes to the origin multiplicity must agree
  if (origin_from_coeffs != row.origin_multiplicity)
    throw std::logic_error("veselov_row: origin multiplicity mismatch for " + lam.str());
  return row;
}

std::vector<VeselovRow> veselov_scan(int max_size) {
  std::vector<VeselovRow> rows;
  for (const Partition& lam : enumerate_partitions(max_size)) rows.push_back(veselov_row(lam));
  return rows;
}

MonodromyChecks run_monodromy_checks(const Partition& lam, const NumericContext& ctx,
                                     int max_eigen_k) {
  MonodromyChecks out;
  out.lam = lam;
  if (max_eigen_k < 0) max_eigen_k = lam.sum() + 5;

  const KSet K = k_sequence(lam);
  for (int k = 0; k <= max_eigen_k; ++k) {
    if (K.contains(k)) continue;
    const bool zero = eigenfunction_residual(lam, k).is_zero();
    out.eigen_exact.emplace_back(k, zero);
    if (!zero) {
      out.eigen_ok = false;
      if (out.failure.empty())
        out.failure = "eigenfunction residual nonzero at k=" + std::to_string(k);
    }
  }

  if (lam.sum() >= 1) {
    try {
      out.profiles = root_profiles(lam, ctx);
    } catch (const std::logic_error& e) {
      out.triangular_ok = false;
      out.failure = e.what();
      out.pass = false;
      return out;
    }
    for (const auto& profile : out.profiles) {
      out.constraint_count += static_cast<int>(profile.orders.size());
      const int order = (profile.orders.empty() ? 0 : profile.orders.back()) + 2 * profile.nu + 6;
      LaurentSeries series = laurent_potential(lam, profile, order, ctx);
      CheckReport dg = check_dg(series, profile.nu, ctx.tol);
      if (!dg.all_pass) {
        out.dg_ok = false;
        if (out.failure.empty()) out.failure = "trivial-monodromy condition failed at a root";
      }
      out.dg_reports.push_back(std::move(dg));
    }
    if (out.constraint_count != lam.sum()) {
      out.constraint_count_ok = false;
      if (out.failure.empty()) out.failure = "constraint count differs from |lambda|";
    }
  }

  out.pass = out.triangular_ok && out.constraint_count_ok && out.dg_ok && out.eigen_ok;
  return out;
}

nlohmann::json monodromy_certificate(const MonodromyChecks& checks) {
  nlohmann::json roots = nlohmann::json::array();
  for (size_t i = 0; i < checks.profiles.size(); ++i) {
    const auto& p = checks.profiles[i];
    nlohmann::json residuals = nlohmann::json::array();
    if (i < checks.dg_reports.size()) {
      for (const auto& c : checks.dg_reports[i].conditions) residuals.push_back(c.residual);
    }
    roots.push_back({{"xi_re", to_double(p.xi.re)},
                     {"xi_im", to_double(p.xi.im)},
                     {"m", p.m},
                     {"nu", p.nu},
                     {"M", p.orders},
                     {"dg_residuals", residuals}});
  }
  nlohmann::json eigen = nlohmann::json::array();
  for (const auto& [k, zero] : checks.eigen_exact) eigen.push_back({{"k", k}, {"exact_zero", zero}});
  return nlohmann::json{{"partition", checks.lam.str()},
                        {"roots", roots},
                        {"eigen_checks", eigen},
                        {"constraint_count", checks.constraint_count}};
}

}  // namespace xhermite

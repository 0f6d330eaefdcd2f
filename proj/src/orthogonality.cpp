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

#include "xhermite/orthogonality.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "xhermite/quadrature.hpp"

namespace xhermite {

RealFn poly_fn(const Poly& p) {
  std::vector<BigFloat> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs.push_back(to_bigfloat(c));
  return [coeffs](const BigFloat& x) {
    BigFloat acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
}

WeightSpec::WeightSpec(Partition lam) : lam_(std::move(lam)) {
  if (!lam_.is_even())
    throw std::invalid_argument(
        "WeightSpec: partition is not even (parts must pair up equally), so the weight would have "
        "real poles");
  h_ = cached_h_lambda(lam_);
}

BigFloat WeightSpec::eval(const BigFloat& x) const {
  const BigFloat hx = h_.eval(x);
  return exp(-x * x) / (hx * hx);
}

namespace {

double to_double(const BigFloat& x) { return x.convert_to<double>(); }

// one fixed-rule pass: value and absolute-value mass of f*g/h^2 against the
// Gauss-Hermite rule
std::pair<BigFloat, BigFloat> quad_pass(const WeightSpec& spec, const RealFn& f, const RealFn& g,
                                        int nodes, unsigned digits) {
  const auto rule = quadrature_rule(QuadFamily::Hermite, nodes, digits);
  BigFloat value(0), mass(0);
  const bool trivial_h = spec.h().degree() == 0;
  for (int i = 0; i < rule->size(); ++i) {
    const BigFloat& x = rule->nodes[i];
    BigFloat phi = f(x) * g(x);
    if (!trivial_h) {
      const BigFloat hx = spec.h().eval(x);
      phi /= hx * hx;
    }
    value += rule->weights[i] * phi;
    mass += rule->weights[i] * abs(phi);
  }
  return {value, mass};
}

}  // namespace

IntegralResult inner_product(const WeightSpec& spec, const RealFn& f, const RealFn& g,
                             const QuadOptions& opts) {
  set_working_digits(opts.digits);
  IntegralResult out;
  BigFloat prev;
  bool have_prev = false;
  for (int n = opts.start_nodes; n <= opts.max_nodes; n *= 2) {
    auto [value, mass] = quad_pass(spec, f, g, n, opts.digits);
    out.value = value;
    out.nodes_used = n;
    if (have_prev) {
      // the integrand's absolute mass supplies the scale for vanishing
      // integrals, which would otherwise chase a pure relative target forever
      const BigFloat scale = abs(value) + mass;
      const BigFloat change = abs(value - prev);
      out.last_rel_change = to_double(scale > 0 ? BigFloat(change / scale) : BigFloat(0));
      if (change <= BigFloat(opts.rel_tol) * scale) {
        out.converged = true;
        return out;
      }
    }
    prev = value;
    have_prev = true;
  }
  out.converged = false;
  return out;
}

namespace {

struct GramSetup {
  WeightSpec spec;
  std::vector<int> indices;
  std::vector<RealFn> fns;
};

GramSetup gram_setup(const Partition& lam, int count, const QuadOptions& opts) {
  if (count < 1) throw std::invalid_argument("gram_matrix: count must be >= 1");
  set_working_digits(opts.digits);
  GramSetup setup{WeightSpec(lam), admissible_indices(lam, count), {}};
  setup.fns.reserve(count);
  for (int i : setup.indices) setup.fns.push_back(poly_fn(cached_h_lambda_i(lam, i)));
  return setup;
}

void finish_gram(GramReport& report) {
  const int count = static_cast<int>(report.matrix.size());
  BigFloat worst(0);
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      const BigFloat rel =
          abs(report.matrix[a][b]) / sqrt(report.matrix[a][a] * report.matrix[b][b]);
      worst = max(worst, rel);
    }
  }
  report.max_offdiag_rel = to_double(worst);
}

}  // namespace

GramReport gram_matrix(const Partition& lam, int count, const QuadOptions& opts) {
  GramSetup setup = gram_setup(lam, count, opts);
  GramReport report;
  report.lam = lam;
  report.indices = setup.indices;
  report.matrix.assign(count, std::vector<BigFloat>(count, BigFloat(0)));

  std::vector<std::pair<int, int>> entries;
  for (int a = 0; a < count; ++a)
    for (int b = a; b < count; ++b) entries.emplace_back(a, b);
  std::vector<IntegralResult> results(entries.size());

#pragma omp parallel for schedule(dynamic)
  for (size_t e = 0; e < entries.size(); ++e) {
    set_working_digits(opts.digits);
    results[e] = inner_product(setup.spec, setup.fns[entries[e].first],
                               setup.fns[entries[e].second], opts);
  }

  for (size_t e = 0; e < entries.size(); ++e) {
    const auto& [a, b] = entries[e];
    report.matrix[a][b] = results[e].value;
    report.matrix[b][a] = results[e].value;
    report.quadrature_nodes_used = std::max(report.quadrature_nodes_used, results[e].nodes_used);
    report.all_converged = report.all_converged && results[e].converged;
  }
  finish_gram(report);
  return report;
}

GramReport gram_matrix_ref(const Partition& lam, int count, const QuadOptions& opts) {
  GramSetup setup = gram_setup(lam, count, opts);
  GramReport report;
  report.lam = lam;
  report.indices = setup.indices;
  report.matrix.assign(count, std::vector<BigFloat>(count, BigFloat(0)));

  for (int a = 0; a < count; ++a) {
    for (int b = a; b < count; ++b) {
      const IntegralResult r = inner_product(setup.spec, setup.fns[a], setup.fns[b], opts);
      report.matrix[a][b] = r.value;
      report.matrix[b][a] = r.value;
      report.quadrature_nodes_used = std::max(report.quadrature_nodes_used, r.nodes_used);
      report.all_converged = report.all_converged && r.converged;
    }
  }
  finish_gram(report);
  return report;
}

std::string gram_csv(const GramReport& report) {
  std::ostringstream out;
  out << "i";
  for (int i : report.indices) out << "," << i;
  out << "\n";
  for (size_t a = 0; a < report.matrix.size(); ++a) {
    out << report.indices[a];
    for (const auto& v : report.matrix[a]) out << "," << v.str(0, std::ios_base::scientific);
    out << "\n";
  }
  return out.str();
}

namespace {

// discrete weighted inner product over fixed nodes
BigFloat dot(const std::vector<BigFloat>& w, const std::vector<BigFloat>& u,
             const std::vector<BigFloat>& v) {
  BigFloat acc(0);
  for (size_t i = 0; i < w.size(); ++i) acc += w[i] * u[i] * v[i];
  return acc;
}

// Modified Gram-Schmidt with one reorthogonalization pass. Returns the
// orthonormal vectors; when r_out is non-null, also accumulates the upper
// triangular change-of-basis coefficients (b_k = sum_j R[j][k] q_j).
std::vector<std::vector<BigFloat>> mgs(const std::vector<BigFloat>& w,
                                       const std::vector<std::vector<BigFloat>>& basis,
                                       std::vector<std::vector<BigFloat>>* r_out) {
  const size_t k = basis.size();
  std::vector<std::vector<BigFloat>> q;
  q.reserve(k);
  if (r_out) r_out->assign(k, std::vector<BigFloat>(k, BigFloat(0)));
  for (size_t col = 0; col < k; ++col) {
    std::vector<BigFloat> v = basis[col];
    for (int pass = 0; pass < 2; ++pass) {
      for (size_t j = 0; j < col; ++j) {
        const BigFloat s = dot(w, q[j], v);
        for (size_t i = 0; i < v.size(); ++i) v[i] -= s * q[j][i];
        if (r_out) (*r_out)[j][col] += s;
      }
    }
    const BigFloat nrm = sqrt(dot(w, v, v));
    if (nrm == 0) throw std::logic_error("mgs: rank-deficient basis");
    for (auto& x : v) x /= nrm;
    if (r_out) (*r_out)[col][col] = nrm;
    q.push_back(std::move(v));
  }
  return q;
}

}  // namespace

DensityReport density_demo(const Partition& lam, const RealFn& f, std::span<const int> degree_caps,
                           const QuadOptions& opts) {
  if (degree_caps.empty()) throw std::invalid_argument("density_demo: no degree caps");
  for (size_t i = 1; i < degree_caps.size(); ++i) {
    if (degree_caps[i] <= degree_caps[i - 1])
      throw std::invalid_argument("density_demo: degree caps must increase");
  }
  set_working_digits(opts.digits);
  const WeightSpec spec(lam);

  DensityReport report;
  report.lam = lam;

  // basis elements with degree within the largest cap, ordered by degree
  const int size = lam.sum();
  const int l = lam.length();
  const KSet K = k_sequence(lam);
  std::vector<int> indices;
  for (int i = 0; size + i - l <= degree_caps.back(); ++i) {
    if (K.contains(i) || size + i - l < 0) continue;
    indices.push_back(i);
  }

  // settle the node count on the hardest integrands
  IntegralResult ff = inner_product(spec, f, f, opts);
  report.nodes_used = ff.nodes_used;
  report.all_converged = ff.converged;
  if (!indices.empty()) {
    const RealFn last = poly_fn(cached_h_lambda_i(lam, indices.back()));
    IntegralResult bb = inner_product(spec, last, last, opts);
    report.nodes_used = std::max(report.nodes_used, bb.nodes_used);
    report.all_converged = report.all_converged && bb.converged;
  }

  const auto rule = quadrature_rule(QuadFamily::Hermite, report.nodes_used, opts.digits);
  const int n = rule->size();
  std::vector<BigFloat> w(n), fvec(n);
  const bool trivial_h = spec.h().degree() == 0;
  for (int i = 0; i < n; ++i) {
    const BigFloat& x = rule->nodes[i];
    w[i] = rule->weights[i];
    if (!trivial_h) {
      const BigFloat hx = spec.h().eval(x);
      w[i] /= hx * hx;
    }
    fvec[i] = f(x);
  }

  std::vector<std::vector<BigFloat>> basis;
  for (int i : indices) {
    const RealFn fn = poly_fn(cached_h_lambda_i(lam, i));
    std::vector<BigFloat> values(n);
    for (int j = 0; j < n; ++j) values[j] = fn(rule->nodes[j]);
    basis.push_back(std::move(values));
  }
  const auto q = mgs(w, basis, nullptr);

  // peel off one orthonormal direction at a time; the residual norm can only
  // decrease, which is the testable face of nested-subspace projection
  std::vector<BigFloat> r = fvec;
  size_t next = 0;
  for (int cap : degree_caps) {
    while (next < indices.size() && size + indices[next] - l <= cap) {
      const BigFloat c = dot(w, q[next], r);
      for (int i = 0; i < n; ++i) r[i] -= c * q[next][i];
      ++next;
    }
    DensityPoint point;
    point.degree_cap = cap;
    point.error = sqrt(dot(w, r, r));
    report.points.push_back(std::move(point));
  }
  return report;
}

nlohmann::json density_json(const DensityReport& report) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : report.points)
    points.push_back({{"D", p.degree_cap}, {"error", to_double(p.error)}});
  return nlohmann::json{{"partition", report.lam.str()},
                        {"points", points},
                        {"nodes", report.nodes_used},
                        {"converged", report.all_converged}};
}

BigFloat FloatPoly::eval(const BigFloat& x) const {
  BigFloat acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

// Weighted least squares of `target` against the basis {(1+y^m) y^j} on the
// half line, solved through MGS; returns the basis coefficients and the
// residual norm measured by the (exact for polynomials) Gauss-Laguerre rule.
std::pair<std::vector<BigFloat>, BigFloat> halfline_ls(const Poly& target, int m, int degree,
                                                       QuadFamily family, unsigned digits) {
  const int max_poly_deg = std::max(degree + m, target.is_zero() ? 0 : target.degree());
  const int nodes = max_poly_deg + 2;
  const auto rule = quadrature_rule(family, nodes, digits);
  const int n = rule->size();

  std::vector<BigFloat> tvec(n);
  const RealFn tf = poly_fn(target);
  for (int i = 0; i < n; ++i) tvec[i] = tf(rule->nodes[i]);

  std::vector<std::vector<BigFloat>> basis(static_cast<size_t>(degree) + 1,
                                           std::vector<BigFloat>(n));
  for (int i = 0; i < n; ++i) {
    const BigFloat& y = rule->nodes[i];
    const BigFloat common = 1 + pow(y, m);
    BigFloat monomial(1);
    for (int j = 0; j <= degree; ++j) {
      basis[static_cast<size_t>(j)][i] = common * monomial;
      monomial *= y;
    }
  }

  std::vector<std::vector<BigFloat>> r_mat;
  const auto q = mgs(rule->weights, basis, &r_mat);

  std::vector<BigFloat> coeffs_q(q.size());
  std::vector<BigFloat> residual = tvec;
  for (size_t k = 0; k < q.size(); ++k) {
    coeffs_q[k] = dot(rule->weights, q[k], residual);
    for (int i = 0; i < n; ++i) residual[i] -= coeffs_q[k] * q[k][i];
  }
  const BigFloat err = sqrt(dot(rule->weights, residual, residual));

  // back-substitute R beta = c to express the fit over the raw basis
  const size_t kk = q.size();
  std::vector<BigFloat> beta(kk);
  for (size_t idx = kk; idx-- > 0;) {
    BigFloat acc = coeffs_q[idx];
    for (size_t j = idx + 1; j < kk; ++j) acc -= r_mat[idx][j] * beta[j];
    beta[idx] = acc / r_mat[idx][idx];
  }
  return {std::move(beta), err};
}

Poly even_part(const Poly& q, int from_power) {
  // coefficients of x^{from_power}, x^{from_power+2}, ... as a polynomial in y = x^2
  std::vector<Rational> cs;
  for (int k = from_power; k <= q.degree(); k += 2) cs.push_back(q.coeff(k));
  return Poly(std::move(cs));
}

}  // namespace

LemmaConstruction lemma_d2_construct(const Poly& q, int m, double target_eps,
                                     const QuadOptions& opts) {
  if (m < 1) throw std::invalid_argument("lemma_d2_construct: m must be >= 1");
  if (target_eps <= 0) throw std::invalid_argument("lemma_d2_construct: target must be positive");
  set_working_digits(opts.digits);

  const Rational q0 = q.coeff(0);
  const Poly q1 = even_part(q, 1);                                    // odd coefficients
  const Poly target2 = even_part(q, 2) - Poly::monomial(m - 1, q0);   // even tail minus q0 y^{m-1}

  LemmaConstruction out;
  const WeightSpec hermite_space{Partition{}};

  auto assemble = [&](const std::vector<BigFloat>& p1, const std::vector<BigFloat>& p2) {
    FloatPoly p;
    const size_t len = 1 + 2 * std::max(p1.size(), p2.size()) + 1;
    p.c.assign(len, BigFloat(0));
    p.c[0] = to_bigfloat(q0);
    for (size_t j = 0; j < p1.size(); ++j) p.c[2 * j + 1] = p1[j];
    for (size_t j = 0; j < p2.size(); ++j) p.c[2 * j + 2] = p2[j];
    while (p.c.size() > 1 && p.c.back() == 0) p.c.pop_back();
    return p;
  };

  auto measure = [&](const FloatPoly& p) {
    const RealFn qf = poly_fn(q);
    const RealFn residual = [&qf, &p, m](const BigFloat& x) {
      return qf(x) - (1 + pow(x, 2 * m)) * p.eval(x);
    };
    return sqrt(inner_product(hermite_space, residual, residual, opts).value);
  };

  if (q1.is_zero() && target2.is_zero()) {
    // q is already q0 (1 + x^{2m}) plus nothing else to fit
    out.p = assemble({}, {});
    out.achieved_error = measure(out.p);
    out.met_target = true;
    out.degree_used = 0;
    return out;
  }

  constexpr int kDegreeCeiling = 48;
  for (int degree = 0; degree <= kDegreeCeiling; degree += 2) {
    auto [p1, err1] = halfline_ls(q1, m, degree, QuadFamily::LaguerreHalf, opts.digits);
    auto [p2, err2] = halfline_ls(target2, m, degree, QuadFamily::LaguerreThreeHalves, opts.digits);
    const BigFloat total = sqrt(err1 * err1 + err2 * err2);
    if (total <= BigFloat(target_eps) * BigFloat("0.98") || degree == kDegreeCeiling) {
      out.p = assemble(p1, p2);
      out.degree_used = degree;
      out.achieved_error = measure(out.p);
      out.met_target = out.achieved_error <= BigFloat(target_eps);
      if (out.met_target || degree == kDegreeCeiling) return out;
    }
  }
  return out;  // unreachable
}

}  // namespace xhermite

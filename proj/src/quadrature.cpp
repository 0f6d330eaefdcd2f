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

#include "xhermite/quadrature.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace xhermite {

namespace {

// Implicit QL diagonalization of a symmetric tridiagonal matrix, applying the
// rotations to a vector z as they are generated (EISPACK imtql2 as adapted by
// Elhay-Kautsky/Burkardt). On exit d holds the eigenvalues ascending and z
// holds Q^T z.
void imtqlx(std::vector<BigFloat>& d, std::vector<BigFloat>& e, std::vector<BigFloat>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  const BigFloat prec = std::numeric_limits<BigFloat>::epsilon();
  e[n - 1] = 0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      int m = l;
      while (m < n - 1 && abs(e[m]) > prec * (abs(d[m]) + abs(d[m + 1]))) ++m;
      if (m == l) break;
      if (++iter > 60) throw PrecisionError("imtqlx: iteration limit exceeded");

      BigFloat g = (d[l + 1] - d[l]) / (2 * e[l]);
      BigFloat r = sqrt(g * g + 1);
      const BigFloat signed_r = g.sign() < 0 ? BigFloat(-abs(r)) : BigFloat(abs(r));
      g = d[m] - d[l] + e[l] / (g + signed_r);
      BigFloat s(1), c(1), p(0);

      for (int i = m - 1; i >= l; --i) {
        BigFloat f = s * e[i];
        BigFloat b = c * e[i];
        if (abs(g) <= abs(f)) {
          c = g / f;
          r = sqrt(c * c + 1);
          e[i + 1] = f * r;
          s = 1 / r;
          c *= s;
        } else {
          s = f / g;
          r = sqrt(s * s + 1);
          e[i + 1] = g * r;
          c = 1 / r;
          s *= c;
        }
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;

        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      d[l] -= p;
      e[l] = g;
      e[m] = 0;
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&d](int a, int b) { return d[a] < d[b]; });
  std::vector<BigFloat> ds(n), zs(n);
  for (int i = 0; i < n; ++i) {
    ds[i] = d[order[i]];
    zs[i] = z[order[i]];
  }
  d = std::move(ds);
  z = std::move(zs);
}

QuadratureRule build_rule(QuadFamily family, int n, unsigned digits) {
  set_working_digits(digits);
  std::vector<BigFloat> d(n, BigFloat(0)), e(n, BigFloat(0)), z(n, BigFloat(0));
  BigFloat mu0;
  switch (family) {
    case QuadFamily::Hermite:
      for (int i = 0; i + 1 < n; ++i) e[i] = sqrt(BigFloat(i + 1) / 2);
      mu0 = boost::math::constants::root_pi<BigFloat>();
      break;
    case QuadFamily::LaguerreHalf:
    case QuadFamily::LaguerreThreeHalves: {
      const BigFloat alpha =
          family == QuadFamily::LaguerreHalf ? BigFloat(1) / 2 : BigFloat(3) / 2;
      for (int i = 0; i < n; ++i) d[i] = 2 * i + alpha + 1;
      for (int i = 0; i + 1 < n; ++i) e[i] = sqrt(BigFloat(i + 1) * (BigFloat(i + 1) + alpha));
      // Gamma(3/2) = sqrt(pi)/2, Gamma(5/2) = 3 sqrt(pi)/4
      mu0 = family == QuadFamily::LaguerreHalf
                ? boost::math::constants::root_pi<BigFloat>() / 2
                : 3 * boost::math::constants::root_pi<BigFloat>() / 4;
      break;
    }
  }
  z[0] = 1;
  imtqlx(d, e, z);

  QuadratureRule rule;
  rule.nodes = std::move(d);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) rule.weights[i] = mu0 * z[i] * z[i];
  return rule;
}

std::mutex rule_mutex;
std::map<std::tuple<int, int, unsigned>, std::shared_ptr<const QuadratureRule>> rule_cache;

}  // namespace

std::shared_ptr<const QuadratureRule> quadrature_rule(QuadFamily family, int n, unsigned digits) {
  if (n < 1) throw std::invalid_argument("quadrature_rule: node count must be >= 1");
  const auto key = std::make_tuple(static_cast<int>(family), n, digits);
  {
    std::lock_guard lock(rule_mutex);
    auto it = rule_cache.find(key);
    if (it != rule_cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule>(build_rule(family, n, digits));
  std::lock_guard lock(rule_mutex);
  return rule_cache.try_emplace(key, std::move(rule)).first->second;
}

}  // namespace xhermite

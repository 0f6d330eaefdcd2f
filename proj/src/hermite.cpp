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

#include "xhermite/hermite.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace xhermite {

namespace {

// H_{n+1} = 2x H_n - 2n H_{n-1}; the whole ladder is cached because
// Wronskian construction touches low indices constantly.
std::vector<Poly>& hermite_ladder() {
  static std::vector<Poly> ladder = {Poly(1), Poly::monomial(1, 2)};
  return ladder;
}
std::mutex hermite_mutex;

std::shared_mutex cache_mutex;
std::map<Partition, Poly> hl_cache;
std::map<std::pair<Partition, int>, Poly> hli_cache;

std::vector<Poly> k_family(const Partition& lam) {
  const KSet K = k_sequence(lam);
  std::vector<Poly> fs;
  fs.reserve(K.size());
  // ascending k left to right
  for (auto it = K.values().rbegin(); it != K.values().rend(); ++it) fs.push_back(hermite(*it));
  return fs;
}

}  // namespace

Poly hermite(int n) {
  if (n < 0) throw std::invalid_argument("hermite: negative index");
  std::lock_guard<std::mutex> lock(hermite_mutex);
  auto& ladder = hermite_ladder();
  const Poly two_x = Poly::monomial(1, 2);
  while (static_cast<int>(ladder.size()) <= n) {
    const int m = static_cast<int>(ladder.size()) - 1;  // highest index present
    ladder.push_back(two_x * ladder[m] - Rational(2 * m) * ladder[m - 1]);
  }
  return ladder[n];
}

Poly h_lambda(const Partition& lam) {
  if (lam.length() == 0) return Poly(1);
  return wronskian(k_family(lam));
}

Poly h_lambda_i(const Partition& lam, int i) {
  if (i < 0) throw std::invalid_argument("h_lambda_i: negative index");
  if (k_sequence(lam).contains(i))
    throw std::invalid_argument("h_lambda_i: index " + std::to_string(i) +
                                " lies in K and gives a dependent Wronskian");
  std::vector<Poly> fs = k_family(lam);
  fs.push_back(hermite(i));
  return wronskian(fs);
}

const Poly& cached_h_lambda(const Partition& lam) {
  {
    std::shared_lock lock(cache_mutex);
    auto it = hl_cache.find(lam);
    if (it != hl_cache.end()) return it->second;
  }
  Poly value = h_lambda(lam);
  std::unique_lock lock(cache_mutex);
  return hl_cache.try_emplace(lam, std::move(value)).first->second;
}

const Poly& cached_h_lambda_i(const Partition& lam, int i) {
  const auto key = std::make_pair(lam, i);
  {
    std::shared_lock lock(cache_mutex);
    auto it = hli_cache.find(key);
    if (it != hli_cache.end()) return it->second;
  }
  Poly value = h_lambda_i(lam, i);
  std::unique_lock lock(cache_mutex);
  return hli_cache.try_emplace(key, std::move(value)).first->second;
}

ExceptionalBasis exceptional_basis(const Partition& lam, int max_degree) {
  ExceptionalBasis basis;
  basis.lam = lam;
  const int size = lam.sum();
  const int l = lam.length();
  const KSet K = k_sequence(lam);
  for (int i = 0; size + i - l <= max_degree; ++i) {
    if (K.contains(i)) continue;
    basis.elements.emplace(i, cached_h_lambda_i(lam, i));
  }
  return basis;
}

bool DegreeSequence::is_gap(int n) const {
  return std::binary_search(gaps.begin(), gaps.end(), n);
}

DegreeSequence degree_sequence(const Partition& lam) {
  const int size = lam.sum();
  const int l = lam.length();
  std::vector<int> gaps;
  gaps.reserve(size);
  for (int n = 0; n < size - l; ++n) gaps.push_back(n);
  const KSet K = k_sequence(lam);
  for (int k : K.values()) gaps.push_back(k + size - l);
  std::sort(gaps.begin(), gaps.end());
  return {lam, std::move(gaps)};
}

std::vector<int> admissible_indices(const Partition& lam, int count) {
  if (count < 0) throw std::invalid_argument("admissible_indices: negative count");
  const KSet K = k_sequence(lam);
  std::vector<int> out;
  for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
    if (!K.contains(i)) out.push_back(i);
  }
  return out;
}

Membership membership(const Partition& lam, const Poly& p) {
  Membership res;
  if (p.is_zero()) {
    res.member = true;
    return res;
  }
  const DegreeSequence ds = degree_sequence(lam);
  const int size = lam.sum();
  const int l = lam.length();
  Poly r = p;
  std::map<int, Rational> coeffs;
  // Eliminate from the top degree down; each admissible degree is hit by
  // exactly one basis element, so the system is triangular.
  while (!r.is_zero()) {
    const int d = r.degree();
    if (ds.is_gap(d)) {
      res.member = false;
      res.obstruction_degree = d;
      return res;
    }
    const int i = d - size + l;
    const Poly& basis = cached_h_lambda_i(lam, i);
    const Rational c = r.leading() / basis.leading();
    r -= basis * c;
    coeffs[i] = c;
  }
  res.member = true;
  res.coefficients.assign(coeffs.begin(), coeffs.end());
  return res;
}

nlohmann::json membership_json(const Partition& lam, const Poly& p, const Membership& m) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [i, c] : m.coefficients) coeffs.push_back({i, c.get_str()});
  nlohmann::json j{{"partition", lam.str()},
                   {"polynomial", p.str()},
                   {"member", m.member},
                   {"coefficients", coeffs}};
  if (m.obstruction_degree)
    j["obstruction_degree"] = *m.obstruction_degree;
  else
    j["obstruction_degree"] = nullptr;
  return j;
}

EmbeddedProduct eta_squared_embed(const Partition& lam, const Poly& p) {
  const Poly& h = cached_h_lambda(lam);
  EmbeddedProduct out;
  out.product = h * h * p;
  out.certificate = membership(lam, out.product);
  if (!out.certificate.member)
    throw std::logic_error("eta_squared_embed: H^2*p failed the membership solve for partition " +
                           lam.str());
  return out;
}

}  // namespace xhermite

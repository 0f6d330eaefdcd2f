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

#ifndef XHERMITE_HERMITE_HPP
#define XHERMITE_HERMITE_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "xhermite/partitions.hpp"
#include "xhermite/polynomial.hpp"

namespace xhermite {

/// Classical Hermite polynomial H_n, physicists' normalization (leading
/// coefficient 2^n), via the three-term recurrence.
Poly hermite(int n);

/// Wronskian of the Hermite family indexed by K_lambda, arguments ordered by
/// ascending index. Degree |lambda|; the empty partition gives 1.
Poly h_lambda(const Partition& lam);

/// Wronskian of the K_lambda family extended by H_i. Requires i outside
/// K_lambda (inside, the rows are dependent and the determinant vanishes
/// identically). Degree |lambda| + i - length.
Poly h_lambda_i(const Partition& lam, int i);

/// Cached variants; population is serialized, reads are concurrent. The
/// returned references stay valid for the process lifetime.
const Poly& cached_h_lambda(const Partition& lam);
const Poly& cached_h_lambda_i(const Partition& lam, int i);

/// The extended Wronskian family of a partition, materialized up to a degree
/// ceiling. Element degrees |lambda| + i - length are pairwise distinct, so
/// the family is linearly independent.
struct ExceptionalBasis {
  Partition lam;
  std::map<int, Poly> elements;  // admissible index i -> H_{lambda,i}
};
ExceptionalBasis exceptional_basis(const Partition& lam, int max_degree);

/// The degrees NOT attained by the span of the extended Wronskians: exactly
/// {n < |lambda| - length} plus {k_j + |lambda| - length}, |lambda| in total.
struct DegreeSequence {
  Partition lam;
  std::vector<int> gaps;  // ascending
  bool is_gap(int n) const;
};
DegreeSequence degree_sequence(const Partition& lam);

/// First `count` admissible indices i (ascending, i outside K_lambda).
std::vector<int> admissible_indices(const Partition& lam, int count);

/// Exact membership decision for the span of the extended Wronskians, with a
/// certificate: either the unique coefficient vector over the basis, or the
/// gap degree whose coefficient obstructs membership. The triangular solve
/// exploits that basis degrees are pairwise distinct.
struct Membership {
  bool member = false;
  std::vector<std::pair<int, Rational>> coefficients;  // (index i, coefficient)
  std::optional<int> obstruction_degree;
};
Membership membership(const Partition& lam, const Poly& p);

nlohmann::json membership_json(const Partition& lam, const Poly& p, const Membership& m);

/// H_lambda^2 * p together with its exact expansion over the basis. The
/// product is always a member; a failed certificate indicates a bug and
/// raises std::logic_error.
struct EmbeddedProduct {
  Poly product;
  Membership certificate;
};
EmbeddedProduct eta_squared_embed(const Partition& lam, const Poly& p);

}  // namespace xhermite

#endif  // XHERMITE_HERMITE_HPP

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

#include "xhermite/scan.hpp"

#include <omp.h>

#include <algorithm>

#include <nlohmann/json.hpp>

namespace xhermite {

namespace {

ScanRow scan_one(const Partition& lam, const NumericContext& ctx) {
  ScanRow row;
  row.lam = lam;
  try {
    row.census = veselov_row(lam);
    int constraints = 0;
    row.dg_ok = true;
    for (const auto& profile : root_profiles(lam, ctx)) {
      constraints += static_cast<int>(profile.orders.size());
      const int order = profile.orders.back() + 2 * profile.nu + 6;
      const auto report = check_dg(laurent_potential(lam, profile, order, ctx), profile.nu, ctx.tol);
      row.worst_dg_residual = std::max(row.worst_dg_residual, report.worst_residual());
      row.dg_ok = row.dg_ok && report.all_pass;
    }
    row.constraint_count_ok = constraints == lam.sum();
    row.pass = row.census.all_triangular && row.dg_ok && row.constraint_count_ok;
  } catch (const std::exception& e) {
    row.error = e.what();
    row.pass = false;
  }
  return row;
}

}  // namespace

std::vector<ScanRow> scan_partitions(int max_size, PartitionFilter filter,
                                     const NumericContext& ctx, int jobs) {
  const auto partitions = enumerate_partitions(max_size, filter);
  std::vector<ScanRow> rows(partitions.size());
  if (jobs <= 0) jobs = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (size_t i = 0; i < partitions.size(); ++i) {
    set_working_digits(ctx.digits);
    rows[i] = scan_one(partitions[i], ctx);
  }
  return rows;
}

std::vector<ScanRow> scan_partitions_ref(int max_size, PartitionFilter filter,
                                         const NumericContext& ctx) {
  const auto partitions = enumerate_partitions(max_size, filter);
  std::vector<ScanRow> rows;
  rows.reserve(partitions.size());
  for (const auto& lam : partitions) rows.push_back(scan_one(lam, ctx));
  return rows;
}

nlohmann::json scan_row_json(const ScanRow& row) {
  return nlohmann::json{{"partition", row.lam.str()},
                        {"size", row.lam.sum()},
                        {"origin_multiplicity", row.census.origin_multiplicity},
                        {"has_multiple_root", row.census.has_multiple_root},
                        {"multiple_root_off_origin", row.census.multiple_root_off_origin},
                        {"worst_nu", row.census.worst_nu},
                        {"triangular", row.census.all_triangular},
                        {"dg_ok", row.dg_ok},
                        {"constraint_count_ok", row.constraint_count_ok},
                        {"worst_dg_residual", row.worst_dg_residual},
                        {"pass", row.pass},
                        {"error", row.error}};
}

}  // namespace xhermite

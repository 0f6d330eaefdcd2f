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

#ifndef XHERMITE_SCAN_HPP
#define XHERMITE_SCAN_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "xhermite/monodromy.hpp"
#include "xhermite/partitions.hpp"

namespace xhermite {

/// One partition's verification summary in a batch scan.
struct ScanRow {
  Partition lam;
  VeselovRow census;
  bool dg_ok = false;
  bool constraint_count_ok = false;
  double worst_dg_residual = 0.0;
  bool pass = false;
  std::string error;  // nonempty when a check raised instead of failing
};

/// Scans every partition up to max_size: exact multiple-root census,
/// triangularity, trivial-monodromy conditions at every root, and the
/// constraint-count identity. Partitions are independent, so the work is
/// distributed across OpenMP threads; rows come back in enumeration order
/// regardless of the thread count. jobs <= 0 uses the OpenMP default.
std::vector<ScanRow> scan_partitions(int max_size, PartitionFilter filter,
                                     const NumericContext& ctx, int jobs);

/// Serial reference implementation; must produce results identical to the
/// parallel scan.
std::vector<ScanRow> scan_partitions_ref(int max_size, PartitionFilter filter,
                                         const NumericContext& ctx);

nlohmann::json scan_row_json(const ScanRow& row);

}  // namespace xhermite

#endif  // XHERMITE_SCAN_HPP

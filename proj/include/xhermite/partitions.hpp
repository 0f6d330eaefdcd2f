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

#ifndef XHERMITE_PARTITIONS_HPP
#define XHERMITE_PARTITIONS_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xhermite {

/// Integer partition: a non-increasing sequence of positive parts. The empty
/// partition is valid. Unsorted or non-positive input is rejected rather than
/// silently repaired.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses comma-separated parts, e.g. "2,1"; "" is the empty partition.
  static Partition parse(std::string_view text);
  std::string str() const;

  int length() const { return static_cast<int>(parts_.size()); }
  int sum() const;  // |lambda|
  std::span<const int> parts() const { return parts_; }
  int part(int i) const { return parts_[i]; }  // 0-based

  /// True iff the length is even and parts pair up equally
  /// (parts[0]==parts[1], parts[2]==parts[3], ...).
  bool is_even() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Strictly decreasing positive integers; the image of a partition under
/// k_i = lambda_i + l - i.
class KSet {
 public:
  KSet() = default;
  explicit KSet(std::vector<int> ks);

  std::span<const int> values() const { return ks_; }  // descending
  int size() const { return static_cast<int>(ks_.size()); }
  bool contains(int k) const;

  auto operator<=>(const KSet&) const = default;

 private:
  std::vector<int> ks_;
};

KSet k_sequence(const Partition& lam);
Partition inverse_k(const KSet& ks);

enum class PartitionFilter { All, Even };

/// All partitions with 1 <= |lambda| <= max_size, ordered by size, then
/// reverse-lexicographically within each size ((3) before (2,1) before
/// (1,1,1)).
std::vector<Partition> enumerate_partitions(int max_size, PartitionFilter filter = PartitionFilter::All);

}  // namespace xhermite

#endif  // XHERMITE_PARTITIONS_HPP

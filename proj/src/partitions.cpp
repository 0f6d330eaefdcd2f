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

#include "xhermite/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace xhermite {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be non-increasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    size_t end = pos;
    while (end < text.size() && text[end] != ',') ++end;
    std::string token(text.substr(pos, end - pos));
    while (!token.empty() && token.back() == ' ') token.pop_back();
    if (token.empty()) throw std::invalid_argument("Partition::parse: empty part");
    size_t used = 0;
    int value;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("Partition::parse: invalid part '" + token + "'");
    }
    if (used != token.size())
      throw std::invalid_argument("Partition::parse: invalid part '" + token + "'");
    parts.push_back(value);
    pos = end < text.size() ? end + 1 : end;
    if (end < text.size() && end + 1 == text.size())
      throw std::invalid_argument("Partition::parse: trailing comma");
  }
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_even() const {
  if (parts_.size() % 2 != 0) return false;
  for (size_t i = 0; i + 1 < parts_.size(); i += 2) {
    if (parts_[i] != parts_[i + 1]) return false;
  }
  return true;
}

KSet::KSet(std::vector<int> ks) : ks_(std::move(ks)) {
  for (size_t i = 0; i < ks_.size(); ++i) {
    if (ks_[i] <= 0) throw std::invalid_argument("KSet: entries must be positive");
    if (i > 0 && ks_[i] >= ks_[i - 1]) throw std::invalid_argument("KSet: entries must strictly decrease");
  }
}

bool KSet::contains(int k) const {
  for (int v : ks_) {
    if (v == k) return true;
    if (v < k) return false;
  }
  return false;
}

KSet k_sequence(const Partition& lam) {
  const int l = lam.length();
  std::vector<int> ks(l);
  for (int i = 0; i < l; ++i) ks[i] = lam.part(i) + l - (i + 1);
  return KSet(std::move(ks));
}

Partition inverse_k(const KSet& ks) {
  const int l = ks.size();
  std::vector<int> parts(l);
  for (int i = 0; i < l; ++i) parts[i] = ks.values()[i] - l + (i + 1);
  return Partition(std::move(parts));
}

namespace {

void partitions_of(int n, int max_part, std::vector<int>& prefix, std::vector<Partition>& out,
                   PartitionFilter filter) {
  if (n == 0) {
    Partition lam(prefix);
    if (filter == PartitionFilter::All || lam.is_even()) out.push_back(std::move(lam));
    return;
  }
  for (int first = std::min(n, max_part); first >= 1; --first) {
    prefix.push_back(first);
    partitions_of(n - first, first, prefix, out, filter);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int max_size, PartitionFilter filter) {
  if (max_size < 1) throw std::invalid_argument("enumerate_partitions: max_size must be >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  for (int n = 1; n <= max_size; ++n) partitions_of(n, n, prefix, out, filter);
  return out;
}

}  // namespace xhermite

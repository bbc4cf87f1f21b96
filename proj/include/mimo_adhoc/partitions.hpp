// SPDX-License-Identifier: Apache-2.0
//
// mimo-adhoc: outage and transmission capacity of MIMO-MMSE ad hoc networks
// Copyright (C) 2026 The mimo-adhoc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Integer partitions and their multiplicity profiles.
//
// Partitions of k are indexed j = 1, 2, ... in descending lexicographic
// order of their (non-increasing) summand lists, so for k = 4:
//
//   j=1: 4   j=2: 3+1   j=3: 2+2   j=4: 2+1+1   j=5: 1+1+1+1
//
// summand(i, j, k) is the i-th summand of partition j, and the multiplicity
// profile lists each distinct summand once with its repeat count.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace mimo_adhoc {

/// Largest k accepted by the enumeration routines.
inline constexpr int kMaxPartitionedInteger = 64;

class Partition {
public:
    Partition() = default;

    /// Throws DomainError unless `summands` is non-increasing and strictly positive.
    explicit Partition(std::vector<int> summands);

    const std::vector<int>& summands() const noexcept { return summands_; }
    std::size_t length() const noexcept { return summands_.size(); }
    bool empty() const noexcept { return summands_.empty(); }

    /// Sum of the summands, i.e. the partitioned integer.
    int total() const noexcept;

    /// 1-based summand access; throws std::out_of_range.
    int summand(std::size_t i) const { return summands_.at(i - 1); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> summands_;
};

struct MultiplicityEntry {
    int summand;
    int multiplicity;

    friend bool operator==(const MultiplicityEntry&, const MultiplicityEntry&) = default;
};

class MultiplicityProfile {
public:
    MultiplicityProfile() = default;
    explicit MultiplicityProfile(std::vector<MultiplicityEntry> entries);

    const std::vector<MultiplicityEntry>& entries() const noexcept { return entries_; }
    std::size_t distinct() const noexcept { return entries_.size(); }

    /// 1-based multiplicity of the i-th distinct summand; throws std::out_of_range.
    int multiplicity(std::size_t i) const { return entries_.at(i - 1).multiplicity; }

    /// Expands every entry `multiplicity` times.
    Partition expand() const;

    friend bool operator==(const MultiplicityProfile&, const MultiplicityProfile&) = default;

private:
    std::vector<MultiplicityEntry> entries_;
};

/// All partitions of k, descending lexicographic. k = 0 yields one empty partition.
/// Throws DomainError for k < 0 or k > kMaxPartitionedInteger.
std::vector<Partition> enumerate_partitions(int k);

/// Cached view of enumerate_partitions(k); safe to call concurrently.
const std::vector<Partition>& partitions_of(int k);

MultiplicityProfile multiplicity_profile(const Partition& p);

/// Partitions of p with exactly `length` summands, in enumeration order.
std::vector<Partition> partitions_with_length(int p, int length);

std::size_t partition_count(int k);

// Index-style accessors, all 1-based.

/// h(i, j, k): i-th summand of the j-th partition of k.
int summand(int i, int j, int k);
/// |h(., j, k)|: number of summands of the j-th partition of k.
int summand_count(int j, int k);
/// g(i, j, k): repeat count of the i-th distinct summand of the j-th partition of k.
int repeat_count(int i, int j, int k);
/// |g(., j, k)|: number of distinct summands of the j-th partition of k.
int distinct_count(int j, int k);

}  // namespace mimo_adhoc

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

#include "mimo_adhoc/partitions.hpp"

#include "mimo_adhoc/errors.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mimo_adhoc {

namespace {

void check_k(int k)
{
    if (k < 0 || k > kMaxPartitionedInteger)
        throw DomainError("partitioned integer must lie in [0, " +
                          std::to_string(kMaxPartitionedInteger) + "], got " + std::to_string(k));
}

// Depth-first, largest part first: emits partitions in descending lexicographic order.
void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        enumerate_into(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Partition::Partition(std::vector<int> summands) : summands_(std::move(summands))
{
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        if (summands_[i] <= 0)
            throw DomainError("partition summands must be positive");
        if (i > 0 && summands_[i] > summands_[i - 1])
            throw DomainError("partition summands must be non-increasing");
    }
}

int Partition::total() const noexcept
{
    return std::accumulate(summands_.begin(), summands_.end(), 0);
}

MultiplicityProfile::MultiplicityProfile(std::vector<MultiplicityEntry> entries)
    : entries_(std::move(entries))
{
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].summand <= 0 || entries_[i].multiplicity <= 0)
            throw DomainError("multiplicity entries must be positive");
        if (i > 0 && entries_[i].summand >= entries_[i - 1].summand)
            throw DomainError("multiplicity summands must be strictly decreasing");
    }
}

Partition MultiplicityProfile::expand() const
{
    std::vector<int> summands;
    for (const auto& e : entries_)
        summands.insert(summands.end(), static_cast<std::size_t>(e.multiplicity), e.summand);
    return Partition(std::move(summands));
}

std::vector<Partition> enumerate_partitions(int k)
{
    check_k(k);
    std::vector<Partition> out;
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(k));
    enumerate_into(k, k, prefix, out);
    return out;
}

const std::vector<Partition>& partitions_of(int k)
{
    check_k(k);
    static std::mutex mutex;
    static std::array<std::unique_ptr<const std::vector<Partition>>, kMaxPartitionedInteger + 1>
        cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[static_cast<std::size_t>(k)];
    if (!slot)
        slot = std::make_unique<const std::vector<Partition>>(enumerate_partitions(k));
    return *slot;
}

MultiplicityProfile multiplicity_profile(const Partition& p)
{
    std::vector<MultiplicityEntry> entries;
    for (int s : p.summands()) {
        if (!entries.empty() && entries.back().summand == s)
            ++entries.back().multiplicity;
        else
            entries.push_back({s, 1});
    }
    return MultiplicityProfile(std::move(entries));
}

std::vector<Partition> partitions_with_length(int p, int length)
{
    if (length < 1)
        throw DomainError("partition length must be positive");
    std::vector<Partition> out;
    for (const auto& part : partitions_of(p))
        if (part.length() == static_cast<std::size_t>(length))
            out.push_back(part);
    return out;
}

std::size_t partition_count(int k) { return partitions_of(k).size(); }

namespace {

const Partition& partition_at(int j, int k)
{
    const auto& all = partitions_of(k);
    if (j < 1 || static_cast<std::size_t>(j) > all.size())
        throw std::out_of_range("partition index " + std::to_string(j) + " out of range for k=" +
                                std::to_string(k));
    return all[static_cast<std::size_t>(j - 1)];
}

}  // namespace

int summand(int i, int j, int k)
{
    if (i < 1)
        throw std::out_of_range("summand index must be positive");
    return partition_at(j, k).summand(static_cast<std::size_t>(i));
}

int summand_count(int j, int k) { return static_cast<int>(partition_at(j, k).length()); }

int repeat_count(int i, int j, int k)
{
    if (i < 1)
        throw std::out_of_range("summand index must be positive");
    return multiplicity_profile(partition_at(j, k)).multiplicity(static_cast<std::size_t>(i));
}

int distinct_count(int j, int k)
{
    return static_cast<int>(multiplicity_profile(partition_at(j, k)).distinct());
}

}  // namespace mimo_adhoc

// Copyright 2026 The hsphash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hsphash/hash.h"
#include "hsphash/rng.h"
#include "hsphash/sampler.h"
#include "hsphash/subgroup.h"

namespace hsphash {

struct AttackConfig {
    /// nullopt selects a backend from the instance size.
    std::optional<Backend> backend;
    std::uint64_t seed = 0;
    /// Consecutive samples that do not grow the generated subgroup before solving.
    std::size_t patience = 5;
    std::size_t max_samples = 1000;
    std::size_t collision_limit = 8;
    /// Stop at the first non-identity kernel element instead of the full kernel.
    bool early_exit = false;
    /// When set, collisions are flagged valid iff every component is < 2^block_bits.
    std::optional<unsigned> block_bits;
    SamplerLimits limits;

    /// Throws ParameterError unless patience >= 1, max_samples >= patience
    /// and collision_limit >= 1.
    void validate() const;

    bool operator==(const AttackConfig &) const = default;
};

enum class AttackStatus { kVerified, kTrivialKernel, kSampleBudgetExhausted, kVerificationFailed };

std::string_view status_tag(AttackStatus status);
AttackStatus parse_status(std::string_view tag);

struct ForgedPair {
    GroupElement x;
    GroupElement x_prime;
    std::optional<bool> valid_block;

    bool operator==(const ForgedPair &) const = default;
};

struct AttackReport {
    Backend backend = Backend::kStatevector;
    SubgroupBasis kernel_basis;
    std::uint64_t kernel_order = 1;
    std::size_t samples_used = 0;
    std::vector<SampleTrace> sample_traces;
    std::vector<ForgedPair> forged_pairs;
    AttackStatus status = AttackStatus::kSampleBudgetExhausted;
    bool verified = false;
    std::string message;
    double wall_time_seconds = 0.0;
};

/// Samples K^perp until the generated subgroup saturates, solves for the
/// kernel, checks every kernel generator against the hash, forges collisions
/// for a random input and re-verifies them. A candidate kernel always
/// contains K, so sampling resumes whenever a generator fails the hash check.
AttackReport run_attack(const HomomorphicHash &h, const AttackConfig &cfg);

/// x + y for a uniformly drawn non-identity y in the kernel. Throws
/// NoCollisionError for a trivial kernel.
GroupElement forge_second_preimage(const GroupElement &x, const SubgroupBasis &kernel, Rng &rng);

struct Collision {
    GroupElement element;
    std::optional<bool> valid_block;

    bool operator==(const Collision &) const = default;
};

/// Up to `limit` distinct x + y with y a non-identity kernel element.
std::vector<Collision> enumerate_collisions(const GroupElement &x, const SubgroupBasis &kernel, std::size_t limit,
                                            std::optional<unsigned> block_bits = std::nullopt);

/// Uniform element of the subgroup generated by `basis`.
GroupElement random_subgroup_element(const SubgroupBasis &basis, Rng &rng);

}  // namespace hsphash

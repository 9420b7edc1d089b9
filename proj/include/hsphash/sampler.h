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

#include <functional>
#include <optional>
#include <string_view>

#include "hsphash/hash.h"
#include "hsphash/rng.h"
#include "hsphash/state_vector.h"

namespace hsphash {

enum class Backend { kStatevector, kCosetSampler };

std::string_view backend_tag(Backend backend);
/// "statevector", "coset" or "coset_sampler".
Backend parse_backend(std::string_view tag);

struct SamplerLimits {
    std::uint64_t state_bound = kDefaultStateBound;
    std::uint64_t enumeration_bound = kDefaultEnumerationBound;

    bool operator==(const SamplerLimits &) const = default;
};

/// Statevector when the two-register state fits the bound, coset sampler otherwise.
Backend choose_backend(const HomomorphicHash &h, const SamplerLimits &limits = {});

/// One run of the quantum pipeline.
struct SampleTrace {
    GroupElement measured_hash_value;  // outcome of the second-register measurement
    GroupElement orthogonal_sample;    // element of K^perp from the first register
    Backend backend = Backend::kStatevector;

    bool operator==(const SampleTrace &) const = default;
};

/// Receives intermediate states, tagged by pipeline stage, for debugging dumps.
using StateObserver = std::function<void(std::string_view stage, const StateVector &state)>;

/// Draws elements of K^perp for one hash instance.
///
/// The statevector backend runs the full circuit: uniform superposition,
/// hash oracle, second-register measurement, QFT and first-register
/// measurement. The oracle state is identical for every run and is built
/// once. The coset backend picks a uniform input x, collects its preimage
/// coset x + K by exhaustive evaluation, and applies the QFT to that coset
/// superposition only; it produces the same output distribution.
class OrthogonalSampler {
   public:
    OrthogonalSampler(HomomorphicHash h, Backend backend, SamplerLimits limits = {});

    SampleTrace sample(Rng &rng, const StateObserver &observer = {});

    const HomomorphicHash &hash() const noexcept { return hash_; }
    Backend backend() const noexcept { return backend_; }

   private:
    SampleTrace sample_statevector(Rng &rng, const StateObserver &observer);
    SampleTrace sample_coset(Rng &rng, const StateObserver &observer);

    HomomorphicHash hash_;
    Backend backend_;
    SamplerLimits limits_;
    std::optional<StateVector> oracle_state_;
    // Flat output index of H(x) for every flat input index x.
    std::vector<std::uint64_t> image_;
};

/// Single draw; builds a fresh sampler each call.
SampleTrace sample_orthogonal(const HomomorphicHash &h, Backend backend, Rng &rng, const SamplerLimits &limits = {},
                              const StateObserver &observer = {});

}  // namespace hsphash

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

#include "hsphash/sampler.h"

#include <cmath>

#include "hsphash/errors.h"
#include "hsphash/number_theory.h"

namespace hsphash {

std::string_view backend_tag(Backend backend) {
    return backend == Backend::kStatevector ? "statevector" : "coset_sampler";
}

Backend parse_backend(std::string_view tag) {
    if (tag == "statevector") {
        return Backend::kStatevector;
    }
    if (tag == "coset" || tag == "coset_sampler" || tag == "coset-sampler") {
        return Backend::kCosetSampler;
    }
    throw ParameterError("unknown backend '" + std::string(tag) + "'");
}

Backend choose_backend(const HomomorphicHash &h, const SamplerLimits &limits) {
    std::uint64_t size;
    if (__builtin_mul_overflow(h.input_group().total_order(), h.output_group().total_order(), &size)) {
        return Backend::kCosetSampler;
    }
    return size <= limits.state_bound ? Backend::kStatevector : Backend::kCosetSampler;
}

OrthogonalSampler::OrthogonalSampler(HomomorphicHash h, Backend backend, SamplerLimits limits)
    : hash_(std::move(h)), backend_(backend), limits_(limits) {
    const GroupSpec &in = hash_.input_group();
    if (backend_ == Backend::kStatevector) {
        oracle_state_ = apply_hash_oracle(uniform_superposition(in, limits_.state_bound), hash_, limits_.state_bound);
    } else {
        if (in.total_order() > limits_.enumeration_bound) {
            throw ResourceError("coset sampler: |G_in| = " + std::to_string(in.total_order()) +
                                " exceeds enumeration bound");
        }
        if (in.total_order() > limits_.state_bound) {
            throw ResourceError("coset sampler: coset state over |G_in| = " + std::to_string(in.total_order()) +
                                " exceeds statevector bound");
        }
        image_.resize(in.total_order());
        for (std::uint64_t i = 0; i < in.total_order(); ++i) {
            image_[i] = hash_.output_group().flat_index(hash_(in.element_at(i)));
        }
    }
}

SampleTrace OrthogonalSampler::sample(Rng &rng, const StateObserver &observer) {
    return backend_ == Backend::kStatevector ? sample_statevector(rng, observer) : sample_coset(rng, observer);
}

SampleTrace OrthogonalSampler::sample_statevector(Rng &rng, const StateObserver &observer) {
    if (observer) {
        observer("oracle", *oracle_state_);
    }
    auto second = measure_register(*oracle_state_, 1, rng);
    if (observer) {
        observer("coset", second.collapsed);
    }
    auto fourier = qft_group(second.collapsed);
    if (observer) {
        observer("fourier", fourier);
    }
    auto first = measure_register(fourier, 0, rng);
    return {std::move(second.outcome), std::move(first.outcome), Backend::kStatevector};
}

SampleTrace OrthogonalSampler::sample_coset(Rng &rng, const StateObserver &observer) {
    const GroupSpec &in = hash_.input_group();
    const std::uint64_t x = rng.uniform_below(in.total_order());
    const std::uint64_t target = image_[x];

    std::vector<std::uint64_t> coset;
    for (std::uint64_t i = 0; i < image_.size(); ++i) {
        if (image_[i] == target) {
            coset.push_back(i);
        }
    }
    std::vector<Amplitude> amps(in.total_order());
    const double a = 1.0 / std::sqrt(static_cast<double>(coset.size()));
    for (auto i : coset) {
        amps[i] = a;
    }
    StateVector state({in}, std::move(amps));
    if (observer) {
        observer("coset", state);
    }
    auto fourier = qft_group(state);
    if (observer) {
        observer("fourier", fourier);
    }
    auto first = measure_register(fourier, 0, rng);
    return {hash_.output_group().element_at(target), std::move(first.outcome), Backend::kCosetSampler};
}

SampleTrace sample_orthogonal(const HomomorphicHash &h, Backend backend, Rng &rng, const SamplerLimits &limits,
                              const StateObserver &observer) {
    OrthogonalSampler sampler(h, backend, limits);
    return sampler.sample(rng, observer);
}

}  // namespace hsphash

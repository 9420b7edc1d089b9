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

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "hsphash/group.h"
#include "hsphash/hash.h"
#include "hsphash/rng.h"

namespace hsphash {

/// Statevector simulation refuses more amplitudes than this by default.
inline constexpr std::uint64_t kDefaultStateBound = std::uint64_t{1} << 20;

using Amplitude = std::complex<double>;

/// Exact amplitudes over a product of registers, each register a finite
/// abelian group. Basis states are flattened mixed-radix with the last
/// factor of the last register varying fastest.
class StateVector {
   public:
    StateVector(std::vector<GroupSpec> registers, std::vector<Amplitude> amplitudes);

    /// |g> on a single register.
    static StateVector basis_state(const GroupSpec &spec, const GroupElement &g,
                                   std::uint64_t bound = kDefaultStateBound);

    const std::vector<GroupSpec> &registers() const noexcept { return registers_; }
    /// The product of all registers.
    const GroupSpec &group() const noexcept { return group_; }
    const std::vector<Amplitude> &amplitudes() const noexcept { return amps_; }
    std::vector<Amplitude> &amplitudes() noexcept { return amps_; }

    Amplitude amplitude(const GroupElement &combined) const { return amps_[group_.flat_index(combined)]; }
    double norm() const;

   private:
    std::vector<GroupSpec> registers_;
    GroupSpec group_;
    std::vector<Amplitude> amps_;
};

/// Uniform superposition over every element of spec.
StateVector uniform_superposition(const GroupSpec &spec, std::uint64_t bound = kDefaultStateBound);

/// |x>|0> -> |x>|H(x)> applied to a single-register state over H's input group.
StateVector apply_hash_oracle(const StateVector &state, const HomomorphicHash &h,
                              std::uint64_t bound = kDefaultStateBound);

struct MeasurementResult {
    GroupElement outcome;
    /// Renormalised state over the remaining registers.
    StateVector collapsed;
};

/// Born-rule measurement of register `which`.
MeasurementResult measure_register(const StateVector &state, std::size_t which, Rng &rng);

/// QFT over a single-register state:
/// amplitude'(h) = |G|^{-1/2} sum_g chi_h(g) amplitude(g), applied factor by factor.
StateVector qft_group(const StateVector &state);

/// Max |a_i - b_i| after removing the global phase of b relative to a.
double distance_up_to_phase(const StateVector &a, const StateVector &b);

/// One line per basis element: residue tuple, real part, imaginary part.
void write_state_text(std::ostream &out, const StateVector &state, double threshold = 0.0);

}  // namespace hsphash

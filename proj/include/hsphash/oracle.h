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

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hsphash/hash.h"
#include "hsphash/sampler.h"

namespace hsphash {

/// Ground truth obtained by evaluating the hash on every input.
struct BruteForceResult {
    std::set<GroupElement> kernel_elements;
    std::set<GroupElement> orthogonal_elements;
    /// Output value -> every preimage; filled only on request.
    std::optional<std::map<GroupElement, std::vector<GroupElement>>> preimage_index;
};

BruteForceResult kernel_bruteforce(const HomomorphicHash &h, bool with_preimages = false,
                                   std::uint64_t bound = kDefaultEnumerationBound);

/// {g : chi_g(s) = 1 for every s in subset}, by exact character tests over all of G.
std::set<GroupElement> orthogonal_bruteforce(const GroupSpec &spec, const std::set<GroupElement> &subset,
                                             std::uint64_t bound = kDefaultEnumerationBound);

/// Upper tail of the chi-square distribution.
double chi_square_survival(double statistic, double dof);

struct AuditVerdict {
    std::size_t draws = 0;
    std::size_t cells = 0;           // |K^perp|
    std::size_t out_of_support = 0;  // draws outside K^perp
    double chi_square = 0.0;
    double dof = 0.0;
    double p_value = 1.0;
    double significance = 0.001;
    bool passed = false;
};

using SampleSource = std::function<GroupElement(Rng &)>;

/// Goodness of fit of `source` against the uniform law on `support`.
/// Requires draws >= 50 * |support|.
AuditVerdict audit_samples(const std::set<GroupElement> &support, const SampleSource &source, std::size_t draws,
                           Rng &rng, double significance = 0.001);

/// Audits the chosen backend against the brute-forced K^perp.
AuditVerdict distribution_audit(const HomomorphicHash &h, Backend backend, std::size_t draws, Rng &rng,
                                double significance = 0.001, const SamplerLimits &limits = {});

struct HomogeneityVerdict {
    double chi_square = 0.0;
    double dof = 0.0;
    double p_value = 1.0;
    bool passed = false;
};

/// Two-sample chi-square test that both sample lists come from one distribution.
HomogeneityVerdict two_sample_equivalence(const std::vector<GroupElement> &a, const std::vector<GroupElement> &b,
                                          double significance = 0.001);

}  // namespace hsphash

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
#include <set>
#include <vector>

#include "hsphash/group.h"
#include "hsphash/linear_algebra.h"

namespace hsphash {

/// A subgroup given by generators inside its ambient group.
struct SubgroupBasis {
    GroupSpec group;
    std::vector<GroupElement> generators;

    SubgroupBasis() = default;
    SubgroupBasis(GroupSpec g, std::vector<GroupElement> gens);

    static SubgroupBasis whole(const GroupSpec &g);
    static SubgroupBasis trivial(const GroupSpec &g);

    /// True when every generator is the identity.
    bool is_trivial() const;
};

/// Closure of the generators under addition, in discovery order starting at
/// the identity. Throws ResourceError past `bound` elements.
std::vector<GroupElement> subgroup_elements(const SubgroupBasis &basis,
                                            std::uint64_t bound = kDefaultEnumerationBound);

/// The first `count` elements of the closure in discovery order; never throws
/// for large subgroups.
std::vector<GroupElement> subgroup_prefix(const SubgroupBasis &basis, std::size_t count);

/// Same closure as an ordered set.
std::set<GroupElement> subgroup_enumerate(const SubgroupBasis &basis,
                                          std::uint64_t bound = kDefaultEnumerationBound);

/// |<generators>| computed from the Smith form of the relation lattice, no enumeration.
std::uint64_t subgroup_order(const SubgroupBasis &basis);

/// Generators of H^perp = {g : chi_g(h) = 1 for all h in H}, solved as an
/// integer congruence system through the Smith normal form.
SubgroupBasis orthogonal_subgroup(const SubgroupBasis &basis);

/// Generators of the elements orthogonal to every sample. Uses elimination
/// over F_p when the group is Z_p^k, otherwise the Smith-form solver.
SubgroupBasis solve_kernel_from_orthogonal_samples(const std::vector<GroupElement> &samples,
                                                   const GroupSpec &spec);

/// Incrementally tracks the subgroup generated by a growing sample list.
class SubgroupTracker {
   public:
    explicit SubgroupTracker(GroupSpec spec);

    /// Adds a sample; returns true when the generated subgroup grew.
    bool insert(const GroupElement &sample);
    /// Size of the generated subgroup.
    std::uint64_t order() const noexcept { return order_; }
    /// Field rank when the group is Z_p^k.
    std::optional<std::size_t> field_rank() const;
    const std::vector<GroupElement> &generators() const noexcept { return generators_; }
    const GroupSpec &group() const noexcept { return spec_; }

   private:
    GroupSpec spec_;
    std::vector<GroupElement> generators_;
    std::uint64_t order_ = 1;
    std::optional<FpEchelon> echelon_;
};

/// Result of the saturation stopping rule.
struct SaturationStatus {
    std::uint64_t measure = 1;  // order of the generated subgroup
    std::optional<std::size_t> field_rank;
    bool saturated = false;
};

/// Saturated when the last `patience` samples did not grow the generated subgroup.
SaturationStatus saturation_check(const std::vector<GroupElement> &samples, const GroupSpec &spec,
                                  std::size_t patience);

}  // namespace hsphash

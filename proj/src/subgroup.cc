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

#include "hsphash/subgroup.h"

#include <algorithm>
#include <unordered_set>

#include "hsphash/errors.h"
#include "hsphash/number_theory.h"

namespace hsphash {

SubgroupBasis::SubgroupBasis(GroupSpec g, std::vector<GroupElement> gens)
    : group(std::move(g)), generators(std::move(gens)) {
    for (const auto &e : generators) {
        group.require(e, "generator");
    }
}

SubgroupBasis SubgroupBasis::whole(const GroupSpec &g) {
    std::vector<GroupElement> gens;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        gens.push_back(g.basis(j));
    }
    return {g, std::move(gens)};
}

SubgroupBasis SubgroupBasis::trivial(const GroupSpec &g) { return {g, {}}; }

bool SubgroupBasis::is_trivial() const {
    auto id = group.identity();
    return std::all_of(generators.begin(), generators.end(), [&](const GroupElement &e) { return e == id; });
}

namespace {

// Closure of the generators as flat indices. Stops after `cap` elements,
// throwing when `strict` is set.
std::vector<std::uint64_t> closure(const SubgroupBasis &basis, std::uint64_t cap, bool strict) {
    const GroupSpec &g = basis.group;
    std::vector<std::uint64_t> members{g.flat_index(g.identity())};
    std::unordered_set<std::uint64_t> seen(members.begin(), members.end());

    for (const auto &gen : basis.generators) {
        if (seen.count(g.flat_index(gen))) {
            continue;
        }
        // S is a subgroup, so S + c*gen is a new coset until c*gen lands in S.
        const std::size_t base = members.size();
        GroupElement step = gen;
        while (!seen.count(g.flat_index(step))) {
            for (std::size_t i = 0; i < base; ++i) {
                if (members.size() >= cap) {
                    if (strict) {
                        throw ResourceError("subgroup closure exceeds enumeration bound " + std::to_string(cap));
                    }
                    return members;
                }
                auto idx = g.flat_index(g.add(g.element_at(members[i]), step));
                members.push_back(idx);
                seen.insert(idx);
            }
            step = g.add(step, gen);
        }
    }
    return members;
}

std::vector<GroupElement> decode(const GroupSpec &g, const std::vector<std::uint64_t> &indices) {
    std::vector<GroupElement> out;
    out.reserve(indices.size());
    for (auto idx : indices) {
        out.push_back(g.element_at(idx));
    }
    return out;
}

}  // namespace

std::vector<GroupElement> subgroup_elements(const SubgroupBasis &basis, std::uint64_t bound) {
    return decode(basis.group, closure(basis, bound, true));
}

std::vector<GroupElement> subgroup_prefix(const SubgroupBasis &basis, std::size_t count) {
    if (count == 0) {
        return {};
    }
    return decode(basis.group, closure(basis, count, false));
}

std::set<GroupElement> subgroup_enumerate(const SubgroupBasis &basis, std::uint64_t bound) {
    auto elems = subgroup_elements(basis, bound);
    return {elems.begin(), elems.end()};
}

std::uint64_t subgroup_order(const SubgroupBasis &basis) {
    const GroupSpec &g = basis.group;
    if (g.rank() == 0 || basis.generators.empty()) {
        return 1;
    }
    // Embed G in (Z_L)^k by x_j -> (L/N_j) x_j and count the row module.
    const std::uint64_t l = g.exponent();
    ModMatrix m(basis.generators.size(), g.rank(), l);
    for (std::size_t i = 0; i < basis.generators.size(); ++i) {
        for (std::size_t j = 0; j < g.rank(); ++j) {
            m.set(i, j, mul_mod(basis.generators[i][j], l / g.orders()[j], l));
        }
    }
    return row_module_order(m);
}

namespace {

// Drops identities and duplicates, keeping first-seen order.
std::vector<GroupElement> prune(const GroupSpec &g, std::vector<GroupElement> gens) {
    std::vector<GroupElement> out;
    std::set<GroupElement> seen;
    auto id = g.identity();
    for (auto &e : gens) {
        if (e != id && seen.insert(e).second) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

}  // namespace

SubgroupBasis orthogonal_subgroup(const SubgroupBasis &basis) {
    const GroupSpec &g = basis.group;
    const std::size_t k = g.rank();
    const std::size_t r = basis.generators.size();
    if (r == 0 || basis.is_trivial()) {
        return SubgroupBasis::whole(g);
    }
    const std::uint64_t l = g.exponent();
    // sum_j (L/N_j) h_ij x_j = 0 over Z_L; x_j mod N_j is well defined on solutions.
    ModMatrix m(r, k, l);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            m.set(i, j, mul_mod(basis.generators[i][j], l / g.orders()[j], l));
        }
    }
    std::vector<GroupElement> gens;
    for (const auto &x : modular_kernel(m)) {
        GroupElement e;
        for (std::size_t j = 0; j < k; ++j) {
            e.residues.push_back(x[j] % g.orders()[j]);
        }
        gens.push_back(std::move(e));
    }
    return {g, prune(g, std::move(gens))};
}

SubgroupBasis solve_kernel_from_orthogonal_samples(const std::vector<GroupElement> &samples, const GroupSpec &spec) {
    for (const auto &s : samples) {
        spec.require(s, "sample");
    }
    if (samples.empty()) {
        return SubgroupBasis::whole(spec);
    }
    if (std::uint64_t p = spec.homogeneous_prime(); p != 0) {
        FpEchelon echelon(p, spec.rank());
        for (const auto &s : samples) {
            echelon.insert(s.residues);
        }
        std::vector<GroupElement> gens;
        for (auto &y : echelon.nullspace()) {
            gens.emplace_back(std::move(y));
        }
        return {spec, std::move(gens)};
    }
    return orthogonal_subgroup(SubgroupBasis(spec, samples));
}

SubgroupTracker::SubgroupTracker(GroupSpec spec) : spec_(std::move(spec)) {
    if (spec_.homogeneous_prime() != 0) {
        echelon_.emplace(spec_.homogeneous_prime(), spec_.rank());
    }
}

bool SubgroupTracker::insert(const GroupElement &sample) {
    spec_.require(sample, "sample");
    if (echelon_) {
        if (!echelon_->insert(sample.residues)) {
            return false;
        }
        generators_.push_back(sample);
        order_ = checked_mul(order_, echelon_->modulus());
        return true;
    }
    generators_.push_back(sample);
    std::uint64_t grown = subgroup_order(SubgroupBasis(spec_, generators_));
    if (grown == order_) {
        generators_.pop_back();
        return false;
    }
    order_ = grown;
    return true;
}

std::optional<std::size_t> SubgroupTracker::field_rank() const {
    if (echelon_) {
        return echelon_->rank();
    }
    return std::nullopt;
}

SaturationStatus saturation_check(const std::vector<GroupElement> &samples, const GroupSpec &spec,
                                  std::size_t patience) {
    SubgroupTracker tracker(spec);
    std::size_t idle = 0;
    for (const auto &s : samples) {
        idle = tracker.insert(s) ? 0 : idle + 1;
    }
    return {tracker.order(), tracker.field_rank(), patience > 0 && idle >= patience};
}

}  // namespace hsphash

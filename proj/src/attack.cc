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

#include "hsphash/attack.h"

#include <algorithm>
#include <chrono>

#include "hsphash/errors.h"

namespace hsphash {
namespace {

bool all_in_kernel(const HomomorphicHash &h, const SubgroupBasis &basis) {
    const auto zero = h.output_group().identity();
    return std::all_of(basis.generators.begin(), basis.generators.end(),
                       [&](const GroupElement &y) { return h(y) == zero; });
}

bool valid_block(const GroupElement &e, unsigned bits) {
    const std::uint64_t limit = bits >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits);
    return std::all_of(e.residues.begin(), e.residues.end(), [&](std::uint64_t r) { return r < limit; });
}

}  // namespace

void AttackConfig::validate() const {
    if (patience < 1) {
        throw ParameterError("patience must be at least 1");
    }
    if (max_samples < patience) {
        throw ParameterError("max_samples must be at least patience");
    }
    if (collision_limit < 1) {
        throw ParameterError("collision_limit must be at least 1");
    }
}

std::string_view status_tag(AttackStatus status) {
    switch (status) {
        case AttackStatus::kVerified:
            return "verified";
        case AttackStatus::kTrivialKernel:
            return "trivial_kernel";
        case AttackStatus::kSampleBudgetExhausted:
            return "sample_budget_exhausted";
        case AttackStatus::kVerificationFailed:
            return "verification_failed";
    }
    return "unknown";
}

AttackStatus parse_status(std::string_view tag) {
    for (auto s : {AttackStatus::kVerified, AttackStatus::kTrivialKernel, AttackStatus::kSampleBudgetExhausted,
                   AttackStatus::kVerificationFailed}) {
        if (status_tag(s) == tag) {
            return s;
        }
    }
    throw ParameterError("unknown attack status '" + std::string(tag) + "'");
}

GroupElement random_subgroup_element(const SubgroupBasis &basis, Rng &rng) {
    const GroupSpec &g = basis.group;
    // (c_i) -> sum c_i g_i is a surjective homomorphism from prod Z_{ord g_i},
    // so uniform coefficients give a uniform subgroup element.
    GroupElement acc = g.identity();
    for (const auto &gen : basis.generators) {
        acc = g.add(acc, g.scale(rng.uniform_below(g.element_order(gen)), gen));
    }
    return acc;
}

GroupElement forge_second_preimage(const GroupElement &x, const SubgroupBasis &kernel, Rng &rng) {
    const GroupSpec &g = kernel.group;
    g.require(x, "input");
    if (kernel.is_trivial()) {
        throw NoCollisionError("kernel is trivial: no second preimage exists");
    }
    const auto id = g.identity();
    for (;;) {
        GroupElement y = random_subgroup_element(kernel, rng);
        if (y != id) {
            return g.add(x, y);
        }
    }
}

std::vector<Collision> enumerate_collisions(const GroupElement &x, const SubgroupBasis &kernel, std::size_t limit,
                                            std::optional<unsigned> block_bits) {
    const GroupSpec &g = kernel.group;
    g.require(x, "input");
    std::vector<Collision> out;
    // The prefix starts with the identity, which is skipped.
    for (const auto &y : subgroup_prefix(kernel, limit + 1)) {
        if (y == g.identity()) {
            continue;
        }
        Collision c{g.add(x, y), std::nullopt};
        if (block_bits) {
            c.valid_block = valid_block(c.element, *block_bits);
        }
        out.push_back(std::move(c));
    }
    return out;
}

AttackReport run_attack(const HomomorphicHash &h, const AttackConfig &cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    const GroupSpec &in = h.input_group();

    AttackReport report;
    report.backend = cfg.backend.value_or(choose_backend(h, cfg.limits));
    report.kernel_basis = SubgroupBasis::whole(in);

    Rng rng(cfg.seed);
    OrthogonalSampler sampler(h, report.backend, cfg.limits);
    SubgroupTracker tracker(in);
    std::size_t idle = 0;
    bool solved = false;

    while (report.samples_used < cfg.max_samples) {
        auto trace = sampler.sample(rng);
        idle = tracker.insert(trace.orthogonal_sample) ? 0 : idle + 1;
        report.sample_traces.push_back(std::move(trace));
        ++report.samples_used;

        if (!cfg.early_exit && idle < cfg.patience) {
            continue;
        }
        // Every candidate contains K: the samples lie in K^perp.
        SubgroupBasis candidate = solve_kernel_from_orthogonal_samples(tracker.generators(), in);
        if (candidate.is_trivial()) {
            report.kernel_basis = std::move(candidate);
            report.status = AttackStatus::kTrivialKernel;
            report.message = "kernel is trivial: the hash is injective on its input group, no collision exists";
            solved = true;
            break;
        }
        if (cfg.early_exit) {
            std::vector<GroupElement> found;
            for (const auto &y : candidate.generators) {
                if (y != in.identity() && h(y) == h.output_group().identity()) {
                    found.push_back(y);
                }
            }
            if (!found.empty()) {
                report.kernel_basis = SubgroupBasis(in, std::move(found));
                solved = true;
                break;
            }
            report.kernel_basis = std::move(candidate);
            continue;
        }
        report.kernel_basis = std::move(candidate);
        if (all_in_kernel(h, report.kernel_basis)) {
            solved = true;
            break;
        }
        idle = 0;
    }

    report.kernel_order = subgroup_order(report.kernel_basis);
    if (!solved) {
        report.status = AttackStatus::kSampleBudgetExhausted;
        report.message = "sample budget of " + std::to_string(cfg.max_samples) + " exhausted before saturation";
    } else if (report.status != AttackStatus::kTrivialKernel) {
        const GroupElement target = in.element_at(rng.uniform_below(in.total_order()));
        for (auto &c : enumerate_collisions(target, report.kernel_basis, cfg.collision_limit, cfg.block_bits)) {
            report.forged_pairs.push_back({target, std::move(c.element), c.valid_block});
        }
        bool pairs_ok = !report.forged_pairs.empty();
        for (const auto &pair : report.forged_pairs) {
            pairs_ok = pairs_ok && pair.x != pair.x_prime && h(pair.x) == h(pair.x_prime);
        }
        report.verified = pairs_ok && all_in_kernel(h, report.kernel_basis);
        report.status = report.verified ? AttackStatus::kVerified : AttackStatus::kVerificationFailed;
        report.message = report.verified ? "kernel recovered and every forged pair re-verified"
                                         : "forged pairs failed re-verification";
    }
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace hsphash

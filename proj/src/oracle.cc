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

#include "hsphash/oracle.h"

#include <boost/math/distributions/chi_squared.hpp>

#include "hsphash/errors.h"

namespace hsphash {

BruteForceResult kernel_bruteforce(const HomomorphicHash &h, bool with_preimages, std::uint64_t bound) {
    const GroupSpec &in = h.input_group();
    if (in.total_order() > bound) {
        throw ResourceError("kernel_bruteforce: |G_in| = " + std::to_string(in.total_order()) +
                            " exceeds enumeration bound");
    }
    BruteForceResult out;
    if (with_preimages) {
        out.preimage_index.emplace();
    }
    const GroupElement zero = h.output_group().identity();
    for (std::uint64_t i = 0; i < in.total_order(); ++i) {
        GroupElement x = in.element_at(i);
        GroupElement y = h(x);
        if (y == zero) {
            out.kernel_elements.insert(x);
        }
        if (with_preimages) {
            (*out.preimage_index)[y].push_back(std::move(x));
        }
    }
    out.orthogonal_elements = orthogonal_bruteforce(in, out.kernel_elements, bound);
    return out;
}

std::set<GroupElement> orthogonal_bruteforce(const GroupSpec &spec, const std::set<GroupElement> &subset,
                                             std::uint64_t bound) {
    if (spec.total_order() > bound) {
        throw ResourceError("orthogonal_bruteforce: group exceeds enumeration bound");
    }
    std::set<GroupElement> out;
    for (std::uint64_t i = 0; i < spec.total_order(); ++i) {
        GroupElement g = spec.element_at(i);
        bool orthogonal = true;
        for (const auto &s : subset) {
            if (!character_eval(spec, g, s).is_one()) {
                orthogonal = false;
                break;
            }
        }
        if (orthogonal) {
            out.insert(std::move(g));
        }
    }
    return out;
}

double chi_square_survival(double statistic, double dof) {
    if (dof <= 0.0) {
        return 1.0;
    }
    boost::math::chi_squared dist(dof);
    return boost::math::cdf(boost::math::complement(dist, std::max(statistic, 0.0)));
}

AuditVerdict audit_samples(const std::set<GroupElement> &support, const SampleSource &source, std::size_t draws,
                           Rng &rng, double significance) {
    if (support.empty()) {
        throw ParameterError("audit_samples: empty support");
    }
    if (draws < 50 * support.size()) {
        throw ParameterError("audit_samples: need at least 50 draws per cell (" + std::to_string(50 * support.size()) +
                             "), got " + std::to_string(draws));
    }
    std::map<GroupElement, std::size_t> counts;
    for (const auto &s : support) {
        counts[s] = 0;
    }
    AuditVerdict v;
    v.draws = draws;
    v.cells = support.size();
    v.significance = significance;
    for (std::size_t i = 0; i < draws; ++i) {
        auto it = counts.find(source(rng));
        if (it == counts.end()) {
            ++v.out_of_support;
        } else {
            ++it->second;
        }
    }
    const double expected = static_cast<double>(draws) / static_cast<double>(support.size());
    for (const auto &[cell, observed] : counts) {
        const double d = static_cast<double>(observed) - expected;
        v.chi_square += d * d / expected;
    }
    v.dof = static_cast<double>(support.size() - 1);
    v.p_value = chi_square_survival(v.chi_square, v.dof);
    v.passed = v.out_of_support == 0 && v.p_value >= significance;
    return v;
}

AuditVerdict distribution_audit(const HomomorphicHash &h, Backend backend, std::size_t draws, Rng &rng,
                                double significance, const SamplerLimits &limits) {
    auto truth = kernel_bruteforce(h, false, limits.enumeration_bound);
    OrthogonalSampler sampler(h, backend, limits);
    return audit_samples(
        truth.orthogonal_elements, [&](Rng &r) { return sampler.sample(r).orthogonal_sample; }, draws, rng,
        significance);
}

HomogeneityVerdict two_sample_equivalence(const std::vector<GroupElement> &a, const std::vector<GroupElement> &b,
                                          double significance) {
    if (a.empty() || b.empty()) {
        throw ParameterError("two_sample_equivalence: empty sample");
    }
    std::map<GroupElement, std::pair<double, double>> table;
    for (const auto &x : a) {
        table[x].first += 1;
    }
    for (const auto &x : b) {
        table[x].second += 1;
    }
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    const double n = na + nb;
    HomogeneityVerdict v;
    for (const auto &[cell, c] : table) {
        const double col = c.first + c.second;
        const double ea = na * col / n, eb = nb * col / n;
        v.chi_square += (c.first - ea) * (c.first - ea) / ea + (c.second - eb) * (c.second - eb) / eb;
    }
    v.dof = static_cast<double>(table.size() - 1);
    v.p_value = chi_square_survival(v.chi_square, v.dof);
    v.passed = v.p_value >= significance;
    return v;
}

}  // namespace hsphash

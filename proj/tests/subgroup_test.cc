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

#include <gtest/gtest.h>

#include "hsphash/errors.h"
#include "hsphash/oracle.h"
#include "test_util.h"

using namespace hsphash;
using namespace hsphash::testing;

namespace {

const GroupSpec kZ2_4 = GroupSpec::homogeneous(2, 4);

std::set<GroupElement> set_of(std::initializer_list<GroupElement> elems) { return {elems}; }

}  // namespace

TEST(SubgroupEnumerate, empty_generators) {
    GroupSpec g{3, 4};
    EXPECT_EQ(subgroup_enumerate({g, {}}), set_of({{0, 0}}));
}

TEST(SubgroupEnumerate, order_two_element) {
    GroupSpec g = GroupSpec::homogeneous(2, 3);
    EXPECT_EQ(subgroup_enumerate({g, {{1, 1, 0}}}), set_of({{0, 0, 0}, {1, 1, 0}}));
}

TEST(SubgroupEnumerate, cyclic_closure_mod_eleven) {
    GroupSpec g = GroupSpec::homogeneous(11, 2);
    auto elems = subgroup_enumerate({g, {{1, 3}}});
    EXPECT_EQ(elems.size(), 11u);
    EXPECT_TRUE(elems.count(GroupElement{5, 4}));
}

TEST(SubgroupEnumerate, bound_is_enforced) {
    GroupSpec g = GroupSpec::homogeneous(2, 10);
    EXPECT_THROW(subgroup_enumerate(SubgroupBasis::whole(g), 100), ResourceError);
    EXPECT_EQ(subgroup_prefix(SubgroupBasis::whole(g), 100).size(), 100u);
}

TEST(SubgroupEnumerate, closed_under_addition) {
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        GroupSpec g = random_group(rng, 3, 10, 600);
        auto h = subgroup_enumerate(random_subgroup(g, rng, 1 + rng.uniform_below(3)));
        for (const auto &a : h) {
            for (const auto &b : h) {
                ASSERT_TRUE(h.count(g.add(a, b)));
            }
        }
    }
}

TEST(SubgroupOrder, matches_enumeration) {
    Rng rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        GroupSpec g = random_group(rng, 4, 12, 5000);
        auto basis = random_subgroup(g, rng, rng.uniform_below(4));
        EXPECT_EQ(subgroup_order(basis), subgroup_enumerate(basis).size()) << g.str();
    }
}

TEST(OrthogonalSubgroup, whole_group) {
    GroupSpec g{4, 6};
    EXPECT_EQ(subgroup_enumerate(orthogonal_subgroup(SubgroupBasis::whole(g))), set_of({{0, 0}}));
}

TEST(OrthogonalSubgroup, trivial_subgroup) {
    GroupSpec g{4, 6};
    EXPECT_EQ(subgroup_enumerate(orthogonal_subgroup(SubgroupBasis::trivial(g))), all_elements(g));
}

TEST(OrthogonalSubgroup, self_orthogonal_in_z2_4) {
    SubgroupBasis h{kZ2_4, {{1, 0, 1, 0}, {0, 1, 0, 1}}};
    auto perp = subgroup_enumerate(orthogonal_subgroup(h));
    EXPECT_EQ(perp, set_of({{0, 0, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}}));
    EXPECT_EQ(perp, orthogonal_bruteforce(kZ2_4, subgroup_enumerate(h)));
}

TEST(OrthogonalSubgroup, matches_character_bruteforce) {
    Rng rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        GroupSpec g = random_group(rng, 4, 12, 3000);
        auto h = random_subgroup(g, rng, 1 + rng.uniform_below(3));
        auto h_elems = subgroup_enumerate(h);
        auto perp = subgroup_enumerate(orthogonal_subgroup(h));
        ASSERT_EQ(perp, orthogonal_bruteforce(g, h_elems)) << g.str();
        // |H| |H^perp| = |G|
        EXPECT_EQ(h_elems.size() * perp.size(), g.total_order());
        // (H^perp)^perp = H
        EXPECT_EQ(subgroup_enumerate(orthogonal_subgroup(orthogonal_subgroup(h))), h_elems);
    }
}

TEST(SolveKernel, empty_samples_give_whole_group) {
    GroupSpec g{3, 5};
    EXPECT_EQ(subgroup_enumerate(solve_kernel_from_orthogonal_samples({}, g)), all_elements(g));
}

TEST(SolveKernel, gf2_example) {
    auto k = solve_kernel_from_orthogonal_samples({{1, 0, 1, 0}, {0, 1, 0, 1}}, kZ2_4);
    EXPECT_EQ(k.generators.size(), 2u);
    EXPECT_EQ(subgroup_enumerate(k), set_of({{0, 0, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}}));
}

TEST(SolveKernel, recovers_kfm_kernel_from_perp_generators) {
    auto h = kfm_23_11();
    auto truth = kernel_bruteforce(h);
    std::vector<GroupElement> perp(truth.orthogonal_elements.begin(), truth.orthogonal_elements.end());
    EXPECT_EQ(subgroup_enumerate(solve_kernel_from_orthogonal_samples(perp, h.input_group())), truth.kernel_elements);
}

TEST(SolveKernel, agrees_with_orthogonal_subgroup) {
    Rng rng(24);
    for (int trial = 0; trial < 150; ++trial) {
        GroupSpec g = trial % 2 ? GroupSpec::homogeneous(trial % 3 ? 2 : 11, 1 + rng.uniform_below(trial % 3 ? 10 : 3))
                                : random_group(rng, 4, 10, 3000);
        std::vector<GroupElement> samples;
        for (std::size_t i = 0, n = rng.uniform_below(5); i < n; ++i) {
            samples.push_back(random_element(g, rng));
        }
        auto fast = subgroup_enumerate(solve_kernel_from_orthogonal_samples(samples, g));
        auto general = samples.empty() ? all_elements(g) : subgroup_enumerate(orthogonal_subgroup({g, samples}));
        EXPECT_EQ(fast, general) << g.str();
    }
}

TEST(SaturationCheck, empty_is_trivial_and_unsaturated) {
    auto s = saturation_check({}, kZ2_4, 3);
    EXPECT_EQ(s.measure, 1u);
    EXPECT_EQ(s.field_rank, std::optional<std::size_t>(0));
    EXPECT_FALSE(s.saturated);
}

TEST(SaturationCheck, spanning_set_never_grows) {
    std::vector<GroupElement> samples{{1, 0, 1, 0}, {0, 1, 0, 1}};
    auto before = saturation_check(samples, kZ2_4, 3);
    EXPECT_EQ(before.measure, 4u);
    EXPECT_FALSE(before.saturated);
    for (GroupElement extra : {GroupElement{1, 1, 1, 1}, GroupElement{0, 0, 0, 0}, GroupElement{1, 0, 1, 0}}) {
        samples.push_back(extra);
        EXPECT_EQ(saturation_check(samples, kZ2_4, 3).measure, 4u);
    }
    EXPECT_TRUE(saturation_check(samples, kZ2_4, 3).saturated);
}

TEST(SaturationCheck, mixed_group_measure) {
    GroupSpec g{4, 6};
    auto s = saturation_check({{2, 0}, {0, 3}, {2, 3}}, g, 1);
    EXPECT_EQ(s.measure, 4u);
    EXPECT_FALSE(s.field_rank.has_value());
    EXPECT_TRUE(s.saturated);
}

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

#include "hsphash/group.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "hsphash/errors.h"
#include "test_util.h"

using namespace hsphash;
using hsphash::testing::random_element;
using hsphash::testing::random_group;

TEST(GroupSpec, rejects_small_orders) {
    EXPECT_THROW(GroupSpec({2, 1}), StructuralError);
    EXPECT_THROW(GroupSpec({0}), StructuralError);
    EXPECT_EQ(GroupSpec({}).total_order(), 1u);
}

TEST(GroupSpec, totals_and_exponent) {
    GroupSpec g{4, 6, 9};
    EXPECT_EQ(g.total_order(), 216u);
    EXPECT_EQ(g.exponent(), 36u);
    EXPECT_EQ(g.homogeneous_prime(), 0u);
    EXPECT_EQ(GroupSpec::homogeneous(11, 3).homogeneous_prime(), 11u);
    EXPECT_EQ(GroupSpec::homogeneous(4, 3).homogeneous_prime(), 0u);
}

TEST(GroupSpec, flat_index_last_factor_fastest) {
    GroupSpec g{3, 5};
    EXPECT_EQ(g.flat_index(GroupElement{0, 1}), 1u);
    EXPECT_EQ(g.flat_index(GroupElement{1, 0}), 5u);
    for (std::uint64_t i = 0; i < g.total_order(); ++i) {
        EXPECT_EQ(g.flat_index(g.element_at(i)), i);
    }
    EXPECT_THROW(g.element_at(15), StructuralError);
}

TEST(ElementAdd, xor_in_z2_cubed) {
    GroupSpec g = GroupSpec::homogeneous(2, 3);
    EXPECT_EQ(element_add(g, {1, 0, 1}, {1, 1, 0}), (GroupElement{0, 1, 1}));
}

TEST(ElementAdd, identity_is_neutral) {
    Rng rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        GroupSpec g = random_group(rng, 4, 12, 5000);
        auto a = random_element(g, rng);
        EXPECT_EQ(element_add(g, a, g.identity()), a);
    }
}

TEST(ElementAdd, mod_eleven) {
    GroupSpec g = GroupSpec::homogeneous(11, 2);
    EXPECT_EQ(element_add(g, {7, 9}, {6, 4}), (GroupElement{2, 2}));
}

TEST(ElementAdd, mismatched_groups) {
    GroupSpec g = GroupSpec::homogeneous(2, 3);
    EXPECT_THROW(element_add(g, {1, 0}, {1, 1, 0}), StructuralError);
    EXPECT_THROW(element_add(g, {2, 0, 0}, {1, 1, 0}), StructuralError);
}

TEST(GroupSpec, negate_and_order) {
    GroupSpec g{4, 6};
    GroupElement a{1, 4};
    EXPECT_EQ(g.add(a, g.negate(a)), g.identity());
    EXPECT_EQ(g.element_order(a), 12u);
    EXPECT_EQ(g.element_order(g.identity()), 1u);
    EXPECT_EQ(g.reduce({-1, 13}), (GroupElement{3, 1}));
}

TEST(CharacterEval, xor_sign) {
    GroupSpec g = GroupSpec::homogeneous(2, 3);
    auto v = character_eval(g, {1, 1, 0}, {1, 0, 1});
    EXPECT_EQ(v, (CharacterValue{1, 2}));
    EXPECT_EQ(v.value(), std::complex<double>(-1.0, 0.0));
}

TEST(CharacterEval, identity_argument) {
    Rng rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        GroupSpec g = random_group(rng, 4, 12, 5000);
        EXPECT_TRUE(character_eval(g, random_element(g, rng), g.identity()).is_one());
    }
}

TEST(CharacterEval, quarter_turn) {
    GroupSpec g{4};
    auto v = character_eval(g, {1}, {1});
    EXPECT_EQ(v, (CharacterValue{1, 4}));
    EXPECT_EQ(v.value(), std::complex<double>(0.0, 1.0));
}

TEST(CharacterEval, mixed_orders_phase) {
    // (1*1)/4 + (5*2)/6 = 1/4 + 10/6 = 23/12 = 11/12 mod 1
    GroupSpec g{4, 6};
    EXPECT_EQ(character_eval(g, {1, 5}, {1, 2}), (CharacterValue{11, 12}));
}

TEST(CharacterEval, multiplicative_and_symmetric) {
    Rng rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
        GroupSpec g = random_group(rng, 4, 16, 1 << 14);
        auto a = random_element(g, rng), h1 = random_element(g, rng), h2 = random_element(g, rng);
        EXPECT_EQ(character_eval(g, a, g.add(h1, h2)), character_eval(g, a, h1) * character_eval(g, a, h2));
        EXPECT_EQ(character_eval(g, a, h1), character_eval(g, h1, a));
    }
}

TEST(CharacterSum, identity_gives_order) {
    GroupSpec g = GroupSpec::homogeneous(2, 3);
    auto s = character_sum(g, g.identity());
    EXPECT_NEAR(s.real(), 8.0, 1e-12);
    EXPECT_NEAR(s.imag(), 0.0, 1e-12);
}

TEST(CharacterSum, nontrivial_gives_zero) {
    EXPECT_LT(std::abs(character_sum(GroupSpec::homogeneous(2, 3), {1, 0, 0})), 1e-12);
    EXPECT_LT(std::abs(character_sum(GroupSpec{11}, {3})), 1e-12);
}

TEST(CharacterSum, exact_phase_histogram) {
    // Exact form of the sum law: for g != e the phases are equidistributed over
    // the d-th roots of unity for the order d > 1 of chi_g.
    GroupSpec g{4, 6};
    for (std::uint64_t i = 0; i < g.total_order(); ++i) {
        auto a = g.element_at(i);
        std::map<std::pair<std::uint64_t, std::uint64_t>, int> hist;
        std::uint64_t d = 1;
        for (std::uint64_t k = 0; k < g.total_order(); ++k) {
            auto v = character_eval(g, a, g.element_at(k));
            hist[{v.num, v.den}]++;
            d = std::lcm(d, v.den);
        }
        if (a == g.identity()) {
            EXPECT_EQ(hist.size(), 1u);
            EXPECT_EQ(hist.begin()->second, 24);
        } else {
            EXPECT_GT(d, 1u);
            EXPECT_EQ(hist.size(), d);
            for (const auto &[phase, count] : hist) {
                EXPECT_EQ(count * static_cast<int>(d), 24);
            }
        }
    }
}

TEST(CharacterSum, refuses_large_groups) {
    GroupSpec g = GroupSpec::homogeneous(2, 10);
    EXPECT_THROW(character_sum(g, g.identity(), 512), ResourceError);
}

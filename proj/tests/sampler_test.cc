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

#include <gtest/gtest.h>

#include "hsphash/errors.h"
#include "hsphash/oracle.h"
#include "test_util.h"

using namespace hsphash;
using namespace hsphash::testing;

namespace {

constexpr Backend kBoth[] = {Backend::kStatevector, Backend::kCosetSampler};

bool orthogonal_to_all(const GroupSpec &g, const GroupElement &z, const std::set<GroupElement> &kernel) {
    for (const auto &y : kernel) {
        if (!character_eval(g, z, y).is_one()) return false;
    }
    return true;
}

}  // namespace

TEST(Backend, tags_round_trip) {
    for (auto b : kBoth) {
        EXPECT_EQ(parse_backend(backend_tag(b)), b);
    }
    EXPECT_EQ(parse_backend("coset"), Backend::kCosetSampler);
    EXPECT_THROW(parse_backend("gpu"), ParameterError);
}

TEST(Backend, choose_by_state_size) {
    auto h = gen_params({HashFamily::kXorMatrix, 12, 8}, 1);
    EXPECT_EQ(choose_backend(h), Backend::kStatevector);  // 2^20 entries
    auto big = gen_params({HashFamily::kXorMatrix, 14, 8}, 1);
    EXPECT_EQ(choose_backend(big), Backend::kCosetSampler);
    EXPECT_EQ(choose_backend(h, {std::uint64_t{1} << 10, kDefaultEnumerationBound}), Backend::kCosetSampler);
}

TEST(Sampler, constant_zero_gives_identity) {
    HomomorphicHash h(ConstantZeroParams{GroupSpec::homogeneous(2, 3)});
    for (auto b : kBoth) {
        OrthogonalSampler s(h, b);
        Rng rng(51);
        for (int i = 0; i < 50; ++i) {
            auto t = s.sample(rng);
            EXPECT_EQ(t.orthogonal_sample, h.input_group().identity());
            EXPECT_EQ(t.measured_hash_value, h.output_group().identity());
            EXPECT_EQ(t.backend, b);
        }
    }
}

TEST(Sampler, bijective_map_is_uniform_over_group) {
    auto h = injective_4();
    for (auto b : kBoth) {
        Rng rng(52);
        OrthogonalSampler s(h, b);
        auto verdict = audit_samples(all_elements(h.input_group()), [&](Rng &r) { return s.sample(r).orthogonal_sample; },
                                     1600, rng);
        EXPECT_TRUE(verdict.passed) << backend_tag(b) << " p=" << verdict.p_value;
    }
}

TEST(Sampler, xor_example_samples_are_orthogonal_and_uniform) {
    auto h = xor_2x4();
    auto truth = kernel_bruteforce(h);
    ASSERT_EQ(truth.orthogonal_elements.size(), 4u);
    for (auto b : kBoth) {
        Rng rng(53);
        OrthogonalSampler s(h, b);
        std::vector<GroupElement> draws;
        for (int i = 0; i < 1000; ++i) {
            draws.push_back(s.sample(rng).orthogonal_sample);
            ASSERT_TRUE(orthogonal_to_all(h.input_group(), draws.back(), truth.kernel_elements));
        }
        std::size_t i = 0;
        auto verdict = audit_samples(truth.orthogonal_elements, [&](Rng &) { return draws[i++]; }, draws.size(), rng);
        EXPECT_TRUE(verdict.passed) << backend_tag(b) << " p=" << verdict.p_value;
    }
}

TEST(Sampler, membership_on_random_instances) {
    Rng pick(54);
    for (int trial = 0; trial < 12; ++trial) {
        HomomorphicHash h = trial % 3 == 0   ? gen_params({HashFamily::kXorMatrix, 6, 3}, trial)
                            : trial % 3 == 1 ? gen_params({HashFamily::kXorCrc, 7, 3}, trial)
                                             : gen_params({.family = HashFamily::kKfm, .m = 2, .p = 67, .q = 11}, trial);
        auto truth = kernel_bruteforce(h);
        for (auto b : kBoth) {
            OrthogonalSampler s(h, b);
            for (int i = 0; i < 100; ++i) {
                auto t = s.sample(pick);
                EXPECT_TRUE(truth.orthogonal_elements.count(t.orthogonal_sample)) << h.input_group().str();
                EXPECT_TRUE(orthogonal_to_all(h.input_group(), t.orthogonal_sample, truth.kernel_elements));
            }
        }
    }
}

TEST(Sampler, backends_agree_in_distribution) {
    Rng rng(55);
    for (int trial = 0; trial < 6; ++trial) {
        auto h = trial % 2 ? gen_params({HashFamily::kXorMatrix, 7, 4}, 100 + trial)
                           : gen_params({.family = HashFamily::kKfm, .m = 2, .p = 23, .q = 11}, 100 + trial);
        auto truth = kernel_bruteforce(h);
        const std::size_t draws = 60 * truth.orthogonal_elements.size();
        std::vector<GroupElement> a, b;
        OrthogonalSampler sv(h, Backend::kStatevector), cs(h, Backend::kCosetSampler);
        for (std::size_t i = 0; i < draws; ++i) {
            a.push_back(sv.sample(rng).orthogonal_sample);
            b.push_back(cs.sample(rng).orthogonal_sample);
        }
        auto verdict = two_sample_equivalence(a, b);
        EXPECT_TRUE(verdict.passed) << "p=" << verdict.p_value;
    }
}

TEST(Sampler, measured_value_is_an_attained_output) {
    auto h = xor_2x4();
    auto truth = kernel_bruteforce(h, true);
    Rng rng(56);
    for (auto b : kBoth) {
        OrthogonalSampler s(h, b);
        for (int i = 0; i < 50; ++i) {
            EXPECT_TRUE(truth.preimage_index->count(s.sample(rng).measured_hash_value));
        }
    }
}

TEST(Sampler, same_seed_same_trace) {
    auto h = gen_params({HashFamily::kXorMatrix, 8, 4}, 3);
    for (auto b : kBoth) {
        Rng r1(57), r2(57);
        OrthogonalSampler s1(h, b), s2(h, b);
        for (int i = 0; i < 20; ++i) {
            EXPECT_EQ(s1.sample(r1), s2.sample(r2));
        }
    }
}

TEST(Sampler, observer_sees_pipeline_stages) {
    auto h = xor_2x4();
    std::vector<std::string> stages;
    Rng rng(58);
    sample_orthogonal(h, Backend::kStatevector, rng, {},
                      [&](std::string_view stage, const StateVector &s) {
                          stages.emplace_back(stage);
                          EXPECT_NEAR(s.norm(), 1.0, 1e-12);
                      });
    EXPECT_GE(stages.size(), 3u);
}

TEST(Sampler, statevector_respects_bound) {
    auto h = gen_params({HashFamily::kXorMatrix, 8, 4}, 3);
    EXPECT_THROW(OrthogonalSampler(h, Backend::kStatevector, {1024, kDefaultEnumerationBound}), ResourceError);
    EXPECT_THROW(OrthogonalSampler(h, Backend::kCosetSampler, {kDefaultStateBound, 128}), ResourceError);
}

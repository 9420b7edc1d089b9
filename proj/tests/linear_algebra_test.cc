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

#include "hsphash/linear_algebra.h"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "hsphash/errors.h"
#include "hsphash/rng.h"

using namespace hsphash;

namespace {

using Vec = std::vector<std::uint64_t>;

ModMatrix from_rows(std::vector<std::vector<std::int64_t>> rows, std::uint64_t n) {
    ModMatrix m(rows.size(), rows[0].size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            std::int64_t x = rows[i][j] % static_cast<std::int64_t>(n);
            m.set(i, j, static_cast<std::uint64_t>(x < 0 ? x + static_cast<std::int64_t>(n) : x));
        }
    }
    return m;
}

// Fraction-free Bareiss determinant over Z of the residue representatives.
std::int64_t det(const ModMatrix &src) {
    const std::size_t n = src.rows();
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<std::int64_t>(src(i, j));
    std::int64_t sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return n == 0 ? 1 : sign * m[n - 1][n - 1];
}

bool is_unit(std::int64_t d, std::uint64_t n) {
    return std::gcd(static_cast<std::uint64_t>(d < 0 ? -d : d), n) == 1;
}

ModMatrix random_matrix(Rng &rng, std::size_t r, std::size_t c, std::uint64_t n) {
    ModMatrix m(r, c, n);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            m.set(i, j, rng.uniform_below(n));
        }
    }
    return m;
}

// Additive span of vectors in (Z/nZ)^dim by breadth-first closure.
std::set<Vec> span(const std::vector<Vec> &gens, std::size_t dim, std::uint64_t n) {
    std::set<Vec> seen{Vec(dim, 0)};
    std::vector<Vec> frontier{Vec(dim, 0)};
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const auto &v : frontier) {
            for (const auto &g : gens) {
                Vec w(dim);
                for (std::size_t j = 0; j < dim; ++j) w[j] = (v[j] + g[j]) % n;
                if (seen.insert(w).second) next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

std::set<Vec> brute_kernel(const ModMatrix &a) {
    const std::size_t c = a.cols();
    const std::uint64_t n = a.modulus();
    std::set<Vec> out;
    Vec x(c, 0);
    for (;;) {
        bool zero = true;
        for (std::size_t i = 0; i < a.rows() && zero; ++i) {
            std::uint64_t s = 0;
            for (std::size_t j = 0; j < c; ++j) s += a(i, j) * x[j];
            zero = s % n == 0;
        }
        if (zero) out.insert(x);
        std::size_t j = 0;
        while (j < c && ++x[j] == n) x[j++] = 0;
        if (j == c) break;
    }
    return out;
}

std::vector<Vec> rows_of(const ModMatrix &a) {
    std::vector<Vec> out(a.rows(), Vec(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j);
    return out;
}

}  // namespace

TEST(SmithNormalForm, textbook_example) {
    auto a = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 720);
    auto snf = smith_normal_form(a);
    EXPECT_EQ(snf.invariant_factors(), (Vec{2, 6, 12}));
    EXPECT_EQ(snf.left * a * snf.right, snf.diagonal);
}

TEST(SmithNormalForm, zero_matrix) {
    ModMatrix a(2, 3, 6);
    EXPECT_EQ(smith_normal_form(a).invariant_factors(), (Vec{6, 6}));
    EXPECT_EQ(modular_kernel(a).size(), 3u);
    EXPECT_EQ(row_module_order(a), 1u);
}

TEST(SmithNormalForm, rejects_bad_modulus) {
    EXPECT_THROW(ModMatrix(1, 1, 1), ParameterError);
}

TEST(SmithNormalForm, random_decompositions) {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 1 + rng.uniform_below(4), c = 1 + rng.uniform_below(4);
        const std::uint64_t n = 2 + rng.uniform_below(29);
        auto a = random_matrix(rng, r, c, n);
        auto snf = smith_normal_form(a);
        ASSERT_EQ(snf.left * a * snf.right, snf.diagonal);
        EXPECT_TRUE(is_unit(det(snf.left), n));
        EXPECT_TRUE(is_unit(det(snf.right), n));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) {
                if (i != j) EXPECT_EQ(snf.diagonal(i, j), 0u);
            }
        }
        auto d = snf.invariant_factors();
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            EXPECT_EQ(d[i + 1] % d[i], 0u);
        }
    }
}

TEST(ModularKernel, matches_bruteforce) {
    Rng rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 1 + rng.uniform_below(3), c = 1 + rng.uniform_below(3);
        const std::uint64_t n = 2 + rng.uniform_below(23);
        auto a = random_matrix(rng, r, c, n);
        ASSERT_EQ(span(modular_kernel(a), c, n), brute_kernel(a)) << "n=" << n;
    }
}

TEST(RowModuleOrder, matches_span_size) {
    Rng rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 1 + rng.uniform_below(3), c = 1 + rng.uniform_below(3);
        const std::uint64_t n = 2 + rng.uniform_below(23);
        auto a = random_matrix(rng, r, c, n);
        EXPECT_EQ(row_module_order(a), span(rows_of(a), c, n).size());
    }
}

TEST(SmithNormalForm, large_lifted_systems_stay_reduced) {
    Rng rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = 4 + rng.uniform_below(12), c = 4 + rng.uniform_below(12);
        const std::uint64_t n = 2 + rng.uniform_below(std::uint64_t{1} << 40);
        auto a = random_matrix(rng, r, c, n);
        auto snf = smith_normal_form(a);
        ASSERT_EQ(snf.left * a * snf.right, snf.diagonal);
        for (const auto &x : modular_kernel(a)) {
            ModMatrix col(c, 1, n);
            for (std::size_t j = 0; j < c; ++j) col.set(j, 0, x[j]);
            EXPECT_EQ(a * col, ModMatrix(r, 1, n));
        }
    }
}

TEST(FpEchelon, rank_and_nullspace_over_f11) {
    FpEchelon e(11, 3);
    EXPECT_TRUE(e.insert({1, 2, 3}));
    EXPECT_FALSE(e.insert({2, 4, 6}));
    EXPECT_TRUE(e.insert({0, 1, 5}));
    EXPECT_EQ(e.rank(), 2u);
    auto ns = e.nullspace();
    ASSERT_EQ(ns.size(), 1u);
    for (auto row : std::vector<std::vector<std::uint64_t>>{{1, 2, 3}, {0, 1, 5}}) {
        std::uint64_t dot = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            dot += row[j] * ns[0][j];
        }
        EXPECT_EQ(dot % 11, 0u);
    }
}

TEST(FpEchelon, gf2_nullspace_dimension) {
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 1 + rng.uniform_below(12);
        FpEchelon e(2, dim);
        std::vector<std::vector<std::uint64_t>> rows;
        for (std::size_t r = 0, n = rng.uniform_below(dim + 2); r < n; ++r) {
            std::vector<std::uint64_t> v(dim);
            for (auto &x : v) x = rng.uniform_below(2);
            rows.push_back(v);
            e.insert(v);
        }
        auto ns = e.nullspace();
        EXPECT_EQ(ns.size() + e.rank(), dim);
        for (const auto &y : ns) {
            for (const auto &row : rows) {
                std::uint64_t dot = 0;
                for (std::size_t j = 0; j < dim; ++j) dot += row[j] * y[j];
                EXPECT_EQ(dot % 2, 0u);
            }
        }
    }
}

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

#include <algorithm>
#include <numeric>
#include <tuple>
#include <utility>

#include "hsphash/errors.h"
#include "hsphash/number_theory.h"

namespace hsphash {
namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % n);
}

std::uint64_t lift(std::int64_t x, std::uint64_t n) {
    std::int64_t r = x % static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(n) : r);
}

// s*a + t*b == g for a, b < 2^62.
std::int64_t extended_gcd(std::int64_t a, std::int64_t b, std::int64_t &s, std::int64_t &t) {
    std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    s = s0;
    t = t0;
    return a;
}

// Unimodular 2x2 step sending (a, b) to (gcd, 0).
struct GcdStep {
    std::uint64_t s, t, u, v;
};

GcdStep gcd_step(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    if (b % a == 0) {
        return {1, 0, lift(-static_cast<std::int64_t>(b / a), n), 1};
    }
    std::int64_t s, t;
    auto g = static_cast<std::uint64_t>(
        extended_gcd(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), s, t));
    return {lift(s, n), lift(t, n), lift(-static_cast<std::int64_t>(b / g), n), lift(static_cast<std::int64_t>(a / g), n)};
}

}  // namespace

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus)
    : rows_(rows), cols_(cols), n_(modulus), data_(rows * cols, 0) {
    if (modulus < 2 || modulus > (std::uint64_t{1} << 62)) {
        throw ParameterError("matrix modulus must lie in [2, 2^62]");
    }
}

ModMatrix ModMatrix::identity(std::size_t n, std::uint64_t modulus) {
    ModMatrix m(n, n, modulus);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, 1);
    }
    return m;
}

ModMatrix ModMatrix::operator*(const ModMatrix &other) const {
    if (cols_ != other.rows_ || n_ != other.n_) {
        throw StructuralError("matrix dimension or modulus mismatch");
    }
    ModMatrix out(rows_, other.cols_, n_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t a = (*this)(i, k);
            if (a == 0) {
                continue;
            }
            for (std::size_t j = 0; j < other.cols_; ++j) {
                out.set(i, j, add_mod(out(i, j), mul_mod(a, other(k, j), n_), n_));
            }
        }
    }
    return out;
}

void ModMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
    }
}

void ModMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        std::swap(data_[r * cols_ + a], data_[r * cols_ + b]);
    }
}

void ModMatrix::mix_rows(std::size_t a, std::size_t b, std::uint64_t s, std::uint64_t t, std::uint64_t u,
                         std::uint64_t v) {
    for (std::size_t c = 0; c < cols_; ++c) {
        std::uint64_t x = (*this)(a, c), y = (*this)(b, c);
        set(a, c, add_mod(mul_mod(s, x, n_), mul_mod(t, y, n_), n_));
        set(b, c, add_mod(mul_mod(u, x, n_), mul_mod(v, y, n_), n_));
    }
}

void ModMatrix::mix_cols(std::size_t a, std::size_t b, std::uint64_t s, std::uint64_t t, std::uint64_t u,
                         std::uint64_t v) {
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t x = (*this)(r, a), y = (*this)(r, b);
        set(r, a, add_mod(mul_mod(s, x, n_), mul_mod(t, y, n_), n_));
        set(r, b, add_mod(mul_mod(u, x, n_), mul_mod(v, y, n_), n_));
    }
}

void ModMatrix::add_row(std::size_t dst, std::size_t src) {
    for (std::size_t c = 0; c < cols_; ++c) {
        set(dst, c, add_mod((*this)(dst, c), (*this)(src, c), n_));
    }
}

std::vector<std::uint64_t> SmithDecomposition::invariant_factors() const {
    std::vector<std::uint64_t> out;
    const std::uint64_t n = diagonal.modulus();
    for (std::size_t i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i) {
        out.push_back(std::gcd(diagonal(i, i), n));
    }
    return out;
}

SmithDecomposition smith_normal_form(const ModMatrix &input) {
    const std::size_t rows = input.rows(), cols = input.cols();
    const std::uint64_t n = input.modulus();
    SmithDecomposition out{ModMatrix::identity(rows, n), input, ModMatrix::identity(cols, n)};
    ModMatrix &a = out.diagonal;
    ModMatrix &u = out.left;
    ModMatrix &v = out.right;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Pivot: smallest nonzero representative in the trailing block.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (a(i, j) != 0 && (pr == rows || a(i, j) < a(pr, pc))) {
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr == rows) {
            break;
        }
        a.swap_rows(t, pr);
        u.swap_rows(t, pr);
        a.swap_cols(t, pc);
        v.swap_cols(t, pc);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) != 0) {
                    auto st = gcd_step(a(t, t), a(i, t), n);
                    a.mix_rows(t, i, st.s, st.t, st.u, st.v);
                    u.mix_rows(t, i, st.s, st.t, st.u, st.v);
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) != 0) {
                    auto st = gcd_step(a(t, t), a(t, j), n);
                    a.mix_cols(t, j, st.s, st.t, st.u, st.v);
                    v.mix_cols(t, j, st.s, st.t, st.u, st.v);
                }
            }
            for (std::size_t i = t + 1; i < rows && !dirty; ++i) {
                dirty = a(i, t) != 0;
            }
            if (dirty) {
                continue;
            }
            // Row and column are clear; enforce divisibility of the trailing block.
            const std::uint64_t d = std::gcd(a(t, t), n);
            for (std::size_t i = t + 1; i < rows && !dirty; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a(i, j) % d != 0) {
                        a.add_row(t, i);
                        u.add_row(t, i);
                        dirty = true;
                        break;
                    }
                }
            }
            if (!dirty) {
                break;
            }
        }
    }
    return out;
}

std::vector<std::vector<std::uint64_t>> modular_kernel(const ModMatrix &input) {
    auto snf = smith_normal_form(input);
    const std::uint64_t n = input.modulus();
    const auto factors = snf.invariant_factors();
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t c = 0; c < input.cols(); ++c) {
        // x = right * y with d_c * y_c = 0; y_c ranges over multiples of n / gcd(d_c, n).
        const std::uint64_t step = c < factors.size() ? n / factors[c] : 1;
        std::vector<std::uint64_t> col(input.cols());
        bool nonzero = false;
        for (std::size_t r = 0; r < input.cols(); ++r) {
            col[r] = mul_mod(snf.right(r, c), step, n);
            nonzero = nonzero || col[r] != 0;
        }
        if (nonzero) {
            basis.push_back(std::move(col));
        }
    }
    return basis;
}

std::uint64_t row_module_order(const ModMatrix &input) {
    std::uint64_t order = 1;
    for (auto d : smith_normal_form(input).invariant_factors()) {
        order = checked_mul(order, input.modulus() / d);
    }
    return order;
}

void FpEchelon::reduce(std::vector<std::uint64_t> &v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint64_t f = v[pivots_[i]];
        if (f == 0) {
            continue;
        }
        for (std::size_t c = 0; c < dim_; ++c) {
            v[c] = (v[c] + mul_mod(p_ - f, rows_[i][c], p_)) % p_;
        }
    }
}

bool FpEchelon::insert(std::vector<std::uint64_t> v) {
    if (v.size() != dim_) {
        throw StructuralError("FpEchelon: vector dimension mismatch");
    }
    for (auto &x : v) {
        x %= p_;
    }
    reduce(v);
    auto it = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
    if (it == v.end()) {
        return false;
    }
    std::size_t pivot = static_cast<std::size_t>(it - v.begin());
    std::uint64_t inv = inverse_mod(v[pivot], p_);
    for (auto &x : v) {
        x = mul_mod(x, inv, p_);
    }
    // Keep the existing rows fully reduced against the new pivot.
    for (auto &row : rows_) {
        std::uint64_t f = row[pivot];
        if (f == 0) {
            continue;
        }
        for (std::size_t c = 0; c < dim_; ++c) {
            row[c] = (row[c] + mul_mod(p_ - f, v[c], p_)) % p_;
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

std::vector<std::vector<std::uint64_t>> FpEchelon::nullspace() const {
    std::vector<bool> is_pivot(dim_, false);
    for (auto p : pivots_) {
        is_pivot[p] = true;
    }
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t free = 0; free < dim_; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<std::uint64_t> y(dim_, 0);
        y[free] = 1;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            y[pivots_[i]] = (p_ - rows_[i][free]) % p_;
        }
        basis.push_back(std::move(y));
    }
    return basis;
}

}  // namespace hsphash

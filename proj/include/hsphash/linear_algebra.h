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
#include <cstdint>
#include <vector>

namespace hsphash {

/// Dense row-major matrix over Z/nZ, entries kept in [0, n).
class ModMatrix {
   public:
    ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus);

    static ModMatrix identity(std::size_t n, std::uint64_t modulus);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint64_t modulus() const noexcept { return n_; }
    std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint64_t v) { data_[r * cols_ + c] = v % n_; }

    ModMatrix operator*(const ModMatrix &other) const;
    bool operator==(const ModMatrix &) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// (row a, row b) <- (s*a + t*b, u*a + v*b)
    void mix_rows(std::size_t a, std::size_t b, std::uint64_t s, std::uint64_t t, std::uint64_t u, std::uint64_t v);
    /// (col a, col b) <- (s*a + t*b, u*a + v*b)
    void mix_cols(std::size_t a, std::size_t b, std::uint64_t s, std::uint64_t t, std::uint64_t u, std::uint64_t v);
    void add_row(std::size_t dst, std::size_t src);

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::uint64_t n_;
    std::vector<std::uint64_t> data_;
};

/// left * input * right == diagonal over Z/nZ, with left and right invertible.
/// The ideals gcd(d_i, n) form a divisor chain.
struct SmithDecomposition {
    ModMatrix left;
    ModMatrix diagonal;
    ModMatrix right;

    /// gcd(d_i, n) for each diagonal slot; n marks a zero entry.
    std::vector<std::uint64_t> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const ModMatrix &input);

/// Generators of {x in (Z/nZ)^cols : input * x = 0}.
std::vector<std::vector<std::uint64_t>> modular_kernel(const ModMatrix &input);

/// Size of the submodule of (Z/nZ)^cols spanned by the rows.
std::uint64_t row_module_order(const ModMatrix &input);

/// Row-echelon basis over the prime field F_p, grown one vector at a time.
class FpEchelon {
   public:
    FpEchelon(std::uint64_t p, std::size_t dim) : p_(p), dim_(dim) {}

    /// Adds v to the span; returns true when the rank grew.
    bool insert(std::vector<std::uint64_t> v);
    std::size_t rank() const noexcept { return rows_.size(); }
    std::uint64_t modulus() const noexcept { return p_; }
    std::size_t dimension() const noexcept { return dim_; }

    /// Basis of {y : <r, y> = 0 mod p for every row r}, one vector per free column.
    std::vector<std::vector<std::uint64_t>> nullspace() const;

   private:
    void reduce(std::vector<std::uint64_t> &v) const;

    std::uint64_t p_;
    std::size_t dim_;
    // Fully reduced rows, each normalised so its pivot entry is 1.
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace hsphash

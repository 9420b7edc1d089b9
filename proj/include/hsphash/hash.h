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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hsphash/group.h"

namespace hsphash {

enum class HashFamily { kXorMatrix, kXorCrc, kKfm, kRsa, kConstantZero };

/// Canonical file tag, e.g. "xor_matrix".
std::string_view family_tag(HashFamily family);
/// Accepts the canonical tag or its hyphenated form ("xor-matrix").
HashFamily parse_family(std::string_view tag);

/// n x m matrix over GF(2); bit j of rows[i] is entry (i, j).
struct XorMatrixParams {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::uint64_t> rows;
    bool operator==(const XorMatrixParams &) const = default;
};

/// H(x) = x(t) mod g(t); bit i of `generator` is the coefficient of t^i.
struct XorCrcParams {
    std::size_t m = 0;
    std::size_t n = 0;
    std::uint64_t generator = 0;
    bool operator==(const XorCrcParams &) const = default;
};

/// h(b) = prod_i g_i^{b_i} mod p over inputs b in Z_q^m.
struct KfmParams {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> generators;
    bool operator==(const KfmParams &) const = default;
};

/// E(x) = x^e mod p*q on the units, indexed by Z_{p-1} x Z_{q-1} through the
/// smallest primitive roots of p and q.
struct RsaParams {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t e = 0;
    bool operator==(const RsaParams &) const = default;
};

/// Maps every input to the identity of Z_2. Test instance.
struct ConstantZeroParams {
    GroupSpec input;
    bool operator==(const ConstantZeroParams &) const = default;
};

using HashParams = std::variant<XorMatrixParams, XorCrcParams, KfmParams, RsaParams, ConstantZeroParams>;

namespace detail {
struct HashTables;
}

/// An immutable homomorphism between finite abelian groups.
class HomomorphicHash {
   public:
    /// Validates the parameters and builds any lookup tables. Throws ParameterError.
    explicit HomomorphicHash(HashParams params, std::optional<std::uint64_t> seed = std::nullopt);

    HashFamily family() const noexcept;
    const HashParams &params() const noexcept { return params_; }
    std::optional<std::uint64_t> seed() const noexcept { return seed_; }
    const GroupSpec &input_group() const noexcept { return input_; }
    const GroupSpec &output_group() const noexcept { return output_; }

    GroupElement operator()(const GroupElement &x) const;

    /// Integer form of an output: packed bits for GF(2) families, the residue
    /// modulo p (or N) for the multiplicative ones.
    std::uint64_t output_representative(const GroupElement &y) const;
    /// Inverse of output_representative; nullopt when v is not an attainable output.
    std::optional<GroupElement> output_from_representative(std::uint64_t v) const;
    /// For RSA, the unit modulo N indexed by x; for other families the packed input.
    std::uint64_t input_representative(const GroupElement &x) const;

    bool operator==(const HomomorphicHash &other) const { return params_ == other.params_ && seed_ == other.seed_; }

   private:
    HashParams params_;
    std::optional<std::uint64_t> seed_;
    GroupSpec input_;
    GroupSpec output_;
    std::shared_ptr<const detail::HashTables> tables_;
};

GroupElement hash_eval(const HomomorphicHash &h, const GroupElement &x);

/// Output-group addition (XOR, or multiplication of representatives).
GroupElement hash_add_outputs(const HomomorphicHash &h, const GroupElement &a, const GroupElement &b);

/// Size parameters for gen_params. Fields irrelevant to a family are ignored.
struct GenRequest {
    HashFamily family = HashFamily::kXorMatrix;
    std::size_t m = 0;
    std::size_t n = 0;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t e = 0;
    std::vector<std::uint64_t> input_orders;  // constant_zero only

    bool operator==(const GenRequest &) const = default;
};

/// Draws a fresh instance; identical (request, seed) pairs give identical instances.
HomomorphicHash gen_params(const GenRequest &request, std::uint64_t seed);

/// x(t) mod g(t) over GF(2), polynomials packed little-endian by degree.
std::uint64_t gf2_poly_mod(std::uint64_t x, std::uint64_t g);

}  // namespace hsphash

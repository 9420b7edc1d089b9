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

#include <complex>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hsphash {

/// Enumeration-based operations refuse groups larger than this by default.
inline constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t{1} << 24;

/// A residue tuple, one entry per cyclic factor of its group.
///
/// Elements do not carry their group; every operation takes the GroupSpec
/// explicitly and validates membership.
struct GroupElement {
    std::vector<std::uint64_t> residues;

    GroupElement() = default;
    explicit GroupElement(std::vector<std::uint64_t> r) : residues(std::move(r)) {}
    GroupElement(std::initializer_list<std::uint64_t> r) : residues(r) {}

    std::size_t size() const noexcept { return residues.size(); }
    std::uint64_t operator[](std::size_t j) const { return residues[j]; }

    bool operator==(const GroupElement &) const = default;
    auto operator<=>(const GroupElement &) const = default;

    std::string str() const;
};

/// Exact value of a character: e^{2 pi i num / den} with num/den reduced.
struct CharacterValue {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static CharacterValue from_fraction(std::uint64_t num, std::uint64_t den);

    bool is_one() const noexcept { return num == 0; }
    std::complex<double> value() const;
    CharacterValue operator*(const CharacterValue &other) const;
    bool operator==(const CharacterValue &) const = default;
};

/// A finite abelian group Z_{N_1} + ... + Z_{N_k} with known orders N_j >= 2.
///
/// An empty order list is the trivial group. Flat indices use mixed radix
/// with the last factor varying fastest.
class GroupSpec {
   public:
    GroupSpec() = default;
    explicit GroupSpec(std::vector<std::uint64_t> orders);
    GroupSpec(std::initializer_list<std::uint64_t> orders) : GroupSpec(std::vector<std::uint64_t>(orders)) {}

    /// Z_p^k.
    static GroupSpec homogeneous(std::uint64_t p, std::size_t k);

    const std::vector<std::uint64_t> &orders() const noexcept { return orders_; }
    std::size_t rank() const noexcept { return orders_.size(); }
    std::uint64_t total_order() const noexcept { return total_order_; }
    /// lcm of the orders (1 for the trivial group).
    std::uint64_t exponent() const noexcept { return exponent_; }
    /// L / N_j for each factor, the weight of coordinate j in a character phase.
    const std::vector<std::uint64_t> &phase_weights() const noexcept { return phase_weights_; }
    /// The common prime order when every factor is Z_p for the same prime p, else 0.
    std::uint64_t homogeneous_prime() const noexcept { return homogeneous_prime_; }

    bool contains(const GroupElement &e) const noexcept;
    /// Throws StructuralError unless contains(e).
    void require(const GroupElement &e, const char *what = "element") const;

    GroupElement identity() const;
    /// Canonical basis tuple with 1 in slot j.
    GroupElement basis(std::size_t j) const;
    GroupElement add(const GroupElement &a, const GroupElement &b) const;
    GroupElement negate(const GroupElement &a) const;
    GroupElement scale(std::uint64_t c, const GroupElement &a) const;
    /// Reduces arbitrary integers into a member of this group.
    GroupElement reduce(const std::vector<std::int64_t> &values) const;
    /// Additive order of a.
    std::uint64_t element_order(const GroupElement &a) const;

    std::uint64_t flat_index(const GroupElement &e) const;
    GroupElement element_at(std::uint64_t index) const;

    /// Product group (this, other) with this group's factors first.
    GroupSpec product(const GroupSpec &other) const;

    bool operator==(const GroupSpec &other) const noexcept { return orders_ == other.orders_; }

    std::string str() const;

   private:
    std::vector<std::uint64_t> orders_;
    std::uint64_t total_order_ = 1;
    std::uint64_t exponent_ = 1;
    std::vector<std::uint64_t> phase_weights_;
    std::uint64_t homogeneous_prime_ = 0;
};

GroupElement element_add(const GroupSpec &spec, const GroupElement &a, const GroupElement &b);

/// chi_g(h) = prod_j omega_{N_j}^{g_j h_j}, as an exact rational phase.
CharacterValue character_eval(const GroupSpec &spec, const GroupElement &g, const GroupElement &h);

/// Sum of chi_g(h) over every h in the group (floating, by enumeration).
std::complex<double> character_sum(const GroupSpec &spec, const GroupElement &g,
                                   std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace hsphash

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

#include <numbers>
#include <numeric>
#include <sstream>

#include "hsphash/errors.h"
#include "hsphash/number_theory.h"

namespace hsphash {

std::string GroupElement::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t j = 0; j < residues.size(); ++j) {
        out << (j ? "," : "") << residues[j];
    }
    out << ")";
    return out.str();
}

CharacterValue CharacterValue::from_fraction(std::uint64_t num, std::uint64_t den) {
    if (den == 0) {
        throw StructuralError("character phase with zero denominator");
    }
    num %= den;
    if (num == 0) {
        return {};
    }
    auto g = std::gcd(num, den);
    return {num / g, den / g};
}

std::complex<double> CharacterValue::value() const {
    if (num == 0) {
        return {1.0, 0.0};
    }
    // Exact special cases keep printed values clean.
    if (den == 2) {
        return {-1.0, 0.0};
    }
    if (den == 4) {
        return num == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return std::polar(1.0, angle);
}

CharacterValue CharacterValue::operator*(const CharacterValue &other) const {
    std::uint64_t l = std::lcm(den, other.den);
    std::uint64_t a = mul_mod(num, l / den, l);
    std::uint64_t b = mul_mod(other.num, l / other.den, l);
    return from_fraction((a + b) % l, l);
}

GroupSpec::GroupSpec(std::vector<std::uint64_t> orders) : orders_(std::move(orders)) {
    for (auto n : orders_) {
        if (n < 2) {
            throw StructuralError("cyclic factor orders must be >= 2, got " + std::to_string(n));
        }
        std::uint64_t t;
        if (__builtin_mul_overflow(total_order_, n, &t) || t > (std::uint64_t{1} << 62)) {
            throw ResourceError("group order exceeds 2^62");
        }
        total_order_ = t;
        exponent_ = std::lcm(exponent_, n);
    }
    for (auto n : orders_) {
        phase_weights_.push_back(exponent_ / n);
    }
    if (!orders_.empty() && is_prime(orders_.front())) {
        homogeneous_prime_ = orders_.front();
        for (auto n : orders_) {
            if (n != homogeneous_prime_) {
                homogeneous_prime_ = 0;
                break;
            }
        }
    }
}

GroupSpec GroupSpec::homogeneous(std::uint64_t p, std::size_t k) {
    return GroupSpec(std::vector<std::uint64_t>(k, p));
}

bool GroupSpec::contains(const GroupElement &e) const noexcept {
    if (e.size() != orders_.size()) {
        return false;
    }
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        if (e.residues[j] >= orders_[j]) {
            return false;
        }
    }
    return true;
}

void GroupSpec::require(const GroupElement &e, const char *what) const {
    if (!contains(e)) {
        throw StructuralError(std::string(what) + " " + e.str() + " is not an element of " + str());
    }
}

GroupElement GroupSpec::identity() const { return GroupElement(std::vector<std::uint64_t>(orders_.size(), 0)); }

GroupElement GroupSpec::basis(std::size_t j) const {
    if (j >= orders_.size()) {
        throw StructuralError("basis index out of range");
    }
    auto e = identity();
    e.residues[j] = 1;
    return e;
}

GroupElement GroupSpec::add(const GroupElement &a, const GroupElement &b) const {
    require(a, "lhs");
    require(b, "rhs");
    GroupElement out = a;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        out.residues[j] = (a.residues[j] + b.residues[j]) % orders_[j];
    }
    return out;
}

GroupElement GroupSpec::negate(const GroupElement &a) const {
    require(a);
    GroupElement out = a;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        out.residues[j] = (orders_[j] - a.residues[j]) % orders_[j];
    }
    return out;
}

GroupElement GroupSpec::scale(std::uint64_t c, const GroupElement &a) const {
    require(a);
    GroupElement out = a;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        out.residues[j] = mul_mod(c % orders_[j], a.residues[j], orders_[j]);
    }
    return out;
}

GroupElement GroupSpec::reduce(const std::vector<std::int64_t> &values) const {
    if (values.size() != orders_.size()) {
        throw StructuralError("reduce: expected " + std::to_string(orders_.size()) + " values");
    }
    GroupElement out;
    out.residues.resize(values.size());
    for (std::size_t j = 0; j < values.size(); ++j) {
        auto n = static_cast<std::int64_t>(orders_[j]);
        out.residues[j] = static_cast<std::uint64_t>(((values[j] % n) + n) % n);
    }
    return out;
}

std::uint64_t GroupSpec::element_order(const GroupElement &a) const {
    require(a);
    std::uint64_t order = 1;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        std::uint64_t n = orders_[j];
        order = std::lcm(order, n / std::gcd(n, a.residues[j]));
    }
    return order;
}

std::uint64_t GroupSpec::flat_index(const GroupElement &e) const {
    require(e);
    std::uint64_t index = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        index = index * orders_[j] + e.residues[j];
    }
    return index;
}

GroupElement GroupSpec::element_at(std::uint64_t index) const {
    if (index >= total_order_) {
        throw StructuralError("flat index " + std::to_string(index) + " out of range for " + str());
    }
    GroupElement e;
    e.residues.resize(orders_.size());
    for (std::size_t j = orders_.size(); j-- > 0;) {
        e.residues[j] = index % orders_[j];
        index /= orders_[j];
    }
    return e;
}

GroupSpec GroupSpec::product(const GroupSpec &other) const {
    auto orders = orders_;
    orders.insert(orders.end(), other.orders_.begin(), other.orders_.end());
    return GroupSpec(std::move(orders));
}

std::string GroupSpec::str() const {
    if (orders_.empty()) {
        return "{0}";
    }
    std::ostringstream out;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        out << (j ? " x " : "") << "Z_" << orders_[j];
    }
    return out.str();
}

GroupElement element_add(const GroupSpec &spec, const GroupElement &a, const GroupElement &b) {
    return spec.add(a, b);
}

CharacterValue character_eval(const GroupSpec &spec, const GroupElement &g, const GroupElement &h) {
    spec.require(g, "character index");
    spec.require(h, "character argument");
    const std::uint64_t l = spec.exponent();
    std::uint64_t t = 0;
    for (std::size_t j = 0; j < spec.rank(); ++j) {
        // g_j h_j < N_j, so the weighted term stays below L.
        t += mul_mod(g.residues[j], h.residues[j], spec.orders()[j]) * spec.phase_weights()[j];
        if (t >= l) {
            t -= l;
        }
    }
    return CharacterValue::from_fraction(t, l);
}

std::complex<double> character_sum(const GroupSpec &spec, const GroupElement &g, std::uint64_t bound) {
    spec.require(g, "character index");
    if (spec.total_order() > bound) {
        throw ResourceError("character_sum: |G| = " + std::to_string(spec.total_order()) +
                            " exceeds enumeration bound " + std::to_string(bound));
    }
    const std::uint64_t l = spec.exponent();
    const std::size_t k = spec.rank();
    // Walking G in flat order, bumping coordinate j adds (L/N_j) g_j to the
    // phase numerator; wrapping a coordinate subtracts a multiple of L.
    std::vector<std::uint64_t> step(k), digits(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
        step[j] = g.residues[j] * spec.phase_weights()[j];
    }
    std::vector<std::complex<double>> roots(l);
    for (std::uint64_t t = 0; t < l; ++t) {
        roots[t] = CharacterValue::from_fraction(t, l).value();
    }
    // Kahan-compensated accumulation; the exact answer is |G| or 0.
    std::complex<double> sum{0.0, 0.0}, comp{0.0, 0.0};
    std::uint64_t t = 0;
    for (std::uint64_t i = 0; i < spec.total_order(); ++i) {
        std::complex<double> y = roots[t] - comp;
        std::complex<double> s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        for (std::size_t j = k; j-- > 0;) {
            t += step[j];
            if (t >= l) {
                t -= l;
            }
            if (++digits[j] < spec.orders()[j]) {
                break;
            }
            digits[j] = 0;
        }
    }
    return sum;
}

}  // namespace hsphash

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
#include <vector>

namespace hsphash {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Multiplicative inverse of a modulo m; requires gcd(a, m) == 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// Deterministic primality test (trial division; desk-scale inputs only).
bool is_prime(std::uint64_t n);

/// Distinct prime factors of n in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Smallest generator of the multiplicative group modulo an odd prime p.
std::uint64_t smallest_primitive_root(std::uint64_t p);

/// Multiplicative order of a modulo m (a must be a unit).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Product that throws ResourceError on 64-bit overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

}  // namespace hsphash

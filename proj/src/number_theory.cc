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

#include "hsphash/number_theory.h"

#include <numeric>

#include "hsphash/errors.h"

namespace hsphash {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    if (((a | b) >> 32) == 0) {
        return a * b % m;
    }
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) {
        return 0;
    }
    std::uint64_t result = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        throw ParameterError("inverse_mod: " + std::to_string(a) + " is not a unit modulo " + std::to_string(m));
    }
    std::int64_t mm = static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
    if (!is_prime(p)) {
        throw ParameterError("smallest_primitive_root: " + std::to_string(p) + " is not prime");
    }
    if (p == 2) {
        return 1;
    }
    auto factors = prime_factors(p - 1);
    for (std::uint64_t r = 2; r < p; ++r) {
        bool ok = true;
        for (auto f : factors) {
            if (pow_mod(r, (p - 1) / f, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return r;
        }
    }
    throw ParameterError("no primitive root modulo " + std::to_string(p));
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
    if (std::gcd(a % m, m) != 1) {
        throw ParameterError("multiplicative_order: argument is not a unit");
    }
    std::uint64_t x = a % m;
    std::uint64_t k = 1;
    while (x != 1 % m) {
        x = mul_mod(x, a, m);
        ++k;
    }
    return k;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw ResourceError("integer overflow in product");
    }
    return out;
}

}  // namespace hsphash

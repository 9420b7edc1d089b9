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

#include "hsphash/hash.h"

#include <bit>
#include <numeric>
#include <unordered_map>

#include "hsphash/errors.h"
#include "hsphash/number_theory.h"
#include "hsphash/rng.h"

namespace hsphash {

namespace detail {

// Lookup tables for the multiplicative families. Output residues are indices
// into a fixed power table, so no discrete logarithm is solved at hash time.
struct HashTables {
    // KFM: powers of g_1 modulo p; RSA: unused.
    std::vector<std::uint64_t> powers;
    std::unordered_map<std::uint64_t, std::uint64_t> power_index;

    // RSA: per-prime primitive root, discrete-log table, and gcd(e, prime - 1).
    std::uint64_t root_p = 0, root_q = 0;
    std::vector<std::uint64_t> log_p, log_q;
    std::uint64_t d_p = 1, d_q = 1;
    std::uint64_t modulus = 0;
};

}  // namespace detail

namespace {

constexpr std::size_t kMaxBits = 62;

std::uint64_t pack_bits(const GroupElement &x) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        v |= (x[j] & 1) << j;
    }
    return v;
}

GroupElement unpack_bits(std::uint64_t v, std::size_t n) {
    GroupElement y;
    y.residues.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        y.residues[i] = (v >> i) & 1;
    }
    return y;
}

int poly_degree(std::uint64_t g) { return g == 0 ? -1 : 63 - std::countl_zero(g); }

std::uint64_t crt(std::uint64_t a, std::uint64_t p, std::uint64_t b, std::uint64_t q) {
    std::uint64_t diff = (b + q - a % q) % q;
    return a + p * mul_mod(diff, inverse_mod(p % q, q), q);
}

std::vector<std::uint64_t> log_table(std::uint64_t root, std::uint64_t prime) {
    std::vector<std::uint64_t> log(prime, 0);
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k + 1 < prime; ++k) {
        log[x] = k;
        x = mul_mod(x, root, prime);
    }
    return log;
}

struct Validator {
    GroupSpec input;
    GroupSpec output;
    std::shared_ptr<detail::HashTables> tables;

    void operator()(const XorMatrixParams &p) {
        if (p.m < 1 || p.m > kMaxBits || p.n < 1 || p.n > p.m) {
            throw ParameterError("xor_matrix needs 1 <= n <= m <= 62, got m=" + std::to_string(p.m) +
                                 " n=" + std::to_string(p.n));
        }
        if (p.rows.size() != p.n) {
            throw ParameterError("xor_matrix expects " + std::to_string(p.n) + " rows");
        }
        for (auto row : p.rows) {
            if (row >> p.m) {
                throw ParameterError("xor_matrix row wider than m bits");
            }
        }
        input = GroupSpec::homogeneous(2, p.m);
        output = GroupSpec::homogeneous(2, p.n);
    }

    void operator()(const XorCrcParams &p) {
        if (p.m < 1 || p.m > kMaxBits || p.n < 1 || p.n > p.m) {
            throw ParameterError("xor_crc needs 1 <= n <= m <= 62");
        }
        if (poly_degree(p.generator) != static_cast<int>(p.n) || (p.generator & 1) == 0) {
            throw ParameterError("xor_crc generator must have degree n and constant term 1");
        }
        input = GroupSpec::homogeneous(2, p.m);
        output = GroupSpec::homogeneous(2, p.n);
    }

    void operator()(const KfmParams &p) {
        if (!is_prime(p.p) || !is_prime(p.q)) {
            throw ParameterError("kfm needs prime p and q");
        }
        if ((p.p - 1) % p.q != 0) {
            throw ParameterError("kfm needs q | p-1, but " + std::to_string(p.q) + " does not divide " +
                                 std::to_string(p.p - 1));
        }
        if (p.generators.empty()) {
            throw ParameterError("kfm needs at least one generator");
        }
        for (auto g : p.generators) {
            if (g <= 1 || g >= p.p || pow_mod(g, p.q, p.p) != 1) {
                throw ParameterError("kfm generator " + std::to_string(g) + " does not have order q modulo p");
            }
        }
        input = GroupSpec::homogeneous(p.q, p.generators.size());
        output = GroupSpec{p.q};
        tables->powers.resize(p.q);
        std::uint64_t x = 1;
        for (std::uint64_t k = 0; k < p.q; ++k) {
            tables->powers[k] = x;
            tables->power_index[x] = k;
            x = mul_mod(x, p.generators.front(), p.p);
        }
    }

    void operator()(const RsaParams &p) {
        if (!is_prime(p.p) || !is_prime(p.q) || p.p < 3 || p.q < 3 || p.p == p.q) {
            throw ParameterError("rsa needs distinct odd primes p and q");
        }
        if (p.e == 0) {
            throw ParameterError("rsa exponent must be positive");
        }
        std::uint64_t lambda = std::lcm(p.p - 1, p.q - 1);
        if (std::gcd(p.e, lambda) == 1) {
            throw ParameterError("rsa exponent " + std::to_string(p.e) + " is coprime to lambda(N) = " +
                                 std::to_string(lambda) + "; the kernel would be trivial");
        }
        input = GroupSpec{p.p - 1, p.q - 1};
        auto &t = *tables;
        t.modulus = checked_mul(p.p, p.q);
        t.root_p = smallest_primitive_root(p.p);
        t.root_q = smallest_primitive_root(p.q);
        t.log_p = log_table(t.root_p, p.p);
        t.log_q = log_table(t.root_q, p.q);
        t.d_p = std::gcd(p.e, p.p - 1);
        t.d_q = std::gcd(p.e, p.q - 1);
        std::vector<std::uint64_t> orders;
        for (auto o : {(p.p - 1) / t.d_p, (p.q - 1) / t.d_q}) {
            if (o > 1) {
                orders.push_back(o);
            }
        }
        output = GroupSpec(std::move(orders));
    }

    void operator()(const ConstantZeroParams &p) {
        input = p.input;
        output = GroupSpec{2};
    }
};

}  // namespace

std::string_view family_tag(HashFamily family) {
    switch (family) {
        case HashFamily::kXorMatrix:
            return "xor_matrix";
        case HashFamily::kXorCrc:
            return "xor_crc";
        case HashFamily::kKfm:
            return "kfm_exponential";
        case HashFamily::kRsa:
            return "rsa_modular";
        case HashFamily::kConstantZero:
            return "constant_zero";
    }
    return "unknown";
}

HashFamily parse_family(std::string_view tag) {
    std::string t(tag);
    for (auto &c : t) {
        if (c == '-') {
            c = '_';
        }
    }
    if (t == "xor_matrix") return HashFamily::kXorMatrix;
    if (t == "xor_crc" || t == "crc") return HashFamily::kXorCrc;
    if (t == "kfm_exponential" || t == "kfm") return HashFamily::kKfm;
    if (t == "rsa_modular" || t == "rsa") return HashFamily::kRsa;
    if (t == "constant_zero") return HashFamily::kConstantZero;
    throw ParameterError("unknown hash family '" + std::string(tag) + "'");
}

std::uint64_t gf2_poly_mod(std::uint64_t x, std::uint64_t g) {
    const int dg = poly_degree(g);
    if (dg < 0) {
        throw ParameterError("gf2_poly_mod: zero modulus");
    }
    for (int d = poly_degree(x); d >= dg; d = poly_degree(x)) {
        x ^= g << (d - dg);
    }
    return x;
}

HomomorphicHash::HomomorphicHash(HashParams params, std::optional<std::uint64_t> seed)
    : params_(std::move(params)), seed_(seed) {
    Validator v{{}, {}, std::make_shared<detail::HashTables>()};
    std::visit(v, params_);
    input_ = std::move(v.input);
    output_ = std::move(v.output);
    tables_ = std::move(v.tables);
}

HashFamily HomomorphicHash::family() const noexcept { return static_cast<HashFamily>(params_.index()); }

GroupElement HomomorphicHash::operator()(const GroupElement &x) const {
    input_.require(x, "hash input");
    struct Eval {
        const HomomorphicHash &h;
        const GroupElement &x;

        GroupElement operator()(const XorMatrixParams &p) const {
            std::uint64_t bits = pack_bits(x);
            std::uint64_t out = 0;
            for (std::size_t i = 0; i < p.n; ++i) {
                out |= static_cast<std::uint64_t>(std::popcount(p.rows[i] & bits) & 1) << i;
            }
            return unpack_bits(out, p.n);
        }
        GroupElement operator()(const XorCrcParams &p) const {
            return unpack_bits(gf2_poly_mod(pack_bits(x), p.generator), p.n);
        }
        GroupElement operator()(const KfmParams &p) const {
            std::uint64_t acc = 1;
            for (std::size_t i = 0; i < p.generators.size(); ++i) {
                acc = mul_mod(acc, pow_mod(p.generators[i], x[i], p.p), p.p);
            }
            return *h.output_from_representative(acc);
        }
        GroupElement operator()(const RsaParams &p) const {
            std::uint64_t u = h.input_representative(x);
            std::uint64_t v = pow_mod(u, p.e, h.tables_->modulus);
            return *h.output_from_representative(v);
        }
        GroupElement operator()(const ConstantZeroParams &) const { return GroupElement{0}; }
    };
    return std::visit(Eval{*this, x}, params_);
}

std::uint64_t HomomorphicHash::output_representative(const GroupElement &y) const {
    output_.require(y, "hash output");
    const auto &t = *tables_;
    switch (family()) {
        case HashFamily::kXorMatrix:
        case HashFamily::kXorCrc:
        case HashFamily::kConstantZero:
            return pack_bits(y);
        case HashFamily::kKfm:
            return t.powers[y[0]];
        case HashFamily::kRsa: {
            const auto &p = std::get<RsaParams>(params_);
            // Trivial output factors were dropped from the output group; restore them as 0.
            std::size_t slot = 0;
            std::uint64_t kp = 0, kq = 0;
            if ((p.p - 1) / t.d_p > 1) kp = y[slot++];
            if ((p.q - 1) / t.d_q > 1) kq = y[slot++];
            return crt(pow_mod(t.root_p, t.d_p * kp, p.p), p.p, pow_mod(t.root_q, t.d_q * kq, p.q), p.q);
        }
    }
    return 0;
}

std::optional<GroupElement> HomomorphicHash::output_from_representative(std::uint64_t v) const {
    const auto &t = *tables_;
    switch (family()) {
        case HashFamily::kXorMatrix:
        case HashFamily::kXorCrc:
        case HashFamily::kConstantZero: {
            std::size_t n = output_.rank();
            if (n < 64 && (v >> n) != 0) {
                return std::nullopt;
            }
            if (family() == HashFamily::kConstantZero && v != 0) {
                return std::nullopt;
            }
            return unpack_bits(v, n);
        }
        case HashFamily::kKfm: {
            auto it = t.power_index.find(v);
            if (it == t.power_index.end()) {
                return std::nullopt;
            }
            return GroupElement{it->second};
        }
        case HashFamily::kRsa: {
            const auto &p = std::get<RsaParams>(params_);
            std::uint64_t vp = v % p.p, vq = v % p.q;
            if (vp == 0 || vq == 0 || v >= t.modulus) {
                return std::nullopt;
            }
            std::uint64_t lp = t.log_p[vp], lq = t.log_q[vq];
            if (lp % t.d_p != 0 || lq % t.d_q != 0) {
                return std::nullopt;
            }
            GroupElement y;
            if ((p.p - 1) / t.d_p > 1) y.residues.push_back(lp / t.d_p);
            if ((p.q - 1) / t.d_q > 1) y.residues.push_back(lq / t.d_q);
            return y;
        }
    }
    return std::nullopt;
}

std::uint64_t HomomorphicHash::input_representative(const GroupElement &x) const {
    input_.require(x, "hash input");
    if (family() == HashFamily::kRsa) {
        const auto &p = std::get<RsaParams>(params_);
        const auto &t = *tables_;
        return crt(pow_mod(t.root_p, x[0], p.p), p.p, pow_mod(t.root_q, x[1], p.q), p.q);
    }
    if (input_.homogeneous_prime() == 2) {
        return pack_bits(x);
    }
    return input_.flat_index(x);
}

GroupElement hash_eval(const HomomorphicHash &h, const GroupElement &x) { return h(x); }

GroupElement hash_add_outputs(const HomomorphicHash &h, const GroupElement &a, const GroupElement &b) {
    return h.output_group().add(a, b);
}

HomomorphicHash gen_params(const GenRequest &req, std::uint64_t seed) {
    Rng rng(seed);
    switch (req.family) {
        case HashFamily::kXorMatrix: {
            if (req.m < 1 || req.m > kMaxBits || req.n < 1 || req.n > req.m) {
                throw ParameterError("xor_matrix needs 1 <= n <= m <= 62");
            }
            XorMatrixParams p{req.m, req.n, {}};
            for (std::size_t i = 0; i < req.n; ++i) {
                p.rows.push_back(rng.next_u64() & ((std::uint64_t{1} << req.m) - 1));
            }
            return HomomorphicHash(std::move(p), seed);
        }
        case HashFamily::kXorCrc: {
            if (req.m < 1 || req.m > kMaxBits || req.n < 1 || req.n > req.m) {
                throw ParameterError("xor_crc needs 1 <= n <= m <= 62");
            }
            std::uint64_t middle = req.n > 1 ? rng.next_u64() & ((std::uint64_t{1} << req.n) - 2) : 0;
            std::uint64_t g = (std::uint64_t{1} << req.n) | middle | 1;
            return HomomorphicHash(XorCrcParams{req.m, req.n, g}, seed);
        }
        case HashFamily::kKfm: {
            if (!is_prime(req.p) || !is_prime(req.q) || req.p < 3) {
                throw ParameterError("kfm needs prime p and q");
            }
            if ((req.p - 1) % req.q != 0) {
                throw ParameterError("kfm needs q | p-1, but " + std::to_string(req.q) + " does not divide " +
                                     std::to_string(req.p - 1));
            }
            if (req.m < 1) {
                throw ParameterError("kfm needs m >= 1");
            }
            KfmParams p{req.p, req.q, {}};
            while (p.generators.size() < req.m) {
                std::uint64_t r = 2 + rng.uniform_below(req.p - 2);
                std::uint64_t g = pow_mod(r, (req.p - 1) / req.q, req.p);
                if (g != 1) {
                    p.generators.push_back(g);
                }
            }
            return HomomorphicHash(std::move(p), seed);
        }
        case HashFamily::kRsa:
            return HomomorphicHash(RsaParams{req.p, req.q, req.e}, seed);
        case HashFamily::kConstantZero:
            return HomomorphicHash(ConstantZeroParams{GroupSpec(req.input_orders)}, seed);
    }
    throw ParameterError("unknown family");
}

}  // namespace hsphash

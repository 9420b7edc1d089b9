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

#include "hsphash/state_vector.h"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>

#include "hsphash/errors.h"
#include "hsphash/number_theory.h"

namespace hsphash {
namespace {

GroupSpec combine(const std::vector<GroupSpec> &registers) {
    GroupSpec out;
    for (const auto &r : registers) {
        out = out.product(r);
    }
    return out;
}

void check_bound(std::uint64_t size, std::uint64_t bound, const char *what) {
    if (size > bound) {
        throw ResourceError(std::string(what) + ": " + std::to_string(size) + " amplitudes exceed statevector bound " +
                            std::to_string(bound));
    }
}

}  // namespace

StateVector::StateVector(std::vector<GroupSpec> registers, std::vector<Amplitude> amplitudes)
    : registers_(std::move(registers)), group_(combine(registers_)), amps_(std::move(amplitudes)) {
    if (amps_.size() != group_.total_order()) {
        throw StructuralError("state has " + std::to_string(amps_.size()) + " amplitudes for a group of order " +
                              std::to_string(group_.total_order()));
    }
}

StateVector StateVector::basis_state(const GroupSpec &spec, const GroupElement &g, std::uint64_t bound) {
    check_bound(spec.total_order(), bound, "basis_state");
    std::vector<Amplitude> amps(spec.total_order());
    amps[spec.flat_index(g)] = 1.0;
    return StateVector({spec}, std::move(amps));
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

StateVector uniform_superposition(const GroupSpec &spec, std::uint64_t bound) {
    check_bound(spec.total_order(), bound, "uniform_superposition");
    const double a = 1.0 / std::sqrt(static_cast<double>(spec.total_order()));
    return StateVector({spec}, std::vector<Amplitude>(spec.total_order(), Amplitude{a, 0.0}));
}

StateVector apply_hash_oracle(const StateVector &state, const HomomorphicHash &h, std::uint64_t bound) {
    if (state.registers().size() != 1 || !(state.registers()[0] == h.input_group())) {
        throw StructuralError("hash oracle expects a single register over " + h.input_group().str());
    }
    const GroupSpec &in = h.input_group();
    const GroupSpec &out = h.output_group();
    const std::uint64_t size = checked_mul(in.total_order(), out.total_order());
    check_bound(size, bound, "apply_hash_oracle");
    std::vector<Amplitude> amps(size);
    const auto &src = state.amplitudes();
    for (std::uint64_t i = 0; i < in.total_order(); ++i) {
        if (src[i] == Amplitude{}) {
            continue;
        }
        amps[i * out.total_order() + out.flat_index(h(in.element_at(i)))] = src[i];
    }
    return StateVector({in, out}, std::move(amps));
}

MeasurementResult measure_register(const StateVector &state, std::size_t which, Rng &rng) {
    const auto &regs = state.registers();
    if (which >= regs.size()) {
        throw StructuralError("measure_register: no register " + std::to_string(which));
    }
    std::uint64_t before = 1, after = 1;
    for (std::size_t r = 0; r < which; ++r) {
        before *= regs[r].total_order();
    }
    for (std::size_t r = which + 1; r < regs.size(); ++r) {
        after *= regs[r].total_order();
    }
    const std::uint64_t width = regs[which].total_order();
    const auto &amps = state.amplitudes();

    std::vector<double> prob(width, 0.0);
    for (std::uint64_t b = 0; b < before; ++b) {
        for (std::uint64_t v = 0; v < width; ++v) {
            const std::uint64_t base = (b * width + v) * after;
            for (std::uint64_t a = 0; a < after; ++a) {
                prob[v] += std::norm(amps[base + a]);
            }
        }
    }
    double total = 0.0;
    for (double p : prob) {
        total += p;
    }
    const double u = rng.uniform_real() * total;
    std::uint64_t outcome = width;
    double acc = 0.0;
    for (std::uint64_t v = 0; v < width; ++v) {
        if (prob[v] <= 0.0) {
            continue;
        }
        outcome = v;
        acc += prob[v];
        if (u < acc) {
            break;
        }
    }
    if (outcome == width) {
        throw StructuralError("measure_register: zero-norm state");
    }

    std::vector<GroupSpec> rest;
    for (std::size_t r = 0; r < regs.size(); ++r) {
        if (r != which) {
            rest.push_back(regs[r]);
        }
    }
    const double scale = 1.0 / std::sqrt(prob[outcome]);
    std::vector<Amplitude> collapsed(before * after);
    for (std::uint64_t b = 0; b < before; ++b) {
        const std::uint64_t base = (b * width + outcome) * after;
        for (std::uint64_t a = 0; a < after; ++a) {
            collapsed[b * after + a] = amps[base + a] * scale;
        }
    }
    return {regs[which].element_at(outcome), StateVector(std::move(rest), std::move(collapsed))};
}

StateVector qft_group(const StateVector &state) {
    if (state.registers().size() != 1) {
        throw StructuralError("qft_group expects a single-register state");
    }
    const GroupSpec &g = state.group();
    std::vector<Amplitude> cur = state.amplitudes();
    std::vector<Amplitude> next(cur.size());

    std::uint64_t stride = 1;  // product of the orders after factor j
    for (std::size_t j = g.rank(); j-- > 0;) {
        const std::uint64_t n = g.orders()[j];
        const std::uint64_t block = n * stride;
        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        std::vector<Amplitude> roots(n);
        for (std::uint64_t t = 0; t < n; ++t) {
            roots[t] = CharacterValue::from_fraction(t, n).value() * scale;
        }
        for (std::uint64_t hi = 0; hi < cur.size(); hi += block) {
            for (std::uint64_t lo = 0; lo < stride; ++lo) {
                for (std::uint64_t h = 0; h < n; ++h) {
                    Amplitude acc{};
                    for (std::uint64_t x = 0; x < n; ++x) {
                        acc += roots[(h * x) % n] * cur[hi + x * stride + lo];
                    }
                    next[hi + h * stride + lo] = acc;
                }
            }
        }
        std::swap(cur, next);
        stride = block;
    }
    return StateVector(state.registers(), std::move(cur));
}

double distance_up_to_phase(const StateVector &a, const StateVector &b) {
    if (!(a.group() == b.group())) {
        throw StructuralError("distance_up_to_phase: states over different groups");
    }
    const auto &x = a.amplitudes();
    const auto &y = b.amplitudes();
    Amplitude overlap{};
    for (std::size_t i = 0; i < x.size(); ++i) {
        overlap += std::conj(y[i]) * x[i];
    }
    Amplitude phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Amplitude{1.0, 0.0};
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        worst = std::max(worst, std::abs(x[i] - phase * y[i]));
    }
    return worst;
}

void write_state_text(std::ostream &out, const StateVector &state, double threshold) {
    const GroupSpec &g = state.group();
    const auto &amps = state.amplitudes();
    auto flags = out.flags();
    out << std::setprecision(17);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (std::abs(amps[i]) < threshold) {
            continue;
        }
        out << g.element_at(i).str() << " " << amps[i].real() << " " << amps[i].imag() << "\n";
    }
    out.flags(flags);
}

}  // namespace hsphash

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

// hsphash: generate homomorphic hash instances, run the hidden-subgroup
// collision attack against them, and re-verify or audit the results.
//
// Exit codes: 0 verified, 1 verification failure, 2 incomplete attack,
// 64 usage or parameter error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hsphash/attack.h"
#include "hsphash/errors.h"
#include "hsphash/io.h"
#include "hsphash/oracle.h"
#include "hsphash/state_vector.h"

namespace {

using namespace hsphash;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitIncomplete = 2;
constexpr int kExitUsage = 64;

void emit(const std::optional<std::string> &path, const std::string &text) {
    if (path) {
        io::write_text_file(*path, text);
    } else {
        std::cout << text;
    }
}

std::optional<Backend> backend_option(const std::string &tag) {
    if (tag == "auto") {
        return std::nullopt;
    }
    return parse_backend(tag);
}

struct GenArgs {
    std::string family;
    std::size_t m = 0, n = 0;
    std::uint64_t p = 0, q = 0, e = 0;
    std::vector<std::uint64_t> orders;
    std::uint64_t seed = 0;
    std::optional<std::string> out;
};

int cmd_gen(const GenArgs &a) {
    GenRequest req;
    req.family = parse_family(a.family);
    req.m = a.m;
    req.n = a.n;
    req.p = a.p;
    req.q = a.q;
    req.e = a.e;
    req.input_orders = a.orders;
    emit(a.out, io::dump(io::instance_to_json(gen_params(req, a.seed))));
    return kExitOk;
}

struct AttackArgs {
    std::string instance;
    std::string backend = "auto";
    AttackConfig cfg;
    unsigned block_bits = 0;
    std::optional<std::string> out;
    bool timing = false;
    std::optional<std::string> dump_state;
};

int finish_attack(const HomomorphicHash &h, const AttackConfig &cfg, const std::optional<std::string> &out,
                  bool timing) {
    AttackReport report = run_attack(h, cfg);
    emit(out, io::dump(io::report_to_json(h, cfg, report, timing)));
    std::cerr << status_tag(report.status) << ": " << report.message << " (samples " << report.samples_used
              << ", |K| = " << report.kernel_order << ", " << report.wall_time_seconds << " s)\n";
    return report.verified ? kExitOk : kExitIncomplete;
}

int cmd_attack(const AttackArgs &a) {
    const HomomorphicHash h = io::instance_from_json(io::read_json_file(a.instance));
    AttackConfig cfg = a.cfg;
    cfg.backend = backend_option(a.backend);
    if (a.block_bits > 0) {
        cfg.block_bits = a.block_bits;
    }
    cfg.validate();
    if (a.dump_state) {
        // Debug dump of one pipeline run, drawn from an independent stream.
        std::ofstream dump(*a.dump_state);
        if (!dump) {
            throw ParameterError("cannot write '" + *a.dump_state + "'");
        }
        Rng rng = Rng(cfg.seed).split();
        sample_orthogonal(h, cfg.backend.value_or(choose_backend(h, cfg.limits)), rng, cfg.limits,
                          [&](std::string_view stage, const StateVector &state) {
                              dump << "# stage " << stage << " over " << state.group().str() << "\n";
                              write_state_text(dump, state);
                          });
    }
    return finish_attack(h, cfg, a.out, a.timing);
}

int cmd_verify(const std::string &instance_path, const std::string &report_path) {
    const HomomorphicHash h = io::instance_from_json(io::read_json_file(instance_path));
    const auto json = io::read_json_file(report_path);
    io::ParsedReport parsed;
    try {
        parsed = io::report_from_json(json, h);
    } catch (const Error &e) {
        std::cout << "FAIL report does not parse against the instance: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    const auto &r = parsed.report;
    const auto zero = h.output_group().identity();
    std::vector<std::string> failures;
    for (const auto &y : r.kernel_basis.generators) {
        if (h(y) != zero) {
            failures.push_back("kernel element " + y.str() + " hashes to " + h(y).str() + ", not the identity");
        }
    }
    for (std::size_t i = 0; i < r.forged_pairs.size(); ++i) {
        const auto &p = r.forged_pairs[i];
        if (p.x == p.x_prime) {
            failures.push_back("forged pair " + std::to_string(i) + " repeats its input " + p.x.str());
        } else if (h(p.x) != h(p.x_prime)) {
            failures.push_back("forged pair " + std::to_string(i) + ": H" + p.x.str() + " = " + h(p.x).str() +
                               " but H" + p.x_prime.str() + " = " + h(p.x_prime).str());
        }
    }
    if (failures.empty()) {
        std::cout << "ok: " << r.kernel_basis.generators.size() << " kernel generators and " << r.forged_pairs.size()
                  << " forged pairs re-verified\n";
        return kExitOk;
    }
    for (const auto &f : failures) {
        std::cout << "FAIL " << f << "\n";
    }
    return kExitVerifyFailed;
}

struct AuditArgs {
    std::string instance;
    std::string backend = "coset";
    std::size_t draws = 0;
    std::uint64_t seed = 0;
    double significance = 0.001;
};

int cmd_audit(const AuditArgs &a) {
    const HomomorphicHash h = io::instance_from_json(io::read_json_file(a.instance));
    const auto truth = kernel_bruteforce(h);
    const std::size_t draws = a.draws ? a.draws : std::max<std::size_t>(1000, 60 * truth.orthogonal_elements.size());
    Rng rng(a.seed);
    AuditVerdict v;
    if (a.backend == "biased") {
        // Negative control: favours the identity on half of all draws.
        OrthogonalSampler sampler(h, choose_backend(h));
        const auto id = h.input_group().identity();
        v = audit_samples(
            truth.orthogonal_elements,
            [&](Rng &r) { return r.uniform_below(2) == 0 ? id : sampler.sample(r).orthogonal_sample; }, draws, rng,
            a.significance);
    } else {
        v = distribution_audit(h, parse_backend(a.backend), draws, rng, a.significance);
    }
    std::cout << (v.passed ? "pass" : "fail") << ": draws=" << v.draws << " cells=" << v.cells
              << " out_of_support=" << v.out_of_support << " chi2=" << v.chi_square << " dof=" << v.dof
              << " p=" << v.p_value << " alpha=" << v.significance << "\n";
    return v.passed ? kExitOk : kExitVerifyFailed;
}

int cmd_run(const std::string &config_path, bool timing) {
    const auto cfg = io::run_config_from_json(io::read_json_file(config_path));
    const HomomorphicHash h = cfg.instance_path ? io::instance_from_json(io::read_json_file(*cfg.instance_path))
                                                : gen_params(*cfg.generate, cfg.generate_seed);
    return finish_attack(h, cfg.attack, cfg.report_path, timing);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Hidden-subgroup collision attack on homomorphic hash functions"};
    app.require_subcommand(1);

    GenArgs gen;
    auto *gen_cmd = app.add_subcommand("gen", "Generate a hash instance file");
    gen_cmd->add_option("--family", gen.family, "xor-matrix | xor-crc | kfm | rsa | constant-zero")->required();
    gen_cmd->add_option("--m", gen.m, "input bits (xor families) or generator count (kfm)");
    gen_cmd->add_option("--n", gen.n, "output bits (xor families)");
    gen_cmd->add_option("--p", gen.p, "prime p (kfm, rsa)");
    gen_cmd->add_option("--q", gen.q, "prime q (kfm, rsa)");
    gen_cmd->add_option("--e", gen.e, "rsa exponent");
    gen_cmd->add_option("--orders", gen.orders, "input group orders (constant-zero)");
    gen_cmd->add_option("--seed", gen.seed, "generator seed");
    gen_cmd->add_option("--out,-o", gen.out, "output path (default stdout)");

    AttackArgs attack;
    auto *attack_cmd = app.add_subcommand("attack", "Run the collision attack and write a report");
    attack_cmd->add_option("instance", attack.instance, "instance file")->required();
    attack_cmd->add_option("--seed", attack.cfg.seed, "attack seed");
    attack_cmd->add_option("--backend", attack.backend, "auto | statevector | coset")
        ->check(CLI::IsMember({"auto", "statevector", "coset"}));
    attack_cmd->add_option("--patience", attack.cfg.patience, "non-growing samples before solving");
    attack_cmd->add_option("--max-samples", attack.cfg.max_samples, "sample budget");
    attack_cmd->add_option("--collision-limit", attack.cfg.collision_limit, "forged pairs to emit");
    attack_cmd->add_flag("--early-exit", attack.cfg.early_exit, "stop at the first kernel element");
    attack_cmd->add_option("--block-bits", attack.block_bits, "flag collisions with a component >= 2^bits");
    attack_cmd->add_option("--state-bound", attack.cfg.limits.state_bound, "max statevector amplitudes");
    attack_cmd->add_option("--enumeration-bound", attack.cfg.limits.enumeration_bound, "max enumerated elements");
    attack_cmd->add_option("--out,-o", attack.out, "report path (default stdout)");
    attack_cmd->add_flag("--timing", attack.timing, "include wall time in the report");
    attack_cmd->add_option("--dump-state", attack.dump_state, "debug: write the states of one pipeline run");

    std::string verify_instance, verify_report;
    auto *verify_cmd = app.add_subcommand("verify", "Re-verify a report against its instance");
    verify_cmd->add_option("instance", verify_instance, "instance file")->required();
    verify_cmd->add_option("report", verify_report, "report file")->required();

    AuditArgs audit;
    auto *audit_cmd = app.add_subcommand("audit", "Chi-square audit of a sampler against brute force");
    audit_cmd->add_option("instance", audit.instance, "instance file")->required();
    audit_cmd->add_option("--draws", audit.draws, "number of samples (default max(1000, 60 |K^perp|))");
    audit_cmd->add_option("--backend", audit.backend, "statevector | coset | biased (negative control)")
        ->check(CLI::IsMember({"statevector", "coset", "biased"}));
    audit_cmd->add_option("--seed", audit.seed, "sampling seed");
    audit_cmd->add_option("--significance", audit.significance, "test significance level");

    std::string run_config;
    bool run_timing = false;
    auto *run_cmd = app.add_subcommand("run", "Run an attack described by a run-config file");
    run_cmd->add_option("config", run_config, "run config file")->required();
    run_cmd->add_flag("--timing", run_timing, "include wall time in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen);
        if (*attack_cmd) return cmd_attack(attack);
        if (*verify_cmd) return cmd_verify(verify_instance, verify_report);
        if (*audit_cmd) return cmd_audit(audit);
        if (*run_cmd) return cmd_run(run_config, run_timing);
    } catch (const hsphash::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

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

#include "hsphash/io.h"

#include <fstream>
#include <sstream>

#include "hsphash/errors.h"

namespace hsphash::io {
namespace {

std::string to_hex(std::uint64_t v) {
    std::ostringstream out;
    out << std::hex << v;
    return out.str();
}

std::uint64_t from_hex(const std::string &s, std::size_t width) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(s, &used, 16);
    } catch (const std::exception &) {
        throw ParameterError("invalid hex string '" + s + "'");
    }
    if (used != s.size()) {
        throw ParameterError("invalid hex string '" + s + "'");
    }
    if (width < 64 && (v >> width) != 0) {
        throw ParameterError("hex value '" + s + "' is wider than " + std::to_string(width) + " bits");
    }
    return v;
}

std::string to_dec(std::uint64_t v) { return std::to_string(v); }

std::uint64_t from_dec(const Json &j) {
    if (j.is_number_unsigned()) {
        return j.get<std::uint64_t>();
    }
    const auto s = j.get<std::string>();
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(s, &used, 10);
    } catch (const std::exception &) {
        throw ParameterError("invalid decimal string '" + s + "'");
    }
    if (used != s.size() || s.empty() || s[0] == '-' || s[0] == '+') {
        throw ParameterError("invalid decimal string '" + s + "'");
    }
    return v;
}

void check_header(const Json &j, const char *kind) {
    if (!j.is_object()) {
        throw ParameterError(std::string("expected a JSON object for ") + kind);
    }
    if (j.value("schema_version", 0) != kSchemaVersion) {
        throw ParameterError("unsupported schema_version in " + std::string(kind));
    }
    if (j.value("kind", std::string{}) != kind) {
        throw ParameterError("expected kind '" + std::string(kind) + "'");
    }
}

Json params_to_json(const HashParams &params) {
    struct Visitor {
        Json operator()(const XorMatrixParams &p) const {
            Json rows = Json::array();
            for (auto r : p.rows) {
                rows.push_back(to_hex(r));
            }
            return Json{{"m", p.m}, {"n", p.n}, {"width", p.m}, {"rows", rows}};
        }
        Json operator()(const XorCrcParams &p) const {
            return Json{{"m", p.m}, {"n", p.n}, {"width", p.n + 1}, {"generator", to_hex(p.generator)}};
        }
        Json operator()(const KfmParams &p) const {
            Json gens = Json::array();
            for (auto g : p.generators) {
                gens.push_back(to_dec(g));
            }
            return Json{{"p", to_dec(p.p)}, {"q", to_dec(p.q)}, {"generators", gens}};
        }
        Json operator()(const RsaParams &p) const {
            return Json{{"p", to_dec(p.p)}, {"q", to_dec(p.q)}, {"e", to_dec(p.e)}, {"modulus", to_dec(p.p * p.q)}};
        }
        Json operator()(const ConstantZeroParams &p) const { return Json{{"input_orders", p.input.orders()}}; }
    };
    return std::visit(Visitor{}, params);
}

HashParams params_from_json(HashFamily family, const Json &j) {
    switch (family) {
        case HashFamily::kXorMatrix: {
            XorMatrixParams p{j.at("m").get<std::size_t>(), j.at("n").get<std::size_t>(), {}};
            const auto width = j.at("width").get<std::size_t>();
            if (width != p.m) {
                throw ParameterError("xor_matrix row width must equal m");
            }
            for (const auto &r : j.at("rows")) {
                p.rows.push_back(from_hex(r.get<std::string>(), width));
            }
            return p;
        }
        case HashFamily::kXorCrc: {
            XorCrcParams p{j.at("m").get<std::size_t>(), j.at("n").get<std::size_t>(), 0};
            const auto width = j.at("width").get<std::size_t>();
            if (width != p.n + 1) {
                throw ParameterError("xor_crc generator width must be n + 1");
            }
            p.generator = from_hex(j.at("generator").get<std::string>(), width);
            return p;
        }
        case HashFamily::kKfm: {
            KfmParams p{from_dec(j.at("p")), from_dec(j.at("q")), {}};
            for (const auto &g : j.at("generators")) {
                p.generators.push_back(from_dec(g));
            }
            return p;
        }
        case HashFamily::kRsa: {
            RsaParams p{from_dec(j.at("p")), from_dec(j.at("q")), from_dec(j.at("e"))};
            if (j.contains("modulus") && from_dec(j.at("modulus")) != p.p * p.q) {
                throw ParameterError("rsa modulus does not equal p*q");
            }
            return p;
        }
        case HashFamily::kConstantZero:
            return ConstantZeroParams{GroupSpec(j.at("input_orders").get<std::vector<std::uint64_t>>())};
    }
    throw ParameterError("unknown family");
}

// Wraps nlohmann exceptions (missing keys, wrong types) as ParameterError.
template <typename F>
auto guarded(const char *what, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception &e) {
        throw ParameterError(std::string("malformed ") + what + ": " + e.what());
    }
}

}  // namespace

Json group_to_json(const GroupSpec &spec) { return Json{{"orders", spec.orders()}}; }

GroupSpec group_from_json(const Json &j) {
    return guarded("group", [&] { return GroupSpec(j.at("orders").get<std::vector<std::uint64_t>>()); });
}

Json element_to_json(const GroupElement &e) { return Json(e.residues); }

GroupElement element_from_json(const Json &j, const GroupSpec &spec) {
    GroupElement e = guarded("element", [&] { return GroupElement(j.get<std::vector<std::uint64_t>>()); });
    spec.require(e);
    return e;
}

Json instance_to_json(const HomomorphicHash &h) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "hash_instance";
    j["family"] = family_tag(h.family());
    j["seed"] = h.seed() ? Json(*h.seed()) : Json(nullptr);
    j["input_group"] = group_to_json(h.input_group());
    j["output_group"] = group_to_json(h.output_group());
    j["params"] = params_to_json(h.params());
    return j;
}

HomomorphicHash instance_from_json(const Json &j) {
    return guarded("instance", [&] {
        check_header(j, "hash_instance");
        const HashFamily family = parse_family(j.at("family").get<std::string>());
        std::optional<std::uint64_t> seed;
        if (j.contains("seed") && !j.at("seed").is_null()) {
            seed = j.at("seed").get<std::uint64_t>();
        }
        HomomorphicHash h(params_from_json(family, j.at("params")), seed);
        if (j.contains("input_group") && !(group_from_json(j.at("input_group")) == h.input_group())) {
            throw ParameterError("instance input_group disagrees with its parameters");
        }
        if (j.contains("output_group") && !(group_from_json(j.at("output_group")) == h.output_group())) {
            throw ParameterError("instance output_group disagrees with its parameters");
        }
        return h;
    });
}

Json config_to_json(const AttackConfig &cfg) {
    Json j;
    j["backend"] = cfg.backend ? Json(backend_tag(*cfg.backend)) : Json("auto");
    j["seed"] = cfg.seed;
    j["patience"] = cfg.patience;
    j["max_samples"] = cfg.max_samples;
    j["collision_limit"] = cfg.collision_limit;
    j["early_exit"] = cfg.early_exit;
    j["block_bits"] = cfg.block_bits ? Json(*cfg.block_bits) : Json(nullptr);
    j["state_bound"] = cfg.limits.state_bound;
    j["enumeration_bound"] = cfg.limits.enumeration_bound;
    return j;
}

AttackConfig config_from_json(const Json &j) {
    return guarded("attack config", [&] {
        AttackConfig cfg;
        const auto backend = j.value("backend", std::string("auto"));
        if (backend != "auto") {
            cfg.backend = parse_backend(backend);
        }
        cfg.seed = j.value("seed", cfg.seed);
        cfg.patience = j.value("patience", cfg.patience);
        cfg.max_samples = j.value("max_samples", cfg.max_samples);
        cfg.collision_limit = j.value("collision_limit", cfg.collision_limit);
        cfg.early_exit = j.value("early_exit", cfg.early_exit);
        if (j.contains("block_bits") && !j.at("block_bits").is_null()) {
            cfg.block_bits = j.at("block_bits").get<unsigned>();
        }
        cfg.limits.state_bound = j.value("state_bound", cfg.limits.state_bound);
        cfg.limits.enumeration_bound = j.value("enumeration_bound", cfg.limits.enumeration_bound);
        cfg.validate();
        return cfg;
    });
}

Json report_to_json(const HomomorphicHash &h, const AttackConfig &cfg, const AttackReport &report, bool with_timing) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "attack_report";
    j["instance"] = Json{{"family", family_tag(h.family())},
                         {"input_group", group_to_json(h.input_group())},
                         {"output_group", group_to_json(h.output_group())}};
    Json config = config_to_json(cfg);
    config["backend"] = backend_tag(report.backend);
    j["config"] = config;
    j["status"] = status_tag(report.status);
    j["verified"] = report.verified;
    j["message"] = report.message;
    j["samples_used"] = report.samples_used;
    Json samples = Json::array();
    for (const auto &t : report.sample_traces) {
        samples.push_back(
            Json{{"hash_value", element_to_json(t.measured_hash_value)}, {"orthogonal", element_to_json(t.orthogonal_sample)}});
    }
    j["samples"] = samples;
    Json gens = Json::array();
    for (const auto &g : report.kernel_basis.generators) {
        gens.push_back(element_to_json(g));
    }
    j["kernel"] = Json{{"order", to_dec(report.kernel_order)}, {"generators", gens}};
    Json pairs = Json::array();
    for (const auto &p : report.forged_pairs) {
        const auto value = h(p.x);
        Json pj{{"x", element_to_json(p.x)},
                {"x_prime", element_to_json(p.x_prime)},
                {"hash", element_to_json(value)},
                {"hash_representative", to_dec(h.output_representative(value))}};
        if (p.valid_block) {
            pj["valid_block"] = *p.valid_block;
        }
        pairs.push_back(pj);
    }
    j["forged_pairs"] = pairs;
    if (with_timing) {
        j["wall_time_seconds"] = report.wall_time_seconds;
    }
    return j;
}

ParsedReport report_from_json(const Json &j, const HomomorphicHash &h) {
    return guarded("report", [&] {
        check_header(j, "attack_report");
        const auto &inst = j.at("instance");
        if (parse_family(inst.at("family").get<std::string>()) != h.family() ||
            !(group_from_json(inst.at("input_group")) == h.input_group()) ||
            !(group_from_json(inst.at("output_group")) == h.output_group())) {
            throw ParameterError("report was produced for a different instance");
        }
        ParsedReport out;
        out.config = config_from_json(j.at("config"));
        AttackReport &r = out.report;
        r.backend = out.config.backend.value_or(Backend::kStatevector);
        r.status = parse_status(j.at("status").get<std::string>());
        r.verified = j.at("verified").get<bool>();
        r.message = j.value("message", std::string{});
        r.samples_used = j.at("samples_used").get<std::size_t>();
        for (const auto &s : j.at("samples")) {
            r.sample_traces.push_back({element_from_json(s.at("hash_value"), h.output_group()),
                                       element_from_json(s.at("orthogonal"), h.input_group()), r.backend});
        }
        std::vector<GroupElement> gens;
        for (const auto &g : j.at("kernel").at("generators")) {
            gens.push_back(element_from_json(g, h.input_group()));
        }
        r.kernel_basis = SubgroupBasis(h.input_group(), std::move(gens));
        r.kernel_order = from_dec(j.at("kernel").at("order"));
        for (const auto &p : j.at("forged_pairs")) {
            ForgedPair pair{element_from_json(p.at("x"), h.input_group()),
                            element_from_json(p.at("x_prime"), h.input_group()), std::nullopt};
            if (p.contains("valid_block")) {
                pair.valid_block = p.at("valid_block").get<bool>();
            }
            r.forged_pairs.push_back(std::move(pair));
        }
        r.wall_time_seconds = j.value("wall_time_seconds", 0.0);
        return out;
    });
}

Json run_config_to_json(const RunConfig &cfg) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "run_config";
    if (cfg.instance_path) {
        j["instance_path"] = *cfg.instance_path;
    }
    if (cfg.generate) {
        const auto &g = *cfg.generate;
        j["generate"] = Json{{"family", family_tag(g.family)},
                             {"m", g.m},
                             {"n", g.n},
                             {"p", to_dec(g.p)},
                             {"q", to_dec(g.q)},
                             {"e", to_dec(g.e)},
                             {"input_orders", g.input_orders},
                             {"seed", cfg.generate_seed}};
    }
    j["attack"] = config_to_json(cfg.attack);
    if (cfg.report_path) {
        j["report_path"] = *cfg.report_path;
    }
    return j;
}

RunConfig run_config_from_json(const Json &j) {
    return guarded("run config", [&] {
        check_header(j, "run_config");
        RunConfig cfg;
        if (j.contains("instance_path")) {
            cfg.instance_path = j.at("instance_path").get<std::string>();
        }
        if (j.contains("generate")) {
            const auto &g = j.at("generate");
            GenRequest req;
            req.family = parse_family(g.at("family").get<std::string>());
            req.m = g.value("m", std::size_t{0});
            req.n = g.value("n", std::size_t{0});
            req.p = g.contains("p") ? from_dec(g.at("p")) : 0;
            req.q = g.contains("q") ? from_dec(g.at("q")) : 0;
            req.e = g.contains("e") ? from_dec(g.at("e")) : 0;
            req.input_orders = g.value("input_orders", std::vector<std::uint64_t>{});
            cfg.generate = req;
            cfg.generate_seed = g.value("seed", std::uint64_t{0});
        }
        if (!cfg.instance_path && !cfg.generate) {
            throw ParameterError("run config needs instance_path or generate");
        }
        cfg.attack = config_from_json(j.at("attack"));
        if (j.contains("report_path")) {
            cfg.report_path = j.at("report_path").get<std::string>();
        }
        return cfg;
    });
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParameterError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParameterError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParameterError("cannot write '" + path + "'");
    }
    out << text;
}

}  // namespace hsphash::io

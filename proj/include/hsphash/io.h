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

#include <optional>
#include <string>

#include <json.hpp>

#include "hsphash/attack.h"
#include "hsphash/hash.h"

namespace hsphash::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json group_to_json(const GroupSpec &spec);
GroupSpec group_from_json(const Json &j);

Json element_to_json(const GroupElement &e);
GroupElement element_from_json(const Json &j, const GroupSpec &spec);

/// Instance file: family tag, groups, seed and explicit parameters. Bit rows
/// are hex strings with an explicit width; integers are decimal strings.
Json instance_to_json(const HomomorphicHash &h);
HomomorphicHash instance_from_json(const Json &j);

Json config_to_json(const AttackConfig &cfg);
AttackConfig config_from_json(const Json &j);

/// Report file. Wall time is written only when `with_timing` is set, so
/// that reports are reproducible byte for byte.
Json report_to_json(const HomomorphicHash &h, const AttackConfig &cfg, const AttackReport &report,
                    bool with_timing = false);

struct ParsedReport {
    AttackConfig config;
    AttackReport report;
};
/// Reads a report back against its instance; throws on schema or membership errors.
ParsedReport report_from_json(const Json &j, const HomomorphicHash &h);

/// A file-backed attack run: where the instance comes from, how to attack it
/// and where to write results.
struct RunConfig {
    std::optional<std::string> instance_path;
    std::optional<GenRequest> generate;  // used when instance_path is absent
    std::uint64_t generate_seed = 0;
    AttackConfig attack;
    std::optional<std::string> report_path;

    bool operator==(const RunConfig &) const = default;
};

Json run_config_to_json(const RunConfig &cfg);
RunConfig run_config_from_json(const Json &j);

/// Pretty-printed JSON with a trailing newline.
std::string dump(const Json &j);
Json read_json_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

}  // namespace hsphash::io

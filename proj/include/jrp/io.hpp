// Copyright 2026 The jrp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "jrp/baseline.hpp"
#include "jrp/eoq.hpp"
#include "jrp/policy.hpp"
#include "jrp/solver.hpp"

namespace jrp {

using Json = nlohmann::json;

// Malformed documents surface as ValidationError.
Json instance_to_json(const Instance& instance);
Instance instance_from_json(const Json& doc);

Json report_to_json(const CostReport& report);
CostReport report_from_json(const Json& doc);

// `report`, when given, is embedded under "cost".
Json policy_to_json(const ScaledGridPolicy& policy,
                    const CostReport* report = nullptr);
// Accepts a bare policy document or a solve result carrying "policy".
ScaledGridPolicy policy_from_json(const Json& doc);

Json certificate_to_json(const Certificate& certificate);
Json result_to_json(const SolveResult& result);
SolveResult result_from_json(const Json& doc);

Json baseline_to_json(const BaselineResult& baseline);

Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& doc);
Instance read_instance(const std::filesystem::path& path);

}  // namespace jrp

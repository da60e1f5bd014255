// Copyright 2026 The cvgup Authors
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

#ifndef CVGUP_REPORT_H
#define CVGUP_REPORT_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cvgup/criteria.h"
#include "cvgup/cv_state.h"
#include "cvgup/pipeline.h"

namespace cvgup {

inline constexpr std::string_view kVersion = "0.1.0";

enum class OutputFormat { Json, Csv };

struct RunConfig {
    GridOptions grid;
    double eps_tail = kDefaultTailTolerance;
    double tau = kDefaultVerdictTolerance;
    std::uint64_t seed = 0;
    std::optional<std::string> out;
    OutputFormat format = OutputFormat::Json;
};

using Json = nlohmann::ordered_json;

/// "%.17g" rendering; throws Error on non-finite values.
std::string format_number(double x);

/// Two-space indented JSON with every float printed by format_number, so
/// values survive a text round trip bit for bit.
std::string dump_json(const Json &j);

Json to_json(const RunConfig &c);
Json to_json(const CriterionResult &r);
Json to_json(const Axis &a);
/// The axis the state's position amplitudes were sampled on.
Json sampling_json(const State &s);

/// beta,lhs,bound,margin,eta1,eta2,verdict
std::string csv_header();
std::string csv_row(const CriterionResult &r, const GupEntropies &g);

}  // namespace cvgup

#endif  // CVGUP_REPORT_H

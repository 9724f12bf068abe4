// Copyright 2026 The rykick Authors
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


#ifndef RYKICK_TOOLS_OUTPUT_HPP
#define RYKICK_TOOLS_OUTPUT_HPP

#include <filesystem>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rykick/feasibility.hpp"
#include "rykick/phase_dynamics.hpp"
#include "rykick/waveform.hpp"

namespace rykick::cli {

using Json = nlohmann::ordered_json;
using Cell = std::variant<double, long long, std::string>;

/// CSV file with RFC-4180 quoting and every real number as %.12e.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
  void row(const std::vector<Cell>& cells);

 private:
  std::ofstream out_;
  std::size_t columns_;
};

std::string format_real(double v);

/// Pretty-printed JSON followed by a newline.
void write_json(const std::filesystem::path& path, const Json& j);

/// Non-finite values become null so the output stays valid JSON.
Json real(double v);

Json to_json(const GateReport& report);
Json to_json(const FeasibilityCheck& check);
Json to_json(const Waveform& waveform);
Waveform waveform_from_json(const nlohmann::json& j);

/// Field sampled on slice edges (slices) or a uniform grid (Fourier).
void write_waveform_csv(const std::filesystem::path& path, const Waveform& waveform, int samples = 1000);

/// Re and Im of beta for every pair state and mode on the sampling grid.
void write_trajectories_csv(const std::filesystem::path& path, const TrajectoryRecord& record);

}  // namespace rykick::cli

#endif  // RYKICK_TOOLS_OUTPUT_HPP

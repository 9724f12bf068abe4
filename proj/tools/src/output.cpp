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


#include "output.hpp"

#include <cmath>
#include <cstdio>

#include "rykick/error.hpp"

namespace rykick::cli {
namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kValidation, "cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : out_(open_for_write(path)), columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << quote(header[i]);
  out_ << '\n';
}

void CsvWriter::row(const std::vector<Cell>& cells) {
  if (cells.size() != columns_) throw std::logic_error("csv row width does not match header");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    if (const double* d = std::get_if<double>(&cells[i]))
      out_ << format_real(*d);
    else if (const long long* n = std::get_if<long long>(&cells[i]))
      out_ << *n;
    else
      out_ << quote(std::get<std::string>(cells[i]));
  }
  out_ << '\n';
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out = open_for_write(path);
  out << j.dump(2) << '\n';
}

Json real(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json to_json(const GateReport& r) {
  Json j;
  j["gate_time_s"] = r.gate_time;
  j["delta_phi_rad"] = r.delta_phi;
  j["closure_residual"] = r.closure_residual;
  j["e_max_v_per_m"] = r.e_max;
  j["x_max_ground_lengths"] = r.x_max;
  j["x_max_abs_ground_lengths"] = r.x_max_abs;
  j["fidelity"] = r.fidelity;
  j["phase_error"] = r.fidelity_terms.phase_error;
  j["displacement_loss"] = r.fidelity_terms.displacement_loss;
  j["lifetime_loss"] = r.fidelity_terms.lifetime_loss;
  Json states = Json::array();
  for (const StateOutcome& s : r.states) {
    Json modes = Json::array();
    for (const ModeOutcome& m : s.modes) {
      modes.push_back({{"final_re", m.final_displacement.real()},
                       {"final_im", m.final_displacement.imag()},
                       {"phase_rad", m.phase},
                       {"max_abs_im", m.max_abs_im},
                       {"max_abs", m.max_abs}});
    }
    states.push_back({{"state", to_string(s.sigma)}, {"total_phase_rad", s.total_phase}, {"modes", modes}});
  }
  j["states"] = states;
  return j;
}

Json to_json(const FeasibilityCheck& c) {
  return {{"feasible", c.feasible},
          {"it_violation", c.it_violation},
          {"excursion_violation", c.excursion_violation},
          {"it_margin", real(c.it_margin)},
          {"excursion_margin", real(c.excursion_margin)},
          {"placeholder_it_field", c.placeholder_it_field},
          {"verdict", c.verdict()}};
}

Json to_json(const Waveform& w) {
  Json j;
  j["duration_s"] = w.duration();
  if (w.kind() == WaveformKind::kSlices) {
    j["kind"] = "slices";
    j["field_v_per_m"] = std::vector<double>(w.slice_field().begin(), w.slice_field().end());
  } else {
    j["kind"] = "fourier";
    j["zero_endpoints"] = w.zero_endpoints();
    j["sine_v_per_m"] = std::vector<double>(w.sine().begin(), w.sine().end());
    j["cosine_v_per_m"] = std::vector<double>(w.cosine().begin(), w.cosine().end());
  }
  return j;
}

Waveform waveform_from_json(const nlohmann::json& j) {
  try {
    const double duration = j.at("duration_s").get<double>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "slices") return Waveform::slices(duration, j.at("field_v_per_m").get<std::vector<double>>());
    if (kind == "fourier")
      return Waveform::fourier(duration, j.at("sine_v_per_m").get<std::vector<double>>(),
                               j.at("cosine_v_per_m").get<std::vector<double>>(),
                               j.value("zero_endpoints", false));
    throw Error(ErrorCode::kValidation, "waveform kind must be \"slices\" or \"fourier\"");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kValidation, std::string("malformed waveform: ") + e.what());
  }
}

void write_waveform_csv(const std::filesystem::path& path, const Waveform& w, int samples) {
  if (w.kind() == WaveformKind::kSlices) {
    CsvWriter csv(path, {"slice", "t_start_s", "t_end_s", "field_v_per_m"});
    const double h = w.slice_duration();
    for (int i = 0; i < w.n_slices(); ++i)
      csv.row({static_cast<long long>(i), i * h, (i + 1) * h, w.slice_field()[static_cast<std::size_t>(i)]});
    return;
  }
  CsvWriter csv(path, {"t_s", "field_v_per_m"});
  for (int i = 0; i <= samples; ++i) {
    const double t = w.duration() * i / samples;
    csv.row({t, w.value(t)});
  }
}

void write_trajectories_csv(const std::filesystem::path& path, const TrajectoryRecord& record) {
  std::vector<std::string> header = {"t_s"};
  for (PairState s : kPairStates) {
    for (std::size_t k = 0; k < record.beta[index(s)].size(); ++k) {
      const std::string base = std::string(to_string(s)) + "_mode" + std::to_string(k + 1);
      header.push_back(base + "_re");
      header.push_back(base + "_im");
    }
  }
  CsvWriter csv(path, header);
  for (std::size_t i = 0; i < record.times.size(); ++i) {
    std::vector<Cell> cells = {record.times[i]};
    for (PairState s : kPairStates) {
      for (const auto& mode : record.beta[index(s)]) {
        cells.emplace_back(mode[i].real());
        cells.emplace_back(mode[i].imag());
      }
    }
    csv.row(cells);
  }
}

}  // namespace rykick::cli

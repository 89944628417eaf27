// Copyright 2026 The filtergame Authors
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

// Parameter sweeps over up to two axes, written as CSV.
//
// Layout: a `# schema=filtergame/1` line, a header row, then one row per grid
// point in row-major order (axis 1 outer). Columns: the axis values, status
// (ok, invalid or error), the output groups' columns, and a diagnostic.

#ifndef FILTERGAME_SWEEP_HPP_
#define FILTERGAME_SWEEP_HPP_

#include <charconv>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "filtergame/config.hpp"
#include "filtergame/format.hpp"
#include "filtergame/parallel.hpp"
#include "filtergame/params.hpp"
#include "filtergame/report.hpp"

namespace filtergame {

inline constexpr std::string_view kSchemaLine = "# schema=filtergame/1";

struct Axis {
  std::string field;
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;

  // Evenly spaced, endpoints included; a single step sits at `start`.
  double value(int i) const {
    if (steps == 1) return start;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
};

// Parses FIELD:START:STOP:STEPS.
inline Axis parse_axis(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto colon = text.find(':', pos);
    parts.push_back(text.substr(pos, colon == std::string_view::npos ? text.npos : colon - pos));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  const std::string where = "axis '" + std::string(text) + "'";
  if (parts.size() != 4) throw std::invalid_argument(where + ": expected FIELD:START:STOP:STEPS");
  Axis a;
  a.field = std::string(detail::trim(parts[0]));
  ModelParams probe;
  if (param_field(probe, a.field) == nullptr) {
    throw std::invalid_argument(where + ": unknown field '" + a.field + "'");
  }
  const auto start = detail::parse_double(parts[1]);
  const auto stop = detail::parse_double(parts[2]);
  if (!start || !stop) throw std::invalid_argument(where + ": START and STOP must be numbers");
  a.start = *start;
  a.stop = *stop;
  const auto steps_text = detail::trim(parts[3]);
  const auto res = std::from_chars(steps_text.data(), steps_text.data() + steps_text.size(), a.steps);
  if (res.ec != std::errc() || res.ptr != steps_text.data() + steps_text.size() || a.steps < 1) {
    throw std::invalid_argument(where + ": STEPS must be a positive integer");
  }
  return a;
}

struct SweepSpec {
  ModelParams base;
  std::vector<Axis> axes;  // at most two
  Mode mode = Mode::kAligned;
  OutputSet outputs = {Output::kPayoffs};
  Normalization normalization = Normalization::kPerClean;
};

inline void require_valid(const SweepSpec& spec) {
  if (spec.axes.size() > 2) throw std::invalid_argument("at most two sweep axes");
  if (spec.axes.size() == 2 && spec.axes[0].field == spec.axes[1].field) {
    throw std::invalid_argument("sweep axes must name different fields");
  }
  if (spec.outputs.empty()) throw std::invalid_argument("no output groups selected");
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::vector<std::string> sweep_header(const SweepSpec& spec) {
  std::vector<std::string> h;
  for (const auto& a : spec.axes) h.push_back(a.field);
  h.push_back("status");
  for (auto& c : record_columns(spec.mode, spec.outputs)) h.push_back(std::move(c));
  h.push_back("diagnostic");
  return h;
}

// Grid points in row-major order.
inline std::vector<ModelParams> sweep_points(const SweepSpec& spec) {
  std::vector<ModelParams> pts;
  const int n1 = spec.axes.size() > 0 ? spec.axes[0].steps : 1;
  const int n2 = spec.axes.size() > 1 ? spec.axes[1].steps : 1;
  pts.reserve(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      ModelParams p = spec.base;
      if (spec.axes.size() > 0) *param_field(p, spec.axes[0].field) = spec.axes[0].value(i);
      if (spec.axes.size() > 1) *param_field(p, spec.axes[1].field) = spec.axes[1].value(j);
      pts.push_back(p);
    }
  }
  return pts;
}

inline std::string sweep_row(const SweepSpec& spec, const ModelParams& p) {
  std::vector<std::string> cells;
  for (const auto& a : spec.axes) cells.push_back(format_double(param_value(p, a.field)));
  const std::size_t width = record_columns(spec.mode, spec.outputs).size();
  auto failed = [&](const char* status, const std::string& why) {
    cells.push_back(status);
    cells.insert(cells.end(), width, std::string());
    cells.push_back(why);
  };
  // The attacker mode derives q from the attacker's rate, so q is not checked.
  const auto checked = spec.mode == Mode::kAttacker ? p.with_q(0.5) : p;
  if (auto v = validate(checked); !v.empty()) {
    failed("invalid", describe(v));
  } else {
    try {
      const auto rec = point_record(p, spec.mode, spec.normalization, spec.outputs);
      cells.push_back("ok");
      for (const auto& [k, v] : rec) cells.push_back(v);
      cells.push_back("");
    } catch (const std::exception& e) {
      cells.resize(spec.axes.size());
      failed("error", e.what());
    }
  }
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += csv_field(cells[i]);
  }
  return line + "\n";
}

// Evaluates grid points concurrently and writes rows in grid order.
inline void write_sweep(const SweepSpec& spec, std::ostream& out) {
  require_valid(spec);
  const auto pts = sweep_points(spec);
  std::vector<std::string> rows(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { rows[i] = sweep_row(spec, pts[i]); });
  out << kSchemaLine << "\n";
  const auto header = sweep_header(spec);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << csv_field(header[i]);
  }
  out << "\n";
  for (const auto& r : rows) out << r;
}

}  // namespace filtergame

#endif  // FILTERGAME_SWEEP_HPP_

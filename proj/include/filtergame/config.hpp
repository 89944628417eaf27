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

// Flat key-value parameter files:
//
//   # comment
//   q = 0.5
//   pi0 = 0.8
//   ...
//
// Keys: q, pi0, pi1, b, c1, c2, lambda, and optionally rho0, which overrides
// q via q = rho0 / (1 + rho0). Unknown or repeated keys are errors.

#ifndef FILTERGAME_CONFIG_HPP_
#define FILTERGAME_CONFIG_HPP_

#include <array>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "filtergame/format.hpp"
#include "filtergame/params.hpp"

namespace filtergame {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::array<std::string_view, 7> kParamKeys = {
    "q", "pi0", "pi1", "b", "c1", "c2", "lambda"};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

}  // namespace detail

// Returns a pointer to the named field, or nullptr for unknown names.
inline double* param_field(ModelParams& p, std::string_view name) {
  if (name == "q") return &p.q;
  if (name == "pi0") return &p.pi0;
  if (name == "pi1") return &p.pi1;
  if (name == "b") return &p.b;
  if (name == "c1") return &p.c1;
  if (name == "c2") return &p.c2;
  if (name == "lambda") return &p.lambda;
  return nullptr;
}

inline double param_value(const ModelParams& p, std::string_view name) {
  auto copy = p;
  const double* f = param_field(copy, name);
  if (f == nullptr) throw ConfigError("unknown parameter '" + std::string(name) + "'");
  return *f;
}

// Parses config text. Does not validate model invariants; call validate()
// on the result. Throws ConfigError on syntax errors, unknown keys, repeated
// keys, or missing keys.
inline ModelParams parse_config(std::string_view text) {
  ModelParams p;
  std::array<bool, kParamKeys.size()> seen{};
  std::optional<double> rho0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = detail::trim(line.substr(0, eq));
    const auto raw = detail::trim(line.substr(eq + 1));
    const auto value = detail::parse_double(raw);
    if (!value) {
      throw ConfigError("line " + std::to_string(line_no) + ": '" + std::string(key) +
                        "' has non-numeric value '" + std::string(raw) + "'");
    }
    if (key == "rho0") {
      if (rho0) throw ConfigError("line " + std::to_string(line_no) + ": repeated key 'rho0'");
      rho0 = *value;
      continue;
    }
    std::size_t idx = 0;
    while (idx < kParamKeys.size() && kParamKeys[idx] != key) ++idx;
    if (idx == kParamKeys.size()) {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" +
                        std::string(key) + "'");
    }
    if (seen[idx]) {
      throw ConfigError("line " + std::to_string(line_no) + ": repeated key '" +
                        std::string(key) + "'");
    }
    seen[idx] = true;
    *param_field(p, key) = *value;
  }
  if (rho0) {
    if (!(*rho0 > 0.0) || !std::isfinite(*rho0)) {
      throw ConfigError("rho0 must be finite and > 0");
    }
    p.q = ModelParams::q_from_rho0(*rho0);
    seen[0] = true;
  }
  std::string missing;
  for (std::size_t i = 0; i < kParamKeys.size(); ++i) {
    if (!seen[i]) {
      if (!missing.empty()) missing += ", ";
      missing += kParamKeys[i];
    }
  }
  if (!missing.empty()) throw ConfigError("missing keys: " + missing);
  return p;
}

inline ModelParams load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

inline std::string to_config(const ModelParams& p) {
  std::string out;
  for (auto key : kParamKeys) {
    out += std::string(key) + " = " + format_double(param_value(p, key)) + "\n";
  }
  return out;
}

}  // namespace filtergame

#endif  // FILTERGAME_CONFIG_HPP_

/*
 * Copyright 2026 The tfquench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "tfq/config.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace tfq {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

struct RawEntry {
  std::string value;
  int line;
};

double parse_double(const std::string& token, int line) {
  const std::string t = trim(token);
  if (t.empty()) {
    throw ConfigError(line, "empty numeric value");
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError(line, "cannot parse '" + t +
                                "' as a decimal number (exponent literals like "
                                "2^-6 are not supported)");
  }
  return value;
}

long parse_int(const std::string& token, int line) {
  const std::string t = trim(token);
  if (t.empty()) {
    throw ConfigError(line, "empty integer value");
  }
  long value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError(line, "cannot parse '" + t + "' as an integer");
  }
  return value;
}

std::vector<double> parse_list(const std::string& value, int line) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_double(item, line));
  }
  if (out.empty()) {
    throw ConfigError(line, "empty list");
  }
  return out;
}

const std::set<std::string> kKnownKeys = {
    "mode",   "profile", "n",           "alpha",          "v",
    "n_c",    "tau_q",   "g",           "g_start",        "g_end",
    "dt",     "margin",  "lambda",      "k_grid",         "jobs",
    "out",    "n_ref",   "r_cal",       "snapshot_front", "drift_tolerance",
    "checkpoint_stride"};

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& forced_mode) {
  std::map<std::string, RawEntry> entries;
  std::stringstream stream(text);
  std::string raw_line;
  int line_no = 0;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    std::string line = raw_line;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError(line_no, "unterminated [section] header");
      }
      continue;  // sections are purely cosmetic
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line_no, "expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(line_no, "missing key before '='");
    }
    if (!kKnownKeys.count(key)) {
      throw ConfigError(line_no, "unknown key '" + key + "'");
    }
    if (entries.count(key)) {
      throw ConfigError(line_no, "duplicate key '" + key + "'");
    }
    if (value.empty()) {
      throw ConfigError(line_no, "empty value for '" + key + "'");
    }
    entries.emplace(key, RawEntry{value, line_no});
  }

  auto take = [&](const char* key) -> std::optional<RawEntry> {
    auto it = entries.find(key);
    if (it == entries.end()) {
      return std::nullopt;
    }
    RawEntry e = it->second;
    entries.erase(it);
    return e;
  };

  RunConfig cfg;

  // Mode: from the subcommand, the file, or both (which must agree).
  std::string mode_name = forced_mode;
  if (auto e = take("mode")) {
    if (!forced_mode.empty() && e->value != forced_mode) {
      throw ConfigError(e->line, "mode '" + e->value +
                                     "' conflicts with subcommand '" +
                                     forced_mode + "'");
    }
    mode_name = e->value;
  }
  if (mode_name.empty()) {
    throw ConfigError(0, "missing required key 'mode'");
  }
  if (mode_name == "static") {
    cfg.mode = RunMode::kStatic;
  } else if (mode_name == "quench") {
    cfg.mode = RunMode::kQuench;
  } else if (mode_name == "scan") {
    cfg.mode = RunMode::kScan;
  } else if (mode_name == "predict") {
    cfg.mode = RunMode::kPredict;
  } else {
    throw ConfigError(0, "unknown mode '" + mode_name +
                             "' (static | quench | scan | predict)");
  }

  const bool is_scan = cfg.mode == RunMode::kScan;

  auto take_double = [&](const char* key) -> std::optional<double> {
    if (auto e = take(key)) {
      if (e->value.find(',') != std::string::npos) {
        throw ConfigError(e->line, std::string("'") + key +
                                       "' expects a single value here, not a list");
      }
      return parse_double(e->value, e->line);
    }
    return std::nullopt;
  };
  auto take_int = [&](const char* key) -> std::optional<long> {
    if (auto e = take(key)) {
      return parse_int(e->value, e->line);
    }
    return std::nullopt;
  };

  if (auto e = take("profile")) {
    cfg.profile = e->value;
    static const std::set<std::string> known = {"uniform", "ramp",
                                                "static_front", "moving_front"};
    if (!known.count(cfg.profile)) {
      throw ConfigError(e->line, "unknown profile '" + cfg.profile + "'");
    }
  } else {
    cfg.profile = (cfg.mode == RunMode::kStatic) ? "static_front" : "moving_front";
  }

  // Sweep lists keep their grid order from the file.
  if (is_scan) {
    if (auto e = take("alpha")) cfg.scan.alphas = parse_list(e->value, e->line);
    if (auto e = take("v")) cfg.scan.vs = parse_list(e->value, e->line);
    if (auto e = take("tau_q")) cfg.scan.tau_qs = parse_list(e->value, e->line);
  } else {
    cfg.alpha = take_double("alpha");
    cfg.v = take_double("v");
    cfg.tau_q = take_double("tau_q");
  }
  cfg.n_c = take_double("n_c");
  cfg.g = take_double("g");
  cfg.g_start = take_double("g_start");
  cfg.g_end = take_double("g_end");
  if (auto x = take_int("n")) cfg.n_sites = static_cast<int>(*x);
  if (auto x = take_double("dt")) cfg.dt = *x;
  if (auto x = take_double("margin")) cfg.margin = *x;
  if (auto x = take_double("lambda")) cfg.lambda = *x;
  if (auto x = take_double("drift_tolerance")) cfg.drift_tolerance = *x;
  if (auto x = take_int("checkpoint_stride")) cfg.checkpoint_stride = static_cast<int>(*x);
  if (auto x = take_int("k_grid")) cfg.k_grid = static_cast<int>(*x);
  if (auto x = take_int("jobs")) cfg.jobs = static_cast<int>(*x);
  if (auto x = take_int("n_ref")) cfg.n_ref = static_cast<int>(*x);
  if (auto x = take_int("r_cal")) cfg.r_cal = static_cast<int>(*x);
  cfg.snapshot_front = take_double("snapshot_front");
  if (auto e = take("out")) cfg.out = e->value;

  if (!entries.empty()) {
    const auto& leftover = *entries.begin();
    throw ConfigError(leftover.second.line,
                      "key '" + leftover.first + "' does not apply to mode '" +
                          mode_name + "'");
  }

  // Mode- and profile-specific requirements; name the missing key.
  auto require = [&](bool present, const char* key) {
    if (!present) {
      throw ConfigError(0, "mode '" + mode_name + "' with profile '" +
                               cfg.profile + "' requires key '" + key + "'");
    }
  };

  const bool needs_chain = cfg.mode != RunMode::kPredict;
  if (needs_chain) {
    require(cfg.n_sites != 0, "n");
    if (cfg.n_sites < 2) {
      throw ConfigError(0, "n must be >= 2");
    }
  }

  switch (cfg.mode) {
    case RunMode::kPredict:
      require(cfg.alpha.has_value(), "alpha");
      require(cfg.v.has_value(), "v");
      break;
    case RunMode::kStatic:
      if (cfg.profile == "uniform") {
        require(cfg.g.has_value(), "g");
      } else if (cfg.profile == "static_front") {
        require(cfg.alpha.has_value(), "alpha");
        if (!cfg.n_c) {
          cfg.n_c = 0.5 * cfg.n_sites;  // centered front by default
        }
      } else {
        throw ConfigError(0, "static mode expects profile uniform or static_front");
      }
      break;
    case RunMode::kQuench:
      if (cfg.profile == "moving_front") {
        require(cfg.alpha.has_value(), "alpha");
        require(cfg.v.has_value(), "v");
      } else if (cfg.profile == "ramp") {
        require(cfg.tau_q.has_value(), "tau_q");
      } else {
        throw ConfigError(0, "quench mode expects profile moving_front or ramp");
      }
      break;
    case RunMode::kScan:
      if (cfg.profile == "moving_front") {
        require(!cfg.scan.alphas.empty(), "alpha");
        require(!cfg.scan.vs.empty(), "v");
      } else if (cfg.profile == "ramp") {
        require(!cfg.scan.tau_qs.empty(), "tau_q");
      } else {
        throw ConfigError(0, "scan mode expects profile moving_front or ramp");
      }
      break;
  }

  // Value sanity shared by all modes.
  auto positive = [&](std::optional<double> x, const char* key) {
    if (x && *x <= 0.0) {
      throw ConfigError(0, std::string("'") + key + "' must be > 0");
    }
  };
  positive(cfg.alpha, "alpha");
  positive(cfg.tau_q, "tau_q");
  for (double a : cfg.scan.alphas) {
    if (a <= 0.0) throw ConfigError(0, "'alpha' list entries must be > 0");
  }
  for (double t : cfg.scan.tau_qs) {
    if (t <= 0.0) throw ConfigError(0, "'tau_q' list entries must be > 0");
  }
  for (double vv : cfg.scan.vs) {
    if (vv <= 0.0) throw ConfigError(0, "'v' list entries must be > 0");
  }
  if (cfg.v && *cfg.v < 0.0) {
    throw ConfigError(0, "'v' must be >= 0");
  }
  if (cfg.dt <= 0.0) throw ConfigError(0, "'dt' must be > 0");
  if (cfg.margin < 0.0) throw ConfigError(0, "'margin' must be >= 0");
  if (cfg.lambda <= 0.0) throw ConfigError(0, "'lambda' must be > 0");
  if (cfg.k_grid < 3) throw ConfigError(0, "'k_grid' must be >= 3");
  if (cfg.jobs < 1) throw ConfigError(0, "'jobs' must be >= 1");
  if (cfg.r_cal < 1) throw ConfigError(0, "'r_cal' must be >= 1");
  if (cfg.drift_tolerance <= 0.0) {
    throw ConfigError(0, "'drift_tolerance' must be > 0");
  }
  if (cfg.checkpoint_stride < 1) {
    throw ConfigError(0, "'checkpoint_stride' must be >= 1");
  }
  if (cfg.snapshot_front && cfg.mode != RunMode::kQuench) {
    throw ConfigError(0, "'snapshot_front' applies to quench mode only");
  }
  return cfg;
}

}  // namespace tfq

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

#ifndef TFQ_CONFIG_HPP
#define TFQ_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tfq {

enum class RunMode { kStatic, kQuench, kScan, kPredict };

/// Parameter grids for scan mode; the run set is the cross product of the
/// lists that apply to the chosen profile.
struct ScanSpec {
  std::vector<double> alphas;
  std::vector<double> vs;
  std::vector<double> tau_qs;
};

/// Fully validated run description parsed from a config file.
///
/// Grammar: `key = value` lines, `#` comments, optional `[section]` headers
/// (cosmetic). Numbers are plain decimals; lists are comma-separated.
/// Unknown keys are rejected. Defaults: dt = 0.005, margin = 10, lambda = 1,
/// jobs = 1, r_cal = 10, k_grid = 2001, drift_tolerance = 1e-6.
struct RunConfig {
  RunMode mode = RunMode::kPredict;
  std::string profile;  // uniform | ramp | static_front | moving_front

  int n_sites = 0;
  std::optional<double> alpha;
  std::optional<double> v;
  std::optional<double> n_c;
  std::optional<double> tau_q;
  std::optional<double> g;
  std::optional<double> g_start;
  std::optional<double> g_end;

  ScanSpec scan;

  double dt = 0.005;
  double margin = 10.0;
  double drift_tolerance = 1e-6;
  int checkpoint_stride = 512;

  double lambda = 1.0;
  int k_grid = 2001;

  int jobs = 1;
  std::string out;

  int n_ref = 0;  // 0 = automatic
  int r_cal = 10;
  std::optional<double> snapshot_front;
};

/// Configuration error carrying the offending line number.
struct ConfigError : std::runtime_error {
  int line;
  ConfigError(int line_number, const std::string& message)
      : std::runtime_error("config line " + std::to_string(line_number) + ": " +
                           message),
        line(line_number) {}
};

/// Parses and validates config text. `forced_mode`, when nonempty, is the
/// CLI subcommand; a conflicting `mode` key in the file is an error.
RunConfig parse_config(const std::string& text,
                       const std::string& forced_mode = "");

}  // namespace tfq

#endif  // TFQ_CONFIG_HPP

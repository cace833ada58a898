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

// tfquench: inhomogeneous-quench simulator for the transverse-field Ising
// chain. Subcommands: static | quench | scan | predict, each driven by a
// plain-text config file.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tfq/config.hpp"
#include "tfq/runner.hpp"
#include "tfq/table.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot read config file " + path);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

int run_mode(const std::string& mode, const std::string& config_path,
             const std::string& out_override, int jobs_override) {
  tfq::RunConfig cfg = tfq::parse_config(read_file(config_path), mode);
  if (!out_override.empty()) {
    cfg.out = out_override;
  }
  if (jobs_override > 0) {
    cfg.jobs = jobs_override;
  }
  if (cfg.out.empty()) {
    throw std::runtime_error("no output path: set 'out' in the config or pass --out");
  }
  const auto tables = tfq::execute(cfg);
  for (const auto& path : tfq::write_outputs(tables, cfg.out)) {
    std::cout << path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transverse-field Ising chain quench simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_override;
  int jobs_override = 0;

  for (const std::string mode : {"static", "quench", "scan", "predict"}) {
    auto* sub = app.add_subcommand(
        mode, mode == "static"    ? "solve a frozen field configuration"
              : mode == "quench"  ? "integrate one quench"
              : mode == "scan"    ? "sweep a parameter grid"
                                  : "evaluate the analytic predictions");
    sub->add_option("--config", config_path, "config file")->required();
    sub->add_option("--out", out_override, "output path prefix");
    sub->add_option("--jobs", jobs_override, "parallel worker count");
    sub->callback([mode, &config_path, &out_override, &jobs_override]() {
      run_mode(mode, config_path, out_override, jobs_override);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

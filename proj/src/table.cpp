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

#include "tfq/table.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace tfq {

void OutputTable::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("OutputTable: row width does not match header");
  }
  rows.push_back(std::move(row));
}

std::string OutputTable::to_csv() const {
  std::string out = "# tfquench-table v1 name=" + name + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out += columns[i];
    out += (i + 1 < columns.size()) ? ',' : '\n';
  }
  char buf[48];
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[i]);
      out += buf;
      out += (i + 1 < row.size()) ? ',' : '\n';
    }
  }
  return out;
}

std::vector<std::string> write_outputs(const std::vector<OutputTable>& tables,
                                       const std::string& prefix) {
  if (tables.empty()) {
    throw std::invalid_argument("write_outputs: nothing to write");
  }
  for (const auto& table : tables) {
    if (table.rows.empty()) {
      throw std::invalid_argument("write_outputs: table '" + table.name +
                                  "' is empty");
    }
  }
  std::vector<std::string> paths;
  for (const auto& table : tables) {
    const std::string path = prefix + "." + table.name + ".csv";
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
      throw std::runtime_error("write_outputs: cannot open " + path);
    }
    file << table.to_csv();
    if (!file) {
      throw std::runtime_error("write_outputs: write failed for " + path);
    }
    paths.push_back(path);
  }
  return paths;
}

}  // namespace tfq

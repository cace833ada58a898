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

#ifndef TFQ_TABLE_HPP
#define TFQ_TABLE_HPP

#include <string>
#include <vector>

namespace tfq {

/// Comma-separated output table. Values are serialized with 17 significant
/// digits so they round-trip to the exact double, and identical inputs
/// produce byte-identical files.
struct OutputTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
  /// Schema comment line, header row, then data rows.
  std::string to_csv() const;
};

/// Writes each table to <prefix>.<table name>.csv. Fails without touching
/// the filesystem when the list is empty or any table has no rows.
/// Returns the written paths.
std::vector<std::string> write_outputs(const std::vector<OutputTable>& tables,
                                       const std::string& prefix);

}  // namespace tfq

#endif  // TFQ_TABLE_HPP

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

#ifndef TFQ_RUNNER_HPP
#define TFQ_RUNNER_HPP

#include <vector>

#include "tfq/chain.hpp"
#include "tfq/config.hpp"
#include "tfq/table.hpp"

namespace tfq {

/// Field profile described by a single-run config.
FieldProfile profile_from_config(const RunConfig& cfg);

/// Runs the configured mode and returns its output tables:
///   static  -> "profile" and "spectrum"
///   quench  -> "result" (one row), plus "snapshot" when requested
///   scan    -> "scan", one row per grid point in grid order
///   predict -> "predict" (one row)
/// Scan grid points run on a worker pool of cfg.jobs threads; rows are
/// merged by grid index, so the output does not depend on the worker count.
std::vector<OutputTable> execute(const RunConfig& cfg);

}  // namespace tfq

#endif  // TFQ_RUNNER_HPP

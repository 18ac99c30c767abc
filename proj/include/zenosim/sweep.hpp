// Copyright 2026 The zenosim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZENOSIM_SWEEP_HPP
#define ZENOSIM_SWEEP_HPP

#include <vector>

#include "zenosim/scenario.hpp"

namespace zenosim {

/// Serial reference: runs the points one after another in index order.
std::vector<PointResult> run_points_serial(const std::vector<PointSpec>& points);

/// OpenMP worker pool over the same kernel. Each point is a pure function of
/// its spec and lands in its index slot, so results and downstream file bytes
/// are identical to the serial path for any worker count.
std::vector<PointResult> run_points_parallel(const std::vector<PointSpec>& points,
                                             int workers);

/// Dispatches on worker count (<= 1 runs the serial reference).
std::vector<PointResult> run_points(const std::vector<PointSpec>& points, int workers);

} // namespace zenosim

#endif

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

#include "zenosim/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zenosim {

std::vector<PointResult> run_points_serial(const std::vector<PointSpec>& points) {
    std::vector<PointResult> results(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        results[i] = run_point(points[i]);
    }
    return results;
}

std::vector<PointResult> run_points_parallel(const std::vector<PointSpec>& points,
                                             int workers) {
    std::vector<PointResult> results(points.size());
#ifdef _OPENMP
    const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (long i = 0; i < n; ++i) {
        // run_point never throws; failures land in the result slot.
        results[static_cast<size_t>(i)] = run_point(points[static_cast<size_t>(i)]);
    }
#else
    (void)workers;
    results = run_points_serial(points);
#endif
    return results;
}

std::vector<PointResult> run_points(const std::vector<PointSpec>& points, int workers) {
    if (workers <= 1) return run_points_serial(points);
    return run_points_parallel(points, workers);
}

} // namespace zenosim

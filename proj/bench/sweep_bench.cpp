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
//
// Times the serial reference against the OpenMP sweep kernel on a
// feedback-heavy decay sweep and checks they produce identical results.

#include <chrono>
#include <cstdio>

#include "zenosim/sweep.hpp"

using namespace zenosim;

namespace {

double time_once(const std::vector<PointSpec>& pts, int workers,
                 std::vector<PointResult>& out) {
    const auto t0 = std::chrono::steady_clock::now();
    out = workers <= 1 ? run_points_serial(pts) : run_points_parallel(pts, workers);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    const int max_workers = argc > 1 ? std::atoi(argv[1]) : 4;

    ScenarioConfig cfg = ScenarioConfig::from_json_text(R"({
        "scenario": "dissipative-sweep",
        "model": {"omega2": 1.0},
        "control": {"gain": 10.0},
        "integrator": {"dt": 0.001, "t_max": 8.0, "record_stride": 10},
        "sweep": [{"parameter": "gamma",
                   "values": [0.000, 0.004, 0.008, 0.012, 0.016,
                              0.020, 0.024, 0.028, 0.032, 0.036,
                              0.040, 0.044, 0.048, 0.052, 0.056, 0.060]}],
        "output": {"write_trajectories": false}
    })");
    const std::vector<PointSpec> pts = expand_sweep(cfg);
    std::printf("sweep: %zu points, t_max %.1f, dt %.0e\n", pts.size(),
                cfg.integrator.t_max, cfg.integrator.dt);

    std::vector<PointResult> reference;
    const double serial = time_once(pts, 1, reference);
    std::printf("%-10s %8.3f s   (reference)\n", "serial", serial);

    for (int workers = 2; workers <= max_workers; workers *= 2) {
        std::vector<PointResult> parallel;
        const double t = time_once(pts, workers, parallel);
        bool identical = parallel.size() == reference.size();
        for (size_t i = 0; identical && i < parallel.size(); ++i) {
            identical = parallel[i].ok == reference[i].ok &&
                        parallel[i].f_max == reference[i].f_max &&
                        parallel[i].t_min == reference[i].t_min;
        }
        std::printf("%d workers  %8.3f s   speedup %.2fx   results %s\n", workers, t,
                    serial / t, identical ? "identical" : "DIFFER");
        if (!identical) return 1;
    }
    return 0;
}

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

#ifndef ZENOSIM_PRESETS_HPP
#define ZENOSIM_PRESETS_HPP

#include <string>
#include <vector>

#include "zenosim/scenario.hpp"

namespace zenosim {

/// Figure presets bundled with the toolkit. Each writes its CSVs, plot specs
/// and a manifest into `out_dir`; outputs are byte-identical for any worker
/// count. Names: fig2a fig2b fig3 fig4 fig5 fig6.
std::vector<std::string> figure_names();
bool is_figure_name(const std::string& name);
RunManifest run_figure(const std::string& name, const std::string& out_dir, int workers);

/// Evenly spaced grid start, start+step, ..., including stop (inclusive).
std::vector<double> grid(double start, double stop, double step);

} // namespace zenosim

#endif

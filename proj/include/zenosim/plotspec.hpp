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

#ifndef ZENOSIM_PLOTSPEC_HPP
#define ZENOSIM_PLOTSPEC_HPP

#include <string>
#include <vector>

namespace zenosim {

/// Declarative chart description; no rendering happens in-process. The spec
/// references data files by relative path so a bundle can be moved around.
struct PlotSeries {
    std::string csv;    // relative path
    std::string y;      // column name
    std::string label;
};

struct PlotSpec {
    std::string title;
    std::string kind = "line";
    std::string x_field;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;

    std::string to_json() const;
};

/// Derives a default spec from a CSV on disk: trajectory files (with a `t`
/// column) chart fidelity over time; summary files chart f_max over the first
/// axis column. Throws on empty data or unrecognized columns.
PlotSpec default_plot_spec(const std::string& csv_path, const std::string& relative_csv);

/// Writes default_plot_spec() of `csv_path` to `out_path`. Nothing is written
/// when the CSV is rejected.
void emit_plot_spec(const std::string& csv_path, const std::string& relative_csv,
                    const std::string& out_path);

} // namespace zenosim

#endif

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

#include "zenosim/plotspec.hpp"

#include <nlohmann/json.hpp>

#include "zenosim/csv.hpp"
#include "zenosim/types.hpp"

namespace zenosim {

std::string PlotSpec::to_json() const {
    nlohmann::json j;
    j["title"] = title;
    j["kind"] = kind;
    j["x"] = {{"field", x_field}, {"label", x_label}};
    j["y_label"] = y_label;
    j["series"] = nlohmann::json::array();
    for (const auto& s : series) {
        j["series"].push_back({{"csv", s.csv}, {"y", s.y}, {"label", s.label}});
    }
    return j.dump(2) + "\n";
}

PlotSpec default_plot_spec(const std::string& csv_path, const std::string& relative_csv) {
    const CsvTable table = read_csv(csv_path);
    if (table.rows.empty()) {
        throw InvalidArgument("default_plot_spec: no data rows in " + csv_path);
    }
    PlotSpec spec;
    if (table.column("t") && table.column("fidelity")) {
        spec.title = "fidelity vs time";
        spec.x_field = "t";
        spec.x_label = "gt";
        spec.y_label = "fidelity";
        spec.series.push_back({relative_csv, "fidelity", "fidelity"});
        return spec;
    }
    if (table.column("f_max")) {
        spec.title = "maximum fidelity sweep";
        spec.x_field = table.header.front();
        spec.x_label = table.header.front();
        spec.y_label = "f_max";
        spec.series.push_back({relative_csv, "f_max", "f_max"});
        return spec;
    }
    throw InvalidArgument("default_plot_spec: unrecognized columns in " + csv_path);
}

void emit_plot_spec(const std::string& csv_path, const std::string& relative_csv,
                    const std::string& out_path) {
    const PlotSpec spec = default_plot_spec(csv_path, relative_csv);
    write_file(out_path, spec.to_json());
}

} // namespace zenosim

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

#include "zenosim/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "zenosim/types.hpp"

namespace zenosim {

CsvBuilder::CsvBuilder(std::vector<std::string> header) : columns_(header.size()) {
    if (header.empty()) throw InvalidArgument("CsvBuilder: empty header");
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) out_ += ',';
        out_ += header[i];
    }
    out_ += '\n';
}

std::string CsvBuilder::format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void CsvBuilder::add_row(const std::vector<double>& values) {
    add_row(values, {});
}

void CsvBuilder::add_row(const std::vector<double>& values,
                         const std::vector<std::string>& tail) {
    if (values.size() + tail.size() != columns_) {
        throw InvalidArgument("CsvBuilder: row width does not match header");
    }
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out_ += ',';
        out_ += format(values[i]);
    }
    for (size_t i = 0; i < tail.size(); ++i) {
        if (values.size() + i) out_ += ',';
        out_ += tail[i];
    }
    out_ += '\n';
    ++rows_;
}

std::optional<size_t> CsvTable::column(const std::string& name) const {
    for (size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    return std::nullopt;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("read_csv: cannot open " + path);
    CsvTable table;
    std::string line;
    auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        return cells;
    };
    if (!std::getline(in, line)) throw InvalidArgument("read_csv: empty file " + path);
    table.header = split(line);
    while (std::getline(in, line)) {
        if (!line.empty()) table.rows.push_back(split(line));
    }
    return table;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("write_file: cannot open " + path);
    out << contents;
    if (!out) throw NumericalError("write_file: failed writing " + path);
}

} // namespace zenosim

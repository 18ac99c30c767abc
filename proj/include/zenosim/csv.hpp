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

#ifndef ZENOSIM_CSV_HPP
#define ZENOSIM_CSV_HPP

#include <optional>
#include <string>
#include <vector>

namespace zenosim {

/// Decimal CSV with a mandatory header row, 12 significant digits,
/// newline-terminated rows. Cells are rendered with a fixed evaluation order
/// so identical data yields identical bytes on every run.
class CsvBuilder {
public:
    explicit CsvBuilder(std::vector<std::string> header);

    void add_row(const std::vector<double>& values);
    /// Mixed row: numeric cells plus trailing string cells (status columns).
    void add_row(const std::vector<double>& values, const std::vector<std::string>& tail);

    size_t rows() const { return rows_; }
    const std::string& str() const { return out_; }

    static std::string format(double v);   // %.12g

private:
    size_t columns_;
    size_t rows_ = 0;
    std::string out_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::optional<size_t> column(const std::string& name) const;
};

/// Parses a CSV produced by CsvBuilder (no quoting or embedded commas).
CsvTable read_csv(const std::string& path);

void write_file(const std::string& path, const std::string& contents);

} // namespace zenosim

#endif

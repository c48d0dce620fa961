// Copyright 2026 The imsteer Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "report.hpp"

#include <cstdio>
#include <cstdlib>

#include "imsteer/error.hpp"

namespace imsteer::cli {

std::string format_number(double x) {
    if (x == 0.0) {
        return "0";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

double round9(double x) {
    return std::strtod(format_number(x).c_str(), nullptr);
}

void write_json(std::ostream &out, const nlohmann::ordered_json &doc) {
    out << doc.dump(2) << '\n';
}

CsvTable::CsvTable(std::vector<std::string> header)
    : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) {
        throw InternalError("csv row width does not match header");
    }
    rows_.push_back(std::move(cells));
}

void CsvTable::write(std::ostream &out) const {
    const auto line = [&out](const std::vector<std::string> &cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << (c == 0 ? "" : ",") << cells[c];
        }
        out << '\n';
    };
    line(header_);
    for (const auto &row : rows_) {
        line(row);
    }
}

} // namespace imsteer::cli

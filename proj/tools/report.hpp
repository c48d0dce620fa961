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

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace imsteer::cli {

/// %.9g, with negative zero printed as 0.
std::string format_number(double x);

/// x rounded to 9 significant digits, so JSON and CSV agree.
double round9(double x);

/// Two-space indented JSON followed by a newline.
void write_json(std::ostream &out, const nlohmann::ordered_json &doc);

/// Comma-separated table with a header row and LF line endings. Cells are
/// written verbatim.
class CsvTable {
  public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    void write(std::ostream &out) const;

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace imsteer::cli

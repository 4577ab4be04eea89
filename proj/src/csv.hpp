// Copyright 2026 The hotelling Authors.
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

// Two-column numeric CSV reader shared by the density and cost table loaders.

#ifndef HOTELLING_SRC_CSV_HPP_
#define HOTELLING_SRC_CSV_HPP_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace hotelling::internal {

struct CsvColumns {
  std::vector<double> first;
  std::vector<double> second;
  std::vector<int> line;  // source line of each row
};

// Requires the exact header `expected_header` on line 1; every following
// non-blank line must hold two finite numbers. Throws Error(kParse) with
// "line N: ..." on the first problem.
CsvColumns ReadTwoColumnCsv(std::istream& in, std::string_view expected_header);

}  // namespace hotelling::internal

#endif  // HOTELLING_SRC_CSV_HPP_

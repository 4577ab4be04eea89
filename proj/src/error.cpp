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

#include "hotelling/error.hpp"

namespace hotelling {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kParse:
      return "ParseError";
    case ErrorCode::kZeroDenominator:
      return "ZeroDenominator";
    case ErrorCode::kInvalidMarket:
      return "InvalidMarket";
    case ErrorCode::kDegenerateDensity:
      return "DegenerateDensity";
    case ErrorCode::kNotApplicable:
      return "NotApplicable";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kInconsistentReach:
      return "InconsistentReach";
    case ErrorCode::kInvalidShare:
      return "InvalidShare";
  }
  return "Unknown";
}

}  // namespace hotelling

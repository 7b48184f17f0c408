// Copyright 2026 The selgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SELGAME_DISTRIBUTION_JSON_H_
#define SELGAME_DISTRIBUTION_JSON_H_

#include <string>

#include "json.hpp"
#include "selgame/distribution.h"

namespace selgame {

// Parses {"type": "uniform" | "discrete" | "mixture" | "piecewise_poly", ...}.
// Numeric fields may be JSON numbers or strings such as "1/3".
Distribution DistributionFromJson(const nlohmann::json& spec);

// Accepts the keyword "uniform" or inline JSON text.
Distribution DistributionFromText(const std::string& text);

nlohmann::json DistributionToJson(const Distribution& d);

}  // namespace selgame

#endif  // SELGAME_DISTRIBUTION_JSON_H_

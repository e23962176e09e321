// Copyright 2026 the revec authors
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

#pragma once

#include <nlohmann/json.hpp>

#include "revec/ec_ref.hpp"

namespace revec {

using json = nlohmann::ordered_json;

inline json params_json(const CurveParams& params) {
  return json{{"p", params.p}, {"a", params.a}, {"b", params.b}};
}

inline json point_json(const AffinePoint& pt) {
  if (pt.is_identity) return json("O");
  return json::array({pt.x, pt.y});
}

}  // namespace revec

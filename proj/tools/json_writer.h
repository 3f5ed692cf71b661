// Copyright 2026 The phasenoise Authors
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

#ifndef PHASENOISE_TOOLS_JSON_WRITER_H_
#define PHASENOISE_TOOLS_JSON_WRITER_H_

#include <string>

#include "json.hpp"

namespace phasenoise::cli {

using Json = nlohmann::ordered_json;

// Pretty-prints with a fixed number of significant digits for floating
// point values (non-finite values become null). nlohmann's own dump always
// uses shortest round-trip output, which cannot honor --precision.
std::string dump_json(const Json& value, int significant_digits, int indent = 2);

}  // namespace phasenoise::cli

#endif  // PHASENOISE_TOOLS_JSON_WRITER_H_

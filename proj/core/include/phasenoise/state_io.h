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

// State documents:
//
//   {"dim": 3, "amplitudes": [[0.6, 0.0], [0.8, 0.0], [0.0, 0.0]]}
//
// Each amplitude is a [re, im] pair; the array length must equal "dim".
// Readers accept any nonzero vector whose norm^2 is within 1e-9 of one and
// canonicalize it; writers emit canonical states.

#ifndef PHASENOISE_STATE_IO_H_
#define PHASENOISE_STATE_IO_H_

#include <string>
#include <string_view>

#include "phasenoise/number_format.h"
#include "phasenoise/pure_state.h"

namespace phasenoise {

inline constexpr double kFileNormTolerance = 1e-9;

std::string state_to_json(const PureState& state,
                          int significant_digits = kDefaultSignificantDigits);

// Throws Error(kFormat) on schema violations.
PureState state_from_json(std::string_view text);

// Throws Error(kFile) when the file cannot be read or written.
PureState read_state_file(const std::string& path);
void write_state_file(const std::string& path, const PureState& state,
                      int significant_digits = kDefaultSignificantDigits);

// Shared by the state and ensemble readers.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace phasenoise

#endif  // PHASENOISE_STATE_IO_H_

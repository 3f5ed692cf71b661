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

#ifndef PHASENOISE_NUMBER_FORMAT_H_
#define PHASENOISE_NUMBER_FORMAT_H_

#include <string>

namespace phasenoise {

inline constexpr int kDefaultSignificantDigits = 17;

// Locale-independent %.{digits}g rendering ('.' decimal separator always).
// Non-finite values render as "nan", "inf" and "-inf".
std::string format_real(double value, int significant_digits = kDefaultSignificantDigits);

}  // namespace phasenoise

#endif  // PHASENOISE_NUMBER_FORMAT_H_

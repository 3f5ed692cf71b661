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

#include "phasenoise/state_io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "phasenoise/errors.h"

namespace phasenoise {

namespace {

using nlohmann::json;

double as_real(const json& value, const char* what) {
  if (!value.is_number()) {
    throw Error(ErrorKind::kFormat, std::string(what) + " must be a number");
  }
  return value.get<double>();
}

}  // namespace

std::string state_to_json(const PureState& state, int significant_digits) {
  std::string out = "{\"dim\": " + std::to_string(state.dim()) + ", \"amplitudes\": [";
  for (std::size_t n = 0; n < state.dim(); ++n) {
    if (n > 0) out += ", ";
    out += "[" + format_real(state[n].real(), significant_digits) + ", " +
           format_real(state[n].imag(), significant_digits) + "]";
  }
  out += "]}\n";
  return out;
}

PureState state_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kFormat, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("amplitudes")) {
    throw Error(ErrorKind::kFormat, "state document needs \"dim\" and \"amplitudes\"");
  }
  const json& dim_value = doc["dim"];
  if (!dim_value.is_number_integer() || dim_value.get<long long>() < 1) {
    throw Error(ErrorKind::kFormat, "\"dim\" must be a positive integer");
  }
  const auto dim = dim_value.get<std::size_t>();
  const json& list = doc["amplitudes"];
  if (!list.is_array() || list.size() != dim) {
    throw Error(ErrorKind::kFormat, "\"amplitudes\" must be an array of length dim");
  }
  Amplitudes amplitudes;
  amplitudes.reserve(dim);
  for (const json& pair : list) {
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorKind::kFormat, "each amplitude must be a [re, im] pair");
    }
    amplitudes.emplace_back(as_real(pair[0], "re"), as_real(pair[1], "im"));
  }
  const double norm2 = norm_squared(amplitudes);
  if (!(std::abs(norm2 - 1.0) <= kFileNormTolerance)) {
    throw Error(ErrorKind::kNorm, "state file is not normalized (norm^2 = " +
                                      format_real(norm2) + ")");
  }
  return canonicalize(amplitudes);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kFile, "cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kFile, "cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorKind::kFile, "failed writing '" + path + "'");
}

PureState read_state_file(const std::string& path) {
  return state_from_json(read_text_file(path));
}

void write_state_file(const std::string& path, const PureState& state,
                      int significant_digits) {
  write_text_file(path, state_to_json(state, significant_digits));
}

}  // namespace phasenoise

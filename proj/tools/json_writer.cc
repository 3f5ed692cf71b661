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

#include "json_writer.h"

#include <cmath>

#include "phasenoise/number_format.h"

namespace phasenoise::cli {

namespace {

void write(const Json& value, int digits, int indent, int depth, std::string& out) {
  const auto newline = [&](int level) {
    out += '\n';
    out.append(static_cast<std::size_t>(indent * level), ' ');
  };
  switch (value.type()) {
    case Json::value_t::number_float: {
      const double x = value.get<double>();
      out += std::isfinite(x) ? format_real(x, digits) : "null";
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      // Short numeric arrays ([re, im] pairs) stay on one line.
      bool flat = value.size() <= 2;
      for (const Json& item : value) flat = flat && item.is_primitive();
      out += '[';
      bool first = true;
      for (const Json& item : value) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        write(item, digits, indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += ": ";
        write(item, digits, indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    default:
      out += value.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const Json& value, int significant_digits, int indent) {
  std::string out;
  write(value, significant_digits, indent, 0, out);
  out += '\n';
  return out;
}

}  // namespace phasenoise::cli

// Copyright 2026 The subsel Authors
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

#include "subsel/instance_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "subsel/errors.h"

namespace subsel {
namespace {

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) out.push_back(line.substr(start, pos - start));
  }
  return out;
}

std::int64_t ParseInteger(std::string_view token, int line) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, "integer '" + std::string(token) + "' out of range");
  }
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) +
                               "'");
  }
  return value;
}

template <typename Instance>
Instance ParseBody(const std::vector<std::string_view>& lines,
                   std::int64_t n, Weight rhs) {
  Instance instance;
  if constexpr (Instance::sense() == Sense::kMinimize) {
    instance.structure.demand = rhs;
  } else {
    instance.structure.capacity = rhs;
  }
  for (std::int64_t i = 0; i < n; ++i) {
    const int line_no = static_cast<int>(i) + 2;
    if (static_cast<std::size_t>(i) + 1 >= lines.size()) {
      throw ParseError(line_no, "missing item line (expected " +
                                    std::to_string(n) + " items)");
    }
    const auto tokens = Tokens(lines[i + 1]);
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected '<weight> <size>'");
    }
    instance.weights.push_back(ParseInteger(tokens[0], line_no));
    instance.structure.sizes.push_back(ParseInteger(tokens[1], line_no));
  }
  for (std::size_t extra = static_cast<std::size_t>(n) + 1;
       extra < lines.size(); ++extra) {
    if (!Tokens(lines[extra]).empty()) {
      throw ParseError(static_cast<int>(extra) + 1,
                       "unexpected content after the last item");
    }
  }
  Validate(instance);
  return instance;
}

template <typename Instance>
std::string Serialize(std::string_view tag, const Instance& instance,
                      Weight rhs) {
  std::ostringstream out;
  out << tag << ' ' << instance.size() << ' ' << rhs << '\n';
  for (std::size_t i = 0; i < instance.size(); ++i) {
    out << instance.weights[i] << ' ' << instance.structure.sizes[i] << '\n';
  }
  return out.str();
}

}  // namespace

AnyInstance ParseInstance(std::string_view text) {
  const auto lines = SplitLines(text);
  if (lines.empty()) throw ParseError(1, "empty instance");
  const auto header = Tokens(lines[0]);
  if (header.size() != 3) {
    throw ParseError(1, "expected '<minkp|maxkp> <n> <rhs>'");
  }
  const std::int64_t n = ParseInteger(header[1], 1);
  const std::int64_t rhs = ParseInteger(header[2], 1);
  if (n < 0) throw ValidationError("item count must be nonnegative");
  if (rhs < 0) throw ValidationError("demand/capacity must be nonnegative");
  if (header[0] == "minkp") {
    return ParseBody<MinKnapsackInstance>(lines, n, rhs);
  }
  if (header[0] == "maxkp") {
    return ParseBody<MaxKnapsackInstance>(lines, n, rhs);
  }
  throw ParseError(1, "unknown problem tag '" + std::string(header[0]) + "'");
}

std::string SerializeInstance(const MinKnapsackInstance& instance) {
  return Serialize("minkp", instance, instance.structure.demand);
}

std::string SerializeInstance(const MaxKnapsackInstance& instance) {
  return Serialize("maxkp", instance, instance.structure.capacity);
}

std::string SerializeInstance(const AnyInstance& instance) {
  return std::visit([](const auto& i) { return SerializeInstance(i); },
                    instance);
}

AnyInstance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace subsel

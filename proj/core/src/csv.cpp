/*
 * Copyright (C) 2026 The newsstyle Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "newsstyle/csv.hpp"

#include "newsstyle/error.hpp"

namespace newsstyle::csv {

std::optional<std::vector<std::string>> Reader::next() {
  int c = in_.get();
  if (c == EOF) return std::nullopt;

  record_line_ = line_;
  std::vector<std::string> fields(1);
  bool quoted = false;
  bool after_quote = false;
  for (;; c = in_.get()) {
    if (c == EOF) {
      if (quoted) {
        throw DataError("unterminated quoted field starting on line " +
                        std::to_string(record_line_));
      }
      break;
    }
    const char ch = static_cast<char>(c);
    if (quoted) {
      if (ch == '"') {
        if (in_.peek() == '"') {
          in_.get();
          fields.back().push_back('"');
        } else {
          quoted = false;
          after_quote = true;
        }
      } else {
        if (ch == '\n') ++line_;
        fields.back().push_back(ch);
      }
      continue;
    }
    if (ch == ',') {
      fields.emplace_back();
      after_quote = false;
    } else if (ch == '\n') {
      ++line_;
      break;
    } else if (ch == '\r') {
      if (in_.peek() == '\n') in_.get();
      ++line_;
      break;
    } else if (ch == '"' && fields.back().empty() && !after_quote) {
      quoted = true;
    } else {
      fields.back().push_back(ch);
    }
  }
  return fields;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << escape(fields[i]);
  }
  out << '\n';
}

}  // namespace newsstyle::csv

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

#include "newsstyle/textproc.hpp"
#include "newsstyle/utf8.hpp"

namespace newsstyle {

std::vector<QuotedSpan> detect_quotes(std::span<const std::string> paragraphs) {
  constexpr char32_t kOpen = 0x201C;
  constexpr char32_t kClose = 0x201D;
  std::vector<QuotedSpan> spans;
  for (std::size_t p = 0; p < paragraphs.size(); ++p) {
    const std::string& text = paragraphs[p];
    bool open = false;
    std::size_t start = 0;
    for (std::size_t pos = 0; pos < text.size();) {
      const auto d = utf8::decode(text, pos);
      const char32_t c = d.code_point;
      if (!open && (c == '"' || c == kOpen)) {
        open = true;
        start = pos + d.length;
      } else if (open && (c == '"' || c == kClose)) {
        spans.push_back({p, start, pos});
        open = false;
      }
      pos += d.length;
    }
    if (open) spans.push_back({p, start, text.size()});
  }
  return spans;
}

}  // namespace newsstyle

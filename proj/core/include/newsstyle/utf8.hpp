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

#ifndef NEWSSTYLE_UTF8_HPP_
#define NEWSSTYLE_UTF8_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace newsstyle::utf8 {

struct Decoded {
  char32_t code_point;
  std::size_t length;  // bytes consumed, >= 1
};

// Decodes the code point starting at text[pos]. Invalid sequences decode as
// U+FFFD consuming one byte.
Decoded decode(std::string_view text, std::size_t pos);
void append(std::string& out, char32_t code_point);
std::size_t length(std::string_view text);

enum class CharClass { space, letter, digit, punct };

// Approximate Unicode classification without a property database: code
// points above U+00BF are letters unless they fall in the space, general
// punctuation, symbol or CJK punctuation blocks.
CharClass classify(char32_t code_point);

// Simple lowercase folding for ASCII, Latin-1 and Latin Extended-A.
char32_t to_lower(char32_t code_point);
std::string to_lower(std::string_view text);

}  // namespace newsstyle::utf8

#endif  // NEWSSTYLE_UTF8_HPP_

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

#ifndef NEWSSTYLE_CHECKSUM_HPP_
#define NEWSSTYLE_CHECKSUM_HPP_

#include <filesystem>
#include <string>
#include <string_view>

namespace newsstyle {

// Lowercase hex SHA-256 digests.
std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

// 64-bit FNV-1a as 16 hex digits; names archived article files.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace newsstyle

#endif  // NEWSSTYLE_CHECKSUM_HPP_

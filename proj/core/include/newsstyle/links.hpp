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

#ifndef NEWSSTYLE_LINKS_HPP_
#define NEWSSTYLE_LINKS_HPP_

#include <string>
#include <string_view>

namespace newsstyle {

// Lowercased host of an absolute URL ("http://www.cnn.com/x" -> "www.cnn.com").
// Empty for relative URLs.
std::string url_host(std::string_view url);

// Registrable domain approximated without a public-suffix list: the last two
// host labels, or the last three when the second-level label is a generic
// one under a two-letter country code ("bbc.co.uk").
std::string registrable_domain(std::string_view url_or_host);

// True when the link's registrable domain differs from the publisher's.
// Relative links are internal.
bool is_external_link(std::string_view url, std::string_view publisher_domain);

}  // namespace newsstyle

#endif  // NEWSSTYLE_LINKS_HPP_

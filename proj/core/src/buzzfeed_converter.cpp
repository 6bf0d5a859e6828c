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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "newsstyle/buzzfeed.hpp"
#include "newsstyle/checksum.hpp"
#include "newsstyle/csv.hpp"
#include "newsstyle/error.hpp"
#include "newsstyle/links.hpp"
#include "newsstyle/textproc.hpp"
#include "newsstyle/utf8.hpp"

namespace newsstyle {
namespace {

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// -- HTML ------------------------------------------------------------------

const std::map<std::string_view, char32_t>& named_entities() {
  static const std::map<std::string_view, char32_t> entities = {
      {"amp", '&'},      {"lt", '<'},         {"gt", '>'},         {"quot", '"'},
      {"apos", '\''},    {"nbsp", ' '},       {"rsquo", 0x2019},   {"lsquo", 0x2018},
      {"rdquo", 0x201D}, {"ldquo", 0x201C},   {"mdash", 0x2014},   {"ndash", 0x2013},
      {"hellip", 0x2026}, {"copy", 0x00A9},   {"eacute", 0x00E9},  {"shy", 0x00AD}};
  return entities;
}

std::string decode_entities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '&') {
      out.push_back(text[i]);
      continue;
    }
    const std::size_t semi = text.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 10) {
      out.push_back('&');
      continue;
    }
    const std::string_view name = text.substr(i + 1, semi - i - 1);
    char32_t cp = 0;
    bool ok = false;
    if (name.size() > 1 && name[0] == '#') {
      const bool hex = name[1] == 'x' || name[1] == 'X';
      const std::string_view digits = name.substr(hex ? 2 : 1);
      std::uint32_t value = 0;
      const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), value,
                                       hex ? 16 : 10);
      ok = res.ec == std::errc{} && res.ptr == digits.data() + digits.size() && value > 0 &&
           value < 0x110000;
      cp = value;
    } else if (const auto it = named_entities().find(name); it != named_entities().end()) {
      ok = true;
      cp = it->second;
    }
    if (!ok) {
      out.push_back('&');
      continue;
    }
    if (cp != 0x00AD) utf8::append(out, cp == 0xA0 ? U' ' : cp);
    i = semi;
  }
  return out;
}

std::string collapse_space(std::string_view text) {
  std::string out;
  bool pending = false;
  for (std::size_t pos = 0; pos < text.size();) {
    const auto d = utf8::decode(text, pos);
    if (utf8::classify(d.code_point) == utf8::CharClass::space) {
      pending = !out.empty();
    } else {
      if (pending) out.push_back(' ');
      pending = false;
      out.append(text.substr(pos, d.length));
    }
    pos += d.length;
  }
  return out;
}

struct Tag {
  std::string name;  // lowercase, without '/'
  bool closing = false;
  std::map<std::string, std::string> attributes;
};

// Parses the tag starting at html[pos] == '<'; returns the position after '>'.
std::size_t parse_tag(std::string_view html, std::size_t pos, Tag& tag) {
  std::size_t i = pos + 1;
  if (html.substr(i, 3) == "!--") {
    const std::size_t end = html.find("-->", i + 3);
    tag.name = "!--";
    return end == std::string_view::npos ? html.size() : end + 3;
  }
  if (i < html.size() && html[i] == '/') {
    tag.closing = true;
    ++i;
  }
  const std::size_t name_begin = i;
  while (i < html.size() && (std::isalnum(static_cast<unsigned char>(html[i])) || html[i] == '!')) ++i;
  tag.name = lower_ascii(html.substr(name_begin, i - name_begin));
  while (i < html.size() && html[i] != '>') {
    if (std::isspace(static_cast<unsigned char>(html[i])) || html[i] == '/') {
      ++i;
      continue;
    }
    const std::size_t key_begin = i;
    while (i < html.size() && html[i] != '=' && html[i] != '>' &&
           !std::isspace(static_cast<unsigned char>(html[i])) && html[i] != '/') {
      ++i;
    }
    std::string key = lower_ascii(html.substr(key_begin, i - key_begin));
    std::string value;
    if (i < html.size() && html[i] == '=') {
      ++i;
      if (i < html.size() && (html[i] == '"' || html[i] == '\'')) {
        const char q = html[i];
        const std::size_t end = html.find(q, i + 1);
        const std::size_t stop = end == std::string_view::npos ? html.size() : end;
        value = decode_entities(html.substr(i + 1, stop - i - 1));
        i = stop == html.size() ? stop : stop + 1;
      } else {
        const std::size_t vb = i;
        while (i < html.size() && html[i] != '>' && !std::isspace(static_cast<unsigned char>(html[i]))) ++i;
        value = decode_entities(html.substr(vb, i - vb));
      }
    }
    if (!key.empty()) tag.attributes.emplace(std::move(key), std::move(value));
  }
  return i < html.size() ? i + 1 : html.size();
}

bool has_word(std::string_view text) {
  for (std::size_t pos = 0; pos < text.size();) {
    const auto d = utf8::decode(text, pos);
    const auto cls = utf8::classify(d.code_point);
    if (cls == utf8::CharClass::letter || cls == utf8::CharClass::digit) return true;
    pos += d.length;
  }
  return false;
}

bool is_generic_sld(std::string_view label) {
  return label == "co" || label == "com" || label == "org" || label == "net" || label == "gov" ||
         label == "ac" || label == "edu";
}

}  // namespace

// -- links -------------------------------------------------------------------

std::string url_host(std::string_view url) {
  const std::size_t scheme = url.find("://");
  std::size_t begin;
  if (scheme != std::string_view::npos) {
    begin = scheme + 3;
  } else if (url.substr(0, 2) == "//") {
    begin = 2;
  } else {
    return {};
  }
  std::size_t end = url.find_first_of("/?#", begin);
  if (end == std::string_view::npos) end = url.size();
  std::string_view authority = url.substr(begin, end - begin);
  if (const std::size_t at = authority.rfind('@'); at != std::string_view::npos) {
    authority.remove_prefix(at + 1);
  }
  if (const std::size_t colon = authority.find(':'); colon != std::string_view::npos) {
    authority = authority.substr(0, colon);
  }
  std::string host = lower_ascii(authority);
  while (!host.empty() && host.back() == '.') host.pop_back();
  return host;
}

std::string registrable_domain(std::string_view url_or_host) {
  std::string host = url_or_host.find('/') != std::string_view::npos ? url_host(url_or_host)
                                                                      : lower_ascii(url_or_host);
  std::vector<std::string_view> labels;
  std::string_view rest(host);
  while (!rest.empty()) {
    const std::size_t dot = rest.find('.');
    labels.push_back(rest.substr(0, dot));
    if (dot == std::string_view::npos) break;
    rest.remove_prefix(dot + 1);
  }
  std::size_t keep = 2;
  if (labels.size() >= 3 && labels.back().size() == 2 && is_generic_sld(labels[labels.size() - 2])) {
    keep = 3;
  }
  if (labels.size() <= keep) return host;
  std::string out;
  for (std::size_t i = labels.size() - keep; i < labels.size(); ++i) {
    if (!out.empty()) out.push_back('.');
    out.append(labels[i]);
  }
  return out;
}

bool is_external_link(std::string_view url, std::string_view publisher_domain) {
  if (url_host(url).empty()) return false;
  return registrable_domain(url) != registrable_domain(publisher_domain);
}

// -- pages -------------------------------------------------------------------

ExtractedPage extract_article_html(std::string_view html) {
  ExtractedPage page;
  std::string title;
  std::string h1;
  bool in_title = false;
  bool in_h1 = false;
  bool h1_done = false;
  int paragraph_depth = 0;
  std::string paragraph;
  std::vector<std::string> paragraph_links;

  auto flush_paragraph = [&] {
    std::string text = collapse_space(decode_entities(paragraph));
    if (has_word(text)) {
      page.paragraphs.push_back(std::move(text));
      page.links.insert(page.links.end(), paragraph_links.begin(), paragraph_links.end());
    }
    paragraph.clear();
    paragraph_links.clear();
  };

  std::size_t pos = 0;
  while (pos < html.size()) {
    const std::size_t lt = html.find('<', pos);
    const std::string_view text = html.substr(pos, (lt == std::string_view::npos ? html.size() : lt) - pos);
    if (paragraph_depth > 0) paragraph.append(text);
    if (in_title) title.append(text);
    if (in_h1) h1.append(text);
    if (lt == std::string_view::npos) break;

    Tag tag;
    pos = parse_tag(html, lt, tag);
    if (tag.name == "script" || tag.name == "style") {
      if (!tag.closing) {
        const std::string close = "</" + tag.name;
        std::size_t end = pos;
        for (;;) {
          end = html.find('<', end);
          if (end == std::string_view::npos) break;
          if (lower_ascii(html.substr(end, close.size())) == close) break;
          ++end;
        }
        if (end == std::string_view::npos) break;
        Tag closing;
        pos = parse_tag(html, end, closing);
      }
      continue;
    }
    if (tag.name == "title") {
      in_title = !tag.closing;
    } else if (tag.name == "h1" && !h1_done) {
      in_h1 = !tag.closing;
      if (tag.closing) h1_done = true;
    } else if (tag.name == "p") {
      if (!tag.closing) {
        if (paragraph_depth > 0) flush_paragraph();
        paragraph_depth = 1;
      } else if (paragraph_depth > 0) {
        flush_paragraph();
        paragraph_depth = 0;
      }
    } else if (tag.name == "br") {
      if (paragraph_depth > 0) paragraph.push_back(' ');
    } else if (tag.name == "a" && !tag.closing && paragraph_depth > 0) {
      if (const auto it = tag.attributes.find("href"); it != tag.attributes.end()) {
        const std::string href(trim(it->second));
        if (!href.empty() && href[0] != '#' && href.rfind("javascript:", 0) != 0 &&
            href.rfind("mailto:", 0) != 0) {
          paragraph_links.push_back(href);
        }
      }
    } else if (tag.name == "link" && !tag.closing) {
      const auto rel = tag.attributes.find("rel");
      const auto href = tag.attributes.find("href");
      if (rel != tag.attributes.end() && lower_ascii(rel->second) == "canonical" &&
          href != tag.attributes.end()) {
        page.canonical_url = std::string(trim(href->second));
      }
    } else if (tag.name == "meta" && !tag.closing && !page.canonical_url) {
      const auto property = tag.attributes.find("property");
      const auto content = tag.attributes.find("content");
      if (property != tag.attributes.end() && property->second == "og:url" &&
          content != tag.attributes.end()) {
        page.canonical_url = std::string(trim(content->second));
      }
    } else if (paragraph_depth > 0 && !tag.closing &&
               (tag.name == "div" || tag.name == "li" || tag.name == "td")) {
      paragraph.push_back(' ');
    }
  }
  if (paragraph_depth > 0) flush_paragraph();

  page.title = collapse_space(decode_entities(title));
  if (page.title.empty()) page.title = collapse_space(decode_entities(h1));
  return page;
}

std::string archive_key(std::string_view post_url) { return fnv1a64_hex(trim(post_url)); }

std::optional<Rating> parse_buzzfeed_rating(std::string_view token) {
  const std::string t = lower_ascii(trim(token));
  if (t == "mostly true") return Rating::mostly_true;
  if (t == "mixture of true and false") return Rating::mixture;
  if (t == "mostly false") return Rating::mostly_false;
  if (t == "no factual content") return Rating::no_factual;
  return std::nullopt;
}

std::optional<Orientation> parse_buzzfeed_category(std::string_view token) {
  const std::string t = lower_ascii(trim(token));
  if (t == "mainstream") return Orientation::mainstream;
  if (t == "left") return Orientation::left;
  if (t == "right") return Orientation::right;
  return std::nullopt;
}

std::optional<std::string> known_publisher_domain(std::string_view page) {
  static const std::map<std::string, std::string, std::less<>> domains = {
      {"abc news politics", "go.com"},
      {"abc news", "go.com"},
      {"cnn politics", "cnn.com"},
      {"cnn", "cnn.com"},
      {"politico", "politico.com"},
      {"addicting info", "addictinginfo.com"},
      {"occupy democrats", "occupydemocrats.com"},
      {"the other 98%", "theother98.com"},
      {"eagle rising", "eaglerising.com"},
      {"freedom daily", "freedomdaily.com"},
      {"right wing news", "rightwingnews.com"}};
  const auto it = domains.find(lower_ascii(trim(page)));
  if (it == domains.end()) return std::nullopt;
  return it->second;
}

Corpus convert_buzzfeed(const std::filesystem::path& csv_path,
                        const std::filesystem::path& archive_dir, ConversionReport* report) {
  std::ifstream in(csv_path, std::ios::binary);
  if (!in) throw DataError("cannot read " + csv_path.string());
  csv::Reader reader(in);
  const auto header = reader.next();
  if (!header) return {};

  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < header->size(); ++i) {
    std::string name((*header)[i]);
    if (i == 0 && name.rfind("\xEF\xBB\xBF", 0) == 0) name.erase(0, 3);
    column.emplace(std::string(trim(name)), i);
  }
  auto index_of = [&](const char* name) {
    const auto it = column.find(name);
    if (it == column.end()) {
      throw DataError(csv_path.string() + ":1: missing column '" + std::string(name) + "'");
    }
    return it->second;
  };
  const std::size_t c_post = index_of("post_id");
  const std::size_t c_category = index_of("Category");
  const std::size_t c_page = index_of("Page");
  const std::size_t c_url = index_of("Post URL");
  const std::size_t c_rating = index_of("Rating");

  ConversionReport local;
  ConversionReport& r = report ? *report : local;
  r = {};
  Corpus corpus;
  while (auto row = reader.next()) {
    const std::string where = csv_path.string() + ":" + std::to_string(reader.record_line());
    if (row->size() == 1 && trim((*row)[0]).empty()) continue;
    if (row->size() < header->size()) throw DataError(where + ": too few fields");
    ++r.records;

    const auto orientation = parse_buzzfeed_category((*row)[c_category]);
    if (!orientation) {
      throw DataError(where + ": field 'Category': unknown token '" + (*row)[c_category] + "'");
    }
    const auto rating = parse_buzzfeed_rating((*row)[c_rating]);
    if (!rating) {
      throw DataError(where + ": field 'Rating': unknown token '" + (*row)[c_rating] + "'");
    }

    const std::string url(trim((*row)[c_url]));
    const auto page_path = archive_dir / (archive_key(url) + ".html");
    std::ifstream page_in(page_path, std::ios::binary);
    if (!page_in) {
      ++r.missing_archive;
      continue;
    }
    std::stringstream buffer;
    buffer << page_in.rdbuf();
    ExtractedPage page = extract_article_html(buffer.str());
    if (page.paragraphs.empty()) {
      ++r.without_text;
      continue;
    }

    Article article;
    article.id = std::string(trim((*row)[c_post]));
    article.publisher = std::string(trim((*row)[c_page]));
    article.orientation = *orientation;
    article.rating = *rating;
    article.title = std::move(page.title);
    article.paragraphs = std::move(page.paragraphs);
    article.quoted_spans = detect_quotes(article.paragraphs);
    article.source_url = url;

    std::string domain = known_publisher_domain(article.publisher).value_or("");
    if (domain.empty() && page.canonical_url) domain = registrable_domain(*page.canonical_url);
    for (std::string& href : page.links) {
      const bool external = is_external_link(href, domain);
      article.links.push_back({std::move(href), external});
    }
    validate_article(article);
    corpus.push_back(std::move(article));
    ++r.converted;
  }
  return corpus;
}

}  // namespace newsstyle

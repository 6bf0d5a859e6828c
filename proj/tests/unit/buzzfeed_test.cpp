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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "newsstyle/buzzfeed.hpp"
#include "newsstyle/checksum.hpp"
#include "newsstyle/error.hpp"
#include "newsstyle/links.hpp"

namespace newsstyle {
namespace {

namespace fs = std::filesystem;

TEST(Links, HostsAndDomains) {
  EXPECT_EQ(url_host("https://User@WWW.CNN.com:443/path?q#f"), "www.cnn.com");
  EXPECT_EQ(url_host("/relative/path"), "");
  EXPECT_EQ(registrable_domain("http://edition.cnn.com/x"), "cnn.com");
  EXPECT_EQ(registrable_domain("www.bbc.co.uk"), "bbc.co.uk");
  EXPECT_TRUE(is_external_link("https://twitter.com/x", "cnn.com"));
  EXPECT_FALSE(is_external_link("https://money.cnn.com/x", "cnn.com"));
  EXPECT_FALSE(is_external_link("/local", "cnn.com"));
}

TEST(BuzzfeedTokens, RatingsAndCategories) {
  EXPECT_EQ(parse_buzzfeed_rating("mostly true"), Rating::mostly_true);
  EXPECT_EQ(parse_buzzfeed_rating("mixture of true and false"), Rating::mixture);
  EXPECT_EQ(parse_buzzfeed_rating("mostly false"), Rating::mostly_false);
  EXPECT_EQ(parse_buzzfeed_rating("no factual content"), Rating::no_factual);
  EXPECT_FALSE(parse_buzzfeed_rating("pants on fire"));
  EXPECT_EQ(parse_buzzfeed_category("mainstream"), Orientation::mainstream);
  EXPECT_EQ(parse_buzzfeed_category("left"), Orientation::left);
  EXPECT_EQ(parse_buzzfeed_category("right"), Orientation::right);
  EXPECT_EQ(known_publisher_domain("CNN Politics").value_or(""), "cnn.com");
  EXPECT_EQ(known_publisher_domain("Unknown Blog").value_or(""), "");
  EXPECT_EQ(known_publisher_domain("Politico").value_or(""), "politico.com");
}

TEST(ExtractHtml, TitleParagraphsLinksAndEntities) {
  const std::string html = R"(<html><head><title>A &amp; B</title>
<link rel="canonical" href="https://www.example.com/story">
<script>var p = "<p>not text</p>";</script></head>
<body><h1>Ignored heading</h1>
<p>First <a href="https://other.org/x">linked</a> paragraph &ldquo;quoted&rdquo;.</p>
<p>   </p>
<p>Second&nbsp;one.</p></body></html>)";
  const ExtractedPage page = extract_article_html(html);
  EXPECT_EQ(page.title, "A & B");
  ASSERT_EQ(page.paragraphs.size(), 2U);
  EXPECT_EQ(page.paragraphs[0], "First linked paragraph “quoted”.");
  EXPECT_EQ(page.paragraphs[1], "Second one.");
  ASSERT_EQ(page.links.size(), 1U);
  EXPECT_EQ(page.links[0], "https://other.org/x");
  EXPECT_EQ(page.canonical_url.value_or(""), "https://www.example.com/story");
}

TEST(ArchiveKey, IsFnvOfTrimmedUrl) {
  EXPECT_EQ(archive_key("  https://cnn.com/a "), fnv1a64_hex("https://cnn.com/a"));
  EXPECT_EQ(fnv1a64_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a64_hex("a"), "af63dc4c8601ec8c");
}

class ConvertTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("newsstyle_convert_" + std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_ / "articles");
  }
  void TearDown() override { fs::remove_all(dir_); }

  void page(const std::string& url, const std::string& body) {
    std::ofstream(dir_ / "articles" / (archive_key(url) + ".html")) << body;
  }
  fs::path csv(const std::string& text) {
    std::ofstream(dir_ / "data.csv") << text;
    return dir_ / "data.csv";
  }

  fs::path dir_;
};

TEST_F(ConvertTest, ConvertsArchivedRowsAndCountsSkips) {
  page("https://cnn.com/1",
       "<title>T</title><p>He said \"fine\" <a href=\"https://cnn.com/x\">here</a> "
       "and <a href=\"https://t.co/y\">there</a>.</p>");
  page("https://cnn.com/3", "<p> </p>");
  const auto path = csv(
      "account_id,post_id,Category,Page,Post URL,Date Published,Post Type,Rating\n"
      "1,p1,mainstream,CNN Politics,https://cnn.com/1,2016-09-19,link,mostly true\n"
      "1,p2,mainstream,CNN Politics,https://cnn.com/2,2016-09-19,link,mostly true\n"
      "1,p3,mainstream,CNN Politics,https://cnn.com/3,2016-09-19,link,no factual content\n");
  ConversionReport report;
  const Corpus corpus = convert_buzzfeed(path, dir_ / "articles", &report);
  EXPECT_EQ(report.records, 3U);
  EXPECT_EQ(report.converted, 1U);
  EXPECT_EQ(report.missing_archive, 1U);
  EXPECT_EQ(report.without_text, 1U);
  ASSERT_EQ(corpus.size(), 1U);
  const Article& a = corpus[0];
  EXPECT_EQ(a.id, "p1");
  EXPECT_EQ(a.publisher, "CNN Politics");
  EXPECT_EQ(a.rating, Rating::mostly_true);
  ASSERT_EQ(a.links.size(), 2U);
  EXPECT_FALSE(a.links[0].external);
  EXPECT_TRUE(a.links[1].external);
  ASSERT_EQ(a.quoted_spans.size(), 1U);
  EXPECT_EQ(a.paragraphs[0].substr(a.quoted_spans[0].begin,
                                   a.quoted_spans[0].end - a.quoted_spans[0].begin),
            "fine");
}

TEST_F(ConvertTest, UnknownRatingNamesTheLine) {
  const auto path = csv(
      "account_id,post_id,Category,Page,Post URL,Date Published,Post Type,Rating\n"
      "1,p1,mainstream,CNN,https://cnn.com/1,2016-09-19,link,mostly true\n"
      "1,p2,mainstream,CNN,https://cnn.com/2,2016-09-19,link,half true\n");
  try {
    convert_buzzfeed(path, dir_ / "articles");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos) << e.what();
  }
}

TEST_F(ConvertTest, MissingColumnIsDataError) {
  const auto path = csv("post_id,Category,Page\np1,left,X\n");
  EXPECT_THROW(convert_buzzfeed(path, dir_ / "articles"), DataError);
}

}  // namespace
}  // namespace newsstyle

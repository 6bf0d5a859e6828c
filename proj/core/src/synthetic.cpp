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
#include <array>
#include <cctype>
#include <cstdio>
#include <string_view>

#include "newsstyle/random.hpp"
#include "newsstyle/synthetic.hpp"
#include "newsstyle/textproc.hpp"

namespace newsstyle {
namespace {

using Words = std::span<const std::string_view>;

constexpr std::array<std::string_view, 40> kFunction = {
    "the", "a", "of", "to", "and", "in", "that", "is", "for", "on", "with", "as", "was", "it",
    "by", "at", "from", "this", "be", "have", "are", "has", "not", "but", "or", "an", "they",
    "which", "their", "will", "about", "after", "more", "than", "would", "been", "who", "its",
    "also", "into"};

constexpr std::array<std::string_view, 48> kShared = {
    "government", "state", "official", "report", "week", "campaign", "election", "policy",
    "country", "people", "president", "vote", "voters", "statement", "congress", "senate",
    "house", "public", "plan", "issue", "support", "leader", "party", "debate", "national",
    "federal", "law", "percent", "million", "year", "question", "record", "group", "according",
    "members", "office", "department", "economy", "security", "program", "former", "local",
    "announced", "said", "told", "expected", "recent", "major"};

// General nouns drawn with a skew toward the front of the list.
constexpr std::array<std::string_view, 295> kGeneral = {
    "ability", "access", "account", "action", "activity", "actually", "address", "agreement",
    "amount", "answer", "approach", "area", "argument", "army", "article", "attention",
    "audience", "authority", "average", "balance", "bank", "base", "basis", "behavior", "benefit",
    "bill", "board", "budget", "building", "business", "call", "capital", "care", "career",
    "case", "cause", "center", "century", "chance", "change", "charge", "choice", "city", "claim",
    "class", "coast", "college", "community", "company", "computer", "concern", "condition",
    "conference", "control", "cost", "council", "county", "couple", "course", "court", "crime",
    "culture", "customer", "damage", "deal", "decade", "decision", "defense", "degree", "demand",
    "design", "detail", "development", "difference", "direction", "director", "discussion",
    "distance", "district", "doctor", "door", "draft", "drug", "effect", "effort", "energy",
    "event", "evidence", "example", "experience", "expert", "face", "fact", "factor", "family",
    "farm", "field", "figure", "film", "final", "finance", "firm", "floor", "focus", "force",
    "foreign", "form", "freedom", "friend", "fund", "future", "game", "goal", "ground", "growth",
    "guard", "half", "hand", "head", "health", "hearing", "history", "hospital", "hour", "idea",
    "image", "impact", "income", "increase", "industry", "information", "interest", "interview",
    "investment", "job", "judge", "key", "kind", "land", "language", "lead", "level", "life",
    "light", "line", "list", "market", "material", "matter", "meeting", "memory", "message",
    "method", "middle", "minute", "model", "moment", "money", "month", "morning", "movement",
    "name", "nature", "network", "news", "night", "number", "office", "oil", "opinion", "order",
    "organization", "owner", "page", "paper", "parent", "part", "partner", "path", "patient",
    "pattern", "peace", "period", "person", "phone", "picture", "piece", "place", "plant",
    "player", "point", "police", "population", "position", "power", "practice", "pressure",
    "price", "problem", "process", "product", "project", "property", "purpose", "quality",
    "range", "rate", "reason", "region", "relationship", "research", "resource", "response",
    "result", "return", "review", "risk", "road", "role", "room", "rule", "safety", "sale",
    "scene", "school", "science", "season", "seat", "sense", "series", "service", "share", "side",
    "sign", "site", "situation", "size", "society", "source", "space", "speech", "staff", "stage",
    "standard", "station", "step", "stock", "story", "strategy", "street", "structure", "student",
    "study", "subject", "success", "summer", "system", "table", "target", "team", "technology",
    "term", "test", "theory", "thing", "threat", "time", "total", "town", "trade", "training",
    "travel", "trial", "trouble", "truth", "type", "union", "unit", "value", "version", "view",
    "village", "violence", "war", "water", "way", "weapon", "weekend", "window", "winter",
    "woman", "word", "work", "world", "writer"};

constexpr std::array<std::string_view, 16> kMainstreamTopic = {
    "analysts", "survey", "officials", "spokesperson", "committee", "briefing", "data", "agency",
    "estimates", "negotiations", "quarterly", "representatives", "administration", "sources",
    "testimony", "delegates"};
constexpr std::array<std::string_view, 16> kLeftTopic = {
    "workers", "healthcare", "inequality", "climate", "justice", "wages", "union", "activists",
    "corporations", "billionaires", "rights", "progressive", "communities", "equality",
    "protesters", "environment"};
constexpr std::array<std::string_view, 16> kRightTopic = {
    "liberty", "taxes", "border", "patriots", "freedom", "constitution", "military", "veterans",
    "faith", "elites", "establishment", "sovereignty", "conservative", "borders", "amendment",
    "taxpayers"};
constexpr std::array<std::string_view, 14> kSatireTopic = {
    "reportedly", "unnamed", "local", "man", "woman", "area", "sources", "confirmed", "sighing",
    "nation", "horrified", "shrugging", "visibly", "spokesman"};

constexpr std::array<std::string_view, 14> kIntensifiers = {
    "absolutely", "totally", "shocking", "outrageous", "disgraceful", "incredible", "truly",
    "completely", "insane", "unbelievable", "massive", "corrupt", "disaster", "horrible"};
constexpr std::array<std::string_view, 10> kHedges = {
    "reportedly", "however", "according", "officials", "approximately", "indicated", "noted",
    "suggested", "further", "additionally"};

struct Style {
  double exclaim = 0.0;     // sentence ends with '!'
  double question = 0.0;    // sentence ends with '?'
  double intensify = 0.0;   // per content word
  double hedge = 0.0;       // per content word
  double quote = 0.0;       // per sentence
  double topic = 0.0;       // share of content words from the topic list
  double you = 0.0;         // per sentence, second-person address
  std::size_t min_words = 8;
  std::size_t max_words = 18;
  std::size_t min_sentences = 2;
  std::size_t max_sentences = 4;
  double external_links = 0.5;
};

Style blend(const Style& neutral, const Style& target, double strength) {
  auto mix = [&](double a, double b) { return a + (b - a) * strength; };
  Style s = target;
  s.exclaim = mix(neutral.exclaim, target.exclaim);
  s.question = mix(neutral.question, target.question);
  s.intensify = mix(neutral.intensify, target.intensify);
  s.hedge = mix(neutral.hedge, target.hedge);
  s.quote = mix(neutral.quote, target.quote);
  s.topic = mix(neutral.topic, target.topic);
  s.you = mix(neutral.you, target.you);
  s.external_links = mix(neutral.external_links, target.external_links);
  return s;
}

const Style& neutral_style() {
  static const Style s{0.02, 0.02, 0.02, 0.05, 0.15, 0.15, 0.02, 9, 18, 2, 4, 0.5};
  return s;
}

Style orientation_style(Orientation o) {
  switch (o) {
    case Orientation::mainstream:
      return {0.0, 0.01, 0.0, 0.12, 0.3, 0.25, 0.0, 12, 22, 2, 4, 0.45};
    case Orientation::left:
      return {0.12, 0.06, 0.08, 0.02, 0.22, 0.3, 0.08, 7, 15, 1, 3, 0.8};
    case Orientation::right:
      return {0.15, 0.08, 0.1, 0.01, 0.18, 0.3, 0.1, 7, 14, 1, 3, 0.6};
    case Orientation::satire:
      return {0.04, 0.04, 0.03, 0.03, 0.4, 0.35, 0.12, 6, 13, 1, 3, 0.1};
  }
  return neutral_style();
}

Words topic_words(Orientation o) {
  switch (o) {
    case Orientation::mainstream: return kMainstreamTopic;
    case Orientation::left: return kLeftTopic;
    case Orientation::right: return kRightTopic;
    case Orientation::satire: return kSatireTopic;
  }
  return kShared;
}

std::string_view pick(Rng& rng, Words words) { return words[rng.uniform_index(words.size())]; }

std::size_t between(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + rng.uniform_index(hi - lo + 1);
}

std::string sentence(Rng& rng, const Style& style, Words topic) {
  std::string out;
  const std::size_t words = between(rng, style.min_words, style.max_words);
  const bool quoted = rng.uniform01() < style.quote;
  const std::size_t quote_from = quoted ? words / 3 : words;
  for (std::size_t w = 0; w < words; ++w) {
    std::string_view word;
    if (rng.uniform01() < 0.42) {
      word = pick(rng, kFunction);
    } else if (rng.uniform01() < style.intensify * 3) {
      word = pick(rng, kIntensifiers);
    } else if (rng.uniform01() < style.hedge * 3) {
      word = pick(rng, kHedges);
    } else if (rng.uniform01() < style.topic) {
      word = pick(rng, topic);
    } else if (rng.uniform01() < 0.5) {
      word = pick(rng, kShared);
    } else {
      const double u = rng.uniform01();
      word = kGeneral[static_cast<std::size_t>(u * u * static_cast<double>(kGeneral.size()))];
    }
    if (w > 0) out.push_back(' ');
    if (w == quote_from) out.push_back('"');
    std::string token(word);
    if (w == 0) token[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    out += token;
    if (w + 2 < words && w > 1 && rng.uniform01() < 0.06) out.push_back(',');
  }
  if (rng.uniform01() < style.you) out += ", you know";
  const double end = rng.uniform01();
  if (end < style.exclaim) {
    out += rng.uniform01() < 0.3 ? "!!" : "!";
  } else if (end < style.exclaim + style.question) {
    out.push_back('?');
  } else {
    out.push_back('.');
  }
  if (quoted) out.push_back('"');
  return out;
}

Article make_article(Rng& rng, const Style& style, Orientation orientation, Rating rating,
                     const std::string& publisher, const std::string& domain, std::string id,
                     const SyntheticCorpusConfig& config) {
  Article a;
  a.id = std::move(id);
  a.publisher = publisher;
  a.orientation = orientation;
  a.rating = rating;
  const Words topic = topic_words(orientation);
  a.title = sentence(rng, style, topic);
  const std::size_t paragraphs = between(rng, config.min_paragraphs, config.max_paragraphs);
  for (std::size_t p = 0; p < paragraphs; ++p) {
    std::string text;
    const std::size_t sentences = between(rng, style.min_sentences, style.max_sentences);
    for (std::size_t s = 0; s < sentences; ++s) {
      if (s > 0) text.push_back(' ');
      text += sentence(rng, style, topic);
    }
    a.paragraphs.push_back(std::move(text));
  }
  const std::size_t links = rng.uniform_index(6);
  for (std::size_t l = 0; l < links; ++l) {
    const bool external = rng.uniform01() < style.external_links;
    const std::string host = external ? "https://www.example" + std::to_string(rng.uniform_index(9)) + ".org"
                                      : "https://www." + domain;
    a.links.push_back({host + "/story/" + std::to_string(rng.uniform_index(100000)), external});
  }
  a.quoted_spans = detect_quotes(a.paragraphs);
  return a;
}

struct PublisherSpec {
  std::string_view name;
  std::string_view slug;
  Orientation orientation;
};

constexpr std::array<PublisherSpec, 9> kPublishers = {{
    {"Daily Ledger", "dailyledger", Orientation::mainstream},
    {"Metro Times", "metrotimes", Orientation::mainstream},
    {"National Wire", "nationalwire", Orientation::mainstream},
    {"Forward Voice", "forwardvoice", Orientation::left},
    {"Peoples Post", "peoplespost", Orientation::left},
    {"Progress Report", "progressreport", Orientation::left},
    {"Heritage Herald", "heritageherald", Orientation::right},
    {"Liberty Beacon", "libertybeacon", Orientation::right},
    {"Patriot Review", "patriotreview", Orientation::right},
}};

Rating draw_rating(Rng& rng, Orientation o) {
  const double u = rng.uniform01();
  if (o == Orientation::mainstream) {
    if (u < 0.94) return Rating::mostly_true;
    if (u < 0.97) return Rating::mixture;
    return Rating::no_factual;
  }
  const double true_share = o == Orientation::left ? 0.6 : 0.5;
  if (u < true_share) return Rating::mostly_true;
  if (u < true_share + 0.25) return Rating::mixture;
  if (u < 0.94) return Rating::mostly_false;
  return Rating::no_factual;
}

}  // namespace

Corpus make_synthetic_corpus(const SyntheticCorpusConfig& config) {
  Corpus corpus;
  for (std::size_t p = 0; p < kPublishers.size(); ++p) {
    const PublisherSpec& spec = kPublishers[p];
    Rng rng(derive_seed(config.seed, p));
    const Style base = blend(neutral_style(), orientation_style(spec.orientation), config.style_strength);
    for (std::size_t i = 0; i < config.articles_per_publisher; ++i) {
      const Rating rating = draw_rating(rng, spec.orientation);
      Style style = base;
      if (rating == Rating::mixture || rating == Rating::mostly_false) {
        // Fake articles push further toward the hyperpartisan register.
        style.intensify += 0.06 * config.style_strength;
        style.exclaim += 0.1 * config.style_strength;
        style.hedge *= 0.5;
      }
      char id[64];
      std::snprintf(id, sizeof id, "%s-%04zu", std::string(spec.slug).c_str(), i);
      corpus.push_back(make_article(rng, style, spec.orientation, rating, std::string(spec.name),
                                    std::string(spec.slug) + ".com", id, config));
    }
  }
  return corpus;
}

Corpus make_synthetic_satire_corpus(std::size_t per_class, std::uint64_t seed) {
  Corpus corpus;
  SyntheticCorpusConfig config;
  config.seed = seed;
  Rng satire_rng(derive_seed(seed, 101));
  const Style satire = orientation_style(Orientation::satire);
  for (std::size_t i = 0; i < per_class; ++i) {
    const std::string publisher = i % 2 == 0 ? "Spoof Gazette" : "Parody Press";
    char id[64];
    std::snprintf(id, sizeof id, "satire-%04zu", i);
    corpus.push_back(make_article(satire_rng, satire, Orientation::satire, Rating::unrated,
                                  publisher, i % 2 == 0 ? "spoofgazette.com" : "parodypress.com", id,
                                  config));
  }
  Rng real_rng(derive_seed(seed, 102));
  const Style real = orientation_style(Orientation::mainstream);
  for (std::size_t i = 0; i < per_class; ++i) {
    char id[64];
    std::snprintf(id, sizeof id, "real-%04zu", i);
    corpus.push_back(make_article(real_rng, real, Orientation::mainstream, Rating::mostly_true,
                                  "Daily Ledger", "dailyledger.com", id, config));
  }
  return corpus;
}

}  // namespace newsstyle

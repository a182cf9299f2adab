// Copyright 2026 the mtk authors.
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

#include "mtk/augment.hpp"

#include <set>

#include "doctest.h"
#include "mtk/error.hpp"
#include "mtk/segment.hpp"

using namespace mtk;

namespace {

const LanguageCode kEn("en");
const LanguageCode kFr("fr");
const LanguageCode kDe("de");
const LanguageCode kZh("zh");

Lexicon FullLexicon() {
  Lexicon lex;
  const char* words[] = {"the", "cat", "sat", "on", "mat", "a", "dog", "ran"};
  for (const char* w : words) {
    lex.AddSynonym(w, kEn, kFr, std::string(w) + "_fr");
    lex.AddSynonym(w, kEn, kDe, std::string(w) + "_de");
  }
  return lex;
}

AugmentConfig Cfg(double prob, AugmentStrategy strategy) {
  AugmentConfig cfg;
  cfg.replace_prob = prob;
  cfg.language_pool = {kEn, kFr, kDe};
  cfg.strategy = strategy;
  return cfg;
}

}  // namespace

TEST_SUITE("segment") {

TEST_CASE("whitespace tokens carry exact byte spans") {
  SegmenterPolicy policy;
  const std::string text = "  the cat   sat ";
  const auto toks = Segment(text, kEn, policy);
  REQUIRE(toks.size() == 3);
  CHECK(toks[0].text == "the");
  CHECK(text.substr(toks[1].begin, toks[1].end - toks[1].begin) == "cat");
  CHECK(toks[2].begin == 12);
}

TEST_CASE("chinese defaults to per-character segmentation") {
  SegmenterPolicy policy;
  const std::string text = "\xE4\xBD\xA0\xE5\xA5\xBD";  // two characters
  const auto toks = Segment(text, kZh, policy);
  REQUIRE(toks.size() == 2);
  CHECK(toks[0].text == "\xE4\xBD\xA0");
  CHECK(toks[1].text == "\xE5\xA5\xBD");
}

TEST_CASE("reconstruction preserves inter-token separators") {
  SegmenterPolicy policy;
  const std::string text = " a  b\tc ";
  const auto toks = Segment(text, kEn, policy);
  const auto out = ReconstructFromSpans(text, toks, {"X", "YY", "Z"});
  CHECK(out == " X  YY\tZ ");
}

TEST_CASE("identity replacements rebuild the original exactly") {
  SegmenterPolicy policy;
  const std::string text = "one  two\t three";
  const auto toks = Segment(text, kEn, policy);
  std::vector<std::string> same;
  for (const auto& t : toks) same.push_back(t.text);
  CHECK(ReconstructFromSpans(text, toks, same) == text);
}

}  // TEST_SUITE

TEST_SUITE("augment") {

TEST_CASE("probability 1 replaces every eligible word") {
  const auto lex = FullLexicon();
  SegmenterPolicy policy;
  Rng rng(1);
  const SentencePair pair{kEn, kFr, "The cat sat", "le chat"};
  const auto out = CodeSwitchParallel(pair, lex, Cfg(1.0, AugmentStrategy::kPerSentenceLanguage),
                                      policy, rng);
  CHECK(out.eligible_count == 3);
  CHECK(out.replacement_log.size() == 3);
  CHECK(out.other_text == "le chat");
  CHECK(out.loss_scope == LossScope::kTargetOnly);
}

TEST_CASE("probability 0 replaces nothing but still lowercases") {
  const auto lex = FullLexicon();
  SegmenterPolicy policy;
  Rng rng(1);
  const SentencePair pair{kEn, kFr, "The Cat sat", "le chat"};
  const auto out = CodeSwitchParallel(pair, lex,
                                      Cfg(0.0, AugmentStrategy::kPerSentenceLanguage),
                                      policy, rng);
  CHECK(out.replacement_log.empty());
  CHECK(out.switched_text == "the cat sat");
}

TEST_CASE("per-sentence strategy draws one language for the whole sentence") {
  const auto lex = FullLexicon();
  SegmenterPolicy policy;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const SentencePair pair{kEn, kFr, "the cat sat on a mat", "x"};
    const auto out = CodeSwitchParallel(
        pair, lex, Cfg(1.0, AugmentStrategy::kPerSentenceLanguage), policy,
        rng);
    std::set<std::string> langs;
    for (const auto& r : out.replacement_log) langs.insert(r.chosen_lang.str());
    REQUIRE(langs.size() == 1);
    CHECK((*langs.begin() == "fr" || *langs.begin() == "de"));
  }
}

TEST_CASE("per-word strategy mixes languages within one sentence") {
  const auto lex = FullLexicon();
  SegmenterPolicy policy;
  std::set<std::string> langs;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const MonolingualRecord rec{kEn, "the cat sat on a mat the dog ran", ""};
    const auto out = CodeSwitchMonolingual(
        rec, lex, Cfg(1.0, AugmentStrategy::kPerWordLanguage), policy, rng);
    CHECK(out.loss_scope == LossScope::kFullPair);
    CHECK(out.other_text == rec.text);
    for (const auto& r : out.replacement_log) langs.insert(r.chosen_lang.str());
  }
  CHECK(langs == std::set<std::string>{"fr", "de"});
}

TEST_CASE("words without a synonym in the drawn language are retained") {
  Lexicon lex;
  lex.AddSynonym("cat", kEn, kFr, "chat");
  SegmenterPolicy policy;
  AugmentConfig cfg = Cfg(1.0, AugmentStrategy::kPerSentenceLanguage);
  cfg.language_pool = {kEn, kFr};
  Rng rng(5);
  const SentencePair pair{kEn, kFr, "the cat sat", "x"};
  const auto out = CodeSwitchParallel(pair, lex, cfg, policy, rng);
  CHECK(out.switched_text == "the chat sat");
  CHECK(out.eligible_count == 1);
}

TEST_CASE("empty lexicon acts as identity") {
  Lexicon lex;
  SegmenterPolicy policy;
  AugmentConfig cfg = Cfg(1.0, AugmentStrategy::kPerSentenceLanguage);
  Rng rng(5);
  const SentencePair pair{kEn, kFr, "Nothing Known Here", "x"};
  const auto out = CodeSwitchParallel(pair, lex, cfg, policy, rng);
  CHECK(out.switched_text == "nothing known here");
  CHECK(out.eligible_count == 0);
}

TEST_CASE("a pool containing only the source language is an error") {
  Lexicon lex;
  SegmenterPolicy policy;
  AugmentConfig cfg;
  cfg.language_pool = {kEn};
  Rng rng(1);
  const SentencePair pair{kEn, kFr, "a", "b"};
  CHECK_THROWS_AS(CodeSwitchParallel(pair, lex, cfg, policy, rng),
                  EmptyPoolError);
}

TEST_CASE("observed replacement rate tracks the configured probability") {
  const auto lex = FullLexicon();
  SegmenterPolicy policy;
  const auto cfg = Cfg(0.9, AugmentStrategy::kPerSentenceLanguage);
  std::vector<AugmentedPair> outs;
  const SentencePair pair{kEn, kFr, "the cat sat on a mat the dog ran", "x"};
  for (uint64_t i = 0; i < 2000; ++i) {
    Rng rng(SubstreamKey(99, i));
    outs.push_back(CodeSwitchParallel(pair, lex, cfg, policy, rng));
  }
  const double rate = EstimateReplacementRate(outs);
  CHECK(rate > 0.88);
  CHECK(rate < 0.92);
}

}  // TEST_SUITE

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

#include "mtk/metrics.hpp"

#include <cmath>

#include "doctest.h"
#include "mtk/error.hpp"
#include "mtk/provider.hpp"

using namespace mtk;

TEST_SUITE("bleu") {

TEST_CASE("perfect hypothesis scores 100") {
  const std::vector<std::string> c{"the quick brown fox jumps", "hello there"};
  const auto s = CorpusBleu(c, c);
  CHECK(s.score == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(s.brevity_penalty == 1.0);
}

TEST_CASE("three-token hypothesis against a four-token reference") {
  // Hand worksheet. hyp "the cat sat", ref "the cat sat down".
  //   1-grams: 3/3 matched; 2-grams: 2/2; 3-grams: 1/1; no 4-grams in hyp,
  //   so that order drops out of the mean. BP = exp(1 - 4/3).
  const auto s = CorpusBleu({"the cat sat"}, {"the cat sat down"});
  const double expected = 100.0 * std::exp(1.0 - 4.0 / 3.0);
  CHECK(s.score == doctest::Approx(expected).epsilon(1e-9));
  CHECK(s.precisions[0] == doctest::Approx(1.0));
  CHECK(s.precisions[2] == doctest::Approx(1.0));
  CHECK(s.precisions[3] == 0.0);
  CHECK(s.hyp_len == 3);
  CHECK(s.ref_len == 4);
}

TEST_CASE("clipping caps repeated n-grams at the reference count") {
  // "the the the the" vs "the cat": only 1 of 4 unigrams may count.
  const auto s = CorpusBleu({"the the the the"}, {"the cat"}, 1);
  CHECK(s.precisions[0] == doctest::Approx(0.25));
}

TEST_CASE("a zero-match order zeroes the unsmoothed score") {
  const auto s = CorpusBleu({"aa bb cc dd"}, {"ee ff gg hh"});
  CHECK(s.score == 0.0);
}

TEST_CASE("add-k smoothing recovers a nonzero score") {
  const auto s = CorpusBleu({"the cat sat down here"},
                            {"a dog sat down there"}, 4,
                            Smoothing{.add_k = 1.0});
  CHECK(s.score > 0.0);
  CHECK(s.score < 100.0);
}

TEST_CASE("counts aggregate corpus-wide, not per sentence") {
  // Sentence-level averaging would treat both segments alike; corpus-level
  // counting must pool the 4 matched + 4 total unigrams of both segments.
  const auto s = CorpusBleu({"a b", "c d"}, {"a b", "c d"}, 1);
  CHECK(s.precisions[0] == doctest::Approx(1.0));
  const auto s2 = CorpusBleu({"a b", "x y"}, {"a b", "c d"}, 1);
  CHECK(s2.precisions[0] == doctest::Approx(0.5));
}

TEST_CASE("subword scoring is exact on identical corpora") {
  auto tok = TokenizerModel::ByteLevel();
  tok.AddMerge("t", "h");
  tok.AddMerge("th", "e");
  const std::vector<std::string> c{"the cat", "the hat"};
  CHECK(SpBleu(c, c, tok).score == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("mismatched corpus sizes are rejected") {
  CHECK_THROWS_AS(CorpusBleu({"a"}, {"a", "b"}), LengthMismatchError);
  CHECK_THROWS_AS(CorpusBleu({}, {}), EmptyCorpusError);
}

}  // TEST_SUITE

TEST_SUITE("metrics") {

TEST_CASE("language ratios count detector labels") {
  LabelFile labels;
  for (const char* c : {"en", "fr", "en", "en", "de"}) {
    labels.labels.emplace_back(c);
  }
  const auto rep = LanguageRatio(labels, LanguageCode("en"),
                                 LanguageCode("fr"));
  CHECK(rep.n == 5);
  CHECK(rep.r_target == doctest::Approx(0.6));
  CHECK(rep.r_contrast == doctest::Approx(0.2));
  CHECK_THROWS_AS(LanguageRatio(LabelFile{}, LanguageCode("en"),
                                LanguageCode("fr")),
                  EmptyInputError);
}

TEST_CASE("pivot translation composes two provider calls") {
  Lexicon lex;
  lex.AddSynonym("hund", LanguageCode("de"), LanguageCode("en"), "dog");
  lex.AddSynonym("dog", LanguageCode("en"), LanguageCode("fr"), "chien");
  MockDictionaryProvider provider(lex);
  const auto r = PivotTranslate(provider, {"hund"}, LanguageCode("de"),
                                LanguageCode("en"), LanguageCode("fr"));
  REQUIRE(r.pivot_texts.size() == 1);
  CHECK(r.pivot_texts[0] == "dog");
  REQUIRE(r.translations.size() == 1);
  CHECK(r.translations[0] == "chien");
}

TEST_CASE("pivot failures identify the failing leg") {
  CacheOnlyProvider provider;
  try {
    PivotTranslate(provider, {"x"}, LanguageCode("de"), LanguageCode("en"),
                   LanguageCode("fr"));
    FAIL("expected ProviderError");
  } catch (const ProviderError& e) {
    CHECK(std::string(e.what()).find("de->en") != std::string::npos);
  }
}

}  // TEST_SUITE

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

#include "mtk/provider.hpp"

#include <memory>

#include "doctest.h"
#include "mtk/error.hpp"
#include "test_util.hpp"

using namespace mtk;

namespace {

const LanguageCode kEn("en");
const LanguageCode kFr("fr");

// Counts backend calls so cache hit/miss behaviour is observable.
class CountingProvider : public TranslationProvider {
 public:
  std::vector<std::string> Translate(const std::vector<std::string>& sentences,
                                     const LanguageCode&,
                                     const LanguageCode&) override {
    ++calls;
    translated += sentences.size();
    std::vector<std::string> out;
    for (const auto& s : sentences) out.push_back("T(" + s + ")");
    return out;
  }
  size_t calls = 0;
  size_t translated = 0;
};

}  // namespace

TEST_SUITE("provider") {

TEST_CASE("mock provider translates word by word, unknowns pass through") {
  Lexicon lex;
  lex.AddSynonym("cat", kEn, kFr, "chat");
  lex.AddSynonym("the", kEn, kFr, "le");
  MockDictionaryProvider provider(lex);
  const auto out = provider.Translate({"the cat jumped"}, kEn, kFr);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == "le chat jumped");
}

TEST_CASE("mock provider with an empty lexicon is the identity") {
  Lexicon lex;
  MockDictionaryProvider provider(lex);
  const auto out = provider.Translate({"anything at all"}, kEn, kFr);
  CHECK(out[0] == "anything at all");
}

TEST_CASE("cache-only provider reports the first miss") {
  CacheOnlyProvider provider;
  CHECK_THROWS_AS(provider.Translate({"miss"}, kEn, kFr), ProviderError);
}

TEST_CASE("caching wrapper persists and replays translations") {
  TempDir dir("cache");
  const auto cache_path = dir.Path("cache.jsonl");
  auto backend = std::make_shared<CountingProvider>();
  {
    CachingProvider provider(backend, cache_path);
    const auto out = provider.Translate({"a", "b"}, kEn, kFr);
    CHECK(out == std::vector<std::string>{"T(a)", "T(b)"});
    CHECK(backend->calls == 1);
    // Second call: all hits, no backend traffic.
    const auto again = provider.Translate({"a", "b"}, kEn, kFr);
    CHECK(again == out);
    CHECK(backend->calls == 1);
    // Partial hit: only the new sentence goes to the backend.
    provider.Translate({"a", "c"}, kEn, kFr);
    CHECK(backend->translated == 3);
  }
  // A fresh wrapper over the same file starts warm.
  auto backend2 = std::make_shared<CountingProvider>();
  CachingProvider provider2(backend2, cache_path);
  CHECK(provider2.cache_size() == 3);
  const auto out = provider2.Translate({"c", "b"}, kEn, kFr);
  CHECK(out == std::vector<std::string>{"T(c)", "T(b)"});
  CHECK(backend2->calls == 0);
}

TEST_CASE("cache keys include the language pair") {
  TempDir dir("cache-langs");
  auto backend = std::make_shared<CountingProvider>();
  CachingProvider provider(backend, dir.Path("c.jsonl"));
  provider.Translate({"x"}, kEn, kFr);
  provider.Translate({"x"}, kFr, kEn);  // different direction: a miss
  CHECK(backend->calls == 2);
}

}  // TEST_SUITE

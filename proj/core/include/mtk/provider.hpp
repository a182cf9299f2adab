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

// Translation providers. Backends: a word-by-word mock driven by a lexicon
// (unknown words pass through, so an empty lexicon is the identity), a
// cache-only backend that fails on misses, and an HTTP backend speaking
// JSON {sentences, src, tgt} -> {translations}. CachingProvider wraps any
// backend with a persistent JSONL cache keyed by (src, tgt, sentence).

#ifndef MTK_PROVIDER_HPP_
#define MTK_PROVIDER_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "mtk/lexicon.hpp"
#include "mtk/types.hpp"

namespace mtk {

class TranslationProvider {
 public:
  virtual ~TranslationProvider() = default;

  // Returns one translation per input sentence, same order.
  virtual std::vector<std::string> Translate(
      const std::vector<std::string>& sentences, const LanguageCode& src,
      const LanguageCode& tgt) = 0;
};

// Word-by-word lookup through a lexicon; first synonym wins, unknown words
// pass through unchanged. Deterministic, used for tests and dry runs.
class MockDictionaryProvider : public TranslationProvider {
 public:
  explicit MockDictionaryProvider(Lexicon lexicon)
      : lexicon_(std::move(lexicon)) {}

  std::vector<std::string> Translate(const std::vector<std::string>& sentences,
                                     const LanguageCode& src,
                                     const LanguageCode& tgt) override;

 private:
  Lexicon lexicon_;
};

// Serves only what a previously populated cache contains.
class CacheOnlyProvider : public TranslationProvider {
 public:
  std::vector<std::string> Translate(const std::vector<std::string>& sentences,
                                     const LanguageCode& src,
                                     const LanguageCode& tgt) override;
};

// POSTs {"sentences": [...], "src": "..", "tgt": ".."} to endpoint_path on
// the given host and expects {"translations": [...]}.
class HttpProvider : public TranslationProvider {
 public:
  HttpProvider(std::string host, int port, std::string endpoint_path = "/translate");

  std::vector<std::string> Translate(const std::vector<std::string>& sentences,
                                     const LanguageCode& src,
                                     const LanguageCode& tgt) override;

 private:
  std::string host_;
  int port_;
  std::string path_;
};

// Thread-safe persistent cache wrapper. Hits bypass the backend; misses are
// batched through it and appended to the cache file.
class CachingProvider : public TranslationProvider {
 public:
  CachingProvider(std::shared_ptr<TranslationProvider> backend,
                  std::string cache_path);

  std::vector<std::string> Translate(const std::vector<std::string>& sentences,
                                     const LanguageCode& src,
                                     const LanguageCode& tgt) override;

  size_t cache_size() const { return cache_.size(); }

 private:
  std::shared_ptr<TranslationProvider> backend_;
  std::string cache_path_;
  std::map<std::tuple<std::string, std::string, std::string>, std::string>
      cache_;
  std::mutex mu_;

  void LoadCache();
  void AppendCacheLine(const std::string& src, const std::string& tgt,
                       const std::string& text, const std::string& tr);
};

}  // namespace mtk

#endif  // MTK_PROVIDER_HPP_

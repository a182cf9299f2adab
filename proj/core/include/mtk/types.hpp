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

#ifndef MTK_TYPES_HPP_
#define MTK_TYPES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mtk/error.hpp"

namespace mtk {

// Lowercase ISO-639-1/3 style tag, e.g. "en", "ceb", "zhtrad".
// Comparison is exact-string.
class LanguageCode {
 public:
  LanguageCode() = default;
  explicit LanguageCode(std::string code);

  const std::string& str() const { return code_; }

  friend bool operator==(const LanguageCode& a, const LanguageCode& b) {
    return a.code_ == b.code_;
  }
  friend bool operator!=(const LanguageCode& a, const LanguageCode& b) {
    return a.code_ != b.code_;
  }
  friend bool operator<(const LanguageCode& a, const LanguageCode& b) {
    return a.code_ < b.code_;
  }

 private:
  std::string code_;
};

enum class Origin { kNatural, kReplicated, kSynthetic };

const char* OriginName(Origin o);

struct MonolingualRecord {
  LanguageCode lang;
  std::string text;       // non-empty after trimming, no interior newline
  std::string source_id;  // opaque provenance tag
};

struct SentencePair {
  LanguageCode src_lang;
  LanguageCode tgt_lang;
  std::string src_text;
  std::string tgt_text;
  Origin origin = Origin::kNatural;
};

struct DictEntryPair {
  LanguageCode src_lang;
  LanguageCode tgt_lang;
  std::string src_word;  // whitespace-free, not pure punctuation
  std::string tgt_word;
};

struct EmbeddingMatrix {
  size_t vocab_size = 0;
  size_t dim = 0;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> token_labels;  // may be empty
};

struct LabelFile {
  std::vector<LanguageCode> labels;  // labels[i] belongs to sentence i
};

}  // namespace mtk

#endif  // MTK_TYPES_HPP_

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

#ifndef MTK_SEGMENT_HPP_
#define MTK_SEGMENT_HPP_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mtk/types.hpp"

namespace mtk {

enum class SegmentMode { kWhitespace, kPerCharacter, kPlugin };

struct Token {
  std::string text;
  size_t begin = 0;  // byte offset into the original text
  size_t end = 0;    // half-open
};

// Per-language segmentation policy. Defaults to whitespace; zh/ja/zhtrad
// default to per-character unless a plugin segmenter is registered for the
// language (slot for e.g. a Jieba-style word segmenter).
class SegmenterPolicy {
 public:
  using PluginFn = std::function<std::vector<Token>(std::string_view)>;

  SegmentMode ModeFor(const LanguageCode& lang) const;
  void SetMode(const LanguageCode& lang, SegmentMode mode);
  void RegisterPlugin(const LanguageCode& lang, PluginFn fn);
  const PluginFn* PluginFor(const LanguageCode& lang) const;

 private:
  std::map<LanguageCode, SegmentMode> modes_;
  std::map<LanguageCode, PluginFn> plugins_;
};

// Tokens with byte spans. Whitespace mode splits on whitespace runs;
// per-character mode yields one token per character cluster (a code point
// plus trailing combining marks), skipping whitespace. Spans index the
// original text, so the separators between spans reconstruct it exactly.
std::vector<Token> Segment(std::string_view text, const LanguageCode& lang,
                           const SegmenterPolicy& policy);

// Rebuilds the original text from tokens plus the inter-token separators.
std::string ReconstructFromSpans(std::string_view original,
                                 const std::vector<Token>& tokens,
                                 const std::vector<std::string>& replacements);

}  // namespace mtk

#endif  // MTK_SEGMENT_HPP_

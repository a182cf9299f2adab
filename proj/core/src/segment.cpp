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

#include "mtk/segment.hpp"

#include "mtk/text.hpp"

namespace mtk {

SegmentMode SegmenterPolicy::ModeFor(const LanguageCode& lang) const {
  if (const auto it = modes_.find(lang); it != modes_.end()) {
    return it->second;
  }
  if (plugins_.count(lang)) return SegmentMode::kPlugin;
  const std::string& c = lang.str();
  if (c == "zh" || c == "ja" || c == "zhtrad") return SegmentMode::kPerCharacter;
  return SegmentMode::kWhitespace;
}

void SegmenterPolicy::SetMode(const LanguageCode& lang, SegmentMode mode) {
  modes_[lang] = mode;
}

void SegmenterPolicy::RegisterPlugin(const LanguageCode& lang, PluginFn fn) {
  plugins_[lang] = std::move(fn);
}

const SegmenterPolicy::PluginFn* SegmenterPolicy::PluginFor(
    const LanguageCode& lang) const {
  const auto it = plugins_.find(lang);
  return it == plugins_.end() ? nullptr : &it->second;
}

namespace {

std::vector<Token> SegmentWhitespace(std::string_view text) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpaceByte(text[i])) ++i;
    const size_t start = i;
    while (i < text.size() && !IsSpaceByte(text[i])) ++i;
    if (i > start) {
      tokens.push_back({std::string(text.substr(start, i - start)), start, i});
    }
  }
  return tokens;
}

std::vector<Token> SegmentPerCharacter(std::string_view text) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    const size_t start = i;
    const char32_t cp = DecodeUtf8(text, &i);
    if (IsSpaceCp(cp)) continue;
    // Attach trailing combining marks to their base character.
    while (i < text.size()) {
      size_t peek = i;
      if (!IsCombiningCp(DecodeUtf8(text, &peek))) break;
      i = peek;
    }
    tokens.push_back({std::string(text.substr(start, i - start)), start, i});
  }
  return tokens;
}

}  // namespace

std::vector<Token> Segment(std::string_view text, const LanguageCode& lang,
                           const SegmenterPolicy& policy) {
  switch (policy.ModeFor(lang)) {
    case SegmentMode::kWhitespace:
      return SegmentWhitespace(text);
    case SegmentMode::kPerCharacter:
      return SegmentPerCharacter(text);
    case SegmentMode::kPlugin: {
      const auto* fn = policy.PluginFor(lang);
      if (fn == nullptr) return SegmentWhitespace(text);
      return (*fn)(text);
    }
  }
  return {};
}

std::string ReconstructFromSpans(
    std::string_view original, const std::vector<Token>& tokens,
    const std::vector<std::string>& replacements) {
  std::string out;
  size_t cursor = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    out.append(original.substr(cursor, tokens[i].begin - cursor));
    out.append(i < replacements.size() ? replacements[i] : tokens[i].text);
    cursor = tokens[i].end;
  }
  out.append(original.substr(cursor));
  return out;
}

}  // namespace mtk

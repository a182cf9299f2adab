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

// Instruction-data rendering: the two Alpaca prompt templates (selected by
// input emptiness) and a 33-entry bank of translation instructions with
// [SRC]/[TGT] placeholders substituted by human-readable language names.

#ifndef MTK_PROMPTS_HPP_
#define MTK_PROMPTS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtk/rng.hpp"
#include "mtk/types.hpp"

namespace mtk {

struct SftRecord {
  std::string instruction;
  std::string input;  // possibly empty
  std::string response;
  std::string rendered;
  struct Meta {
    int template_id = -1;  // -1 for plain Alpaca records
    std::optional<LanguageCode> src_lang;
    std::optional<LanguageCode> tgt_lang;
  } meta;
};

class PromptBank {
 public:
  // The built-in ordered bank of 33 translation prompt templates.
  static PromptBank BuiltIn();
  // One template per line, order preserved.
  static PromptBank LoadFromFile(const std::string& path);

  const std::vector<std::string>& templates() const { return templates_; }
  const std::string& at(size_t index) const;
  size_t size() const { return templates_.size(); }

 private:
  std::vector<std::string> templates_;
};

// Human-readable names used for [SRC]/[TGT] substitution.
using LanguageNames = std::map<LanguageCode, std::string>;
LanguageNames DefaultLanguageNames();
LanguageNames LoadLanguageNames(const std::string& path);  // "code<TAB>Name"

// Alpaca prompt rendering; the Input section is present iff input is
// non-empty. Byte-exact and platform-independent.
SftRecord RenderAlpaca(const std::string& instruction, const std::string& input,
                       const std::string& response);

// Inverse of RenderAlpaca; throws FormatError when the text does not match
// either template.
struct AlpacaFields {
  std::string instruction;
  std::string input;
  std::string response;
};
AlpacaFields ParseAlpaca(const std::string& rendered);

enum class SftDirection { kForward, kBackward };

// template_index: chosen index, or nullopt for a uniform seeded draw.
SftRecord RenderTranslationInstruction(const SentencePair& pair,
                                       SftDirection direction,
                                       std::optional<size_t> template_index,
                                       const PromptBank& bank,
                                       const LanguageNames& names, Rng& rng);

struct SftEmitOptions {
  size_t per_language_quota = 1000;
  bool emit_forward = true;
  bool emit_backward = true;
  uint64_t seed = 0;
};

// Samples up to quota pairs per bitext source without replacement (seeded),
// renders each through the bank, returns JSONL lines
// {"instruction","input","output","meta"}.
std::vector<std::string> EmitSftDataset(
    const std::map<std::string, std::vector<SentencePair>>& sources,
    const PromptBank& bank, const LanguageNames& names,
    const SftEmitOptions& options);

}  // namespace mtk

#endif  // MTK_PROMPTS_HPP_

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

// Corpus BLEU over clipped n-gram counts, the subword variant driven by a
// supplied tokenizer model, language-ratio reports over detector label
// files, and pivot translation through a provider.

#ifndef MTK_METRICS_HPP_
#define MTK_METRICS_HPP_

#include <array>
#include <string>
#include <vector>

#include "mtk/provider.hpp"
#include "mtk/tokenizer.hpp"
#include "mtk/types.hpp"

namespace mtk {

struct BleuScore {
  double score = 0.0;  // [0, 100]
  std::array<double, 4> precisions{};
  double brevity_penalty = 1.0;
  size_t hyp_len = 0;
  size_t ref_len = 0;
};

struct Smoothing {
  // k == 0 disables smoothing; k > 0 adds k to every clipped count and total.
  double add_k = 0.0;
};

// Corpus-level BLEU on whitespace tokens. Counts aggregate corpus-wide
// before clipping ratios are formed. Orders with no n-grams at all (corpus
// shorter than n) are excluded from the geometric mean; an order with
// n-grams but zero matches yields score 0 when smoothing is off.
BleuScore CorpusBleu(const std::vector<std::string>& hyps,
                     const std::vector<std::string>& refs, int max_n = 4,
                     Smoothing smoothing = {});

// BLEU over subword token-id sequences produced by the supplied tokenizer.
BleuScore SpBleu(const std::vector<std::string>& hyps,
                 const std::vector<std::string>& refs,
                 const TokenizerModel& tok, Smoothing smoothing = {});

struct RatioReport {
  double r_target = 0.0;
  double r_contrast = 0.0;
  size_t n = 0;
};

RatioReport LanguageRatio(const LabelFile& labels, const LanguageCode& target,
                          const LanguageCode& contrast);

struct PivotResult {
  std::vector<std::string> translations;
  std::vector<std::string> pivot_texts;  // intermediate pivot-language output
};

// Composes src->pivot then pivot->tgt through the provider.
PivotResult PivotTranslate(TranslationProvider& provider,
                           const std::vector<std::string>& sentences,
                           const LanguageCode& src, const LanguageCode& pivot,
                           const LanguageCode& tgt);

}  // namespace mtk

#endif  // MTK_METRICS_HPP_

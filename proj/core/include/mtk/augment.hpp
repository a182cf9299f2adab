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

// Code-switch augmentation: words of a (lowercased) sentence are replaced
// by lexicon synonyms in other languages to form pseudo-parallel data.
// Two strategies: one language drawn per sentence (parallel sources) or one
// language drawn per word (monolingual sources). All randomness comes from
// the caller-supplied counter-based Rng, so results are reproducible.

#ifndef MTK_AUGMENT_HPP_
#define MTK_AUGMENT_HPP_

#include <set>
#include <string>
#include <vector>

#include "mtk/lexicon.hpp"
#include "mtk/rng.hpp"
#include "mtk/segment.hpp"
#include "mtk/types.hpp"

namespace mtk {

enum class AugmentStrategy { kPerSentenceLanguage, kPerWordLanguage };

// target_only: loss on the target sentence only (parallel base).
// full_pair: loss on both sides (monolingual base).
enum class LossScope { kTargetOnly, kFullPair };

struct AugmentConfig {
  double replace_prob = 0.90;
  std::set<LanguageCode> language_pool;
  AugmentStrategy strategy = AugmentStrategy::kPerSentenceLanguage;
  uint64_t seed = 0;
};

struct Replacement {
  size_t position;  // token index in the segmented source
  std::string original;
  std::string chosen;
  LanguageCode chosen_lang;
};

struct AugmentedPair {
  LanguageCode src_lang;
  LanguageCode tgt_lang;         // pair target, or the mono record's lang
  std::string switched_text;     // lowercased source after replacement
  std::string other_text;        // untouched side, original case
  LossScope loss_scope = LossScope::kTargetOnly;
  std::vector<Replacement> replacement_log;
  size_t eligible_count = 0;  // tokens with a nonempty lookup
};

// Per-sentence strategy: one replacement language per sentence, drawn
// uniformly from cfg.language_pool minus the source language.
AugmentedPair CodeSwitchParallel(const SentencePair& pair, const Lexicon& lex,
                                 const AugmentConfig& cfg,
                                 const SegmenterPolicy& policy, Rng& rng);

// Per-word strategy: a fresh language draw for every word; the switched
// sentence pairs with the original to form pseudo-parallel data.
AugmentedPair CodeSwitchMonolingual(const MonolingualRecord& rec,
                                    const Lexicon& lex,
                                    const AugmentConfig& cfg,
                                    const SegmenterPolicy& policy, Rng& rng);

// Observed replacement rate: total replacements / total eligible positions.
double EstimateReplacementRate(const std::vector<AugmentedPair>& pairs);

}  // namespace mtk

#endif  // MTK_AUGMENT_HPP_

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

#include "mtk/text.hpp"

namespace mtk {
namespace {

std::vector<LanguageCode> PoolWithout(const AugmentConfig& cfg,
                                      const LanguageCode& exclude) {
  std::vector<LanguageCode> pool;
  for (const auto& l : cfg.language_pool) {
    if (l != exclude) pool.push_back(l);
  }
  if (pool.empty()) {
    throw EmptyPoolError("language pool minus '" + exclude.str() +
                         "' is empty");
  }
  return pool;
}

// Shared word loop. `pick_lang` supplies the replacement language for each
// word (fixed for per-sentence strategy, per-call for per-word strategy).
template <typename PickLang>
void SwitchWords(const std::string& lowered, const LanguageCode& src_lang,
                 const Lexicon& lex, const AugmentConfig& cfg,
                 const SegmenterPolicy& policy, Rng& rng, PickLang pick_lang,
                 AugmentedPair* out) {
  const auto tokens = Segment(lowered, src_lang, policy);
  std::vector<std::string> replaced;
  replaced.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    const LanguageCode lang = pick_lang();
    const auto& syns = lex.Lookup(tokens[i].text, src_lang, lang);
    if (syns.empty()) {
      // No synonym in the drawn language: retain the original word.
      replaced.push_back(tokens[i].text);
      continue;
    }
    ++out->eligible_count;
    if (rng.Bernoulli(cfg.replace_prob)) {
      const auto& chosen = syns[rng.UniformIndex(syns.size())];
      replaced.push_back(chosen);
      out->replacement_log.push_back({i, tokens[i].text, chosen, lang});
    } else {
      replaced.push_back(tokens[i].text);
    }
  }
  out->switched_text = ReconstructFromSpans(lowered, tokens, replaced);
}

}  // namespace

AugmentedPair CodeSwitchParallel(const SentencePair& pair, const Lexicon& lex,
                                 const AugmentConfig& cfg,
                                 const SegmenterPolicy& policy, Rng& rng) {
  const auto pool = PoolWithout(cfg, pair.src_lang);
  const LanguageCode lang = pool[rng.UniformIndex(pool.size())];

  AugmentedPair out;
  out.src_lang = pair.src_lang;
  out.tgt_lang = pair.tgt_lang;
  out.other_text = pair.tgt_text;
  out.loss_scope = LossScope::kTargetOnly;
  const std::string lowered = ToLowerAscii(pair.src_text);
  SwitchWords(lowered, pair.src_lang, lex, cfg, policy, rng,
              [&] { return lang; }, &out);
  return out;
}

AugmentedPair CodeSwitchMonolingual(const MonolingualRecord& rec,
                                    const Lexicon& lex,
                                    const AugmentConfig& cfg,
                                    const SegmenterPolicy& policy, Rng& rng) {
  const auto pool = PoolWithout(cfg, rec.lang);

  AugmentedPair out;
  out.src_lang = rec.lang;
  out.tgt_lang = rec.lang;
  out.other_text = rec.text;
  out.loss_scope = LossScope::kFullPair;
  const std::string lowered = ToLowerAscii(rec.text);
  SwitchWords(lowered, rec.lang, lex, cfg, policy, rng,
              [&] { return pool[rng.UniformIndex(pool.size())]; }, &out);
  return out;
}

double EstimateReplacementRate(const std::vector<AugmentedPair>& pairs) {
  if (pairs.empty()) throw EmptyInputError("no augmented pairs");
  size_t eligible = 0;
  size_t replaced = 0;
  for (const auto& p : pairs) {
    eligible += p.eligible_count;
    replaced += p.replacement_log.size();
  }
  if (eligible == 0) throw EmptyInputError("no eligible positions recorded");
  return static_cast<double>(replaced) / static_cast<double>(eligible);
}

}  // namespace mtk

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
#include <map>

#include "mtk/text.hpp"

namespace mtk {
namespace {

// Generic corpus BLEU over any token type with operator< and equality.
template <typename Tok>
BleuScore BleuFromTokens(const std::vector<std::vector<Tok>>& hyps,
                         const std::vector<std::vector<Tok>>& refs, int max_n,
                         Smoothing smoothing) {
  if (hyps.size() != refs.size()) {
    throw LengthMismatchError("hypothesis/reference count mismatch");
  }
  if (hyps.empty()) throw EmptyCorpusError("empty corpus");

  std::vector<double> matched(max_n, 0.0);
  std::vector<double> total(max_n, 0.0);
  size_t hyp_len = 0, ref_len = 0;

  using Ngram = std::vector<Tok>;
  for (size_t i = 0; i < hyps.size(); ++i) {
    const auto& h = hyps[i];
    const auto& r = refs[i];
    hyp_len += h.size();
    ref_len += r.size();
    for (int n = 1; n <= max_n; ++n) {
      std::map<Ngram, size_t> ref_counts;
      for (size_t k = 0; k + n <= r.size(); ++k) {
        ++ref_counts[Ngram(r.begin() + k, r.begin() + k + n)];
      }
      std::map<Ngram, size_t> hyp_counts;
      for (size_t k = 0; k + n <= h.size(); ++k) {
        ++hyp_counts[Ngram(h.begin() + k, h.begin() + k + n)];
      }
      for (const auto& [gram, count] : hyp_counts) {
        total[n - 1] += count;
        const auto it = ref_counts.find(gram);
        if (it != ref_counts.end()) {
          matched[n - 1] += std::min(count, it->second);  // clipping
        }
      }
    }
  }

  BleuScore out;
  out.hyp_len = hyp_len;
  out.ref_len = ref_len;
  out.brevity_penalty =
      (hyp_len < ref_len && hyp_len > 0)
          ? std::exp(1.0 - static_cast<double>(ref_len) / hyp_len)
          : 1.0;

  double log_sum = 0.0;
  int effective_orders = 0;
  bool zero_precision = false;
  for (int n = 0; n < max_n; ++n) {
    if (total[n] == 0.0) {
      out.precisions[n] = 0.0;
      continue;  // corpus shorter than n: excluded from the mean
    }
    const double m = matched[n] + smoothing.add_k;
    const double t = total[n] + smoothing.add_k;
    out.precisions[n] = m / t;
    ++effective_orders;
    if (m == 0.0) {
      zero_precision = true;
    } else {
      log_sum += std::log(m / t);
    }
  }
  if (effective_orders == 0 || zero_precision) {
    out.score = 0.0;
  } else {
    out.score = out.brevity_penalty * std::exp(log_sum / effective_orders) *
                100.0;
  }
  return out;
}

}  // namespace

BleuScore CorpusBleu(const std::vector<std::string>& hyps,
                     const std::vector<std::string>& refs, int max_n,
                     Smoothing smoothing) {
  std::vector<std::vector<std::string>> h, r;
  h.reserve(hyps.size());
  r.reserve(refs.size());
  for (const auto& s : hyps) h.push_back(SplitWhitespace(s));
  for (const auto& s : refs) r.push_back(SplitWhitespace(s));
  return BleuFromTokens(h, r, max_n, smoothing);
}

BleuScore SpBleu(const std::vector<std::string>& hyps,
                 const std::vector<std::string>& refs,
                 const TokenizerModel& tok, Smoothing smoothing) {
  std::vector<std::vector<int>> h, r;
  h.reserve(hyps.size());
  r.reserve(refs.size());
  for (const auto& s : hyps) h.push_back(tok.Encode(s));
  for (const auto& s : refs) r.push_back(tok.Encode(s));
  return BleuFromTokens(h, r, 4, smoothing);
}

RatioReport LanguageRatio(const LabelFile& labels, const LanguageCode& target,
                          const LanguageCode& contrast) {
  if (labels.labels.empty()) throw EmptyInputError("empty label file");
  RatioReport rep;
  rep.n = labels.labels.size();
  size_t n_target = 0, n_contrast = 0;
  for (const auto& l : labels.labels) {
    if (l == target) ++n_target;
    if (l == contrast) ++n_contrast;
  }
  rep.r_target = static_cast<double>(n_target) / rep.n;
  rep.r_contrast = static_cast<double>(n_contrast) / rep.n;
  return rep;
}

PivotResult PivotTranslate(TranslationProvider& provider,
                           const std::vector<std::string>& sentences,
                           const LanguageCode& src, const LanguageCode& pivot,
                           const LanguageCode& tgt) {
  PivotResult out;
  if (sentences.empty()) return out;
  try {
    out.pivot_texts = provider.Translate(sentences, src, pivot);
  } catch (const ProviderError& e) {
    throw ProviderError("stage " + src.str() + "->" + pivot.str() + ": " +
                        e.what());
  }
  try {
    out.translations = provider.Translate(out.pivot_texts, pivot, tgt);
  } catch (const ProviderError& e) {
    throw ProviderError("stage " + pivot.str() + "->" + tgt.str() + ": " +
                        e.what());
  }
  return out;
}

}  // namespace mtk

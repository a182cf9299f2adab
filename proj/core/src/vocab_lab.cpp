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

#include "mtk/vocab_lab.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mtk/text.hpp"

namespace mtk {
namespace {

bool UsesCharacterUnits(const LanguageCode& lang) {
  const std::string& c = lang.str();
  return c == "zh" || c == "ja" || c == "zhtrad";
}

size_t BaseUnits(const std::string& text, const LanguageCode& lang) {
  if (UsesCharacterUnits(lang)) {
    size_t count = 0;
    size_t i = 0;
    while (i < text.size()) {
      if (!IsSpaceCp(DecodeUtf8(text, &i))) ++count;
    }
    return count;
  }
  return SplitWhitespace(text).size();
}

std::vector<double> Rankify(const std::vector<double>& v) {
  const size_t n = v.size();
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return v[a] < v[b]; });
  std::vector<double> rank(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    // Tie group [i, j] gets the mean of ranks i+1..j+1.
    const double mean_rank = (static_cast<double>(i + 1) + j + 1) / 2.0;
    for (size_t k = i; k <= j; ++k) rank[order[k]] = mean_rank;
    i = j + 1;
  }
  return rank;
}

double Pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const size_t n = a.size();
  double ma = 0, mb = 0;
  for (size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0, saa = 0, sbb = 0;
  for (size_t i = 0; i < n; ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) {
    throw DegenerateError("constant series has no rank correlation");
  }
  return sab / std::sqrt(saa * sbb);
}

// Asymptotic Kolmogorov survival function Q(t) = 2 sum (-1)^{k-1} e^{-2k^2t^2}.
double KolmogorovQ(double t) {
  if (t <= 0.0) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = 2.0 * std::pow(-1.0, k - 1) *
                        std::exp(-2.0 * k * k * t * t);
    sum += term;
    if (std::abs(term) < 1e-12) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

}  // namespace

FertilityReport Fertility(const TokenizerModel& tok,
                          const std::vector<MonolingualRecord>& corpus,
                          const LanguageCode& lang) {
  if (corpus.empty()) throw EmptyInputError("empty corpus");
  FertilityReport rep;
  rep.lang = lang;
  for (const auto& rec : corpus) {
    rep.token_count += tok.Encode(rec.text).size();
    rep.base_unit_count += BaseUnits(rec.text, lang);
  }
  if (rep.base_unit_count == 0) {
    throw EmptyInputError("corpus has no base units");
  }
  rep.fertility = static_cast<double>(rep.token_count) /
                  static_cast<double>(rep.base_unit_count);
  return rep;
}

std::vector<std::string> DeriveCandidates(
    const std::vector<MonolingualRecord>& corpus, const TokenizerModel& tok,
    size_t n) {
  std::map<std::string, size_t> freq;
  for (const auto& rec : corpus) {
    for (const auto& w : SplitWhitespace(rec.text)) ++freq[w];
  }
  std::vector<std::pair<std::string, size_t>> multi;
  for (const auto& [word, count] : freq) {
    if (tok.Encode(word).size() >= 2) multi.emplace_back(word, count);
  }
  if (multi.size() < n) {
    throw InsufficientCandidatesError(
        "only " + std::to_string(multi.size()) + " multi-token words, need " +
        std::to_string(n));
  }
  std::sort(multi.begin(), multi.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::string> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(multi[i].first);
  return out;
}

std::pair<TokenizerModel, EmbeddingMatrix> ExtendVocab(
    const TokenizerModel& tok, const std::vector<std::string>& candidates,
    const EmbeddingMatrix& emb) {
  if (emb.vocab_size != tok.vocab_size()) {
    throw ShapeMismatchError("embedding rows != tokenizer vocab size");
  }
  TokenizerModel out_tok = tok;
  EmbeddingMatrix out_emb = emb;

  std::vector<double> mean(emb.dim, 0.0);
  if (emb.vocab_size > 0) {
    for (const auto& row : emb.rows) {
      for (size_t d = 0; d < emb.dim; ++d) mean[d] += row[d];
    }
    for (double& v : mean) v /= static_cast<double>(emb.vocab_size);
  }

  for (const auto& c : candidates) {
    out_tok.AddToken(c);  // throws DuplicateTokenError on repeats
    out_emb.rows.push_back(mean);
    out_emb.token_labels.push_back(c);
    ++out_emb.vocab_size;
  }
  return {std::move(out_tok), std::move(out_emb)};
}

double Cosine(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatchError("cosine of vectors with different dims");
  }
  double dot = 0, na = 0, nb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) throw ZeroVectorError("cosine of zero vector");
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

QualityReport RetrievalRAt1(const EmbeddingMatrix& queries,
                            const EmbeddingMatrix& pool,
                            const std::vector<size_t>& gold) {
  if (queries.dim != pool.dim) {
    throw DimensionMismatchError("query and pool dims differ");
  }
  if (gold.size() != queries.rows.size()) {
    throw DimensionMismatchError("gold map not total on queries");
  }
  QualityReport rep;
  rep.query_count = queries.rows.size();
  double cos_sum = 0.0;
  for (size_t q = 0; q < queries.rows.size(); ++q) {
    size_t best = 0;
    double best_cos = -2.0;
    for (size_t p = 0; p < pool.rows.size(); ++p) {
      const double c = Cosine(queries.rows[q], pool.rows[p]);
      if (c > best_cos) {
        best_cos = c;
        best = p;
      }
    }
    if (best == gold[q]) ++rep.correct_top1;
    cos_sum += Cosine(queries.rows[q], pool.rows[gold[q]]);
  }
  rep.r_at_1 = rep.query_count
                   ? static_cast<double>(rep.correct_top1) / rep.query_count
                   : 0.0;
  rep.mean_cosine = rep.query_count ? cos_sum / rep.query_count : 0.0;
  return rep;
}

double Spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw LengthMismatchError("series length mismatch");
  }
  if (x.size() < 2) throw LengthMismatchError("need at least 2 points");
  return Pearson(Rankify(x), Rankify(y));
}

KsResult KsTwoSample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw EmptySampleError("empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  size_t ia = 0, ib = 0;
  double d = 0.0;
  // Merged sweep over the pooled sample points. Once one side is exhausted
  // its CDF is 1 and the difference only shrinks, so the loop covers the sup.
  while (ia < a.size() && ib < b.size()) {
    const double x = std::min(a[ia], b[ib]);
    while (ia < a.size() && a[ia] <= x) ++ia;
    while (ib < b.size() && b[ib] <= x) ++ib;
    d = std::max(d, std::abs(ia / na - ib / nb));
  }
  KsResult r;
  r.d = d;
  const double ne = na * nb / (na + nb);
  r.p = KolmogorovQ(std::sqrt(ne) * d);
  return r;
}

ShiftReport KsLottery(const EmbeddingMatrix& before,
                      const EmbeddingMatrix& after, double alpha) {
  if (before.vocab_size != after.vocab_size || before.dim != after.dim) {
    throw ShapeMismatchError("embedding matrices have different shapes");
  }
  ShiftReport rep;
  double d_sum = 0.0;
  for (size_t i = 0; i < before.rows.size(); ++i) {
    const auto r = KsTwoSample(before.rows[i], after.rows[i]);
    rep.per_token.push_back({i, r.d, r.p});
    if (r.p < alpha) {
      rep.shift_tokens.push_back(i);
      d_sum += r.d;
    }
  }
  rep.shift_count = rep.shift_tokens.size();
  if (rep.shift_count > 0) {
    rep.shift_distance = d_sum / static_cast<double>(rep.shift_count);
  }
  return rep;
}

}  // namespace mtk

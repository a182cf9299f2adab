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

// Tokenizer-economics and embedding-shift instrumentation: fertility,
// vocabulary-extension simulation with mean-embedding initialization,
// retrieval quality, Spearman correlation and Kolmogorov-Smirnov shift
// detection over embedding rows.

#ifndef MTK_VOCAB_LAB_HPP_
#define MTK_VOCAB_LAB_HPP_

#include <optional>
#include <string>
#include <vector>

#include "mtk/tokenizer.hpp"
#include "mtk/types.hpp"

namespace mtk {

struct FertilityReport {
  LanguageCode lang;
  size_t token_count = 0;
  size_t base_unit_count = 0;  // whitespace words; characters for zh/ja
  double fertility = 0.0;      // token_count / base_unit_count
};

FertilityReport Fertility(const TokenizerModel& tok,
                          const std::vector<MonolingualRecord>& corpus,
                          const LanguageCode& lang);

// The n most frequent whitespace words whose current tokenization length is
// >= 2, frequency-descending, ties lexicographic.
std::vector<std::string> DeriveCandidates(
    const std::vector<MonolingualRecord>& corpus, const TokenizerModel& tok,
    size_t n);

// Appends candidates as added tokens and appends one embedding row per
// candidate equal to the mean of all pre-existing rows.
std::pair<TokenizerModel, EmbeddingMatrix> ExtendVocab(
    const TokenizerModel& tok, const std::vector<std::string>& candidates,
    const EmbeddingMatrix& emb);

double Cosine(const std::vector<double>& a, const std::vector<double>& b);

struct QualityReport {
  double mean_cosine = 0.0;
  double r_at_1 = 0.0;
  size_t query_count = 0;
  size_t correct_top1 = 0;
};

// For each query row, the nearest pool row by cosine; r_at_1 is the fraction
// whose argmax equals gold. Ties break toward the lowest pool index.
QualityReport RetrievalRAt1(const EmbeddingMatrix& queries,
                            const EmbeddingMatrix& pool,
                            const std::vector<size_t>& gold);

// Pearson correlation of average-ranked values; ties get mean ranks.
double Spearman(const std::vector<double>& x, const std::vector<double>& y);

struct KsResult {
  double d = 0.0;  // sup |F_a - F_b|
  double p = 1.0;  // asymptotic Kolmogorov approximation
};

KsResult KsTwoSample(std::vector<double> a, std::vector<double> b);

struct ShiftReport {
  struct PerToken {
    size_t token_id;
    double ks_statistic;
    double p_value;
  };
  std::vector<PerToken> per_token;
  std::vector<size_t> shift_tokens;  // rows with p < alpha
  size_t shift_count = 0;
  // Mean KS statistic over shift_tokens; absent when shift_count == 0.
  std::optional<double> shift_distance;
};

// Row-wise two-sample KS between the two matrices' embedding rows.
ShiftReport KsLottery(const EmbeddingMatrix& before,
                      const EmbeddingMatrix& after, double alpha);

}  // namespace mtk

#endif  // MTK_VOCAB_LAB_HPP_

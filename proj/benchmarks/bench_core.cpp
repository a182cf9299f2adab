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

// Microbenchmarks for the hot paths: BPE encoding, code-switch
// augmentation, corpus BLEU scoring and the seeded epoch shuffle.

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "mtk/assembler.hpp"
#include "mtk/augment.hpp"
#include "mtk/lexicon.hpp"
#include "mtk/metrics.hpp"
#include "mtk/rng.hpp"
#include "mtk/tokenizer.hpp"

namespace {

using namespace mtk;

std::string MakeText(size_t words, uint64_t seed) {
  Rng rng(seed);
  const char* vocab[] = {"the",  "quick", "brown", "fox",   "jumps",
                         "over", "lazy",  "dogs",  "while", "watching"};
  std::string out;
  for (size_t i = 0; i < words; ++i) {
    if (i) out += ' ';
    out += vocab[rng.UniformIndex(10)];
  }
  return out;
}

TokenizerModel MakeBpe() {
  auto tok = TokenizerModel::ByteLevel();
  tok.AddMerge("t", "h");
  tok.AddMerge("th", "e");
  tok.AddMerge("o", "v");
  tok.AddMerge("ov", "e");
  tok.AddMerge("e", "r");
  tok.AddMerge("i", "n");
  tok.AddMerge("o", "g");
  tok.AddMerge("d", "og");
  return tok;
}

void BM_BpeEncode(benchmark::State& state) {
  const auto tok = MakeBpe();
  const auto text = MakeText(static_cast<size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tok.Encode(text));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_BpeEncode)->Arg(64)->Arg(512)->Arg(4096);

void BM_CodeSwitch(benchmark::State& state) {
  const LanguageCode en("en"), fr("fr"), de("de");
  Lexicon lex;
  const char* vocab[] = {"the",  "quick", "brown", "fox",   "jumps",
                         "over", "lazy",  "dogs",  "while", "watching"};
  for (const char* w : vocab) {
    lex.AddSynonym(w, en, fr, std::string(w) + "_fr");
    lex.AddSynonym(w, en, de, std::string(w) + "_de");
  }
  AugmentConfig cfg;
  cfg.language_pool = {en, fr, de};
  SegmenterPolicy policy;
  const SentencePair pair{en, fr, MakeText(32, 2), "cible"};
  uint64_t i = 0;
  for (auto _ : state) {
    Rng rng(SubstreamKey(7, i++));
    benchmark::DoNotOptimize(CodeSwitchParallel(pair, lex, cfg, policy, rng));
  }
}
BENCHMARK(BM_CodeSwitch);

void BM_CorpusBleu(benchmark::State& state) {
  std::vector<std::string> hyps, refs;
  for (int i = 0; i < 256; ++i) {
    hyps.push_back(MakeText(24, 100 + i));
    refs.push_back(MakeText(24, 200 + i));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(CorpusBleu(hyps, refs));
  }
}
BENCHMARK(BM_CorpusBleu);

void BM_EpochShuffle(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  std::vector<size_t> order(n);
  for (auto _ : state) {
    for (size_t i = 0; i < n; ++i) order[i] = i;
    Rng rng(SubstreamKey(42, "shuffle"));
    for (size_t i = n; i > 1; --i) {
      std::swap(order[i - 1], order[rng.UniformIndex(i)]);
    }
    benchmark::DoNotOptimize(order.data());
  }
}
BENCHMARK(BM_EpochShuffle)->Arg(1 << 12)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();

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

// Epoch assembly: monolingual block splitting, connected-parallel record
// formatting, low-resource replication, pivot-translated synthetic fill and
// a seeded global shuffle. One unordered language pair is one assembly unit;
// per-pair substream seeds keep the output independent of worker count.

#ifndef MTK_ASSEMBLER_HPP_
#define MTK_ASSEMBLER_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mtk/augment.hpp"
#include "mtk/provider.hpp"
#include "mtk/rng.hpp"
#include "mtk/tokenizer.hpp"
#include "mtk/types.hpp"

namespace mtk {

struct LossSpan {
  size_t begin = 0;
  size_t end = 0;  // half-open byte range
};

enum class Direction { kForward, kBackward, kRandom };

struct TrainingRecord {
  std::string text;
  std::vector<LossSpan> loss_spans;
  struct Meta {
    LanguageCode src_lang;
    std::optional<LanguageCode> tgt_lang;
    Direction direction = Direction::kForward;
    Origin origin = Origin::kNatural;
    int epoch_stage = 0;
  } meta;
};

// text = first + " " + second (single ASCII space, no markup). Natural and
// replicated pairs carry one full-text loss span; direction kRandom draws
// forward/backward at 50%.
TrainingRecord MakeConnectedRecord(const SentencePair& pair, Direction dir,
                                   Rng& rng);

// Synthetic records always put the switched source first; the loss span
// covers exactly the target segment (starts right after the separator).
TrainingRecord MakeConnectedRecord(const AugmentedPair& aug);

// Splits the text into consecutive chunks of <= block_size tokens; every
// chunk except possibly the last has exactly block_size. Full-loss records.
std::vector<TrainingRecord> BlockSplit(const MonolingualRecord& rec,
                                       const TokenizerModel& tok,
                                       size_t block_size = 512);

// Below-threshold inputs are emitted factor times, copies 2..factor tagged
// replicated; at or above threshold the input passes through unchanged.
std::vector<SentencePair> ReplicateLowResource(
    const std::vector<SentencePair>& pairs, size_t threshold = 25000,
    size_t factor = 3);

// Translates n English pool sentences into s and t through the provider,
// pairs the two translations per English source, and code-switches the
// s side. Results are origin=synthetic with target-only loss.
std::vector<AugmentedPair> SynthesizePivotPairs(
    const std::vector<MonolingualRecord>& en_pool, const LanguageCode& s,
    const LanguageCode& t, size_t n, TranslationProvider& provider,
    const Lexicon& lex, const AugmentConfig& cfg,
    const SegmenterPolicy& policy, Rng& rng);

struct DirectionStats {
  LanguageCode a;
  LanguageCode b;  // unordered pair, a < b
  size_t natural_count = 0;
  size_t replicated_count = 0;
  size_t synthetic_count = 0;
};

struct EpochPlan {
  size_t threshold = 25000;
  size_t factor = 3;
  size_t block_size = 512;
  std::map<std::string, size_t> mono_records;   // language -> block count
  std::map<std::string, size_t> parallel_counts;  // "a-b" -> natural union
  std::map<std::string, size_t> fill_sizes;       // "a-b" -> synthetic fill
};

struct EpochConfig {
  std::vector<LanguageCode> languages;
  size_t threshold = 25000;
  size_t factor = 3;
  size_t block_size = 512;
  double replace_prob = 0.90;
  uint64_t seed = 0;
  int workers = 1;
  int epoch_stage = 0;
};

struct EpochSources {
  std::map<LanguageCode, std::vector<MonolingualRecord>> mono;
  // Directed: key (src, tgt) holds src->tgt pairs.
  std::map<std::pair<LanguageCode, LanguageCode>, std::vector<SentencePair>>
      para;
  std::vector<MonolingualRecord> en_pool;  // disjoint from mono["en"]
};

struct EpochResult {
  EpochPlan plan;
  std::vector<TrainingRecord> records;  // seeded-shuffled
  std::vector<DirectionStats> stats;
};

EpochResult BuildEpoch(const EpochConfig& cfg, const EpochSources& sources,
                       TranslationProvider& provider, const Lexicon& lex,
                       const TokenizerModel& tok,
                       const SegmenterPolicy& policy);

// Staged pretraining quotas, derived from realized direction stats.
struct StageConfig {
  int stage = 1;  // 1|2|3
  size_t pair_quota = 50000;
  size_t mono_quota = 400000;
  // Stage 3 splits by the underperforming set:
  size_t pair_quota_under = 700000;
  size_t pair_quota_better = 350000;
  size_t mono_quota_better = 30000;
  size_t mono_quota_under = 15000;
  std::set<std::pair<LanguageCode, LanguageCode>> underperforming;  // a < b

  static StageConfig Defaults(int stage);
};

struct StagePairQuota {
  LanguageCode a;
  LanguageCode b;
  size_t natural_take = 0;
  size_t copies = 1;          // copies of natural_take in the output
  size_t synthetic_take = 0;  // stage-2 1:1 fill for short pairs
};

struct StagePlan {
  std::vector<StagePairQuota> pairs;
  std::map<std::string, size_t> mono_quota;  // language -> sentence quota
};

StagePlan StageSample(const std::vector<DirectionStats>& stats,
                      const std::set<LanguageCode>& languages,
                      const StageConfig& stage);

// Sharded JSONL output plus a manifest with per-shard sha256 checksums.
// Shards are written to a temp name and renamed on success.
struct ShardInfo {
  std::string path;
  std::string sha256;
  size_t records = 0;
};

std::vector<ShardInfo> WriteShards(const std::vector<TrainingRecord>& records,
                                   const std::string& out_dir,
                                   size_t records_per_shard = 100000);

std::string RecordToJsonLine(const TrainingRecord& rec);

void WriteManifest(const std::string& path, const std::vector<ShardInfo>& shards,
                   const EpochPlan& plan,
                   const std::vector<DirectionStats>& stats,
                   const std::map<std::string, std::string>& extra);

}  // namespace mtk

#endif  // MTK_ASSEMBLER_HPP_

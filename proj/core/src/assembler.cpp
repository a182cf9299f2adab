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

#include "mtk/assembler.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include "json.hpp"
#include "mtk/digest.hpp"

namespace mtk {
namespace {

const char* DirectionName(Direction d) {
  switch (d) {
    case Direction::kForward:
      return "forward";
    case Direction::kBackward:
      return "backward";
    case Direction::kRandom:
      return "random";
  }
  return "unknown";
}

std::string PairKey(const LanguageCode& a, const LanguageCode& b) {
  return a.str() + "-" + b.str();
}

}  // namespace

TrainingRecord MakeConnectedRecord(const SentencePair& pair, Direction dir,
                                   Rng& rng) {
  Direction resolved = dir;
  if (dir == Direction::kRandom) {
    resolved = rng.Bernoulli(0.5) ? Direction::kForward : Direction::kBackward;
  }
  const bool forward = resolved == Direction::kForward;
  TrainingRecord rec;
  rec.text = (forward ? pair.src_text : pair.tgt_text) + " " +
             (forward ? pair.tgt_text : pair.src_text);
  rec.loss_spans.push_back({0, rec.text.size()});
  rec.meta.src_lang = forward ? pair.src_lang : pair.tgt_lang;
  rec.meta.tgt_lang = forward ? pair.tgt_lang : pair.src_lang;
  rec.meta.direction = resolved;
  rec.meta.origin = pair.origin;
  return rec;
}

TrainingRecord MakeConnectedRecord(const AugmentedPair& aug) {
  TrainingRecord rec;
  rec.text = aug.switched_text + " " + aug.other_text;
  rec.loss_spans.push_back({aug.switched_text.size() + 1, rec.text.size()});
  rec.meta.src_lang = aug.src_lang;
  rec.meta.tgt_lang = aug.tgt_lang;
  rec.meta.direction = Direction::kForward;
  rec.meta.origin = Origin::kSynthetic;
  return rec;
}

std::vector<TrainingRecord> BlockSplit(const MonolingualRecord& rec,
                                       const TokenizerModel& tok,
                                       size_t block_size) {
  const auto ids = tok.Encode(rec.text);
  std::vector<TrainingRecord> out;
  for (size_t start = 0; start < ids.size(); start += block_size) {
    const size_t end = std::min(start + block_size, ids.size());
    TrainingRecord r;
    r.text = tok.Decode(
        std::vector<int>(ids.begin() + start, ids.begin() + end));
    r.loss_spans.push_back({0, r.text.size()});
    r.meta.src_lang = rec.lang;
    r.meta.origin = Origin::kNatural;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SentencePair> ReplicateLowResource(
    const std::vector<SentencePair>& pairs, size_t threshold, size_t factor) {
  if (pairs.size() >= threshold) return pairs;
  std::vector<SentencePair> out;
  out.reserve(pairs.size() * factor);
  out = pairs;
  for (size_t copy = 1; copy < factor; ++copy) {
    for (SentencePair p : pairs) {
      p.origin = Origin::kReplicated;
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<AugmentedPair> SynthesizePivotPairs(
    const std::vector<MonolingualRecord>& en_pool, const LanguageCode& s,
    const LanguageCode& t, size_t n, TranslationProvider& provider,
    const Lexicon& lex, const AugmentConfig& cfg,
    const SegmenterPolicy& policy, Rng& rng) {
  if (n == 0) return {};
  if (en_pool.size() < n) {
    throw InsufficientPoolError("English pool has " +
                                std::to_string(en_pool.size()) +
                                " sentences, need " + std::to_string(n));
  }
  const LanguageCode en("en");
  std::vector<std::string> texts;
  texts.reserve(n);
  for (size_t i = 0; i < n; ++i) texts.push_back(en_pool[i].text);

  const auto into = [&](const LanguageCode& lang) {
    return lang == en ? texts : provider.Translate(texts, en, lang);
  };
  const auto side_s = into(s);
  const auto side_t = into(t);

  std::vector<AugmentedPair> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    SentencePair sp{s, t, side_s[i], side_t[i], Origin::kSynthetic};
    out.push_back(CodeSwitchParallel(sp, lex, cfg, policy, rng));
  }
  return out;
}

EpochResult BuildEpoch(const EpochConfig& cfg, const EpochSources& sources,
                       TranslationProvider& provider, const Lexicon& lex,
                       const TokenizerModel& tok,
                       const SegmenterPolicy& policy) {
  EpochResult result;
  result.plan.threshold = cfg.threshold;
  result.plan.factor = cfg.factor;
  result.plan.block_size = cfg.block_size;

  std::vector<LanguageCode> langs = cfg.languages;
  std::sort(langs.begin(), langs.end());

  // Monolingual blocks, per language in sorted order.
  std::vector<TrainingRecord> records;
  for (const auto& s : langs) {
    size_t count = 0;
    const auto it = sources.mono.find(s);
    if (it != sources.mono.end()) {
      for (const auto& rec : it->second) {
        auto blocks = BlockSplit(rec, tok, cfg.block_size);
        count += blocks.size();
        for (auto& b : blocks) {
          b.meta.epoch_stage = cfg.epoch_stage;
          records.push_back(std::move(b));
        }
      }
    }
    result.plan.mono_records[s.str()] = count;
  }

  // One assembly unit per active unordered pair. A pair is active when a
  // direction key exists and the natural union is non-empty; languages with
  // no data contribute nothing and raise no error.
  struct PairTask {
    LanguageCode a;
    LanguageCode b;
    std::vector<SentencePair> natural;
  };
  std::vector<PairTask> tasks;
  for (size_t i = 0; i < langs.size(); ++i) {
    for (size_t j = i + 1; j < langs.size(); ++j) {
      const auto& a = langs[i];
      const auto& b = langs[j];
      PairTask task{a, b, {}};
      if (const auto it = sources.para.find({a, b});
          it != sources.para.end()) {
        task.natural.insert(task.natural.end(), it->second.begin(),
                            it->second.end());
      }
      if (const auto it = sources.para.find({b, a});
          it != sources.para.end()) {
        task.natural.insert(task.natural.end(), it->second.begin(),
                            it->second.end());
      }
      if (!task.natural.empty()) tasks.push_back(std::move(task));
    }
  }

  std::set<LanguageCode> pool_langs(langs.begin(), langs.end());

  struct PairOutput {
    std::vector<TrainingRecord> records;
    DirectionStats stats;
  };
  std::vector<PairOutput> outputs(tasks.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mu;

  const auto run_task = [&](size_t idx) {
    const auto& task = tasks[idx];
    auto& out = outputs[idx];
    Rng rng(SubstreamKey(cfg.seed, "pair:" + PairKey(task.a, task.b)));

    const size_t natural_count = task.natural.size();
    out.stats.a = task.a;
    out.stats.b = task.b;
    out.stats.natural_count = natural_count;

    const auto replicated =
        ReplicateLowResource(task.natural, cfg.threshold, cfg.factor);
    out.stats.replicated_count = replicated.size() - natural_count;
    for (const auto& p : replicated) {
      auto rec = MakeConnectedRecord(p, Direction::kRandom, rng);
      rec.meta.epoch_stage = cfg.epoch_stage;
      out.records.push_back(std::move(rec));
    }

    if (natural_count < cfg.threshold) {
      const size_t fill = cfg.threshold - natural_count;
      AugmentConfig acfg;
      acfg.replace_prob = cfg.replace_prob;
      acfg.language_pool = pool_langs;
      acfg.strategy = AugmentStrategy::kPerSentenceLanguage;
      acfg.seed = cfg.seed;
      auto synth = SynthesizePivotPairs(sources.en_pool, task.a, task.b, fill,
                                        provider, lex, acfg, policy, rng);
      out.stats.synthetic_count = synth.size();
      for (const auto& aug : synth) {
        auto rec = MakeConnectedRecord(aug);
        rec.meta.epoch_stage = cfg.epoch_stage;
        out.records.push_back(std::move(rec));
      }
    }
  };

  // Plan maps are filled serially so the worker loop has no shared writes.
  for (const auto& task : tasks) {
    result.plan.parallel_counts[PairKey(task.a, task.b)] = task.natural.size();
    if (task.natural.size() < cfg.threshold) {
      result.plan.fill_sizes[PairKey(task.a, task.b)] =
          cfg.threshold - task.natural.size();
    }
  }

  const int workers = std::max(1, cfg.workers);
  const auto worker_loop = [&] {
    while (true) {
      const size_t idx = next.fetch_add(1);
      if (idx >= tasks.size() || failed.load()) break;
      try {
        run_task(idx);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mu);
        failed.store(true);
        failure = "pair " + PairKey(tasks[idx].a, tasks[idx].b) + ": " +
                  e.what();
      }
    }
  };
  if (workers == 1 || tasks.size() <= 1) {
    worker_loop();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker_loop);
    for (auto& th : threads) th.join();
  }
  if (failed.load()) throw Error(failure);

  for (auto& out : outputs) {
    result.stats.push_back(out.stats);
    for (auto& rec : out.records) records.push_back(std::move(rec));
  }

  // Seeded Fisher-Yates over indices; payloads move once at the end.
  std::vector<size_t> order(records.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng shuffle_rng(SubstreamKey(cfg.seed, "shuffle"));
  for (size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[shuffle_rng.UniformIndex(i)]);
  }
  result.records.reserve(records.size());
  for (size_t idx : order) result.records.push_back(std::move(records[idx]));
  return result;
}

StageConfig StageConfig::Defaults(int stage) {
  StageConfig cfg;
  cfg.stage = stage;
  switch (stage) {
    case 1:
      cfg.pair_quota = 50000;
      cfg.mono_quota = 400000;
      break;
    case 2:
      cfg.pair_quota = 50000;
      cfg.mono_quota = 200000;
      break;
    case 3:
      break;  // quotas come from the under/better split
    default:
      throw ConfigError("stage must be 1, 2 or 3");
  }
  return cfg;
}

StagePlan StageSample(const std::vector<DirectionStats>& stats,
                      const std::set<LanguageCode>& languages,
                      const StageConfig& stage) {
  std::set<std::pair<LanguageCode, LanguageCode>> known;
  for (const auto& s : stats) known.emplace(s.a, s.b);
  for (const auto& p : stage.underperforming) {
    if (!known.count(p)) {
      throw UnknownPairError("underperforming pair " + p.first.str() + "-" +
                             p.second.str() + " absent from stats");
    }
  }

  StagePlan plan;
  std::set<LanguageCode> under_langs;
  for (const auto& p : stage.underperforming) {
    under_langs.insert(p.first);
    under_langs.insert(p.second);
  }

  for (const auto& s : stats) {
    StagePairQuota q;
    q.a = s.a;
    q.b = s.b;
    switch (stage.stage) {
      case 1:
        q.natural_take = std::min(s.natural_count, stage.pair_quota);
        // Under-quota pairs are tripled, as in the epoch replication rule.
        q.copies = s.natural_count < stage.pair_quota ? 3 : 1;
        break;
      case 2:
        q.natural_take = std::min(s.natural_count, stage.pair_quota);
        q.copies = 1;
        if (s.natural_count < stage.pair_quota) {
          // Duplicate short pairs and draw synthetic data at a 1:1 ratio.
          q.synthetic_take = q.natural_take;
        }
        break;
      case 3:
        q.natural_take = stage.underperforming.count({s.a, s.b})
                             ? stage.pair_quota_under
                             : stage.pair_quota_better;
        break;
      default:
        throw ConfigError("stage must be 1, 2 or 3");
    }
    plan.pairs.push_back(q);
  }

  for (const auto& lang : languages) {
    size_t quota = stage.mono_quota;
    if (stage.stage == 3) {
      quota = under_langs.count(lang) ? stage.mono_quota_under
                                      : stage.mono_quota_better;
    }
    plan.mono_quota[lang.str()] = quota;
  }
  return plan;
}

std::string RecordToJsonLine(const TrainingRecord& rec) {
  nlohmann::ordered_json j;
  j["text"] = rec.text;
  j["loss_spans"] = nlohmann::ordered_json::array();
  for (const auto& s : rec.loss_spans) {
    j["loss_spans"].push_back({s.begin, s.end});
  }
  j["meta"]["src_lang"] = rec.meta.src_lang.str();
  if (rec.meta.tgt_lang) {
    j["meta"]["tgt_lang"] = rec.meta.tgt_lang->str();
  }
  j["meta"]["direction"] = DirectionName(rec.meta.direction);
  j["meta"]["origin"] = OriginName(rec.meta.origin);
  j["meta"]["epoch_stage"] = rec.meta.epoch_stage;
  return j.dump();
}

std::vector<ShardInfo> WriteShards(const std::vector<TrainingRecord>& records,
                                   const std::string& out_dir,
                                   size_t records_per_shard) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  std::vector<ShardInfo> shards;
  const size_t n_shards =
      records.empty() ? 0 : (records.size() + records_per_shard - 1) /
                                records_per_shard;
  for (size_t shard = 0; shard < n_shards; ++shard) {
    const size_t begin = shard * records_per_shard;
    const size_t end = std::min(begin + records_per_shard, records.size());
    std::string content;
    for (size_t i = begin; i < end; ++i) {
      content += RecordToJsonLine(records[i]);
      content += '\n';
    }
    char name[48];
    std::snprintf(name, sizeof(name), "shard-%05zu.jsonl", shard);
    const fs::path final_path = fs::path(out_dir) / name;
    const fs::path tmp_path = fs::path(out_dir) / (std::string(name) + ".tmp");
    {
      std::ofstream out(tmp_path, std::ios::binary);
      if (!out) throw IoError("cannot open " + tmp_path.string());
      out << content;
    }
    fs::rename(tmp_path, final_path);
    shards.push_back({final_path.string(), Sha256Hex(content), end - begin});
  }
  return shards;
}

void WriteManifest(const std::string& path,
                   const std::vector<ShardInfo>& shards, const EpochPlan& plan,
                   const std::vector<DirectionStats>& stats,
                   const std::map<std::string, std::string>& extra) {
  nlohmann::ordered_json j;
  j["shards"] = nlohmann::ordered_json::array();
  for (const auto& s : shards) {
    j["shards"].push_back(
        {{"path", s.path}, {"sha256", s.sha256}, {"records", s.records}});
  }
  j["plan"] = {{"threshold", plan.threshold},
               {"factor", plan.factor},
               {"block_size", plan.block_size},
               {"mono_records", plan.mono_records},
               {"parallel_counts", plan.parallel_counts},
               {"fill_sizes", plan.fill_sizes}};
  j["stats"] = nlohmann::ordered_json::array();
  for (const auto& s : stats) {
    j["stats"].push_back({{"pair", s.a.str() + "-" + s.b.str()},
                          {"natural", s.natural_count},
                          {"replicated", s.replicated_count},
                          {"synthetic", s.synthetic_count}});
  }
  for (const auto& [k, v] : extra) j[k] = v;

  namespace fs = std::filesystem;
  const fs::path tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw IoError("cannot open " + tmp.string());
    out << j.dump(2) << '\n';
  }
  fs::rename(tmp, path);
}

}  // namespace mtk

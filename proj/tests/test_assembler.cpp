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
#include <map>

#include "doctest.h"
#include "json.hpp"
#include "mtk/digest.hpp"
#include "mtk/error.hpp"
#include "test_util.hpp"

using namespace mtk;

namespace {

const LanguageCode kEn("en");
const LanguageCode kFr("fr");
const LanguageCode kDe("de");

SentencePair P(const char* s, const char* t,
               const LanguageCode& sl = kEn, const LanguageCode& tl = kFr) {
  return {sl, tl, s, t, Origin::kNatural};
}

std::vector<MonolingualRecord> EnPool(size_t n) {
  std::vector<MonolingualRecord> pool;
  for (size_t i = 0; i < n; ++i) {
    pool.push_back({kEn, "pool sentence " + std::to_string(i), ""});
  }
  return pool;
}

}  // namespace

TEST_SUITE("assembler") {

TEST_CASE("connected record is side, single space, side") {
  Rng rng(1);
  const auto rec = MakeConnectedRecord(P("hello", "bonjour"),
                                       Direction::kForward, rng);
  CHECK(rec.text == "hello bonjour");
  REQUIRE(rec.loss_spans.size() == 1);
  CHECK(rec.loss_spans[0].begin == 0);
  CHECK(rec.loss_spans[0].end == rec.text.size());
  CHECK(rec.meta.src_lang == kEn);
  REQUIRE(rec.meta.tgt_lang.has_value());
  CHECK(*rec.meta.tgt_lang == kFr);

  const auto back = MakeConnectedRecord(P("hello", "bonjour"),
                                        Direction::kBackward, rng);
  CHECK(back.text == "bonjour hello");
  CHECK(back.meta.src_lang == kFr);
}

TEST_CASE("random direction is a fair coin") {
  size_t forward = 0;
  Rng rng(42);
  for (int i = 0; i < 10000; ++i) {
    const auto rec = MakeConnectedRecord(P("a", "b"), Direction::kRandom, rng);
    if (rec.meta.direction == Direction::kForward) ++forward;
    CHECK((rec.text == "a b" || rec.text == "b a"));
  }
  const double frac = forward / 10000.0;
  CHECK(frac > 0.48);
  CHECK(frac < 0.52);
}

TEST_CASE("synthetic records train on the target segment only") {
  AugmentedPair aug;
  aug.src_lang = kEn;
  aug.tgt_lang = kFr;
  aug.switched_text = "chat sat";
  aug.other_text = "le chat est assis";
  const auto rec = MakeConnectedRecord(aug);
  CHECK(rec.text == "chat sat le chat est assis");
  REQUIRE(rec.loss_spans.size() == 1);
  CHECK(rec.loss_spans[0].begin == aug.switched_text.size() + 1);
  CHECK(rec.loss_spans[0].end == rec.text.size());
  CHECK(rec.meta.origin == Origin::kSynthetic);
}

TEST_CASE("block split produces full blocks plus a remainder") {
  const auto tok = TokenizerModel::ByteLevel();
  const MonolingualRecord rec{kEn, std::string(1000, 'x'), ""};
  const auto blocks = BlockSplit(rec, tok, 512);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].text.size() == 512);
  CHECK(blocks[1].text.size() == 488);
  CHECK(blocks[0].text + blocks[1].text == rec.text);
}

TEST_CASE("replication emits factor copies below the threshold") {
  const std::vector<SentencePair> pairs{P("a", "b"), P("c", "d")};
  const auto out = ReplicateLowResource(pairs, /*threshold=*/4, /*factor=*/3);
  REQUIRE(out.size() == 6);
  CHECK(out[0].origin == Origin::kNatural);
  CHECK(out[1].origin == Origin::kNatural);
  for (size_t i = 2; i < 6; ++i) CHECK(out[i].origin == Origin::kReplicated);
  // At the threshold nothing is replicated.
  const std::vector<SentencePair> big(4, P("a", "b"));
  CHECK(ReplicateLowResource(big, 4, 3).size() == 4);
}

TEST_CASE("pivot synthesis pairs the two translation legs per pool line") {
  Lexicon lex;
  lex.AddSynonym("pool", kEn, kFr, "piscine");
  lex.AddSynonym("pool", kEn, kDe, "Becken");
  MockDictionaryProvider provider(lex);
  AugmentConfig cfg;
  cfg.replace_prob = 0.0;
  cfg.language_pool = {kEn, kFr, kDe};
  SegmenterPolicy policy;
  Rng rng(3);
  const auto out = SynthesizePivotPairs(EnPool(5), kFr, kDe, 3, provider, lex,
                                        cfg, policy, rng);
  REQUIRE(out.size() == 3);
  CHECK(out[0].src_lang == kFr);
  CHECK(out[0].tgt_lang == kDe);
  // Word-by-word mock: only "pool" has entries, the rest passes through.
  CHECK(out[0].switched_text == "piscine sentence 0");
  CHECK(out[0].other_text == "Becken sentence 0");
  CHECK_THROWS_AS(SynthesizePivotPairs(EnPool(2), kFr, kDe, 3, provider, lex,
                                       cfg, policy, rng),
                  InsufficientPoolError);
}

TEST_CASE("an english-side pair uses pool text directly") {
  Lexicon lex;
  lex.AddSynonym("pool", kEn, kFr, "piscine");
  MockDictionaryProvider provider(lex);
  AugmentConfig cfg;
  cfg.replace_prob = 0.0;
  cfg.language_pool = {kEn, kFr};
  SegmenterPolicy policy;
  Rng rng(3);
  const auto out = SynthesizePivotPairs(EnPool(2), kEn, kFr, 1, provider, lex,
                                        cfg, policy, rng);
  REQUIRE(out.size() == 1);
  CHECK(out[0].switched_text == "pool sentence 0");  // untranslated english
  CHECK(out[0].other_text == "piscine sentence 0");
}

}  // TEST_SUITE

TEST_SUITE("epoch") {

namespace {

// Independent reference for the epoch builder, written straight from the
// assembly rules: mono blocks per language; per unordered pair, the natural
// union replicated to factor copies when short, plus pivot fill up to the
// threshold; synthetic fill = threshold - natural. It reproduces expected
// *multiset* contents by category, not record order.
struct ReferenceCounts {
  std::map<std::string, size_t> natural;    // "a-b" -> count (incl. copies)
  std::map<std::string, size_t> synthetic;  // "a-b" -> count
  size_t mono_blocks = 0;
};

ReferenceCounts ReferenceAssemble(const EpochConfig& cfg,
                                  const EpochSources& sources,
                                  const TokenizerModel& tok) {
  ReferenceCounts ref;
  for (const auto& [lang, recs] : sources.mono) {
    for (const auto& r : recs) {
      const size_t tokens = tok.Encode(r.text).size();
      ref.mono_blocks += (tokens + cfg.block_size - 1) / cfg.block_size;
    }
  }
  std::map<std::string, size_t> unions;
  for (const auto& [key, pairs] : sources.para) {
    auto a = key.first, b = key.second;
    if (b < a) std::swap(a, b);
    unions[a.str() + "-" + b.str()] += pairs.size();
  }
  for (const auto& [pair, n] : unions) {
    if (n == 0) continue;
    if (n < cfg.threshold) {
      ref.natural[pair] = n * cfg.factor;
      ref.synthetic[pair] = cfg.threshold - n;
    } else {
      ref.natural[pair] = n;
    }
  }
  return ref;
}

EpochSources ToySources() {
  EpochSources src;
  src.mono[kEn] = {{kEn, "alpha beta gamma", ""}};
  src.mono[kFr] = {{kFr, "un deux trois", ""}};
  // Per-direction counts 1, 3, threshold-1, threshold with threshold 4.
  src.para[{kEn, kFr}] = {P("e1", "f1")};
  for (int i = 0; i < 3; ++i) {
    src.para[{kFr, kEn}].push_back(P("f", "e", kFr, kEn));
  }
  for (int i = 0; i < 3; ++i) {
    src.para[{kEn, kDe}].push_back(P("e", "d", kEn, kDe));
  }
  for (int i = 0; i < 4; ++i) {
    src.para[{kDe, kFr}].push_back(P("d", "f", kDe, kFr));
  }
  src.en_pool = EnPool(64);
  return src;
}

EpochConfig ToyConfig(int workers = 1) {
  EpochConfig cfg;
  cfg.languages = {kEn, kFr, kDe};
  cfg.threshold = 4;
  cfg.factor = 3;
  cfg.block_size = 8;
  cfg.replace_prob = 0.9;
  cfg.seed = 7;
  cfg.workers = workers;
  return cfg;
}

}  // namespace

TEST_CASE("epoch contents match the category-count reference") {
  const auto cfg = ToyConfig();
  const auto sources = ToySources();
  Lexicon lex;
  MockDictionaryProvider provider(lex);
  const auto tok = TokenizerModel::ByteLevel();
  SegmenterPolicy policy;
  const auto result = BuildEpoch(cfg, sources, provider, lex, tok, policy);
  const auto ref = ReferenceAssemble(cfg, sources, tok);

  std::map<std::string, size_t> got_natural, got_synth;
  size_t got_mono = 0;
  for (const auto& rec : result.records) {
    if (!rec.meta.tgt_lang) {
      ++got_mono;
      continue;
    }
    auto a = rec.meta.src_lang, b = *rec.meta.tgt_lang;
    if (b < a) std::swap(a, b);
    const auto key = a.str() + "-" + b.str();
    if (rec.meta.origin == Origin::kSynthetic) {
      ++got_synth[key];
    } else {
      ++got_natural[key];
    }
  }
  CHECK(got_mono == ref.mono_blocks);
  CHECK(got_natural == ref.natural);
  CHECK(got_synth == ref.synthetic);

  // en-fr union is 4 == threshold: no replication, no fill. en-de union 3:
  // tripled to 9 plus 1 synthetic. de-fr union 4: untouched.
  CHECK(got_natural.at("en-fr") == 4);
  CHECK(got_synth.count("en-fr") == 0);
  CHECK(got_natural.at("de-en") == 9);
  CHECK(got_synth.at("de-en") == 1);
  CHECK(got_natural.at("de-fr") == 4);
}

TEST_CASE("languages without data contribute nothing and raise no error") {
  auto cfg = ToyConfig();
  cfg.languages.push_back(LanguageCode("kea"));
  const auto sources = ToySources();
  Lexicon lex;
  MockDictionaryProvider provider(lex);
  const auto tok = TokenizerModel::ByteLevel();
  SegmenterPolicy policy;
  const auto result = BuildEpoch(cfg, sources, provider, lex, tok, policy);
  for (const auto& s : result.stats) {
    CHECK(s.a.str() != "kea");
    CHECK(s.b.str() != "kea");
  }
}

TEST_CASE("output is identical at 1 and 8 workers") {
  const auto sources = ToySources();
  Lexicon lex;
  MockDictionaryProvider provider(lex);
  const auto tok = TokenizerModel::ByteLevel();
  SegmenterPolicy policy;
  const auto r1 = BuildEpoch(ToyConfig(1), sources, provider, lex, tok, policy);
  const auto r8 = BuildEpoch(ToyConfig(8), sources, provider, lex, tok, policy);
  REQUIRE(r1.records.size() == r8.records.size());
  for (size_t i = 0; i < r1.records.size(); ++i) {
    CHECK(RecordToJsonLine(r1.records[i]) == RecordToJsonLine(r8.records[i]));
  }
}

TEST_CASE("different seeds shuffle differently") {
  const auto sources = ToySources();
  Lexicon lex;
  MockDictionaryProvider provider(lex);
  const auto tok = TokenizerModel::ByteLevel();
  SegmenterPolicy policy;
  auto cfg2 = ToyConfig();
  cfg2.seed = 8;
  const auto r1 = BuildEpoch(ToyConfig(), sources, provider, lex, tok, policy);
  const auto r2 = BuildEpoch(cfg2, sources, provider, lex, tok, policy);
  std::vector<std::string> l1, l2;
  for (const auto& r : r1.records) l1.push_back(RecordToJsonLine(r));
  for (const auto& r : r2.records) l2.push_back(RecordToJsonLine(r));
  CHECK(l1 != l2);
}

TEST_CASE("shards and manifest carry checksums that verify") {
  TempDir dir("shards");
  const auto sources = ToySources();
  Lexicon lex;
  MockDictionaryProvider provider(lex);
  const auto tok = TokenizerModel::ByteLevel();
  SegmenterPolicy policy;
  const auto result =
      BuildEpoch(ToyConfig(), sources, provider, lex, tok, policy);
  const auto shards = WriteShards(result.records, dir.Path("out"), 10);
  REQUIRE(!shards.empty());
  size_t total = 0;
  for (const auto& s : shards) {
    CHECK(Sha256Hex(Slurp(s.path)) == s.sha256);
    total += s.records;
  }
  CHECK(total == result.records.size());
  const auto manifest_path = dir.Path("out/manifest.json");
  WriteManifest(manifest_path, shards, result.plan, result.stats,
                {{"note", "test"}});
  const auto j = nlohmann::json::parse(Slurp(manifest_path));
  CHECK(j["shards"].size() == shards.size());
  CHECK(j["plan"]["threshold"] == 4);
  CHECK(j["note"] == "test");
}

TEST_CASE("stage quotas follow the three published stages") {
  std::vector<DirectionStats> stats{
      {kEn, kFr, 60000, 0, 0},
      {kDe, kEn, 30000, 0, 0},
  };
  const std::set<LanguageCode> langs{kEn, kFr, kDe};

  const auto p1 = StageSample(stats, langs, StageConfig::Defaults(1));
  REQUIRE(p1.pairs.size() == 2);
  CHECK(p1.pairs[0].natural_take == 50000);
  CHECK(p1.pairs[0].copies == 1);
  CHECK(p1.pairs[1].natural_take == 30000);
  CHECK(p1.pairs[1].copies == 3);
  CHECK(p1.mono_quota.at("en") == 400000);

  const auto p2 = StageSample(stats, langs, StageConfig::Defaults(2));
  CHECK(p2.pairs[1].synthetic_take == 30000);  // 1:1 with the short pair
  CHECK(p2.pairs[0].synthetic_take == 0);
  CHECK(p2.mono_quota.at("fr") == 200000);

  auto s3 = StageConfig::Defaults(3);
  s3.underperforming = {{kDe, kEn}};
  const auto p3 = StageSample(stats, langs, s3);
  CHECK(p3.pairs[1].natural_take == 700000);
  CHECK(p3.pairs[0].natural_take == 350000);
  CHECK(p3.mono_quota.at("de") == 15000);  // language of an under pair
  CHECK(p3.mono_quota.at("fr") == 30000);

  s3.underperforming = {{kFr, LanguageCode("zz")}};
  CHECK_THROWS_AS(StageSample(stats, langs, s3), UnknownPairError);
  CHECK_THROWS_AS(StageConfig::Defaults(4), ConfigError);
}

}  // TEST_SUITE

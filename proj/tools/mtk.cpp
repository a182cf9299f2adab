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

// mtk - corpus construction and analysis toolkit for massive multilingual
// continual pre-training. One subcommand per pipeline step; every run is
// reproducible from its seed and resolved-config snapshot.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mtk/assembler.hpp"
#include "mtk/augment.hpp"
#include "mtk/config.hpp"
#include "mtk/digest.hpp"
#include "mtk/error.hpp"
#include "mtk/ingestion.hpp"
#include "mtk/lexicon.hpp"
#include "mtk/metrics.hpp"
#include "mtk/prompts.hpp"
#include "mtk/provider.hpp"
#include "mtk/rng.hpp"
#include "mtk/text.hpp"
#include "mtk/tokenizer.hpp"
#include "mtk/vocab_lab.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

// Writes content to path atomically (temp file + rename).
void WriteFileAtomic(const std::string& path, const std::string& content) {
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  const fs::path tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw mtk::IoError("cannot open " + tmp.string());
    out << content;
  }
  fs::rename(tmp, p);
}

mtk::LanguageCode Lang(const std::string& s) { return mtk::LanguageCode(s); }

std::vector<std::string> SplitColon(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ':') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Builds the provider named by spec ("mock-dictionary", "cache-only",
// "http:<host>:<port>"), optionally wrapped in a persistent cache.
std::shared_ptr<mtk::TranslationProvider> MakeProvider(
    const std::string& spec, const mtk::Lexicon& lex,
    const std::string& cache_path) {
  std::shared_ptr<mtk::TranslationProvider> backend;
  if (spec == "mock-dictionary") {
    backend = std::make_shared<mtk::MockDictionaryProvider>(lex);
  } else if (spec == "cache-only") {
    if (cache_path.empty()) {
      throw mtk::ConfigError("cache-only provider requires a cache path");
    }
    backend = std::make_shared<mtk::CacheOnlyProvider>();
  } else if (spec.rfind("http:", 0) == 0) {
    const auto parts = SplitColon(spec);
    if (parts.size() != 3) {
      throw mtk::ConfigError("http provider spec must be http:<host>:<port>");
    }
    backend = std::make_shared<mtk::HttpProvider>(parts[1],
                                                  std::stoi(parts[2]));
  } else {
    throw mtk::ConfigError("unknown provider '" + spec + "'");
  }
  if (!cache_path.empty()) {
    backend = std::make_shared<mtk::CachingProvider>(backend, cache_path);
  }
  return backend;
}

// ---------------------------------------------------------------------------
// lexicon

struct LexiconBuildArgs {
  std::vector<std::string> dicts;  // src:tgt:path
  bool two_hop = false;
  std::string out;
};

int RunLexiconBuild(const LexiconBuildArgs& a) {
  std::vector<std::vector<mtk::DictEntryPair>> streams;
  size_t dropped = 0;
  for (const auto& spec : a.dicts) {
    const auto parts = SplitColon(spec);
    if (parts.size() != 3) {
      throw mtk::ConfigError("--dict expects src:tgt:path, got '" + spec +
                             "'");
    }
    auto res =
        mtk::ReadBilingualDictionary(parts[2], Lang(parts[0]), Lang(parts[1]));
    dropped += res.punct_dropped + res.duplicates_dropped + res.skipped;
    streams.push_back(std::move(res.entries));
  }
  mtk::Lexicon lex = mtk::BuildMultilingualLexicon(streams);
  if (a.two_hop) lex = mtk::ExpandTwoHop(lex);
  WriteFileAtomic(a.out, lex.Serialize());
  std::cerr << "lexicon: " << lex.entries().size() << " keys, " << dropped
            << " input lines dropped, hop depth " << lex.hop_depth() << "\n";
  return 0;
}

int RunLexiconStats(const std::string& path) {
  const mtk::Lexicon lex = mtk::Lexicon::Load(path);
  ordered_json j;
  j["keys"] = lex.entries().size();
  j["hop_depth"] = lex.hop_depth();
  ordered_json langs = ordered_json::object();
  for (const auto& lang : lex.supported_langs()) {
    langs[lang.str()] = lex.EntityCount(lang);
  }
  j["entities_per_language"] = langs;
  std::cout << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// augment

struct AugmentArgs {
  std::string mode = "parallel";
  std::string input;
  std::string src, tgt, lang;
  std::string lexicon;
  std::vector<std::string> pool;
  double prob = 0.90;
  uint64_t seed = 0;
  std::string out;
};

int RunAugment(const AugmentArgs& a) {
  const mtk::Lexicon lex = mtk::Lexicon::Load(a.lexicon);
  mtk::AugmentConfig cfg;
  cfg.replace_prob = a.prob;
  cfg.seed = a.seed;
  for (const auto& l : a.pool) cfg.language_pool.insert(Lang(l));
  if (cfg.language_pool.empty()) {
    for (const auto& l : lex.supported_langs()) cfg.language_pool.insert(l);
  }
  mtk::SegmenterPolicy policy;
  std::vector<mtk::AugmentedPair> results;
  if (a.mode == "parallel") {
    cfg.strategy = mtk::AugmentStrategy::kPerSentenceLanguage;
    const auto read = mtk::ReadParallel(a.input, Lang(a.src), Lang(a.tgt));
    results.reserve(read.records.size());
    for (size_t i = 0; i < read.records.size(); ++i) {
      mtk::Rng rng(mtk::SubstreamKey(a.seed, i));
      results.push_back(
          mtk::CodeSwitchParallel(read.records[i], lex, cfg, policy, rng));
    }
  } else if (a.mode == "mono") {
    cfg.strategy = mtk::AugmentStrategy::kPerWordLanguage;
    const auto read = mtk::ReadMonolingual(a.input, Lang(a.lang));
    results.reserve(read.records.size());
    for (size_t i = 0; i < read.records.size(); ++i) {
      mtk::Rng rng(mtk::SubstreamKey(a.seed, i));
      results.push_back(
          mtk::CodeSwitchMonolingual(read.records[i], lex, cfg, policy, rng));
    }
  } else {
    throw mtk::ConfigError("--mode must be parallel or mono");
  }
  std::string content;
  for (const auto& r : results) {
    ordered_json j;
    j["src_lang"] = r.src_lang.str();
    j["tgt_lang"] = r.tgt_lang.str();
    j["switched"] = r.switched_text;
    j["other"] = r.other_text;
    j["loss_scope"] =
        r.loss_scope == mtk::LossScope::kTargetOnly ? "target_only"
                                                    : "full_pair";
    j["replacements"] = r.replacement_log.size();
    j["eligible"] = r.eligible_count;
    content += j.dump();
    content += '\n';
  }
  WriteFileAtomic(a.out, content);
  std::cerr << "augment: " << results.size() << " records, observed rate "
            << mtk::EstimateReplacementRate(results) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// assemble

// Scans dir for "<lang>.txt" monolingual files and "<src>-<tgt>.tsv"
// parallel files, restricted to the configured language set.
mtk::EpochSources LoadEpochSources(const mtk::RunConfig& cfg,
                                   std::map<std::string, std::string>* sums) {
  mtk::EpochSources src;
  for (const auto& l : cfg.languages) {
    const mtk::LanguageCode lang(l);
    if (!cfg.mono_dir.empty()) {
      const fs::path p = fs::path(cfg.mono_dir) / (l + ".txt");
      if (fs::exists(p)) {
        src.mono[lang] = mtk::ReadMonolingual(p.string(), lang).records;
        (*sums)[p.string()] = mtk::Sha256File(p.string());
      }
    }
  }
  if (!cfg.para_dir.empty()) {
    for (const auto& entry : fs::directory_iterator(cfg.para_dir)) {
      if (entry.path().extension() != ".tsv") continue;
      const std::string stem = entry.path().stem().string();
      const size_t dash = stem.find('-');
      if (dash == std::string::npos) continue;
      const std::string s = stem.substr(0, dash);
      const std::string t = stem.substr(dash + 1);
      const auto in_set = [&](const std::string& x) {
        for (const auto& l : cfg.languages)
          if (l == x) return true;
        return false;
      };
      if (!in_set(s) || !in_set(t)) continue;
      src.para[{Lang(s), Lang(t)}] =
          mtk::ReadParallel(entry.path().string(), Lang(s), Lang(t)).records;
      (*sums)[entry.path().string()] = mtk::Sha256File(entry.path().string());
    }
  }
  if (!cfg.en_pool_path.empty()) {
    src.en_pool =
        mtk::ReadMonolingual(cfg.en_pool_path, Lang("en")).records;
    (*sums)[cfg.en_pool_path] = mtk::Sha256File(cfg.en_pool_path);
  }
  return src;
}

struct AssembleArgs {
  std::string config;
  std::optional<uint64_t> seed;
  std::string out_dir;
  std::optional<int> workers;
  std::string report;
};

int RunAssemble(const AssembleArgs& a) {
  mtk::RunConfig cfg = mtk::RunConfig::FromToml(mtk::TomlTable::ParseFile(a.config));
  if (a.seed) cfg.seed = *a.seed;
  if (a.workers) cfg.workers = *a.workers;
  if (cfg.languages.empty()) {
    throw mtk::ConfigError("config must list at least one language");
  }

  std::map<std::string, std::string> input_sums;
  input_sums[a.config] = mtk::Sha256File(a.config);
  const mtk::EpochSources sources = LoadEpochSources(cfg, &input_sums);

  mtk::Lexicon lex;
  if (!cfg.lexicon_path.empty()) {
    lex = mtk::Lexicon::Load(cfg.lexicon_path);
    input_sums[cfg.lexicon_path] = mtk::Sha256File(cfg.lexicon_path);
  }
  mtk::TokenizerModel tok = cfg.tokenizer_path.empty()
                                ? mtk::TokenizerModel::ByteLevel()
                                : mtk::TokenizerModel::Load(cfg.tokenizer_path);
  if (!cfg.tokenizer_path.empty()) {
    input_sums[cfg.tokenizer_path] = mtk::Sha256File(cfg.tokenizer_path);
  }
  auto provider = MakeProvider(cfg.provider, lex, cfg.cache_path);

  mtk::EpochConfig ecfg;
  for (const auto& l : cfg.languages) ecfg.languages.push_back(Lang(l));
  ecfg.threshold = cfg.threshold;
  ecfg.factor = cfg.factor;
  ecfg.block_size = cfg.block_size;
  ecfg.replace_prob = cfg.replace_prob;
  ecfg.seed = cfg.seed;
  ecfg.workers = cfg.workers;
  ecfg.epoch_stage = cfg.epoch_stage;
  mtk::SegmenterPolicy policy;

  const mtk::EpochResult result =
      mtk::BuildEpoch(ecfg, sources, *provider, lex, tok, policy);
  std::cerr << "assemble: " << result.records.size() << " records across "
            << result.stats.size() << " language pairs\n";

  fs::create_directories(a.out_dir);
  const auto shards = mtk::WriteShards(result.records, a.out_dir);
  std::map<std::string, std::string> extra;
  extra["config"] = cfg.ToJson();
  for (const auto& [path, sum] : input_sums) extra["input:" + path] = sum;
  mtk::WriteManifest((fs::path(a.out_dir) / "manifest.json").string(), shards,
                     result.plan, result.stats, extra);
  WriteFileAtomic((fs::path(a.out_dir) / "config.json").string(),
                  cfg.ToJson() + "\n");

  if (!a.report.empty()) {
    ordered_json j;
    j["records"] = result.records.size();
    j["shards"] = shards.size();
    ordered_json st = ordered_json::array();
    for (const auto& s : result.stats) {
      st.push_back({{"pair", s.a.str() + "-" + s.b.str()},
                    {"natural", s.natural_count},
                    {"replicated", s.replicated_count},
                    {"synthetic", s.synthetic_count}});
    }
    j["pairs"] = st;
    WriteFileAtomic(a.report, j.dump(2) + "\n");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// vocab

int RunVocabFertility(const std::string& tok_path, const std::string& input,
                      const std::string& lang) {
  const auto tok = mtk::TokenizerModel::Load(tok_path);
  const auto corpus = mtk::ReadMonolingual(input, Lang(lang)).records;
  const auto rep = mtk::Fertility(tok, corpus, Lang(lang));
  ordered_json j;
  j["lang"] = rep.lang.str();
  j["tokens"] = rep.token_count;
  j["base_units"] = rep.base_unit_count;
  j["fertility"] = rep.fertility;
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct VocabExtendArgs {
  std::string tokenizer, embeddings, input, lang;
  size_t n = 100;
  std::string out_tokenizer, out_embeddings;
};

int RunVocabExtend(const VocabExtendArgs& a) {
  const auto tok = mtk::TokenizerModel::Load(a.tokenizer);
  const auto emb = mtk::ReadEmbeddings(a.embeddings);
  const auto corpus = mtk::ReadMonolingual(a.input, Lang(a.lang)).records;
  const auto candidates = mtk::DeriveCandidates(corpus, tok, a.n);
  auto [tok2, emb2] = mtk::ExtendVocab(tok, candidates, emb);
  tok2.Save(a.out_tokenizer);
  mtk::WriteEmbeddings(a.out_embeddings, emb2);
  const auto before = mtk::Fertility(tok, corpus, Lang(a.lang));
  const auto after = mtk::Fertility(tok2, corpus, Lang(a.lang));
  ordered_json j;
  j["added"] = candidates.size();
  j["fertility_before"] = before.fertility;
  j["fertility_after"] = after.fertility;
  std::cout << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// analyze

int RunAnalyzeKs(const std::string& before_path, const std::string& after_path,
                 double alpha) {
  const auto before = mtk::ReadEmbeddings(before_path);
  const auto after = mtk::ReadEmbeddings(after_path);
  const auto rep = mtk::KsLottery(before, after, alpha);
  ordered_json j;
  j["rows"] = rep.per_token.size();
  j["shift_count"] = rep.shift_count;
  j["shift_tokens"] = rep.shift_tokens;
  if (rep.shift_distance) {
    j["shift_distance"] = *rep.shift_distance;
  } else {
    j["shift_distance"] = nullptr;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int RunAnalyzeQuality(const std::string& queries_path,
                      const std::string& pool_path) {
  const auto queries = mtk::ReadEmbeddings(queries_path);
  const auto pool = mtk::ReadEmbeddings(pool_path);
  std::vector<size_t> gold(queries.vocab_size);
  for (size_t i = 0; i < gold.size(); ++i) gold[i] = i;
  const auto rep = mtk::RetrievalRAt1(queries, pool, gold);
  ordered_json j;
  j["queries"] = rep.query_count;
  j["correct_top1"] = rep.correct_top1;
  j["r_at_1"] = rep.r_at_1;
  j["mean_cosine"] = rep.mean_cosine;
  std::cout << j.dump(2) << "\n";
  return 0;
}

std::vector<double> ReadColumn(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mtk::IoError("cannot open " + path);
  std::vector<double> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto t = mtk::Trim(line);
    if (t.empty()) continue;
    out.push_back(std::stod(std::string(t)));
  }
  return out;
}

int RunAnalyzeSpearman(const std::string& x_path, const std::string& y_path) {
  const double rho = mtk::Spearman(ReadColumn(x_path), ReadColumn(y_path));
  ordered_json j;
  j["spearman"] = rho;
  std::cout << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// score

std::vector<std::string> ReadLines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mtk::IoError("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

mtk::Smoothing ParseSmoothing(const std::string& spec) {
  if (spec.empty() || spec == "none") return {};
  if (spec.rfind("add-k:", 0) == 0) {
    return {.add_k = std::stod(spec.substr(6))};
  }
  throw mtk::ConfigError("--smoothing must be none or add-k:<k>");
}

int RunScoreBleu(const std::string& hyp_path, const std::string& ref_path,
                 const std::string& sp_tok, const std::string& smoothing) {
  const auto hyps = ReadLines(hyp_path);
  const auto refs = ReadLines(ref_path);
  const mtk::Smoothing sm = ParseSmoothing(smoothing);
  mtk::BleuScore score;
  if (sp_tok.empty()) {
    score = mtk::CorpusBleu(hyps, refs, 4, sm);
  } else {
    score = mtk::SpBleu(hyps, refs, mtk::TokenizerModel::Load(sp_tok), sm);
  }
  ordered_json j;
  j["score"] = score.score;
  j["precisions"] = score.precisions;
  j["brevity_penalty"] = score.brevity_penalty;
  j["hyp_len"] = score.hyp_len;
  j["ref_len"] = score.ref_len;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int RunScoreRatio(const std::string& labels_path, const std::string& target,
                  const std::string& contrast) {
  const auto labels = mtk::ReadLabels(labels_path);
  const auto rep = mtk::LanguageRatio(labels, Lang(target), Lang(contrast));
  ordered_json j;
  j["n"] = rep.n;
  j["r_target"] = rep.r_target;
  j["r_contrast"] = rep.r_contrast;
  std::cout << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// prompts

struct PromptsArgs {
  std::vector<std::string> pairs;  // name:src:tgt:path
  std::string bank_path;
  std::string names_path;
  size_t quota = 1000;
  uint64_t seed = 0;
  std::string out;
};

int RunPromptsEmit(const PromptsArgs& a) {
  const mtk::PromptBank bank = a.bank_path.empty()
                                   ? mtk::PromptBank::BuiltIn()
                                   : mtk::PromptBank::LoadFromFile(a.bank_path);
  const mtk::LanguageNames names =
      a.names_path.empty() ? mtk::DefaultLanguageNames()
                           : mtk::LoadLanguageNames(a.names_path);
  std::map<std::string, std::vector<mtk::SentencePair>> sources;
  for (const auto& spec : a.pairs) {
    const auto parts = SplitColon(spec);
    if (parts.size() != 4) {
      throw mtk::ConfigError("--pairs expects name:src:tgt:path, got '" +
                             spec + "'");
    }
    sources[parts[0]] =
        mtk::ReadParallel(parts[3], Lang(parts[1]), Lang(parts[2])).records;
  }
  mtk::SftEmitOptions opts;
  opts.per_language_quota = a.quota;
  opts.seed = a.seed;
  const auto lines = mtk::EmitSftDataset(sources, bank, names, opts);
  std::string content;
  for (const auto& l : lines) {
    content += l;
    content += '\n';
  }
  WriteFileAtomic(a.out, content);
  std::cerr << "prompts: " << lines.size() << " records\n";
  return 0;
}

// ---------------------------------------------------------------------------
// pivot

struct PivotArgs {
  std::string input, src, pivot = "en", tgt;
  std::string provider = "mock-dictionary";
  std::string lexicon, cache;
  std::string out;
};

int RunPivot(const PivotArgs& a) {
  mtk::Lexicon lex;
  if (!a.lexicon.empty()) lex = mtk::Lexicon::Load(a.lexicon);
  auto provider = MakeProvider(a.provider, lex, a.cache);
  const auto sentences = ReadLines(a.input);
  const auto result = mtk::PivotTranslate(*provider, sentences, Lang(a.src),
                                          Lang(a.pivot), Lang(a.tgt));
  std::string content;
  for (const auto& t : result.translations) {
    content += t;
    content += '\n';
  }
  WriteFileAtomic(a.out, content);
  return 0;
}

// ---------------------------------------------------------------------------
// stats

int RunStats(const std::string& parallel_dir, const std::string& mono_dir) {
  ordered_json j;
  if (!parallel_dir.empty()) {
    ordered_json pairs = ordered_json::object();
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(parallel_dir)) {
      if (e.path().extension() == ".tsv") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
      const std::string stem = p.stem().string();
      const size_t dash = stem.find('-');
      if (dash == std::string::npos) continue;
      const auto res = mtk::ReadParallel(p.string(), Lang(stem.substr(0, dash)),
                                         Lang(stem.substr(dash + 1)));
      pairs[stem] = {{"pairs", res.records.size()},
                     {"skipped", res.skipped},
                     {"total_lines", res.total_lines}};
    }
    j["parallel"] = pairs;
  }
  if (!mono_dir.empty()) {
    ordered_json mono = ordered_json::object();
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(mono_dir)) {
      if (e.path().extension() == ".txt") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
      const std::string lang = p.stem().string();
      const auto res = mtk::ReadMonolingual(p.string(), Lang(lang));
      mono[lang] = {{"sentences", res.records.size()},
                    {"skipped", res.skipped},
                    {"total_lines", res.total_lines}};
    }
    j["mono"] = mono;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corpus construction and analysis toolkit for multilingual "
               "continual pre-training"};
  app.require_subcommand(1);

  // lexicon
  auto* lexicon = app.add_subcommand("lexicon", "build or inspect a lexicon");
  lexicon->require_subcommand(1);
  LexiconBuildArgs lb;
  auto* lex_build = lexicon->add_subcommand("build", "merge bilingual dictionaries");
  lex_build->add_option("--dict", lb.dicts, "src:tgt:path (repeatable)")
      ->required();
  lex_build->add_flag("--two-hop", lb.two_hop, "apply one extra transitive hop");
  lex_build->add_option("--out", lb.out, "output lexicon path")->required();
  std::string lex_stats_path;
  auto* lex_stats = lexicon->add_subcommand("stats", "per-language entity counts");
  lex_stats->add_option("--lexicon", lex_stats_path)->required();

  // augment
  AugmentArgs aug;
  auto* augment = app.add_subcommand("augment", "code-switch a corpus");
  augment->add_option("--mode", aug.mode, "parallel|mono");
  augment->add_option("--input", aug.input)->required();
  augment->add_option("--src", aug.src);
  augment->add_option("--tgt", aug.tgt);
  augment->add_option("--lang", aug.lang);
  augment->add_option("--lexicon", aug.lexicon)->required();
  augment->add_option("--pool", aug.pool, "replacement languages");
  augment->add_option("--prob", aug.prob, "replacement probability");
  augment->add_option("--seed", aug.seed)->required();
  augment->add_option("--out", aug.out)->required();

  // assemble
  AssembleArgs asm_args;
  auto* assemble = app.add_subcommand("assemble", "build one training epoch");
  assemble->add_option("--config", asm_args.config, "TOML run config")
      ->required();
  uint64_t asm_seed = 0;
  assemble->add_option("--seed", asm_seed)->required();
  assemble->add_option("--out-dir", asm_args.out_dir)->required();
  int asm_workers = 0;
  auto* asm_workers_opt = assemble->add_option("--workers", asm_workers);
  assemble->add_option("--report", asm_args.report, "summary JSON path");

  // vocab
  auto* vocab = app.add_subcommand("vocab", "tokenizer economics");
  vocab->require_subcommand(1);
  std::string vf_tok, vf_input, vf_lang;
  auto* vocab_fert = vocab->add_subcommand("fertility", "tokens per base unit");
  vocab_fert->add_option("--tokenizer", vf_tok)->required();
  vocab_fert->add_option("--input", vf_input)->required();
  vocab_fert->add_option("--lang", vf_lang)->required();
  VocabExtendArgs ve;
  auto* vocab_ext = vocab->add_subcommand("extend", "grow the vocabulary");
  vocab_ext->add_option("--tokenizer", ve.tokenizer)->required();
  vocab_ext->add_option("--embeddings", ve.embeddings)->required();
  vocab_ext->add_option("--input", ve.input)->required();
  vocab_ext->add_option("--lang", ve.lang)->required();
  vocab_ext->add_option("--n", ve.n, "candidate count");
  vocab_ext->add_option("--out-tokenizer", ve.out_tokenizer)->required();
  vocab_ext->add_option("--out-embeddings", ve.out_embeddings)->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "embedding diagnostics");
  analyze->require_subcommand(1);
  std::string ks_before, ks_after;
  double ks_alpha = 0.05;
  auto* an_ks = analyze->add_subcommand("ks", "row-wise distribution shift");
  an_ks->add_option("--before", ks_before)->required();
  an_ks->add_option("--after", ks_after)->required();
  an_ks->add_option("--alpha", ks_alpha);
  std::string q_queries, q_pool;
  auto* an_q = analyze->add_subcommand("quality", "retrieval R@1");
  an_q->add_option("--queries", q_queries)->required();
  an_q->add_option("--pool", q_pool)->required();
  std::string sp_x, sp_y;
  auto* an_sp = analyze->add_subcommand("spearman", "rank correlation");
  an_sp->add_option("--x", sp_x)->required();
  an_sp->add_option("--y", sp_y)->required();

  // score
  auto* score = app.add_subcommand("score", "translation metrics");
  score->require_subcommand(1);
  std::string sb_hyp, sb_ref, sb_sp, sb_smooth;
  auto* sc_bleu = score->add_subcommand("bleu", "corpus BLEU");
  sc_bleu->add_option("--hyp", sb_hyp)->required();
  sc_bleu->add_option("--ref", sb_ref)->required();
  sc_bleu->add_option("--sp", sb_sp, "tokenizer model for subword BLEU");
  sc_bleu->add_option("--smoothing", sb_smooth, "none|add-k:<k>");
  std::string sr_labels, sr_target, sr_contrast;
  auto* sc_ratio = score->add_subcommand("ratio", "language label ratios");
  sc_ratio->add_option("--labels", sr_labels)->required();
  sc_ratio->add_option("--target", sr_target)->required();
  sc_ratio->add_option("--contrast", sr_contrast)->required();

  // prompts
  PromptsArgs pr;
  auto* prompts = app.add_subcommand("prompts", "instruction data");
  prompts->require_subcommand(1);
  auto* pr_emit = prompts->add_subcommand("emit", "render an SFT dataset");
  pr_emit->add_option("--pairs", pr.pairs, "name:src:tgt:path (repeatable)")
      ->required();
  pr_emit->add_option("--bank", pr.bank_path, "template bank file");
  pr_emit->add_option("--names", pr.names_path, "language-name table");
  pr_emit->add_option("--quota", pr.quota, "per-source sample quota");
  pr_emit->add_option("--seed", pr.seed)->required();
  pr_emit->add_option("--out", pr.out)->required();

  // pivot
  PivotArgs pv;
  auto* pivot = app.add_subcommand("pivot", "two-leg pivot translation");
  pivot->add_option("--input", pv.input)->required();
  pivot->add_option("--src", pv.src)->required();
  pivot->add_option("--pivot", pv.pivot);
  pivot->add_option("--tgt", pv.tgt)->required();
  pivot->add_option("--provider", pv.provider);
  pivot->add_option("--lexicon", pv.lexicon);
  pivot->add_option("--cache", pv.cache);
  pivot->add_option("--out", pv.out)->required();

  // stats
  std::string st_parallel, st_mono;
  auto* stats = app.add_subcommand("stats", "corpus line counts");
  stats->add_option("--parallel", st_parallel, "directory of <a>-<b>.tsv");
  stats->add_option("--mono", st_mono, "directory of <lang>.txt");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << app.help() << "\n";
    return 2;
  }

  try {
    if (lex_build->parsed()) return RunLexiconBuild(lb);
    if (lex_stats->parsed()) return RunLexiconStats(lex_stats_path);
    if (augment->parsed()) return RunAugment(aug);
    if (assemble->parsed()) {
      asm_args.seed = asm_seed;
      if (asm_workers_opt->count()) asm_args.workers = asm_workers;
      return RunAssemble(asm_args);
    }
    if (vocab_fert->parsed())
      return RunVocabFertility(vf_tok, vf_input, vf_lang);
    if (vocab_ext->parsed()) return RunVocabExtend(ve);
    if (an_ks->parsed()) return RunAnalyzeKs(ks_before, ks_after, ks_alpha);
    if (an_q->parsed()) return RunAnalyzeQuality(q_queries, q_pool);
    if (an_sp->parsed()) return RunAnalyzeSpearman(sp_x, sp_y);
    if (sc_bleu->parsed())
      return RunScoreBleu(sb_hyp, sb_ref, sb_sp, sb_smooth);
    if (sc_ratio->parsed())
      return RunScoreRatio(sr_labels, sr_target, sr_contrast);
    if (pr_emit->parsed()) return RunPromptsEmit(pr);
    if (pivot->parsed()) return RunPivot(pv);
    if (stats->parsed()) return RunStats(st_parallel, st_mono);
  } catch (const mtk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "no subcommand executed\n";
  return 2;
}

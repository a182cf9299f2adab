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

// End-to-end tests of the command-line binary. MTK_BIN is injected by the
// build as the path to the compiled tool.

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "mtk/digest.hpp"
#include "test_util.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult Run(const std::string& args) {
  TempDir out("cli-capture");
  const std::string out_file = out.Path("stdout.txt");
  const std::string cmd =
      std::string(MTK_BIN) + " " + args + " > " + out_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return {WEXITSTATUS(status), Slurp(out_file)};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("unknown subcommands are usage errors, exit 2") {
  CHECK(Run("frobnicate").exit_code == 2);
  CHECK(Run("").exit_code == 2);
  CHECK(Run("assemble").exit_code == 2);  // missing required flags
}

TEST_CASE("domain failures exit 1") {
  CHECK(Run("lexicon stats --lexicon /no/such/file").exit_code == 1);
  CHECK(Run("score bleu --hyp /no/such/a --ref /no/such/b").exit_code == 1);
}

TEST_CASE("stats reports per-direction pair counts from line counts") {
  TempDir dir("cli-stats");
  dir.File("para/en-fr.tsv", "a\tb\nc\td\ne\tf\n");
  dir.File("para/de-en.tsv", "x\ty\n");
  const auto r = Run("stats --parallel " + dir.Path("para"));
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["parallel"]["en-fr"]["pairs"] == 3);
  CHECK(j["parallel"]["de-en"]["pairs"] == 1);
}

TEST_CASE("score bleu agrees with the hand worksheet") {
  TempDir dir("cli-bleu");
  const auto hyp = dir.File("hyp.txt", "the cat sat\n");
  const auto ref = dir.File("ref.txt", "the cat sat down\n");
  const auto r = Run("score bleu --hyp " + hyp + " --ref " + ref);
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.stdout_text);
  const double expected = 100.0 * std::exp(1.0 - 4.0 / 3.0);
  CHECK(j["score"].get<double>() == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("lexicon build then stats round-trips through disk") {
  TempDir dir("cli-lex");
  const auto d1 = dir.File("en-fr.txt", "hello bonjour\ncat chat\n");
  const auto d2 = dir.File("fr-de.txt", "chat Katze\n");
  const auto lex = dir.Path("lex.txt");
  const auto build = Run("lexicon build --dict en:fr:" + d1 +
                         " --dict fr:de:" + d2 + " --two-hop --out " + lex);
  REQUIRE(build.exit_code == 0);
  const auto stats = Run("lexicon stats --lexicon " + lex);
  REQUIRE(stats.exit_code == 0);
  const auto j = nlohmann::json::parse(stats.stdout_text);
  CHECK(j["hop_depth"] == 2);
  CHECK(j["entities_per_language"]["en"].get<int>() >= 2);
}

TEST_CASE("assemble is deterministic and worker-count independent") {
  TempDir dir("cli-assemble");
  dir.File("mono/en.txt", "one two three four five six seven\n");
  dir.File("mono/fr.txt", "un deux trois quatre\n");
  std::string tsv;
  for (int i = 0; i < 3; ++i) {
    tsv += "sentence " + std::to_string(i) + "\tphrase " + std::to_string(i) +
           "\n";
  }
  dir.File("para/en-fr.tsv", tsv);
  std::string pool;
  for (int i = 0; i < 16; ++i) pool += "pool line " + std::to_string(i) + "\n";
  const auto pool_path = dir.File("pool.txt", pool);
  const auto config = dir.File(
      "run.toml",
      "threshold = 8\n"
      "factor = 3\n"
      "block_size = 16\n"
      "languages = [\"en\", \"fr\"]\n"
      "provider = \"mock-dictionary\"\n"
      "mono_dir = \"" + dir.Path("mono") + "\"\n"
      "para_dir = \"" + dir.Path("para") + "\"\n"
      "en_pool = \"" + pool_path + "\"\n");

  const auto run = [&](const std::string& out, int workers) {
    return Run("assemble --config " + config + " --seed 99 --out-dir " +
               dir.Path(out) + " --workers " + std::to_string(workers));
  };
  REQUIRE(run("out1", 1).exit_code == 0);
  REQUIRE(run("out2", 1).exit_code == 0);
  REQUIRE(run("out8", 8).exit_code == 0);

  const auto shard0 = [&](const std::string& out) {
    return mtk::Sha256File(dir.Path(out + "/shard-00000.jsonl"));
  };
  CHECK(shard0("out1") == shard0("out2"));
  CHECK(shard0("out1") == shard0("out8"));

  const auto manifest = nlohmann::json::parse(
      Slurp(dir.Path("out1/manifest.json")));
  CHECK(manifest["shards"][0]["sha256"] == shard0("out1"));
  CHECK(manifest.contains("config"));
  // Input checksums travel with the outputs.
  bool has_input_sums = false;
  for (const auto& [k, v] : manifest.items()) {
    if (k.rfind("input:", 0) == 0) has_input_sums = true;
  }
  CHECK(has_input_sums);
}

TEST_CASE("prompts emit renders a seeded jsonl dataset") {
  TempDir dir("cli-prompts");
  std::string tsv;
  for (int i = 0; i < 20; ++i) {
    tsv += "src " + std::to_string(i) + "\ttgt " + std::to_string(i) + "\n";
  }
  const auto pairs = dir.File("en-fr.tsv", tsv);
  const auto out1 = dir.Path("sft1.jsonl");
  const auto out2 = dir.Path("sft2.jsonl");
  const std::string base = "prompts emit --pairs flores:en:fr:" + pairs +
                           " --quota 5 --seed 3 --out ";
  REQUIRE(Run(base + out1).exit_code == 0);
  REQUIRE(Run(base + out2).exit_code == 0);
  CHECK(Slurp(out1) == Slurp(out2));
  const auto text = Slurp(out1);
  size_t lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == 10);  // 5 pairs, both directions
}

TEST_CASE("pivot with the mock provider uses the lexicon word by word") {
  TempDir dir("cli-pivot");
  const auto lexfile = dir.File("dict-de-en.txt", "hund dog\n");
  const auto lexfile2 = dir.File("dict-en-fr.txt", "dog chien\n");
  const auto lex = dir.Path("lex.txt");
  REQUIRE(Run("lexicon build --dict de:en:" + lexfile + " --dict en:fr:" +
              lexfile2 + " --out " + lex).exit_code == 0);
  const auto input = dir.File("in.txt", "hund\n");
  const auto out = dir.Path("out.txt");
  REQUIRE(Run("pivot --input " + input +
              " --src de --tgt fr --lexicon " + lex + " --out " + out)
              .exit_code == 0);
  CHECK(Slurp(out) == "chien\n");
}

}  // TEST_SUITE

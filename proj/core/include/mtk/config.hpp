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

// A minimal TOML subset reader (tables, key = string|int|float|bool|array of
// strings, # comments) and the resolved run configuration. Covers the epoch
// config files this toolkit reads; nothing more is needed.

#ifndef MTK_CONFIG_HPP_
#define MTK_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtk/error.hpp"

namespace mtk {

class TomlTable {
 public:
  static TomlTable ParseFile(const std::string& path);
  static TomlTable ParseString(const std::string& text);

  bool Has(const std::string& dotted_key) const;
  std::string GetString(const std::string& key) const;
  std::string GetStringOr(const std::string& key, std::string fallback) const;
  int64_t GetInt(const std::string& key) const;
  int64_t GetIntOr(const std::string& key, int64_t fallback) const;
  double GetDouble(const std::string& key) const;
  double GetDoubleOr(const std::string& key, double fallback) const;
  bool GetBoolOr(const std::string& key, bool fallback) const;
  std::vector<std::string> GetStringArray(const std::string& key) const;
  std::vector<std::string> GetStringArrayOr(const std::string& key) const;

  const std::map<std::string, std::string>& scalars() const {
    return scalars_;
  }

 private:
  // Dotted keys -> raw scalar text (strings already unquoted).
  std::map<std::string, std::string> scalars_;
  std::map<std::string, std::vector<std::string>> arrays_;
};

// The resolved configuration snapshot written next to every run's outputs.
struct RunConfig {
  uint64_t seed = 0;
  size_t threshold = 25000;
  size_t factor = 3;
  size_t block_size = 512;
  double replace_prob = 0.90;
  int workers = 1;
  int epoch_stage = 0;
  std::vector<std::string> languages;
  std::string provider = "mock-dictionary";  // mock-dictionary|cache-only|http:<host>:<port>
  std::string lexicon_path;
  std::string tokenizer_path;
  std::string mono_dir;
  std::string para_dir;
  std::string en_pool_path;
  std::string cache_path;

  static RunConfig FromToml(const TomlTable& t);
  std::string ToJson() const;  // resolved-config snapshot
};

}  // namespace mtk

#endif  // MTK_CONFIG_HPP_

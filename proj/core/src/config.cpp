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

#include "mtk/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mtk/text.hpp"

namespace mtk {
namespace {

std::string StripComment(std::string_view line) {
  bool in_string = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return std::string(line.substr(0, i));
  }
  return std::string(line);
}

std::string Unquote(std::string_view v, const std::string& context) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') {
    std::string out;
    for (size_t i = 1; i + 1 < v.size(); ++i) {
      if (v[i] == '\\' && i + 2 < v.size()) {
        ++i;
        switch (v[i]) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default:
            throw ConfigError(context + ": unsupported escape \\" +
                              std::string(1, v[i]));
        }
      } else {
        out += v[i];
      }
    }
    return out;
  }
  return std::string(v);
}

}  // namespace

TomlTable TomlTable::ParseString(const std::string& text) {
  TomlTable t;
  std::istringstream in(text);
  std::string line;
  std::string section;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string context = "line " + std::to_string(lineno);
    std::string stripped = StripComment(line);
    const auto trimmed = Trim(stripped);
    if (trimmed.empty()) continue;
    if (trimmed.front() == '[') {
      if (trimmed.back() != ']') {
        throw ConfigError(context + ": malformed table header");
      }
      section = std::string(Trim(trimmed.substr(1, trimmed.size() - 2)));
      continue;
    }
    const size_t eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(context + ": expected key = value");
    }
    const std::string key =
        (section.empty() ? "" : section + ".") +
        std::string(Trim(trimmed.substr(0, eq)));
    const auto value = Trim(trimmed.substr(eq + 1));
    if (value.empty()) throw ConfigError(context + ": empty value");
    if (value.front() == '[') {
      if (value.back() != ']') {
        throw ConfigError(context + ": arrays must be single-line");
      }
      std::vector<std::string> items;
      for (const auto& item :
           SplitByte(value.substr(1, value.size() - 2), ',')) {
        const auto it = Trim(item);
        if (!it.empty()) items.push_back(Unquote(it, context));
      }
      t.arrays_[key] = std::move(items);
    } else {
      t.scalars_[key] = Unquote(value, context);
    }
  }
  return t;
}

TomlTable TomlTable::ParseFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return ParseString(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

bool TomlTable::Has(const std::string& key) const {
  return scalars_.count(key) || arrays_.count(key);
}

std::string TomlTable::GetString(const std::string& key) const {
  const auto it = scalars_.find(key);
  if (it == scalars_.end()) throw ConfigError("missing key '" + key + "'");
  return it->second;
}

std::string TomlTable::GetStringOr(const std::string& key,
                                   std::string fallback) const {
  const auto it = scalars_.find(key);
  return it == scalars_.end() ? fallback : it->second;
}

int64_t TomlTable::GetInt(const std::string& key) const {
  try {
    return std::stoll(GetString(key));
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "' is not an integer");
  }
}

int64_t TomlTable::GetIntOr(const std::string& key, int64_t fallback) const {
  return scalars_.count(key) ? GetInt(key) : fallback;
}

double TomlTable::GetDouble(const std::string& key) const {
  try {
    return std::stod(GetString(key));
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "' is not a number");
  }
}

double TomlTable::GetDoubleOr(const std::string& key, double fallback) const {
  return scalars_.count(key) ? GetDouble(key) : fallback;
}

bool TomlTable::GetBoolOr(const std::string& key, bool fallback) const {
  if (!scalars_.count(key)) return fallback;
  const std::string v = GetString(key);
  if (v == "true") return true;
  if (v == "false") return false;
  throw ConfigError("key '" + key + "' is not a boolean");
}

std::vector<std::string> TomlTable::GetStringArray(
    const std::string& key) const {
  const auto it = arrays_.find(key);
  if (it == arrays_.end()) throw ConfigError("missing array '" + key + "'");
  return it->second;
}

std::vector<std::string> TomlTable::GetStringArrayOr(
    const std::string& key) const {
  const auto it = arrays_.find(key);
  return it == arrays_.end() ? std::vector<std::string>{} : it->second;
}

RunConfig RunConfig::FromToml(const TomlTable& t) {
  RunConfig cfg;
  cfg.seed = static_cast<uint64_t>(t.GetIntOr("seed", 0));
  cfg.threshold = static_cast<size_t>(t.GetIntOr("threshold", 25000));
  cfg.factor = static_cast<size_t>(t.GetIntOr("factor", 3));
  cfg.block_size = static_cast<size_t>(t.GetIntOr("block_size", 512));
  cfg.replace_prob = t.GetDoubleOr("replace_prob", 0.90);
  cfg.workers = static_cast<int>(t.GetIntOr("workers", 1));
  cfg.epoch_stage = static_cast<int>(t.GetIntOr("stage", 0));
  cfg.languages = t.GetStringArrayOr("languages");
  cfg.provider = t.GetStringOr("provider", "mock-dictionary");
  cfg.lexicon_path = t.GetStringOr("lexicon", "");
  cfg.tokenizer_path = t.GetStringOr("tokenizer", "");
  cfg.mono_dir = t.GetStringOr("mono_dir", "");
  cfg.para_dir = t.GetStringOr("para_dir", "");
  cfg.en_pool_path = t.GetStringOr("en_pool", "");
  cfg.cache_path = t.GetStringOr("cache", "");
  if (cfg.replace_prob < 0.0 || cfg.replace_prob > 1.0) {
    throw ConfigError("replace_prob must be in [0, 1]");
  }
  if (cfg.factor < 1) throw ConfigError("factor must be >= 1");
  if (cfg.block_size < 1) throw ConfigError("block_size must be >= 1");
  return cfg;
}

std::string RunConfig::ToJson() const {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["threshold"] = threshold;
  j["factor"] = factor;
  j["block_size"] = block_size;
  j["replace_prob"] = replace_prob;
  j["workers"] = workers;
  j["stage"] = epoch_stage;
  j["languages"] = languages;
  j["provider"] = provider;
  j["lexicon"] = lexicon_path;
  j["tokenizer"] = tokenizer_path;
  j["mono_dir"] = mono_dir;
  j["para_dir"] = para_dir;
  j["en_pool"] = en_pool_path;
  j["cache"] = cache_path;
  return j.dump(2);
}

}  // namespace mtk

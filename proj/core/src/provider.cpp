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

#include "mtk/provider.hpp"

#include <filesystem>
#include <fstream>

#include "httplib.h"
#include "json.hpp"
#include "mtk/text.hpp"

namespace mtk {

std::vector<std::string> MockDictionaryProvider::Translate(
    const std::vector<std::string>& sentences, const LanguageCode& src,
    const LanguageCode& tgt) {
  std::vector<std::string> out;
  out.reserve(sentences.size());
  for (const auto& s : sentences) {
    std::vector<std::string> words;
    for (const auto& w : SplitWhitespace(s)) {
      const auto& syns = lexicon_.Lookup(w, src, tgt);
      words.push_back(syns.empty() ? w : syns.front());
    }
    out.push_back(JoinWith(words, " "));
  }
  return out;
}

std::vector<std::string> CacheOnlyProvider::Translate(
    const std::vector<std::string>& sentences, const LanguageCode& src,
    const LanguageCode& tgt) {
  if (sentences.empty()) return {};
  throw ProviderError("cache-only provider has no backend for " + src.str() +
                      "->" + tgt.str() + " (first miss: '" + sentences[0] +
                      "')");
}

HttpProvider::HttpProvider(std::string host, int port,
                           std::string endpoint_path)
    : host_(std::move(host)), port_(port), path_(std::move(endpoint_path)) {}

std::vector<std::string> HttpProvider::Translate(
    const std::vector<std::string>& sentences, const LanguageCode& src,
    const LanguageCode& tgt) {
  if (sentences.empty()) return {};
  nlohmann::json req;
  req["sentences"] = sentences;
  req["src"] = src.str();
  req["tgt"] = tgt.str();

  httplib::Client client(host_, port_);
  const auto res = client.Post(path_, req.dump(), "application/json");
  if (!res || res->status != 200) {
    throw ProviderError("translation endpoint " + host_ + path_ + " failed (" +
                        (res ? std::to_string(res->status) : "no response") +
                        ")");
  }
  nlohmann::json body;
  try {
    body = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::exception& e) {
    throw ProviderError(std::string("bad provider response: ") + e.what());
  }
  if (!body.contains("translations") || !body["translations"].is_array()) {
    throw ProviderError("provider response missing 'translations'");
  }
  std::vector<std::string> out =
      body["translations"].get<std::vector<std::string>>();
  if (out.size() != sentences.size()) {
    throw ProviderError("provider returned " + std::to_string(out.size()) +
                        " translations for " +
                        std::to_string(sentences.size()) + " sentences");
  }
  return out;
}

CachingProvider::CachingProvider(std::shared_ptr<TranslationProvider> backend,
                                 std::string cache_path)
    : backend_(std::move(backend)), cache_path_(std::move(cache_path)) {
  LoadCache();
}

void CachingProvider::LoadCache() {
  std::ifstream in(cache_path_, std::ios::binary);
  if (!in) return;  // cold cache
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      cache_[{j.at("src").get<std::string>(), j.at("tgt").get<std::string>(),
              j.at("text").get<std::string>()}] = j.at("tr").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(cache_path_ + ": bad cache line: " + e.what());
    }
  }
}

void CachingProvider::AppendCacheLine(const std::string& src,
                                      const std::string& tgt,
                                      const std::string& text,
                                      const std::string& tr) {
  std::ofstream out(cache_path_, std::ios::binary | std::ios::app);
  if (!out) throw IoError("cannot append to cache " + cache_path_);
  nlohmann::json j;
  j["src"] = src;
  j["tgt"] = tgt;
  j["text"] = text;
  j["tr"] = tr;
  out << j.dump() << '\n';
}

std::vector<std::string> CachingProvider::Translate(
    const std::vector<std::string>& sentences, const LanguageCode& src,
    const LanguageCode& tgt) {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<std::string> out(sentences.size());
  std::vector<size_t> miss_idx;
  std::vector<std::string> misses;
  for (size_t i = 0; i < sentences.size(); ++i) {
    const auto it = cache_.find({src.str(), tgt.str(), sentences[i]});
    if (it != cache_.end()) {
      out[i] = it->second;
    } else {
      miss_idx.push_back(i);
      misses.push_back(sentences[i]);
    }
  }
  if (!misses.empty()) {
    const auto translated = backend_->Translate(misses, src, tgt);
    for (size_t k = 0; k < miss_idx.size(); ++k) {
      out[miss_idx[k]] = translated[k];
      cache_[{src.str(), tgt.str(), misses[k]}] = translated[k];
      AppendCacheLine(src.str(), tgt.str(), misses[k], translated[k]);
    }
  }
  return out;
}

}  // namespace mtk

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

#include "mtk/tokenizer.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <queue>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "mtk/text.hpp"

namespace mtk {
namespace {

// Byte <-> printable code point mapping (the usual byte-level BPE trick):
// printable Latin-1 bytes map to themselves, everything else to 256+n.
struct ByteCpTables {
  std::array<char32_t, 256> byte_to_cp;
  std::map<char32_t, unsigned char> cp_to_byte;

  ByteCpTables() {
    int n = 0;
    for (int b = 0; b < 256; ++b) {
      const bool printable = (b >= 33 && b <= 126) || (b >= 161 && b <= 172) ||
                             (b >= 174 && b <= 255);
      const char32_t cp = printable ? static_cast<char32_t>(b)
                                    : static_cast<char32_t>(256 + n++);
      byte_to_cp[b] = cp;
      cp_to_byte[cp] = static_cast<unsigned char>(b);
    }
  }
};

const ByteCpTables& Tables() {
  static const ByteCpTables t;
  return t;
}

void AppendUtf8(std::string* out, char32_t cp) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace

std::string RenderTokenBytes(std::string_view bytes) {
  std::string out;
  for (unsigned char b : bytes) AppendUtf8(&out, Tables().byte_to_cp[b]);
  return out;
}

std::string ParseTokenBytes(std::string_view rendered) {
  std::string out;
  size_t i = 0;
  while (i < rendered.size()) {
    const char32_t cp = DecodeUtf8(rendered, &i);
    const auto it = Tables().cp_to_byte.find(cp);
    if (it == Tables().cp_to_byte.end()) {
      throw FormatError("invalid byte-mapped token string");
    }
    out.push_back(static_cast<char>(it->second));
  }
  return out;
}

TokenizerModel TokenizerModel::ByteLevel() {
  TokenizerModel m;
  for (int b = 0; b < 256; ++b) {
    m.IndexToken(std::string(1, static_cast<char>(b)));
  }
  return m;
}

void TokenizerModel::IndexToken(const std::string& token) {
  if (base_vocab_.count(token)) return;
  const int id = static_cast<int>(id_to_token_.size());
  base_vocab_[token] = id;
  id_to_token_.push_back(token);
}

void TokenizerModel::AddMerge(const std::string& left,
                              const std::string& right) {
  const int rank = static_cast<int>(merges_.size());
  merges_.emplace_back(left, right);
  merge_rank_[{left, right}] = rank;
  IndexToken(left + right);
}

void TokenizerModel::AddToken(const std::string& token) {
  if (HasAddedToken(token)) {
    throw DuplicateTokenError("added token already present: " + token);
  }
  added_tokens_.push_back(token);
}

bool TokenizerModel::HasAddedToken(const std::string& token) const {
  return std::find(added_tokens_.begin(), added_tokens_.end(), token) !=
         added_tokens_.end();
}

std::vector<int> TokenizerModel::EncodeSpan(std::string_view bytes) const {
  const size_t n = bytes.size();
  if (n == 0) return {};
  constexpr size_t kNone = static_cast<size_t>(-1);

  // Doubly linked list of symbols plus a min-heap of candidate merges
  // keyed (rank, left position). Popping the heap applies the globally
  // lowest-rank pair, leftmost on ties, exactly like repeated full scans
  // but in O(n log n). Stale heap entries are detected by re-checking the
  // pair's current rank.
  std::vector<std::string> sym(n);
  std::vector<size_t> prev(n), next(n);
  std::vector<bool> alive(n, true);
  for (size_t i = 0; i < n; ++i) {
    sym[i].assign(1, bytes[i]);
    prev[i] = i == 0 ? kNone : i - 1;
    next[i] = i + 1 == n ? kNone : i + 1;
  }

  using Candidate = std::pair<int, size_t>;
  std::priority_queue<Candidate, std::vector<Candidate>,
                      std::greater<Candidate>>
      heap;
  const auto push_pair = [&](size_t i) {
    if (i == kNone || next[i] == kNone) return;
    const auto it = merge_rank_.find({sym[i], sym[next[i]]});
    if (it != merge_rank_.end()) heap.emplace(it->second, i);
  };
  for (size_t i = 0; i + 1 < n; ++i) push_pair(i);

  while (!heap.empty()) {
    const auto [rank, i] = heap.top();
    heap.pop();
    if (!alive[i] || next[i] == kNone) continue;
    const size_t j = next[i];
    const auto it = merge_rank_.find({sym[i], sym[j]});
    if (it == merge_rank_.end() || it->second != rank) continue;
    sym[i] += sym[j];
    alive[j] = false;
    next[i] = next[j];
    if (next[i] != kNone) prev[next[i]] = i;
    push_pair(prev[i]);
    push_pair(i);
  }

  std::vector<int> ids;
  for (size_t i = 0; i != kNone; i = next[i]) ids.push_back(base_vocab_.at(sym[i]));
  return ids;
}

std::vector<int> TokenizerModel::Encode(std::string_view text) const {
  std::vector<int> ids;
  size_t span_start = 0;
  size_t i = 0;
  const auto flush_span = [&](size_t end) {
    if (end > span_start) {
      const auto span_ids = EncodeSpan(text.substr(span_start, end - span_start));
      ids.insert(ids.end(), span_ids.begin(), span_ids.end());
    }
  };
  while (i < text.size()) {
    // Leftmost-longest added-token match at position i.
    int matched = -1;
    size_t matched_len = 0;
    for (size_t a = 0; a < added_tokens_.size(); ++a) {
      const auto& tok = added_tokens_[a];
      if (tok.size() > matched_len && text.size() - i >= tok.size() &&
          text.compare(i, tok.size(), tok) == 0) {
        matched = static_cast<int>(a);
        matched_len = tok.size();
      }
    }
    if (matched >= 0) {
      flush_span(i);
      ids.push_back(AddedTokenId(static_cast<size_t>(matched)));
      i += matched_len;
      span_start = i;
    } else {
      ++i;
    }
  }
  flush_span(text.size());
  return ids;
}

std::string TokenizerModel::Decode(const std::vector<int>& ids) const {
  std::string out;
  const int base = static_cast<int>(id_to_token_.size());
  for (int id : ids) {
    if (id < 0 || id >= base + static_cast<int>(added_tokens_.size())) {
      throw FormatError("token id out of range: " + std::to_string(id));
    }
    out += id < base ? id_to_token_[id]
                     : added_tokens_[static_cast<size_t>(id - base)];
  }
  return out;
}

std::string TokenizerModel::ToJson() const {
  nlohmann::ordered_json j;
  j["vocab"] = nlohmann::ordered_json::object();
  for (size_t id = 0; id < id_to_token_.size(); ++id) {
    j["vocab"][RenderTokenBytes(id_to_token_[id])] = id;
  }
  j["merges"] = nlohmann::ordered_json::array();
  for (const auto& [l, r] : merges_) {
    j["merges"].push_back(RenderTokenBytes(l) + " " + RenderTokenBytes(r));
  }
  j["added"] = added_tokens_;
  return j.dump(2);
}

TokenizerModel TokenizerModel::FromJson(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("tokenizer model: ") + e.what());
  }
  if (!j.contains("vocab") || !j.contains("merges")) {
    throw FormatError("tokenizer model: missing vocab or merges");
  }
  TokenizerModel m;
  std::vector<std::pair<int, std::string>> by_id;
  for (const auto& [tok, id] : j["vocab"].items()) {
    by_id.emplace_back(id.get<int>(), ParseTokenBytes(tok));
  }
  std::sort(by_id.begin(), by_id.end());
  for (size_t i = 0; i < by_id.size(); ++i) {
    if (by_id[i].first != static_cast<int>(i)) {
      throw FormatError("tokenizer model: vocab ids not dense from 0");
    }
    m.IndexToken(by_id[i].second);
  }
  for (const auto& entry : j["merges"]) {
    const std::string s = entry.get<std::string>();
    const size_t sp = s.find(' ');
    if (sp == std::string::npos) {
      throw FormatError("tokenizer model: malformed merge '" + s + "'");
    }
    const std::string left = ParseTokenBytes(s.substr(0, sp));
    const std::string right = ParseTokenBytes(s.substr(sp + 1));
    if (!m.base_vocab_.count(left + right)) {
      throw FormatError("tokenizer model: merge result not in vocab: '" + s +
                        "'");
    }
    const int rank = static_cast<int>(m.merges_.size());
    m.merges_.emplace_back(left, right);
    m.merge_rank_[{left, right}] = rank;
  }
  if (j.contains("added")) {
    for (const auto& t : j["added"]) m.AddToken(t.get<std::string>());
  }
  // Byte-level closure: every byte must be representable.
  for (int b = 0; b < 256; ++b) {
    if (!m.base_vocab_.count(std::string(1, static_cast<char>(b)))) {
      throw FormatError("tokenizer model: byte " + std::to_string(b) +
                        " missing from vocab");
    }
  }
  return m;
}

void TokenizerModel::Save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << ToJson();
}

TokenizerModel TokenizerModel::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return FromJson(ss.str());
}

}  // namespace mtk

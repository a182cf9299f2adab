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

// Byte-level BPE tokenizer. The base vocabulary covers every byte value, so
// any input tokenizes without an unknown token. Added tokens form an overlay
// matched leftmost-longest before byte-level encoding; their ids follow the
// base vocabulary.

#ifndef MTK_TOKENIZER_HPP_
#define MTK_TOKENIZER_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mtk/types.hpp"

namespace mtk {

class TokenizerModel {
 public:
  // Base vocabulary of the 256 single bytes (ids 0..255) and no merges.
  static TokenizerModel ByteLevel();

  // token bytes -> id; ids dense from 0.
  const std::map<std::string, int>& base_vocab() const { return base_vocab_; }
  // merge rank r joins merges()[r].first + merges()[r].second.
  const std::vector<std::pair<std::string, std::string>>& merges() const {
    return merges_;
  }
  const std::vector<std::string>& added_tokens() const {
    return added_tokens_;
  }

  size_t vocab_size() const {
    return base_vocab_.size() + added_tokens_.size();
  }
  int AddedTokenId(size_t index) const {
    return static_cast<int>(base_vocab_.size() + index);
  }

  // Appends a merge rule; the merged token gets the next free base id if it
  // is not already in the vocabulary.
  void AddMerge(const std::string& left, const std::string& right);

  // Appends an added token; throws DuplicateTokenError on repeats.
  void AddToken(const std::string& token);
  bool HasAddedToken(const std::string& token) const;

  // Added tokens leftmost-longest first, then greedy BPE by merge rank.
  std::vector<int> Encode(std::string_view text) const;

  // Inverse of Encode: concatenated token bytes.
  std::string Decode(const std::vector<int>& ids) const;

  // JSON model format: {"vocab":{token:id}, "merges":["a b",...],
  // "added":[...]}. Token bytes are rendered with the standard byte-level
  // printable-unicode mapping.
  std::string ToJson() const;
  static TokenizerModel FromJson(const std::string& json_text);
  void Save(const std::string& path) const;
  static TokenizerModel Load(const std::string& path);

 private:
  std::map<std::string, int> base_vocab_;
  std::vector<std::string> id_to_token_;  // base ids only
  std::vector<std::pair<std::string, std::string>> merges_;
  std::map<std::pair<std::string, std::string>, int> merge_rank_;
  std::vector<std::string> added_tokens_;

  void IndexToken(const std::string& token);
  std::vector<int> EncodeSpan(std::string_view bytes) const;
};

// Byte-level printable mapping used by the JSON model format.
std::string RenderTokenBytes(std::string_view bytes);
std::string ParseTokenBytes(std::string_view rendered);

}  // namespace mtk

#endif  // MTK_TOKENIZER_HPP_

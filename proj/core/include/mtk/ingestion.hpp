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

// Readers and writers for the toolkit's on-disk formats:
//   monolingual : one UTF-8 sentence per line
//   parallel    : 2-column TSV, src<TAB>tgt
//   dictionary  : whitespace-separated word pairs
//   embeddings  : "V D" header, then V lines "label v1 ... vD"
//   labels      : one ISO code per line, aligned to sentence index
//
// Lenient mode (the default) skips malformed lines and counts them; strict
// mode aborts on the first bad line.

#ifndef MTK_INGESTION_HPP_
#define MTK_INGESTION_HPP_

#include <string>
#include <vector>

#include "mtk/types.hpp"

namespace mtk {

template <typename T>
struct ReadResult {
  std::vector<T> records;
  size_t skipped = 0;  // malformed/empty lines dropped in lenient mode
  size_t total_lines = 0;
};

ReadResult<MonolingualRecord> ReadMonolingual(const std::string& path,
                                              const LanguageCode& lang,
                                              bool strict = false);

ReadResult<SentencePair> ReadParallel(const std::string& path,
                                      const LanguageCode& src,
                                      const LanguageCode& tgt,
                                      bool strict = false);

struct DictReadResult {
  std::vector<DictEntryPair> entries;
  size_t punct_dropped = 0;
  size_t duplicates_dropped = 0;
  size_t skipped = 0;
  size_t total_lines = 0;
};

DictReadResult ReadBilingualDictionary(const std::string& path,
                                       const LanguageCode& src,
                                       const LanguageCode& tgt,
                                       bool strict = false);

EmbeddingMatrix ReadEmbeddings(const std::string& path);

LabelFile ReadLabels(const std::string& path, bool strict = false);

void WriteMonolingual(const std::string& path,
                      const std::vector<MonolingualRecord>& records);
void WriteParallel(const std::string& path,
                   const std::vector<SentencePair>& pairs);
void WriteEmbeddings(const std::string& path, const EmbeddingMatrix& m);

}  // namespace mtk

#endif  // MTK_INGESTION_HPP_

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

#include "mtk/ingestion.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "mtk/text.hpp"

namespace mtk {
namespace {

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

std::ofstream OpenOutOrThrow(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  return out;
}

// Reads lines without the trailing '\n'; strips a trailing '\r' as well.
bool GetLine(std::istream& in, std::string* line) {
  if (!std::getline(in, *line)) return false;
  if (!line->empty() && line->back() == '\r') line->pop_back();
  return true;
}

}  // namespace

ReadResult<MonolingualRecord> ReadMonolingual(const std::string& path,
                                              const LanguageCode& lang,
                                              bool strict) {
  auto in = OpenOrThrow(path);
  ReadResult<MonolingualRecord> result;
  std::string line;
  size_t lineno = 0;
  while (GetLine(in, &line)) {
    ++lineno;
    ++result.total_lines;
    if (!IsValidUtf8(line)) {
      if (strict) {
        throw EncodingError(path + ":" + std::to_string(lineno) +
                            ": invalid UTF-8");
      }
      ++result.skipped;
      continue;
    }
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty()) {
      if (strict) {
        throw FormatError(path + ":" + std::to_string(lineno) + ": empty line");
      }
      ++result.skipped;
      continue;
    }
    result.records.push_back(
        {lang, std::string(trimmed), path + ":" + std::to_string(lineno)});
  }
  return result;
}

ReadResult<SentencePair> ReadParallel(const std::string& path,
                                      const LanguageCode& src,
                                      const LanguageCode& tgt, bool strict) {
  auto in = OpenOrThrow(path);
  ReadResult<SentencePair> result;
  std::string line;
  size_t lineno = 0;
  while (GetLine(in, &line)) {
    ++lineno;
    ++result.total_lines;
    const auto fail = [&](const char* what) {
      if (strict) {
        throw FormatError(path + ":" + std::to_string(lineno) + ": " + what);
      }
      ++result.skipped;
    };
    if (!IsValidUtf8(line)) {
      if (strict) {
        throw EncodingError(path + ":" + std::to_string(lineno) +
                            ": invalid UTF-8");
      }
      ++result.skipped;
      continue;
    }
    const auto cols = SplitByte(line, '\t');
    if (cols.size() != 2) {
      fail("expected 2 tab-separated columns");
      continue;
    }
    const auto s = Trim(cols[0]);
    const auto t = Trim(cols[1]);
    if (s.empty() || t.empty()) {
      fail("empty column");
      continue;
    }
    result.records.push_back(
        {src, tgt, std::string(s), std::string(t), Origin::kNatural});
  }
  return result;
}

DictReadResult ReadBilingualDictionary(const std::string& path,
                                       const LanguageCode& src,
                                       const LanguageCode& tgt, bool strict) {
  auto in = OpenOrThrow(path);
  DictReadResult result;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  size_t lineno = 0;
  while (GetLine(in, &line)) {
    ++lineno;
    ++result.total_lines;
    if (!IsValidUtf8(line)) {
      if (strict) {
        throw EncodingError(path + ":" + std::to_string(lineno) +
                            ": invalid UTF-8");
      }
      ++result.skipped;
      continue;
    }
    if (Trim(line).empty()) {
      ++result.skipped;
      continue;
    }
    // MUSE files mix tabs and spaces; split on any run of whitespace.
    const auto fields = SplitWhitespace(line);
    if (fields.size() != 2) {
      if (strict) {
        throw FormatError(path + ":" + std::to_string(lineno) +
                          ": expected 2 whitespace-separated fields");
      }
      ++result.skipped;
      continue;
    }
    if (IsAllPunct(fields[0]) || IsAllPunct(fields[1])) {
      ++result.punct_dropped;
      continue;
    }
    if (!seen.emplace(fields[0], fields[1]).second) {
      ++result.duplicates_dropped;
      continue;
    }
    result.entries.push_back({src, tgt, fields[0], fields[1]});
  }
  return result;
}

EmbeddingMatrix ReadEmbeddings(const std::string& path) {
  auto in = OpenOrThrow(path);
  std::string line;
  if (!GetLine(in, &line)) throw FormatError(path + ": missing header");
  const auto header = SplitWhitespace(line);
  if (header.size() != 2) {
    throw FormatError(path + ": header must be 'V D'");
  }
  EmbeddingMatrix m;
  try {
    m.vocab_size = std::stoull(header[0]);
    m.dim = std::stoull(header[1]);
  } catch (const std::exception&) {
    throw FormatError(path + ": non-numeric header");
  }
  m.rows.reserve(m.vocab_size);
  size_t lineno = 1;
  while (GetLine(in, &line)) {
    ++lineno;
    if (Trim(line).empty()) continue;
    const auto fields = SplitWhitespace(line);
    if (fields.size() != m.dim + 1) {
      throw FormatError(path + ":" + std::to_string(lineno) + ": expected " +
                        std::to_string(m.dim + 1) + " fields, got " +
                        std::to_string(fields.size()));
    }
    std::vector<double> row(m.dim);
    for (size_t d = 0; d < m.dim; ++d) {
      try {
        size_t used = 0;
        row[d] = std::stod(fields[d + 1], &used);
        if (used != fields[d + 1].size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw FormatError(path + ":" + std::to_string(lineno) +
                          ": non-numeric value '" + fields[d + 1] + "'");
      }
      if (!std::isfinite(row[d])) {
        throw FormatError(path + ":" + std::to_string(lineno) +
                          ": non-finite value '" + fields[d + 1] + "'");
      }
    }
    m.token_labels.push_back(fields[0]);
    m.rows.push_back(std::move(row));
  }
  if (m.rows.size() != m.vocab_size) {
    throw FormatError(path + ": header promises " +
                      std::to_string(m.vocab_size) + " rows, found " +
                      std::to_string(m.rows.size()));
  }
  return m;
}

LabelFile ReadLabels(const std::string& path, bool strict) {
  auto in = OpenOrThrow(path);
  LabelFile lf;
  std::string line;
  size_t lineno = 0;
  while (GetLine(in, &line)) {
    ++lineno;
    const auto trimmed = Trim(line);
    if (trimmed.empty()) {
      if (strict) {
        throw FormatError(path + ":" + std::to_string(lineno) + ": empty line");
      }
      continue;
    }
    lf.labels.emplace_back(std::string(trimmed));
  }
  return lf;
}

void WriteMonolingual(const std::string& path,
                      const std::vector<MonolingualRecord>& records) {
  auto out = OpenOutOrThrow(path);
  for (const auto& r : records) out << r.text << '\n';
}

void WriteParallel(const std::string& path,
                   const std::vector<SentencePair>& pairs) {
  auto out = OpenOutOrThrow(path);
  for (const auto& p : pairs) out << p.src_text << '\t' << p.tgt_text << '\n';
}

void WriteEmbeddings(const std::string& path, const EmbeddingMatrix& m) {
  auto out = OpenOutOrThrow(path);
  out << m.vocab_size << ' ' << m.dim << '\n';
  out.precision(17);
  for (size_t i = 0; i < m.rows.size(); ++i) {
    out << (i < m.token_labels.size() ? m.token_labels[i]
                                      : "t" + std::to_string(i));
    for (double v : m.rows[i]) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace mtk

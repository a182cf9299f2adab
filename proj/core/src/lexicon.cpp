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

#include "mtk/lexicon.hpp"

#include <algorithm>
#include <fstream>

#include "mtk/text.hpp"

namespace mtk {
namespace {
const Lexicon::SynonymSet kEmptySet;
}

void Lexicon::AddSynonym(const std::string& key_word,
                         const LanguageCode& key_lang, const LanguageCode& tgt,
                         const std::string& w) {
  auto& set = entries_[{ToLowerAscii(key_word), key_lang}][tgt];
  if (std::find(set.begin(), set.end(), w) == set.end()) set.push_back(w);
  supported_langs_.insert(key_lang);
  supported_langs_.insert(tgt);
}

const Lexicon::SynonymSet& Lexicon::Lookup(const std::string& word,
                                           const LanguageCode& src,
                                           const LanguageCode& tgt) const {
  const auto it = entries_.find({ToLowerAscii(word), src});
  if (it == entries_.end()) return kEmptySet;
  const auto jt = it->second.find(tgt);
  if (jt == it->second.end()) return kEmptySet;
  return jt->second;
}

bool Lexicon::HasKey(const std::string& word, const LanguageCode& lang) const {
  return entries_.count({ToLowerAscii(word), lang}) > 0;
}

size_t Lexicon::EntityCount(const LanguageCode& lang) const {
  std::set<std::string> words;
  for (const auto& [key, langs] : entries_) {
    if (key.lang == lang) words.insert(key.word);
    for (const auto& [l, syns] : langs) {
      if (l == lang) words.insert(syns.begin(), syns.end());
    }
  }
  return words.size();
}

std::string Lexicon::Serialize() const {
  std::string out;
  out += "#hop_depth\t" + std::to_string(hop_depth_) + "\n";
  for (const auto& [key, langs] : entries_) {
    out += key.Render();
    out += '\t';
    bool first_lang = true;
    for (const auto& [lang, syns] : langs) {
      if (!first_lang) out += '|';
      first_lang = false;
      out += lang.str();
      out += ':';
      for (size_t i = 0; i < syns.size(); ++i) {
        if (i) out += ',';
        out += syns[i];
      }
    }
    out += '\n';
  }
  return out;
}

void Lexicon::Save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << Serialize();
}

Lexicon Lexicon::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  Lexicon lex;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto err = [&](const char* what) {
      throw FormatError(path + ":" + std::to_string(lineno) + ": " + what);
    };
    const auto cols = SplitByte(line, '\t');
    if (cols.size() != 2) err("expected key<TAB>synonyms");
    if (cols[0] == "#hop_depth") {
      lex.hop_depth_ = std::stoi(cols[1]);
      continue;
    }
    const size_t us = cols[0].rfind('_');
    if (us == std::string::npos || us == 0) err("malformed key");
    const std::string key_word = cols[0].substr(0, us);
    const LanguageCode key_lang(cols[0].substr(us + 1));
    for (const auto& group : SplitByte(cols[1], '|')) {
      const size_t colon = group.find(':');
      if (colon == std::string::npos) err("malformed synonym group");
      const LanguageCode lang(group.substr(0, colon));
      for (const auto& w : SplitByte(group.substr(colon + 1), ',')) {
        if (!w.empty()) lex.AddSynonym(key_word, key_lang, lang, w);
      }
    }
  }
  return lex;
}

Lexicon BuildMultilingualLexicon(
    const std::vector<std::vector<DictEntryPair>>& dicts) {
  Lexicon lex;
  for (const auto& dict : dicts) {
    for (const auto& e : dict) {
      // Symmetrize: each entry lands under both of its words.
      lex.AddSynonym(e.src_word, e.src_lang, e.tgt_lang, e.tgt_word);
      lex.AddSynonym(e.tgt_word, e.tgt_lang, e.src_lang, e.src_word);
    }
  }
  lex.set_hop_depth(1);
  return lex;
}

Lexicon ExpandTwoHop(const Lexicon& lex) {
  if (lex.hop_depth() != 1) {
    throw Error("expand_two_hop requires a 1-hop lexicon");
  }
  Lexicon out = lex;
  // Read hops from the original lexicon only, so the expansion adds exactly
  // one level and never closes transitively.
  for (const auto& [key, langs] : lex.entries()) {
    for (const auto& [mid_lang, syns] : langs) {
      for (const auto& w : syns) {
        const auto it = lex.entries().find({ToLowerAscii(w), mid_lang});
        if (it == lex.entries().end()) continue;
        for (const auto& [far_lang, far_syns] : it->second) {
          if (far_lang == key.lang) continue;
          for (const auto& fw : far_syns) {
            out.AddSynonym(key.word, key.lang, far_lang, fw);
          }
        }
      }
    }
  }
  out.set_hop_depth(2);
  return out;
}

}  // namespace mtk

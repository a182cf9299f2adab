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

// Multilingual lexicon built by merging bilingual dictionaries. Keys are
// {word}_{lang} with the word case-folded to lowercase; synonym words keep
// their original case. Dictionaries are symmetrized on insertion, so each
// bilingual entry lands under both of its words. Optional one extra
// transitive hop (2-hop) can be applied once.

#ifndef MTK_LEXICON_HPP_
#define MTK_LEXICON_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mtk/types.hpp"

namespace mtk {

struct LexiconKey {
  std::string word;  // lowercase, whitespace-free
  LanguageCode lang;

  std::string Render() const { return word + "_" + lang.str(); }

  friend bool operator<(const LexiconKey& a, const LexiconKey& b) {
    if (a.word != b.word) return a.word < b.word;
    return a.lang < b.lang;
  }
  friend bool operator==(const LexiconKey& a, const LexiconKey& b) {
    return a.word == b.word && a.lang == b.lang;
  }
};

class Lexicon {
 public:
  // Ordered synonym set: first-seen insertion order, no duplicates.
  using SynonymSet = std::vector<std::string>;
  using LangSynonyms = std::map<LanguageCode, SynonymSet>;

  // Adds w under key (word,lang) for language tgt; no-op on duplicates.
  void AddSynonym(const std::string& key_word, const LanguageCode& key_lang,
                  const LanguageCode& tgt, const std::string& w);

  // Synonyms of lower(word)_src_lang in tgt_lang; empty when absent.
  const SynonymSet& Lookup(const std::string& word, const LanguageCode& src,
                           const LanguageCode& tgt) const;

  bool HasKey(const std::string& word, const LanguageCode& lang) const;

  // Distinct words of language `lang` appearing anywhere (key or synonym).
  size_t EntityCount(const LanguageCode& lang) const;

  const std::map<LexiconKey, LangSynonyms>& entries() const {
    return entries_;
  }
  const std::set<LanguageCode>& supported_langs() const {
    return supported_langs_;
  }
  int hop_depth() const { return hop_depth_; }
  void set_hop_depth(int d) { hop_depth_ = d; }

  // Sorted-key line format: "word_lang<TAB>lang2:w,w|lang3:w". Stable
  // bytes for identical lexicons.
  std::string Serialize() const;
  void Save(const std::string& path) const;
  static Lexicon Load(const std::string& path);

 private:
  std::map<LexiconKey, LangSynonyms> entries_;
  std::set<LanguageCode> supported_langs_;
  int hop_depth_ = 1;
};

// Merges dictionary entry streams into one symmetric lexicon (hop_depth 1).
Lexicon BuildMultilingualLexicon(
    const std::vector<std::vector<DictEntryPair>>& dicts);

// One extra transitive hop: for each key k and synonym w in language L, the
// synonyms of (lower(w), L) in languages != k.lang are appended. Original
// entries are preserved; no closure beyond the single extra hop.
Lexicon ExpandTwoHop(const Lexicon& lex);

}  // namespace mtk

#endif  // MTK_LEXICON_HPP_

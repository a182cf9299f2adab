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

#include "mtk/prompts.hpp"

#include <algorithm>
#include <fstream>

#include "json.hpp"
#include "mtk/text.hpp"

namespace mtk {
namespace {

constexpr const char* kTranslationTemplates[] = {
    "Translate the following sentences from [SRC] to [TGT].",
    "What do the following sentences mean in [TGT]?",
    "Please provide the [TGT] translation for the following sentences.",
    "Convert the subsequent sentences from [SRC] into [TGT].",
    "Render the listed sentences in [TGT] from their original [SRC] form.",
    "Transform the upcoming sentences from [SRC] language to [TGT] language.",
    "Change the given sentences from [SRC] to [TGT] format.",
    "Turn the following sentences from their [SRC] version to the [TGT] "
    "version.",
    "Adapt the mentioned sentences from [SRC] to the [TGT] language.",
    "Transpose the next sentences from the [SRC] format to the [TGT] format.",
    "Switch the specified sentences from their [SRC] form to [TGT] form.",
    "Reinterpret the ensuing sentences from [SRC] to [TGT] language.",
    "Modify the forthcoming sentences, converting them from [SRC] to [TGT].",
    "How can the subsequent sentences be interpreted in [TGT]?",
    "What is the meaning of these sentences when translated to [TGT]?",
    "In the context of [TGT], what do the upcoming sentences signify?",
    "How would you express the meaning of the following sentences in [TGT]?",
    "What is the significance of the mentioned sentences in [TGT]?",
    "In [TGT], what do the given sentences convey?",
    "When translated to [TGT], what message do these sentences carry?",
    "What is the intended meaning of the ensuing sentences in [TGT]?",
    "How should the following sentences be comprehended in [TGT]?",
    "In terms of [TGT], what do the next sentences imply?",
    "Kindly furnish the [TGT] translation of the subsequent sentences.",
    "Could you supply the [TGT] translation for the upcoming sentences?",
    "Please offer the [TGT] rendition for the following statements.",
    "I'd appreciate it if you could present the [TGT] translation for these "
    "sentences.",
    "Can you deliver the [TGT] translation for the mentioned sentences?",
    "Please share the [TGT] version of the given sentences.",
    "It would be helpful if you could provide the [TGT] translation of the "
    "ensuing sentences.",
    "Kindly submit the [TGT] interpretation for the next sentences.",
    "Please make available the [TGT] translation for the listed sentences.",
    "Can you reveal the [TGT] translation of the forthcoming sentences?",
};

constexpr const char* kPreamble =
    "Below is an instruction that describes a task, paired with an input "
    "that provides further context. Write a response that appropriately "
    "completes the request.";

std::string ReplaceAll(std::string s, std::string_view from,
                       std::string_view to) {
  size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

const std::string& NameFor(const LanguageNames& names,
                           const LanguageCode& code) {
  const auto it = names.find(code);
  if (it == names.end()) {
    throw UnknownLanguageNameError("no display name for language '" +
                                   code.str() + "'");
  }
  return it->second;
}

}  // namespace

PromptBank PromptBank::BuiltIn() {
  PromptBank bank;
  for (const char* t : kTranslationTemplates) bank.templates_.emplace_back(t);
  return bank;
}

PromptBank PromptBank::LoadFromFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  PromptBank bank;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!Trim(line).empty()) bank.templates_.push_back(line);
  }
  return bank;
}

const std::string& PromptBank::at(size_t index) const {
  if (index >= templates_.size()) {
    throw TemplateIndexError("template index " + std::to_string(index) +
                             " out of range (" +
                             std::to_string(templates_.size()) + ")");
  }
  return templates_[index];
}

LanguageNames DefaultLanguageNames() {
  LanguageNames names;
  const std::pair<const char*, const char*> table[] = {
      {"en", "English"},     {"fr", "French"},     {"de", "German"},
      {"es", "Spanish"},     {"it", "Italian"},    {"pt", "Portuguese"},
      {"ro", "Romanian"},    {"ru", "Russian"},    {"uk", "Ukrainian"},
      {"cs", "Czech"},       {"pl", "Polish"},     {"nl", "Dutch"},
      {"sv", "Swedish"},     {"da", "Danish"},     {"fi", "Finnish"},
      {"no", "Norwegian"},   {"el", "Greek"},      {"tr", "Turkish"},
      {"ar", "Arabic"},      {"he", "Hebrew"},     {"fa", "Persian"},
      {"hi", "Hindi"},       {"bn", "Bengali"},    {"ta", "Tamil"},
      {"te", "Telugu"},      {"ur", "Urdu"},       {"th", "Thai"},
      {"vi", "Vietnamese"},  {"id", "Indonesian"}, {"ms", "Malay"},
      {"ja", "Japanese"},    {"ko", "Korean"},     {"zh", "Chinese Simpl"},
      {"zhtrad", "Chinese Trad"},                  {"ceb", "Cebuano"},
      {"sw", "Swahili"},     {"am", "Amharic"},    {"yo", "Yoruba"},
      {"ha", "Hausa"},       {"kea", "Kabuverdianu"},
  };
  for (const auto& [code, name] : table) {
    names[LanguageCode(code)] = name;
  }
  return names;
}

LanguageNames LoadLanguageNames(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  LanguageNames names;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    const auto cols = SplitByte(line, '\t');
    if (cols.size() != 2) {
      throw FormatError(path + ":" + std::to_string(lineno) +
                        ": expected code<TAB>Name");
    }
    names[LanguageCode(std::string(Trim(cols[0])))] = std::string(Trim(cols[1]));
  }
  return names;
}

SftRecord RenderAlpaca(const std::string& instruction, const std::string& input,
                       const std::string& response) {
  if (instruction.empty()) {
    throw EmptyInstructionError("instruction must be non-empty");
  }
  SftRecord rec;
  rec.instruction = instruction;
  rec.input = input;
  rec.response = response;
  rec.rendered = std::string(kPreamble) + "\n\n### Instruction:\n" +
                 instruction + "\n\n";
  if (!input.empty()) {
    rec.rendered += "### Input:\n" + input + "\n\n";
  }
  rec.rendered += "### Response:\n" + response;
  return rec;
}

AlpacaFields ParseAlpaca(const std::string& rendered) {
  const std::string instr_marker = "\n\n### Instruction:\n";
  const std::string input_marker = "\n\n### Input:\n";
  const std::string resp_marker = "\n\n### Response:\n";

  const std::string preamble(kPreamble);
  if (rendered.compare(0, preamble.size(), preamble) != 0) {
    throw FormatError("missing Alpaca preamble");
  }
  const size_t instr_pos = rendered.find(instr_marker, preamble.size() - 1);
  const size_t resp_pos = rendered.find(resp_marker);
  if (instr_pos == std::string::npos || resp_pos == std::string::npos) {
    throw FormatError("missing Instruction or Response section");
  }
  const size_t instr_begin = instr_pos + instr_marker.size();
  const size_t input_pos = rendered.find(input_marker, instr_begin);

  AlpacaFields f;
  if (input_pos != std::string::npos && input_pos < resp_pos) {
    f.instruction = rendered.substr(instr_begin, input_pos - instr_begin);
    const size_t input_begin = input_pos + input_marker.size();
    f.input = rendered.substr(input_begin, resp_pos - input_begin);
  } else {
    f.instruction = rendered.substr(instr_begin, resp_pos - instr_begin);
  }
  f.response = rendered.substr(resp_pos + resp_marker.size());
  return f;
}

SftRecord RenderTranslationInstruction(const SentencePair& pair,
                                       SftDirection direction,
                                       std::optional<size_t> template_index,
                                       const PromptBank& bank,
                                       const LanguageNames& names, Rng& rng) {
  const bool forward = direction == SftDirection::kForward;
  const LanguageCode& src = forward ? pair.src_lang : pair.tgt_lang;
  const LanguageCode& tgt = forward ? pair.tgt_lang : pair.src_lang;
  const std::string& src_text = forward ? pair.src_text : pair.tgt_text;
  const std::string& tgt_text = forward ? pair.tgt_text : pair.src_text;

  const size_t index =
      template_index ? *template_index : rng.UniformIndex(bank.size());
  std::string instruction = ReplaceAll(bank.at(index), "[SRC]",
                                       NameFor(names, src));
  instruction = ReplaceAll(instruction, "[TGT]", NameFor(names, tgt));

  SftRecord rec = RenderAlpaca(instruction, src_text, tgt_text);
  rec.meta.template_id = static_cast<int>(index);
  rec.meta.src_lang = src;
  rec.meta.tgt_lang = tgt;
  return rec;
}

std::vector<std::string> EmitSftDataset(
    const std::map<std::string, std::vector<SentencePair>>& sources,
    const PromptBank& bank, const LanguageNames& names,
    const SftEmitOptions& options) {
  std::vector<std::string> lines;
  for (const auto& [source_name, pairs] : sources) {
    Rng rng(SubstreamKey(options.seed, "sft:" + source_name));
    // Seeded partial Fisher-Yates: sample without replacement.
    std::vector<size_t> idx(pairs.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    const size_t take = std::min(options.per_language_quota, pairs.size());
    for (size_t i = 0; i < take; ++i) {
      std::swap(idx[i], idx[i + rng.UniformIndex(idx.size() - i)]);
    }
    for (size_t i = 0; i < take; ++i) {
      const auto& pair = pairs[idx[i]];
      const auto emit = [&](SftDirection dir) {
        const SftRecord rec = RenderTranslationInstruction(
            pair, dir, std::nullopt, bank, names, rng);
        nlohmann::ordered_json j;
        j["instruction"] = rec.instruction;
        j["input"] = rec.input;
        j["output"] = rec.response;
        j["meta"] = {{"template_id", rec.meta.template_id},
                     {"src_lang", rec.meta.src_lang->str()},
                     {"tgt_lang", rec.meta.tgt_lang->str()},
                     {"source", source_name}};
        lines.push_back(j.dump());
      };
      if (options.emit_forward) emit(SftDirection::kForward);
      if (options.emit_backward) emit(SftDirection::kBackward);
    }
  }
  return lines;
}

}  // namespace mtk

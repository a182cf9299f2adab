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

// Small UTF-8 / text helpers shared across the library.

#ifndef MTK_TEXT_HPP_
#define MTK_TEXT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mtk {

// Returns true iff s is a well-formed UTF-8 byte sequence.
bool IsValidUtf8(std::string_view s);

// Decodes the code point starting at s[pos]; advances pos past it.
// Returns U+FFFD on malformed input (and advances one byte).
char32_t DecodeUtf8(std::string_view s, size_t* pos);

// Byte offsets at which each code point starts, plus a final s.size() sentinel.
std::vector<size_t> CodePointOffsets(std::string_view s);

// ASCII-only lowercasing; non-ASCII bytes pass through unchanged.
std::string ToLowerAscii(std::string_view s);

// Strips leading/trailing ASCII whitespace.
std::string_view Trim(std::string_view s);

// True if c is an ASCII whitespace byte.
bool IsSpaceByte(char c);

// True if the code point is whitespace (ASCII plus common Unicode spaces).
bool IsSpaceCp(char32_t c);

// True if the code point has Unicode general category P* (punctuation).
// Covers ASCII plus the common punctuation blocks seen in lexicon files.
bool IsPunctCp(char32_t c);

// True if every code point of the word is punctuation.
bool IsAllPunct(std::string_view word);

// True if the code point is a combining mark that should attach to the
// preceding base character when segmenting per-character.
bool IsCombiningCp(char32_t c);

// Splits on runs of whitespace; returns the tokens.
std::vector<std::string> SplitWhitespace(std::string_view s);

// Splits on a single delimiter byte, keeping empty fields.
std::vector<std::string> SplitByte(std::string_view s, char delim);

std::string JoinWith(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace mtk

#endif  // MTK_TEXT_HPP_

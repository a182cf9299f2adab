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

#include "mtk/types.hpp"

namespace mtk {

LanguageCode::LanguageCode(std::string code) : code_(std::move(code)) {
  if (code_.empty() || code_.size() > 8) {
    throw FormatError("invalid language code: '" + code_ + "'");
  }
  for (char c : code_) {
    if (c < 'a' || c > 'z') {
      throw FormatError("invalid language code: '" + code_ + "'");
    }
  }
  if (code_.size() < 2) {
    throw FormatError("invalid language code: '" + code_ + "'");
  }
}

const char* OriginName(Origin o) {
  switch (o) {
    case Origin::kNatural:
      return "natural";
    case Origin::kReplicated:
      return "replicated";
    case Origin::kSynthetic:
      return "synthetic";
  }
  return "unknown";
}

}  // namespace mtk

// Copyright 2026 The tilc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef TILC_FRONTEND_LEXER_HPP
#define TILC_FRONTEND_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tilc/frontend/diagnostic.hpp"

namespace tilc::frontend {

enum class TokenKind {
  Documentation,
  Version,
  Number,
  PathString,
  Operator,
  Control,
  Keyword,
  Identifier,
};
std::string_view to_string(TokenKind k);

struct Token {
  TokenKind kind = TokenKind::Identifier;
  /// Documentation and path strings without their delimiters.
  std::string text;
  Span span;

  bool is(TokenKind k, std::string_view t) const {
    return kind == k && text == t;
  }
  friend bool operator==(const Token&, const Token&) = default;
};

bool is_keyword(std::string_view word);

struct LexResult {
  std::vector<Token> tokens;
  std::vector<Diagnostic> diagnostics;
};

/// Never fails outright: unrecognised input is reported and skipped one
/// byte at a time.
LexResult lex(std::string_view source);

}  // namespace tilc::frontend

#endif  // TILC_FRONTEND_LEXER_HPP

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


#include "tilc/frontend/lexer.hpp"

#include <algorithm>
#include <array>

namespace tilc::frontend {

std::string_view to_string(TokenKind k) {
  switch (k) {
    case TokenKind::Documentation: return "documentation";
    case TokenKind::Version: return "version";
    case TokenKind::Number: return "number";
    case TokenKind::PathString: return "path string";
    case TokenKind::Operator: return "operator";
    case TokenKind::Control: return "control character";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Identifier: return "identifier";
  }
  return "token";
}

namespace {

constexpr std::array<std::string_view, 20> kKeywords = {
    "namespace", "type",    "interface", "streamlet", "impl",
    "in",        "out",     "Null",      "Bits",      "Group",
    "Union",     "Stream",  "Sync",      "Flatten",   "Desync",
    "FlatDesync", "Forward", "Reverse",  "true",      "false"};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_word(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || is_digit(c) ||
         c == '_';
}
bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  LexResult run() {
    while (pos_ < src_.size()) {
      if (skip_padding()) continue;
      if (pos_ >= src_.size()) break;
      if (!(documentation() || version_or_number() || path_string() ||
            op() || control() || word())) {
        unrecognized();
      }
    }
    return std::move(out_);
  }

 private:
  bool starts_with(std::string_view s) const {
    return src_.substr(pos_, s.size()) == s;
  }

  void push(TokenKind k, std::string text, std::size_t start) {
    out_.tokens.push_back(Token{k, std::move(text), Span{start, pos_}});
  }

  void error(std::string message, Span span) {
    out_.diagnostics.push_back(Diagnostic{Severity::Error,
                                          "UnrecognizedCharacter",
                                          std::move(message), span, {}, {}});
  }

  bool skip_padding() {
    if (is_space(src_[pos_])) {
      ++pos_;
      return true;
    }
    if (starts_with("///")) {
      std::size_t close = src_.find("///", pos_ + 3);
      if (close == std::string_view::npos) {
        error("unterminated block comment", Span{pos_, pos_ + 3});
        pos_ = src_.size();
      } else {
        pos_ = close + 3;
      }
      return true;
    }
    if (starts_with("//")) {
      std::size_t nl = src_.find('\n', pos_);
      pos_ = nl == std::string_view::npos ? src_.size() : nl + 1;
      return true;
    }
    return false;
  }

  bool documentation() {
    if (src_[pos_] != '#') return false;
    std::size_t close = src_.find('#', pos_ + 1);
    if (close == std::string_view::npos) {
      error("unterminated documentation", Span{pos_, pos_ + 1});
      ++pos_;
      return true;
    }
    std::size_t start = pos_;
    pos_ = close + 1;
    push(TokenKind::Documentation,
         std::string(src_.substr(start + 1, close - start - 1)), start);
    return true;
  }

  // Digits separated by single dots; three or more parts make a version.
  bool version_or_number() {
    if (!is_digit(src_[pos_])) return false;
    std::size_t start = pos_;
    std::size_t parts = 0;
    std::size_t end = pos_;
    std::size_t number_end = 0;
    while (true) {
      std::size_t p = end;
      while (p < src_.size() && is_digit(src_[p])) ++p;
      if (p == end) break;
      ++parts;
      end = p;
      if (parts <= 2) number_end = end;
      if (end + 1 < src_.size() && src_[end] == '.' && is_digit(src_[end + 1])) {
        ++end;
        continue;
      }
      break;
    }
    if (parts >= 3) {
      pos_ = end;
      push(TokenKind::Version, std::string(src_.substr(start, end - start)),
           start);
    } else {
      pos_ = number_end;
      push(TokenKind::Number, std::string(src_.substr(start, pos_ - start)),
           start);
    }
    return true;
  }

  bool path_string() {
    if (src_[pos_] != '"') return false;
    std::size_t close = src_.find_first_of("\"\n", pos_ + 1);
    if (close == std::string_view::npos || src_[close] != '"') {
      error("unterminated path string", Span{pos_, pos_ + 1});
      ++pos_;
      return true;
    }
    std::size_t start = pos_;
    pos_ = close + 1;
    push(TokenKind::PathString,
         std::string(src_.substr(start + 1, close - start - 1)), start);
    return true;
  }

  bool op() {
    for (std::string_view o : {"--", "::"}) {
      if (starts_with(o)) {
        std::size_t start = pos_;
        pos_ += 2;
        push(TokenKind::Operator, std::string(o), start);
        return true;
      }
    }
    char c = src_[pos_];
    if (c == '=' || c == ':' || c == '\'' || c == '.') {
      push_single(TokenKind::Operator);
      return true;
    }
    return false;
  }

  bool control() {
    constexpr std::string_view kControls = "(){}<>,;";
    if (kControls.find(src_[pos_]) == std::string_view::npos) return false;
    push_single(TokenKind::Control);
    return true;
  }

  void push_single(TokenKind k) {
    std::size_t start = pos_++;
    push(k, std::string(1, src_[start]), start);
  }

  bool word() {
    if (!is_word(src_[pos_])) return false;
    std::size_t start = pos_;
    while (pos_ < src_.size() && is_word(src_[pos_])) ++pos_;
    std::string text(src_.substr(start, pos_ - start));
    TokenKind kind = is_keyword(text) ? TokenKind::Keyword : TokenKind::Identifier;
    push(kind, std::move(text), start);
    return true;
  }

  void unrecognized() {
    // Keep multi-byte UTF-8 sequences together in the message.
    std::size_t len = 1;
    auto lead = static_cast<unsigned char>(src_[pos_]);
    if (lead >= 0xC0) {
      while (pos_ + len < src_.size() &&
             (static_cast<unsigned char>(src_[pos_ + len]) & 0xC0) == 0x80) {
        ++len;
      }
    }
    std::string shown(src_.substr(pos_, len));
    if (lead < 0x20 || lead == 0x7F) shown = "\\x" + std::to_string(lead);
    error("unrecognized character '" + shown + "'", Span{pos_, pos_ + len});
    pos_ += len;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  LexResult out_;
};

}  // namespace

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

LexResult lex(std::string_view source) { return Lexer(source).run(); }

}  // namespace tilc::frontend

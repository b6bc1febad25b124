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


#include "tilc/frontend/parser.hpp"

#include <string_view>
#include <utility>

namespace tilc::frontend {

namespace {

using namespace ast;

/// Thrown after a diagnostic has been recorded (or deliberately suppressed).
struct Failure {};

struct Opener {
  char closer;
  Span span;
};

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, std::size_t length)
      : toks_(tokens), length_(length) {}

  ParseResult run() {
    ParseResult out;
    while (!at_end()) {
      if (is_kw("namespace")) {
        try {
          out.file.namespaces.push_back(namespace_decl());
        } catch (const Failure&) {
          skip_to_namespace();
        }
        continue;
      }
      try {
        fail("expected `namespace`");
      } catch (const Failure&) {
        skip_to_namespace();
      }
    }
    out.diagnostics = std::move(diags_);
    return out;
  }

 private:
  // Token access.

  bool at_end() const { return pos_ >= toks_.size(); }
  const Token* peek(std::size_t ahead = 0) const {
    return pos_ + ahead < toks_.size() ? &toks_[pos_ + ahead] : nullptr;
  }
  bool is(TokenKind k, std::string_view text, std::size_t ahead = 0) const {
    const Token* t = peek(ahead);
    return t && t->is(k, text);
  }
  bool is_kind(TokenKind k, std::size_t ahead = 0) const {
    const Token* t = peek(ahead);
    return t && t->kind == k;
  }
  bool is_ctrl(char c, std::size_t ahead = 0) const {
    return is(TokenKind::Control, std::string_view(&c, 1), ahead);
  }
  bool is_op(std::string_view o, std::size_t ahead = 0) const {
    return is(TokenKind::Operator, o, ahead);
  }
  bool is_kw(std::string_view k, std::size_t ahead = 0) const {
    return is(TokenKind::Keyword, k, ahead);
  }
  const Token& advance() { return toks_[pos_++]; }
  Span here() const {
    return at_end() ? Span{length_, length_} : toks_[pos_].span;
  }
  Span previous() const {
    return pos_ == 0 ? Span{0, 0} : toks_[pos_ - 1].span;
  }
  Span since(Span start) const { return Span::join(start, previous()); }

  // Diagnostics.

  std::string found() const {
    if (at_end()) return "end of input";
    const Token& t = toks_[pos_];
    switch (t.kind) {
      case TokenKind::Documentation: return "documentation";
      case TokenKind::PathString: return "path string \"" + t.text + "\"";
      case TokenKind::Identifier: return "identifier `" + t.text + "`";
      case TokenKind::Keyword: return "keyword `" + t.text + "`";
      default: return "`" + t.text + "`";
    }
  }

  void record(std::string message, Span span, std::vector<Label> labels = {}) {
    diags_.push_back(Diagnostic{Severity::Error, "SyntaxError",
                                std::move(message), span, std::move(labels),
                                {}});
  }

  /// At the end of input only the first report survives: every enclosing
  /// construct is unclosed too, and saying so again adds nothing.
  [[noreturn]] void fail(const std::string& expected) {
    if (at_end()) {
      if (!eof_reported_) {
        eof_reported_ = true;
        if (!open_.empty()) {
          const Opener& o = open_.back();
          record("unclosed delimiter: " + expected + " before end of input",
                 Span{length_, length_},
                 {Label{o.span, "unclosed delimiter"}});
        } else {
          record(expected + ", found end of input",
                 Span{length_, length_});
        }
      }
      throw Failure{};
    }
    record(expected + ", found " + found(), here());
    throw Failure{};
  }

  // Expectations.

  const Token& expect_ctrl(char c) {
    if (!is_ctrl(c)) fail(std::string("expected `") + c + "`");
    return advance();
  }
  const Token& expect_op(std::string_view o) {
    if (!is_op(o)) fail("expected `" + std::string(o) + "`");
    return advance();
  }
  Ident ident(std::string_view what = "identifier") {
    if (!is_kind(TokenKind::Identifier)) fail("expected " + std::string(what));
    const Token& t = advance();
    return Ident{t.text, t.span};
  }
  Literal literal(TokenKind k, std::string_view what) {
    if (!is_kind(k)) fail("expected " + std::string(what));
    const Token& t = advance();
    return Literal{t.text, t.span};
  }
  Literal keyword_of(std::initializer_list<std::string_view> options,
                     std::string_view what) {
    for (auto o : options) {
      if (is_kw(o)) {
        const Token& t = advance();
        return Literal{t.text, t.span};
      }
    }
    fail("expected " + std::string(what));
  }

  void open(char open_char, char close_char) {
    Span s = expect_ctrl(open_char).span;
    open_.push_back(Opener{close_char, s});
  }
  void close() {
    expect_ctrl(open_.back().closer);
    open_.pop_back();
  }

  /// `open item (, item)* ,? close`
  template <class F>
  void delimited(char open_char, char close_char, F&& item) {
    open(open_char, close_char);
    while (!is_ctrl(close_char)) {
      item();
      if (!is_ctrl(',')) break;
      advance();
    }
    close();
  }

  std::optional<Doc> doc() {
    if (!is_kind(TokenKind::Documentation)) return std::nullopt;
    const Token& t = advance();
    Doc d{t.text, t.span};
    if (is_kind(TokenKind::Documentation)) {
      record("documentation may only be followed by its subject, not by "
             "more documentation",
             here(), {Label{d.span, "previous documentation"}});
      throw Failure{};
    }
    return d;
  }

  // Recovery.

  bool at_decl_keyword() const {
    if (is_kw("type") || is_kw("interface") || is_kw("streamlet") ||
        is_kw("namespace")) {
      return true;
    }
    return is_kw("impl") && !is_op(":", 1);
  }

  void skip_to_namespace() {
    open_.clear();
    while (!at_end() && !is_kw("namespace")) advance();
  }

  /// Skips to the end of a broken declaration or statement: past its `;`,
  /// or up to the next declaration keyword or the enclosing closing brace.
  void recover(std::size_t base_depth) {
    int depth = static_cast<int>(open_.size() - base_depth);
    open_.resize(base_depth);
    while (!at_end()) {
      if (at_decl_keyword()) return;
      const Token& t = *peek();
      if (t.kind == TokenKind::Control) {
        char c = t.text[0];
        if (c == ';' && depth <= 0) {
          advance();
          return;
        }
        if (c == '}' && depth <= 0) return;
        if (c == '(' || c == '{' || c == '<') ++depth;
        if ((c == ')' || c == '}' || c == '>') && depth > 0) --depth;
      }
      advance();
    }
  }

  // Grammar.

  Namespace namespace_decl() {
    Namespace ns;
    Span start = advance().span;
    ns.path.push_back(ident("namespace name"));
    while (is_op("::")) {
      advance();
      ns.path.push_back(ident("namespace name"));
    }
    open('{', '}');
    std::size_t base = open_.size();
    while (true) {
      if (at_end()) {
        try {
          fail("expected `}`");
        } catch (const Failure&) {
        }
        break;
      }
      if (is_ctrl('}')) {
        advance();
        open_.pop_back();
        break;
      }
      std::size_t first = pos_;
      try {
        ns.decls.push_back(decl());
      } catch (const Failure&) {
        recover(base);
        Span s = first < toks_.size() ? toks_[first].span : here();
        Decl bad;
        bad.node = ErrorDecl{};
        bad.span = since(s);
        ns.decls.push_back(std::move(bad));
        // A stray closer would otherwise end up being read as a declaration.
        if (pos_ == first) advance();
      }
    }
    ns.span = since(start);
    return ns;
  }

  Decl decl() {
    Decl d;
    Span start = here();
    d.doc = doc();
    if (is_kw("type")) {
      advance();
      d.name = ident("type name");
      expect_op("=");
      d.node = TypeDecl{type_expr()};
    } else if (is_kw("interface")) {
      advance();
      d.name = ident("interface name");
      expect_op("=");
      d.node = InterfaceDecl{interface_expr()};
    } else if (is_kw("impl")) {
      advance();
      d.name = ident("implementation name");
      expect_op("=");
      InterfaceExpr iface = interface_expr();
      ImplExpr body = impl_body();
      d.node = ImplDecl{std::move(iface), std::move(body)};
    } else if (is_kw("streamlet")) {
      advance();
      d.name = ident("streamlet name");
      expect_op("=");
      StreamletDecl s{interface_expr(), std::nullopt};
      if (is_ctrl('{')) s.impl = impl_section();
      d.node = std::move(s);
    } else {
      fail("expected a declaration (`type`, `interface`, `impl` or "
           "`streamlet`)");
    }
    expect_ctrl(';');
    d.span = since(start);
    return d;
  }

  TypeExprPtr type_expr() {
    auto t = std::make_unique<TypeExpr>();
    Span start = here();
    if (is_kw("Null")) {
      advance();
      t->node = NullExpr{};
    } else if (is_kw("Bits")) {
      advance();
      open('(', ')');
      BitsExpr b{literal(TokenKind::Number, "bit count")};
      close();
      t->node = std::move(b);
    } else if (is_kw("Group") || is_kw("Union")) {
      bool group = is_kw("Group");
      advance();
      std::vector<FieldExpr> fields;
      delimited('(', ')', [&] {
        FieldExpr f;
        f.name = ident("field name");
        expect_op(":");
        f.type = type_expr();
        fields.push_back(std::move(f));
      });
      if (group) {
        t->node = GroupExpr{std::move(fields)};
      } else {
        t->node = UnionExpr{std::move(fields)};
      }
    } else if (is_kw("Stream")) {
      advance();
      t->node = stream_expr();
    } else if (is_kind(TokenKind::Identifier)) {
      t->node = TypeRef{ident()};
    } else {
      fail("expected a type expression");
    }
    t->span = since(start);
    return t;
  }

  StreamExpr stream_expr() {
    StreamExpr s;
    std::vector<std::string> seen;
    delimited('(', ')', [&] {
      Ident label = ident("Stream property");
      for (const auto& name : seen) {
        if (name == label.text) {
          record("Stream property `" + label.text + "` given twice",
                 label.span);
          throw Failure{};
        }
      }
      seen.push_back(label.text);
      expect_op(":");
      const std::string& l = label.text;
      if (l == "data") {
        s.data = type_expr();
      } else if (l == "user") {
        s.user = type_expr();
      } else if (l == "throughput") {
        s.throughput = literal(TokenKind::Number, "throughput");
      } else if (l == "dimensionality") {
        s.dimensionality = literal(TokenKind::Number, "dimensionality");
      } else if (l == "synchronicity") {
        s.synchronicity =
            keyword_of({"Sync", "Flatten", "Desync", "FlatDesync"},
                       "synchronicity (`Sync`, `Flatten`, `Desync` or "
                       "`FlatDesync`)");
      } else if (l == "complexity") {
        if (is_kind(TokenKind::Version)) {
          s.complexity = literal(TokenKind::Version, "complexity");
        } else {
          s.complexity = literal(TokenKind::Number, "complexity");
        }
      } else if (l == "direction") {
        s.direction =
            keyword_of({"Forward", "Reverse"}, "direction (`Forward` or "
                                               "`Reverse`)");
      } else if (l == "keep") {
        s.keep = keyword_of({"true", "false"}, "`true` or `false`");
      } else {
        record("unknown Stream property `" + l + "`", label.span);
        throw Failure{};
      }
    });
    return s;
  }

  Ident domain_name() {
    expect_op("'");
    return ident("domain name");
  }

  InterfaceExpr interface_expr() {
    InterfaceExpr e;
    Span start = here();
    if (is_kind(TokenKind::Identifier)) {
      e.node = InterfaceRef{ident()};
      e.span = since(start);
      return e;
    }
    InlineInterface iface;
    if (is_ctrl('<')) {
      delimited('<', '>', [&] { iface.domains.push_back(domain_name()); });
    }
    if (!is_ctrl('(')) fail("expected `(` or an interface name");
    delimited('(', ')', [&] { iface.ports.push_back(port()); });
    e.node = std::move(iface);
    e.span = since(start);
    return e;
  }

  PortExpr port() {
    PortExpr p;
    p.doc = doc();
    Span start = here();
    p.name = ident("port name");
    expect_op(":");
    if (is_kw("in")) {
      p.mode = PortMode::In;
    } else if (is_kw("out")) {
      p.mode = PortMode::Out;
    } else {
      fail("expected `in` or `out`");
    }
    advance();
    p.type = type_expr();
    if (is_op("'")) p.domain = domain_name();
    p.span = since(start);
    return p;
  }

  /// `"path"` or `#doc#? { statements }` after an implementation's
  /// interface.
  ImplExpr impl_body() {
    ImplExpr e;
    Span start = here();
    e.doc = doc();
    if (is_kind(TokenKind::PathString) && !e.doc) {
      e.node = LinkedImpl{literal(TokenKind::PathString, "path")};
    } else if (is_ctrl('{')) {
      e.node = structural();
    } else {
      fail(e.doc ? "expected `{`" : "expected a path string or `{`");
    }
    e.span = since(start);
    return e;
  }

  /// `{ impl: <impl-expr> ,? }` after a streamlet's interface.
  std::optional<ImplExpr> impl_section() {
    open('{', '}');
    std::optional<ImplExpr> out;
    if (!is_ctrl('}')) {
      if (!is_kw("impl")) fail("expected `impl`");
      advance();
      expect_op(":");
      ImplExpr e;
      Span start = here();
      e.doc = doc();
      if (is_kind(TokenKind::PathString)) {
        e.node = LinkedImpl{literal(TokenKind::PathString, "path")};
      } else if (is_ctrl('{')) {
        e.node = structural();
      } else if (is_kind(TokenKind::Identifier)) {
        e.node = ImplRef{ident()};
      } else {
        fail("expected an implementation: a path string, `{` or a name");
      }
      e.span = since(start);
      out = std::move(e);
      if (is_ctrl(',')) advance();
    }
    close();
    return out;
  }

  StructuralImpl structural() {
    StructuralImpl body;
    open('{', '}');
    std::size_t base = open_.size();
    while (!is_ctrl('}')) {
      if (at_end() || at_decl_keyword()) fail("expected `}`");
      std::size_t first = pos_;
      try {
        body.statements.push_back(statement());
      } catch (const Failure&) {
        if (at_end()) throw;
        recover(base);
        body.statements.push_back(
            StructStmt{ErrorStmt{}, since(toks_[first].span)});
        // The body was never closed; let the declaration recover.
        if (at_decl_keyword()) throw;
      }
    }
    close();
    return body;
  }

  StructStmt statement() {
    Span start = here();
    if (is_kind(TokenKind::Identifier) && is_op("=", 1)) {
      InstanceStmt inst;
      inst.name = ident();
      advance();
      inst.streamlet = ident("streamlet name");
      if (is_ctrl('<')) {
        delimited('<', '>', [&] {
          DomainAssignExpr a;
          Ident first = domain_name();
          if (is_op("=")) {
            advance();
            a.child = std::move(first);
            a.parent = domain_name();
          } else {
            a.parent = std::move(first);
          }
          inst.domains.push_back(std::move(a));
        });
      }
      expect_ctrl(';');
      return StructStmt{std::move(inst), since(start)};
    }
    ConnectionStmt c;
    c.left = endpoint();
    expect_op("--");
    c.right = endpoint();
    expect_ctrl(';');
    return StructStmt{std::move(c), since(start)};
  }

  EndpointExpr endpoint() {
    EndpointExpr e;
    Span start = here();
    Ident first = ident("port or instance name");
    if (is_op(".")) {
      advance();
      e.instance = std::move(first);
      e.port = ident("port name");
    } else {
      e.port = std::move(first);
    }
    e.span = since(start);
    return e;
  }

  const std::vector<Token>& toks_;
  std::size_t length_;
  std::size_t pos_ = 0;
  std::vector<Opener> open_;
  std::vector<Diagnostic> diags_;
  bool eof_reported_ = false;
};

}  // namespace

ParseResult parse(const std::vector<Token>& tokens, std::size_t source_length) {
  return Parser(tokens, source_length).run();
}

}  // namespace tilc::frontend

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


#include <gtest/gtest.h>

#include "support/files.hpp"
#include "tilc/frontend/parser.hpp"

namespace tilc::frontend {
namespace {

ParseResult parse_text(std::string_view src) {
  LexResult lexed = lex(src);
  EXPECT_TRUE(lexed.diagnostics.empty());
  return parse(lexed.tokens, src.size());
}

TEST(Parser, FullExampleParsesCleanly) {
  for (const char* name : {"language_tour.til", "vhdl_backend_example.til",
                           "evaluation_axi.til", "comp1_example.til"}) {
    ParseResult r = parse_text(testing::read_text(testing::fixture(name)));
    EXPECT_TRUE(r.diagnostics.empty()) << name;
    EXPECT_EQ(r.file.namespaces.size(), 1u) << name;
  }
}

TEST(Parser, DeclarationShapes) {
  ParseResult r = parse_text(
      "namespace a::b {\n"
      "  type t = Stream(data: Bits(8), dimensionality: 1,\n"
      "                  synchronicity: Sync, complexity: 4.1,);\n"
      "  interface i = <'x>(p: in t 'x, q: out t 'x);\n"
      "  #doc# streamlet s = i { impl: \"./dir\" };\n"
      "  impl m = i { u = s<'x>; u.p -- p; q -- u.q; };\n"
      "}\n");
  ASSERT_TRUE(r.diagnostics.empty());
  const ast::Namespace& ns = r.file.namespaces.at(0);
  ASSERT_EQ(ns.path.size(), 2u);
  EXPECT_EQ(ns.path[1].text, "b");
  ASSERT_EQ(ns.decls.size(), 4u);

  const auto& t = std::get<ast::TypeDecl>(ns.decls[0].node);
  const auto& stream = std::get<ast::StreamExpr>(t.type->node);
  EXPECT_EQ(stream.complexity->text, "4.1");
  EXPECT_FALSE(stream.throughput.has_value());

  const auto& i = std::get<ast::InterfaceDecl>(ns.decls[1].node);
  const auto& inline_iface = std::get<ast::InlineInterface>(i.interface.node);
  ASSERT_EQ(inline_iface.ports.size(), 2u);
  EXPECT_EQ(inline_iface.ports[1].mode, PortMode::Out);
  EXPECT_EQ(inline_iface.ports[1].domain->text, "x");

  EXPECT_EQ(ns.decls[2].doc->text, "doc");
  const auto& s = std::get<ast::StreamletDecl>(ns.decls[2].node);
  EXPECT_EQ(std::get<ast::LinkedImpl>(s.impl->node).path.text, "./dir");

  const auto& m = std::get<ast::ImplDecl>(ns.decls[3].node);
  const auto& body = std::get<ast::StructuralImpl>(m.impl.node);
  ASSERT_EQ(body.statements.size(), 3u);
  const auto& inst = std::get<ast::InstanceStmt>(body.statements[0].node);
  EXPECT_EQ(inst.streamlet.text, "s");
  ASSERT_EQ(inst.domains.size(), 1u);
  const auto& conn = std::get<ast::ConnectionStmt>(body.statements[2].node);
  EXPECT_FALSE(conn.left.instance.has_value());
  EXPECT_EQ(conn.right.instance->text, "u");
}

TEST(Parser, UnclosedInterfaceAtEndOfInput) {
  std::string src = "namespace a { streamlet s = (a: in";
  ParseResult r = parse_text(src);
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, "SyntaxError");
  EXPECT_EQ(r.diagnostics[0].span.start, src.size());
  ASSERT_EQ(r.file.namespaces.size(), 1u);
  EXPECT_EQ(r.file.namespaces[0].path[0].text, "a");
  ASSERT_FALSE(r.diagnostics[0].labels.empty());
}

TEST(Parser, ReportsIndependentFaults) {
  ParseResult r = parse_text(
      "namespace a {\n"
      "  type = Bits(1);\n"
      "  streamlet s = (p: sideways t);\n"
      "  type ok = Bits(2);\n"
      "  impl x = s { u = ; v = s; };\n"
      "}\n");
  EXPECT_GE(r.diagnostics.size(), 3u);
  const auto& decls = r.file.namespaces.at(0).decls;
  ASSERT_EQ(decls.size(), 4u);
  EXPECT_TRUE(std::holds_alternative<ast::ErrorDecl>(decls[0].node));
  EXPECT_TRUE(std::holds_alternative<ast::ErrorDecl>(decls[1].node));
  EXPECT_TRUE(std::holds_alternative<ast::TypeDecl>(decls[2].node));
  // Statement-level recovery keeps the well-formed instance.
  const auto& impl = std::get<ast::ImplDecl>(decls[3].node);
  const auto& body = std::get<ast::StructuralImpl>(impl.impl.node).statements;
  ASSERT_EQ(body.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<ast::ErrorStmt>(body[0].node));
  EXPECT_TRUE(std::holds_alternative<ast::InstanceStmt>(body[1].node));
}

TEST(Parser, RejectsDoubleDocumentation) {
  ParseResult r = parse_text("namespace a { #one# #two# type t = Null; }");
  EXPECT_EQ(r.diagnostics.size(), 1u);
}

TEST(Parser, RejectsDuplicateStreamProperty) {
  ParseResult r = parse_text(
      "namespace a { type t = Stream(data: Null, data: Null); "
      "type u = Stream(colour: 1); }");
  EXPECT_EQ(r.diagnostics.size(), 2u);
}

TEST(Parser, PortSpanExcludesDocumentation) {
  std::string src = "namespace a { interface i = (#d# p: in t); }";
  ParseResult r = parse_text(src);
  ASSERT_TRUE(r.diagnostics.empty());
  const auto& decl = std::get<ast::InterfaceDecl>(r.file.namespaces[0].decls[0].node);
  const auto& port = std::get<ast::InlineInterface>(decl.interface.node).ports[0];
  EXPECT_EQ(port.span.start, src.find("p:"));
}

}  // namespace
}  // namespace tilc::frontend

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

#include <algorithm>

#include "support/files.hpp"
#include "tilc/frontend/evaluate.hpp"
#include "tilc/frontend/printer.hpp"

namespace tilc::frontend {
namespace {

using testing::load_fixture;
using testing::load_source;
using testing::read_text;

PathName space() {
  return PathName{Name::make("my"), Name::make("example"), Name::make("space")};
}

std::vector<std::string> error_codes(const FrontendResult& r) {
  std::vector<std::string> out;
  for (const auto& d : r.diagnostics) {
    if (d.severity == Severity::Error) out.push_back(d.code);
  }
  return out;
}

std::string replaced(std::string text, const std::string& from,
                     const std::string& to) {
  auto at = text.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return text.replace(at, from.size(), to);
}

TEST(Evaluate, FullExample) {
  IrDatabase db;
  FrontendResult r = load_fixture("language_tour.til", db);
  ASSERT_EQ(r.failed, Stage::Ok) << r.diagnostics.size();
  // The two-lane stream at complexity 4 is flagged once.
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].severity, Severity::Warning);
  EXPECT_EQ(r.diagnostics[0].code, "LaneActivity");

  auto stream = db.find_type(space(), Name::make("stream"));
  ASSERT_TRUE(stream.has_value());
  EXPECT_EQ(db.find_type(space(), Name::make("stream2")), stream);
  const auto& s = std::get<StreamType>(db.types().get(*stream));
  EXPECT_EQ(s.throughput, Throughput(2, 1));
  EXPECT_EQ(element_bit_width(s.data, db.types()), 27u);

  auto comp1 = db.find_streamlet(space(), Name::make("comp1"));
  ASSERT_TRUE(comp1.has_value());
  const Streamlet& c1 = db.streamlet(*comp1);
  EXPECT_EQ(c1.documentation, "documentation (optional)");
  EXPECT_FALSE(c1.implementation.has_value());
  EXPECT_EQ(c1.interface.ports()[2].documentation, " port documentation ");

  const Streamlet& c3 = db.streamlet(*db.find_streamlet(space(), Name::make("comp3")));
  ASSERT_TRUE(c3.implementation && c3.implementation->structural());
  EXPECT_EQ(c3.implementation->documentation,
            "This is implementation documentation, too.");
  const Streamlet& c5 = db.streamlet(*db.find_streamlet(space(), Name::make("comp5")));
  EXPECT_EQ(c5.implementation->linked()->path, "./vhdl_dir");

  const Streamlet& sd =
      db.streamlet(*db.find_streamlet(space(), Name::make("struct_dom_example")));
  const auto* body = sd.implementation->structural();
  const Instance* mixed = body->find_instance(Name::make("mixed_assignments"));
  ASSERT_NE(mixed, nullptr);
  EXPECT_EQ(mixed->bound_domains,
            (std::vector<Domain>{Domain::named(Name::make("parent_domain2")),
                                 Domain::named(Name::make("parent_domain2")),
                                 Domain::named(Name::make("parent_domain1"))}));
}

TEST(Evaluate, DomainMismatchIsReportedOnConnection) {
  std::string text = read_text(testing::fixture("language_tour.til"));
  std::string bad = replaced(text,
                             "same_domains = dom_example<'parent_domain1, "
                             "'parent_domain1>;",
                             "same_domains = dom_example<'parent_domain1, "
                             "'parent_domain2>;");
  IrDatabase db;
  FrontendResult r = load_source(bad, db);
  EXPECT_EQ(r.failed, Stage::Eval);
  EXPECT_EQ(error_codes(r), (std::vector<std::string>{"DomainMismatch"}));
  const Diagnostic& d = *std::find_if(
      r.diagnostics.begin(), r.diagnostics.end(),
      [](const Diagnostic& d) { return d.severity == Severity::Error; });
  EXPECT_EQ(bad.substr(d.span.start, 32), "same_domains.a -- same_domains.b");
}

TEST(Evaluate, ContinuesAfterFailingDeclaration) {
  IrDatabase db;
  FrontendResult r = load_source(
      "namespace a {\n"
      "  type stream = Stream(data: Bits(1), dimensionality: 0,\n"
      "                       synchronicity: Sync, complexity: 1);\n"
      "  type Stream2 = Bits(2);\n"
      "  type stream = Bits(3);\n"
      "  type later = Bits(4);\n"
      "}\n",
      db);
  EXPECT_EQ(error_codes(r), (std::vector<std::string>{"DuplicateIdentifier"}));
  PathName ns{Name::make("a")};
  EXPECT_TRUE(db.find_type(ns, Name::make("later")).has_value());
}

TEST(Evaluate, ErrorKinds) {
  struct Case {
    const char* source;
    const char* code;
  } cases[] = {
      {"namespace a { type a__b = Null; }", "InvalidName"},
      {"namespace a { type t = Bits(0); }", "InvalidType"},
      {"namespace a { type t = Foo; }", "UnknownIdentifier"},
      {"namespace a { type t = Stream(data: Null); }", "InvalidType"},
      {"namespace a { streamlet s = (p: in Bits(1)); }", "InvalidInterface"},
      {"namespace a { type s = Stream(data: Bits(1), dimensionality: 0, "
       "synchronicity: Sync, complexity: 1, keep: true, user: Bits(1)); "
       "streamlet x = (p: in Stream(data: s, dimensionality: 0, "
       "synchronicity: Sync, complexity: 1, keep: true, user: Bits(1))); }",
       "DuplicateStreamName"},
      {"namespace a { streamlet s = <'x>(p: in Stream(data: Bits(1), "
       "dimensionality: 0, synchronicity: Sync, complexity: 1) 'y); }",
       "UnknownDomain"},
      {"namespace a { type t = Stream(data: Bits(1), dimensionality: 0, "
       "synchronicity: Sync, complexity: 1); "
       "streamlet c = <'p, 'q>(); "
       "streamlet s = <'x>() { impl: { u = c<'p = 'x, 'x>; } }; }",
       "NamedBeforeOrdered"},
      {"namespace a { type t = Stream(data: Bits(1), dimensionality: 0, "
       "synchronicity: Sync, complexity: 1); "
       "streamlet s = (i: in t, o: out t) { impl: { i -- o; } }; "
       "streamlet u = (i: in t, o: out t) { impl: { } }; }",
       "UnconnectedPort"},
      {"namespace a { type t = Stream(data: Bits(1), dimensionality: 0, "
       "synchronicity: Sync, complexity: 1); "
       "streamlet s = (i: in t); impl m = (i: in t, o: out t) { i -- o; }; "
       "streamlet u = s { impl: m }; }",
       "InterfaceMismatch"},
      {"namespace a { streamlet s = () { impl: \"/abs\" }; }", "InvalidPath"},
  };
  for (const auto& c : cases) {
    IrDatabase db;
    FrontendResult r = load_source(c.source, db);
    EXPECT_EQ(r.failed, Stage::Eval) << c.source;
    auto codes = error_codes(r);
    EXPECT_NE(std::find(codes.begin(), codes.end(), c.code), codes.end())
        << c.source << " expected " << c.code;
  }
}

TEST(Evaluate, StopsAfterParseErrorsByDefault) {
  std::string src =
      "namespace a {\n"
      "  type x = Bits(0);\n"
      "  type = ;\n"
      "}\n";
  IrDatabase quiet;
  FrontendResult stop = load_source(src, quiet);
  EXPECT_EQ(stop.failed, Stage::Parse);
  EXPECT_EQ(error_codes(stop), (std::vector<std::string>{"SyntaxError"}));

  IrDatabase loud;
  FrontendResult go = load_source(src, loud, true);
  EXPECT_EQ(go.failed, Stage::Parse);
  EXPECT_EQ(error_codes(go),
            (std::vector<std::string>{"SyntaxError", "InvalidType"}));
}

TEST(Printer, RoundTripsFixtures) {
  for (const char* name : {"language_tour.til", "vhdl_backend_example.til",
                           "evaluation_axi.til", "comp1_example.til"}) {
    IrDatabase first;
    ASSERT_EQ(load_fixture(name, first).failed, Stage::Ok) << name;
    std::string printed = print(first);
    IrDatabase second;
    FrontendResult r = load_source(printed, second);
    ASSERT_EQ(r.failed, Stage::Ok) << name << "\n" << printed;
    EXPECT_EQ(print(second), printed) << name;
  }
}

}  // namespace
}  // namespace tilc::frontend

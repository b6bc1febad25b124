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

#include "support/expect.hpp"
#include "support/files.hpp"
#include "tilc/vhdl/backend.hpp"
#include "tilc/vhdl/testbench.hpp"

namespace tilc::vhdl {
namespace {

namespace fs = std::filesystem;
using tilc::testing::golden;
using tilc::testing::load_fixture;
using tilc::testing::normalize_ws;

PathName space() {
  return PathName{Name::make("my"), Name::make("example"), Name::make("space")};
}

StreamletId find(const IrDatabase& db, const PathName& ns, const char* name) {
  auto id = db.find_streamlet(ns, Name::make(name));
  EXPECT_TRUE(id.has_value()) << name;
  return *id;
}

std::string from(const std::string& text, const std::string& marker) {
  auto at = text.find(marker);
  return at == std::string::npos ? std::string() : text.substr(at);
}

TEST(Backend, PackageWithDocumentation) {
  IrDatabase db;
  ASSERT_EQ(load_fixture("comp1_example.til", db).failed, frontend::Stage::Ok);
  std::string pkg = emit_package(db);
  EXPECT_EQ(normalize_ws(from(pkg, "package proj is")),
            normalize_ws(golden("comp1_package.vhd")));
  EXPECT_NE(pkg.find("library ieee;\nuse ieee.std_logic_1164.all;"),
            std::string::npos);
}

TEST(Backend, StructuralArchitecture) {
  IrDatabase db;
  ASSERT_EQ(load_fixture("vhdl_backend_example.til", db).failed, frontend::Stage::Ok);
  EXPECT_EQ(normalize_ws(emit_structural(db, find(db, space(), "comp3"))),
            normalize_ws(golden("comp3_architecture.vhd")));
  EXPECT_TILC_ERROR(emit_structural(db, find(db, space(), "comp1")),
                    InvalidArgument);
}

TEST(Backend, AxiComponent) {
  IrDatabase db;
  ASSERT_EQ(load_fixture("evaluation_axi.til", db).failed, frontend::Stage::Ok);
  Package pkg = package(db);
  ASSERT_EQ(pkg.components.size(), 1u);
  Package only{pkg.name, {pkg.components.front()}};
  std::string text = render(only);
  EXPECT_NE(normalize_ws(text).find(normalize_ws(golden("evaluation_component.vhd"))),
            std::string::npos)
      << text;
}

TEST(Backend, SignalNamesAndModes) {
  Name p = Name::make("axi4");
  EXPECT_EQ(port_signal_name(p, {}, Signal::Valid), "axi4_valid");
  EXPECT_EQ(port_signal_name(p, PathName{Name::make("AW")}, Signal::Data),
            "axi4__AW_data");
  EXPECT_EQ(signal_mode(PortMode::In, Direction::Forward, Signal::Data), Mode::In);
  EXPECT_EQ(signal_mode(PortMode::In, Direction::Forward, Signal::Ready),
            Mode::Out);
  EXPECT_EQ(signal_mode(PortMode::Out, Direction::Reverse, Signal::Data),
            Mode::In);
  EXPECT_EQ(signal_mode(PortMode::Out, Direction::Reverse, Signal::Ready),
            Mode::Out);
  EXPECT_EQ(clock_name(Domain::default_domain()), "clk");
  EXPECT_EQ(reset_name(Domain::named(Name::make("x"))), "x__rst");
  EXPECT_EQ(component_name(space().with(Name::make("c"))),
            "my__example__space__c_com");
}

TEST(Backend, CommentLines) {
  EXPECT_TRUE(comment_lines(std::nullopt).empty());
  EXPECT_EQ(comment_lines(std::string("\n  first \n\nsecond\n\n")),
            (std::vector<std::string>{"first", "", "second"}));
}

TEST(Backend, LinkedTemplateIsCreated) {
  tilc::testing::TempDir dir;
  IrDatabase db;
  ASSERT_EQ(load_fixture("vhdl_backend_example.til", db).failed, frontend::Stage::Ok);
  StreamletId comp2 = find(db, space(), "comp2");

  LinkedOutput out = emit_linked(db, comp2, dir.path(), LinkedMissing::Create);
  ASSERT_TRUE(out.template_path.has_value());
  EXPECT_EQ(*out.template_path,
            dir.path() / "./vhdl_dir" / "my__example__space__comp2.vhd");
  EXPECT_NE(out.text.find("entity my__example__space__comp2_com is"),
            std::string::npos);
  EXPECT_NE(out.text.find("architecture my__example__space__comp2 of "
                          "my__example__space__comp2_com is\nbegin\nend"),
            std::string::npos);

  EXPECT_TILC_ERROR(emit_linked(db, comp2, dir.path(), LinkedMissing::Fail), Io);

  // An existing directory is enough for the template under Fail.
  fs::create_directories(dir.path() / "vhdl_dir");
  EXPECT_TRUE(emit_linked(db, comp2, dir.path(), LinkedMissing::Fail)
                  .template_path.has_value());

  // An existing architecture is copied verbatim.
  tilc::testing::write_text(*out.template_path, "-- user code\n");
  LinkedOutput copied = emit_linked(db, comp2, dir.path(), LinkedMissing::Fail);
  EXPECT_FALSE(copied.template_path.has_value());
  EXPECT_EQ(copied.text, "-- user code\n");
}

TEST(Backend, ProjectFiles) {
  tilc::testing::TempDir dir;
  IrDatabase db;
  ASSERT_EQ(load_fixture("vhdl_backend_example.til", db).failed, frontend::Stage::Ok);
  EmittedProject p = emit_project(db, dir.path(), LinkedMissing::Create);
  std::vector<std::string> names;
  for (const auto& f : p.files) names.push_back(f.name);
  EXPECT_EQ(names, (std::vector<std::string>{"proj.vhd",
                                             "my__example__space__comp2.vhd",
                                             "my__example__space__comp3.vhd"}));
  ASSERT_EQ(p.templates.size(), 1u);
}

TEST(Backend, TestbenchWrapsDevice) {
  IrDatabase db;
  ASSERT_EQ(load_fixture("comp1_example.til", db).failed, frontend::Stage::Ok);
  StreamletId comp1 = find(db, space(), "comp1");
  ProcessWriter w = ProcessWriter::for_port(db, comp1, Name::make("b"), {});
  EXPECT_EQ(w.role(), StreamRole::Sink);
  ProcessWriter a = ProcessWriter::for_port(db, comp1, Name::make("a"), {});
  EXPECT_EQ(a.role(), StreamRole::Source);
  open_transfer(a);
  close_transfer(a);
  std::string tb = emit_testbench(db, comp1, {a.process()});
  EXPECT_NE(tb.find("entity my__example__space__comp1_com_tb is"),
            std::string::npos);
  EXPECT_NE(tb.find("dut: my__example__space__comp1_com port map("),
            std::string::npos);
  EXPECT_NE(tb.find("a_valid <= '1';"), std::string::npos);
  EXPECT_TILC_ERROR(ProcessWriter::for_port(db, comp1, Name::make("zz"), {}),
                    InvalidArgument);
}

}  // namespace
}  // namespace tilc::vhdl

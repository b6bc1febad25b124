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

#ifndef TILC_VHDL_BACKEND_HPP
#define TILC_VHDL_BACKEND_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tilc/ir.hpp"
#include "tilc/lowering.hpp"
#include "tilc/vhdl/syntax.hpp"

namespace tilc::vhdl {

std::string clock_name(const Domain& d);
std::string reset_name(const Domain& d);

/// "<port>_<signal>", or "<port>__<stream>_<signal>" for named streams.
std::string port_signal_name(const tilc::Name& port, const PathName& stream,
                             Signal s);

/// Mode of a signal on a component port: ready runs against the stream, and
/// a reversed stream turns everything around.
Mode signal_mode(PortMode port, Direction stream, Signal s);

/// A single-bit last below complexity 8 is std_logic, like valid and ready.
Type signal_type(const SynthesizedStream& stream, Signal s);

std::string component_name(const PathName& streamlet);

/// Documentation text as comment lines, one per source line, trimmed.
std::vector<std::string> comment_lines(const std::optional<std::string>& doc);

/// Clock and reset ports, then every non-omitted signal of every physical
/// stream of every port.
std::vector<PortDecl> component_ports(const IrDatabase& db, StreamletId id);
Component component(const IrDatabase& db, StreamletId id);
Entity entity(const IrDatabase& db, StreamletId id);
Package package(const IrDatabase& db);

std::string emit_package(const IrDatabase& db);
/// Throws InvalidArgument unless the streamlet has a structural
/// implementation.
std::string emit_structural(const IrDatabase& db, StreamletId id);
/// Entity plus an empty architecture, used as a template for linked
/// implementations.
std::string emit_template(const IrDatabase& db, StreamletId id);

enum class LinkedMissing { Create, Fail };

struct LinkedOutput {
  std::string text;
  /// Set when no architecture existed yet; the template must be written
  /// there.
  std::optional<std::filesystem::path> template_path;
};

/// Copies "<root>/<link>/<path>.vhd" if it exists, otherwise produces the
/// template. A missing link directory is created on write, or rejected with
/// Io under LinkedMissing::Fail.
LinkedOutput emit_linked(const IrDatabase& db, StreamletId id,
                         const std::filesystem::path& root,
                         LinkedMissing missing);

struct EmittedFile {
  std::string name;  ///< Relative to the project directory.
  std::string text;
};

struct EmittedProject {
  std::vector<EmittedFile> files;  ///< Package first, then streamlets.
  std::vector<EmittedFile> templates;  ///< `name` is an absolute path.
};

/// The package plus one architecture file per implemented streamlet.
EmittedProject emit_project(const IrDatabase& db,
                            const std::filesystem::path& root,
                            LinkedMissing missing);

}  // namespace tilc::vhdl

#endif  // TILC_VHDL_BACKEND_HPP

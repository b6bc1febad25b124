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


#ifndef TILC_COMPILE_HPP
#define TILC_COMPILE_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "tilc/frontend/diagnostic.hpp"
#include "tilc/vhdl/backend.hpp"

namespace tilc {

enum class ExitCode : int { Ok = 0, Io = 2, Parse = 3, Eval = 4, Emit = 5 };

struct CompileOptions {
  std::filesystem::path input;
  std::filesystem::path output;
  bool continue_on_ast_errors = false;
  vhdl::LinkedMissing linked_missing = vhdl::LinkedMissing::Create;
  bool color = false;
};

struct CompileResult {
  ExitCode code = ExitCode::Ok;
  std::vector<frontend::Diagnostic> diagnostics;
  /// Diagnostics and failures, ready for stderr.
  std::string errors;
  /// One line for stdout on success.
  std::string summary;
  /// Written files, relative to "<output>/proj".
  std::vector<std::string> files;
};

/// Compiles one TIL file into "<output>/proj". The project directory is
/// assembled next to its final place and renamed into it, so a failed run
/// leaves any previous output untouched. Linked implementation paths are
/// resolved against the directory of the input file.
CompileResult compile(const CompileOptions& options);

}  // namespace tilc

#endif  // TILC_COMPILE_HPP

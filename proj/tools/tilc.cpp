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


#include <unistd.h>

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "tilc/compile.hpp"

int main(int argc, char** argv) {
  tilc::CompileOptions options;
  CLI::App app{"Compile a TIL file into a VHDL project", "tilc"};
  app.add_option("input", options.input, "TIL source file")
      ->required();
  app.add_option("output", options.output,
                 "Directory to place the proj/ directory in")
      ->required();
  app.add_flag("--continue-on-ast-errors", options.continue_on_ast_errors,
               "Evaluate what could be parsed even if parsing failed");
  std::map<std::string, tilc::vhdl::LinkedMissing> missing{
      {"create", tilc::vhdl::LinkedMissing::Create},
      {"fail", tilc::vhdl::LinkedMissing::Fail}};
  app.add_option("--linked-missing", options.linked_missing,
                 "What to do when a linked implementation directory is "
                 "missing")
      ->transform(CLI::CheckedTransformer(missing, CLI::ignore_case))
      ->default_str("create");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  options.color = isatty(STDERR_FILENO) != 0;
  tilc::CompileResult result = tilc::compile(options);
  std::cerr << result.errors;
  if (result.code == tilc::ExitCode::Ok) std::cout << result.summary << "\n";
  return static_cast<int>(result.code);
}

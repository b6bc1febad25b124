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


#ifndef TILC_FRONTEND_EVALUATE_HPP
#define TILC_FRONTEND_EVALUATE_HPP

#include <vector>

#include "tilc/frontend/ast.hpp"
#include "tilc/frontend/diagnostic.hpp"
#include "tilc/ir.hpp"

namespace tilc::frontend {

/// Stores every declaration of `file` in `db`, in order. A failing
/// declaration is reported and skipped; declarations containing parse
/// errors are skipped silently. Warnings flag multi-lane streams that
/// cannot mark lanes inactive.
std::vector<Diagnostic> evaluate(const ast::File& file, IrDatabase& db);

enum class Stage { Ok, Parse, Eval };

struct FrontendResult {
  std::vector<Diagnostic> diagnostics;
  /// The first pass that reported an error.
  Stage failed = Stage::Ok;
};

/// Lexes, parses and evaluates. Each pass only runs if the previous one was
/// clean, unless `continue_on_ast_errors` is set, in which case evaluation
/// also runs over what could be parsed.
FrontendResult run_frontend(const SourceFile& source, IrDatabase& db,
                            bool continue_on_ast_errors = false);

}  // namespace tilc::frontend

#endif  // TILC_FRONTEND_EVALUATE_HPP

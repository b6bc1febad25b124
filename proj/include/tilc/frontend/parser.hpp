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


#ifndef TILC_FRONTEND_PARSER_HPP
#define TILC_FRONTEND_PARSER_HPP

#include <cstddef>
#include <vector>

#include "tilc/frontend/ast.hpp"
#include "tilc/frontend/diagnostic.hpp"
#include "tilc/frontend/lexer.hpp"

namespace tilc::frontend {

struct ParseResult {
  ast::File file;
  std::vector<Diagnostic> diagnostics;
};

/// Recovers per declaration, and per statement inside structural bodies.
/// Declarations that could not be parsed are kept as ast::ErrorDecl.
/// `source_length` positions diagnostics about the end of input.
ParseResult parse(const std::vector<Token>& tokens, std::size_t source_length);

}  // namespace tilc::frontend

#endif  // TILC_FRONTEND_PARSER_HPP

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


#ifndef TILC_FRONTEND_PRINTER_HPP
#define TILC_FRONTEND_PRINTER_HPP

#include <string>

#include "tilc/ir.hpp"

namespace tilc::frontend {

/// The database as TIL source. Per namespace: types, interfaces,
/// streamlets, then implementations. Type declarations are written out in
/// full, and structural implementations of streamlets inline. Parsing and
/// evaluating the result and printing again gives the same text.
std::string print(const IrDatabase& db);

}  // namespace tilc::frontend

#endif  // TILC_FRONTEND_PRINTER_HPP

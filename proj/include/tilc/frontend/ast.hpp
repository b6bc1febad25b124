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


#ifndef TILC_FRONTEND_AST_HPP
#define TILC_FRONTEND_AST_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tilc/frontend/diagnostic.hpp"
#include "tilc/ir.hpp"

namespace tilc::frontend::ast {

struct Ident {
  std::string text;
  Span span;
};

struct Doc {
  std::string text;
  Span span;
};

/// A literal kept as written (numbers, versions, keywords).
struct Literal {
  std::string text;
  Span span;
};

struct TypeExpr;
using TypeExprPtr = std::unique_ptr<TypeExpr>;

struct FieldExpr {
  Ident name;
  TypeExprPtr type;
};

struct NullExpr {};
struct BitsExpr {
  Literal count;
};
struct GroupExpr {
  std::vector<FieldExpr> fields;
};
struct UnionExpr {
  std::vector<FieldExpr> fields;
};
/// Properties as written; which are required is decided on evaluation.
struct StreamExpr {
  TypeExprPtr data;
  std::optional<Literal> throughput;
  std::optional<Literal> dimensionality;
  std::optional<Literal> synchronicity;
  std::optional<Literal> complexity;
  std::optional<Literal> direction;
  TypeExprPtr user;
  std::optional<Literal> keep;
};
struct TypeRef {
  Ident name;
};

struct TypeExpr {
  std::variant<NullExpr, BitsExpr, GroupExpr, UnionExpr, StreamExpr, TypeRef>
      node;
  Span span;
};

struct PortExpr {
  std::optional<Doc> doc;
  Ident name;
  PortMode mode = PortMode::In;
  TypeExprPtr type;
  std::optional<Ident> domain;
  Span span;
};

struct InlineInterface {
  std::vector<Ident> domains;
  std::vector<PortExpr> ports;
};
struct InterfaceRef {
  Ident name;
};
struct InterfaceExpr {
  std::variant<InlineInterface, InterfaceRef> node;
  Span span;
};

struct DomainAssignExpr {
  std::optional<Ident> child;
  Ident parent;
};

struct InstanceStmt {
  Ident name;
  Ident streamlet;
  std::vector<DomainAssignExpr> domains;
};

struct EndpointExpr {
  std::optional<Ident> instance;
  Ident port;
  Span span;
};

struct ConnectionStmt {
  EndpointExpr left;
  EndpointExpr right;
};

/// A statement that failed to parse and was skipped.
struct ErrorStmt {};

struct StructStmt {
  std::variant<InstanceStmt, ConnectionStmt, ErrorStmt> node;
  Span span;
};

struct LinkedImpl {
  Literal path;
};
struct StructuralImpl {
  std::vector<StructStmt> statements;
};
struct ImplRef {
  Ident name;
};

struct ImplExpr {
  std::optional<Doc> doc;
  std::variant<LinkedImpl, StructuralImpl, ImplRef> node;
  Span span;
};

struct TypeDecl {
  TypeExprPtr type;
};
struct InterfaceDecl {
  InterfaceExpr interface;
};
struct ImplDecl {
  InterfaceExpr interface;
  ImplExpr impl;
};
struct StreamletDecl {
  InterfaceExpr interface;
  std::optional<ImplExpr> impl;
};
/// A declaration that failed to parse and was skipped.
struct ErrorDecl {};

struct Decl {
  std::optional<Doc> doc;
  Ident name;
  std::variant<TypeDecl, InterfaceDecl, ImplDecl, StreamletDecl, ErrorDecl>
      node;
  Span span;
};

struct Namespace {
  std::vector<Ident> path;
  std::vector<Decl> decls;
  Span span;
};

struct File {
  std::vector<Namespace> namespaces;
};

}  // namespace tilc::frontend::ast

#endif  // TILC_FRONTEND_AST_HPP

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


#include "tilc/frontend/evaluate.hpp"

#include <charconv>
#include <limits>
#include <unordered_set>

#include "tilc/error.hpp"
#include "tilc/frontend/lexer.hpp"
#include "tilc/frontend/parser.hpp"
#include "tilc/lowering.hpp"

namespace tilc::frontend {

namespace {

using namespace ast;

/// An Error tied to the source it came from.
struct Located {
  Error error;
  Span span;
};

/// Unwinds out of a declaration that already has a parse diagnostic.
struct Skip {};

template <class F>
auto at(Span span, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Located{e, span};
  }
}

[[noreturn]] void fail(ErrorKind kind, std::string message, Span span) {
  throw Located{Error(kind, std::move(message)), span};
}

std::uint32_t small_number(const Literal& l, std::string_view what) {
  std::uint32_t v = 0;
  auto [end, ec] = std::from_chars(l.text.data(), l.text.data() + l.text.size(), v);
  if (ec != std::errc() || end != l.text.data() + l.text.size()) {
    fail(ErrorKind::InvalidArgument,
         std::string(what) + " must be a whole number below 2^32, got " + l.text,
         l.span);
  }
  return v;
}

bool has_error_statement(const ImplExpr& e) {
  const auto* s = std::get_if<StructuralImpl>(&e.node);
  if (!s) return false;
  for (const auto& stmt : s->statements) {
    if (std::holds_alternative<ErrorStmt>(stmt.node)) return true;
  }
  return false;
}

std::optional<std::string> doc_text(const std::optional<Doc>& d) {
  if (!d) return std::nullopt;
  return d->text;
}

class Evaluator {
 public:
  explicit Evaluator(IrDatabase& db) : db_(db) {}

  std::vector<Diagnostic> run(const File& file) {
    for (const auto& ns : file.namespaces) namespace_decl(ns);
    return std::move(diags_);
  }

 private:
  void report(const Located& l) {
    diags_.push_back(Diagnostic{Severity::Error,
                                std::string(to_string(l.error.kind())),
                                l.error.what(), l.span, {},
                                l.error.details()});
  }

  Name name(const Ident& id) {
    return at(id.span, [&] { return Name::make(id.text); });
  }

  void namespace_decl(const Namespace& ns) {
    std::vector<Name> segments;
    try {
      for (const auto& seg : ns.path) segments.push_back(name(seg));
    } catch (const Located& l) {
      report(l);
      return;
    }
    ns_ = PathName(std::move(segments));
    db_.add_namespace(ns_);
    for (const auto& d : ns.decls) {
      try {
        decl(d);
      } catch (const Located& l) {
        report(l);
      } catch (const Skip&) {
      }
    }
  }

  void decl(const Decl& d) {
    if (std::holds_alternative<ErrorDecl>(d.node)) return;
    if (const auto* t = std::get_if<TypeDecl>(&d.node)) {
      Name n = name(d.name);
      TypeId id = type(*t->type);
      at(d.name.span, [&] { db_.declare_type(ns_, n, id); });
    } else if (const auto* i = std::get_if<InterfaceDecl>(&d.node)) {
      Name n = name(d.name);
      Interface iface = interface(i->interface, doc_text(d.doc));
      at(d.name.span, [&] { db_.declare_interface(ns_, n, std::move(iface)); });
    } else if (const auto* im = std::get_if<ImplDecl>(&d.node)) {
      if (has_error_statement(im->impl)) throw Skip{};
      Name n = name(d.name);
      Interface iface = interface(im->interface, std::nullopt);
      Implementation impl = implementation(im->impl, iface);
      if (!im->impl.doc && d.doc) impl.documentation = d.doc->text;
      at(d.name.span, [&] {
        db_.declare_implementation(ns_, n, std::move(iface), std::move(impl));
      });
    } else if (const auto* s = std::get_if<StreamletDecl>(&d.node)) {
      if (s->impl && has_error_statement(*s->impl)) throw Skip{};
      Name n = name(d.name);
      Interface iface = interface(s->interface, std::nullopt);
      std::optional<Implementation> impl;
      if (s->impl) impl = implementation(*s->impl, iface);
      Span where = s->impl ? s->impl->span : d.name.span;
      at(where, [&] {
        db_.declare_streamlet(ns_, n, std::move(iface), std::move(impl),
                              doc_text(d.doc));
      });
    }
  }

  TypeId type(const TypeExpr& t) {
    TypeInterner& types = db_.types();
    if (std::holds_alternative<NullExpr>(t.node)) return types.null();
    if (const auto* b = std::get_if<BitsExpr>(&t.node)) {
      std::uint32_t count = small_number(b->count, "bit count");
      return at(t.span, [&] { return types.bits(count); });
    }
    if (const auto* g = std::get_if<GroupExpr>(&t.node)) {
      GroupType out{fields(g->fields)};
      return at(t.span, [&] { return types.intern(out); });
    }
    if (const auto* u = std::get_if<UnionExpr>(&t.node)) {
      UnionType out{fields(u->fields)};
      return at(t.span, [&] { return types.intern(out); });
    }
    if (const auto* s = std::get_if<StreamExpr>(&t.node)) {
      return stream(*s, t.span);
    }
    const auto& ref = std::get<TypeRef>(t.node);
    Name n = name(ref.name);
    auto found = db_.find_type(ns_, n);
    if (!found) {
      fail(ErrorKind::UnknownIdentifier, "unknown type `" + n.str() + "`",
           ref.name.span);
    }
    return *found;
  }

  std::vector<Field> fields(const std::vector<FieldExpr>& in) {
    std::vector<Field> out;
    for (const auto& f : in) out.push_back(Field{name(f.name), type(*f.type)});
    return out;
  }

  TypeId stream(const StreamExpr& s, Span span) {
    auto require = [&](bool present, std::string_view property) {
      if (!present) {
        fail(ErrorKind::InvalidType,
             "Stream is missing required property `" + std::string(property) +
                 "`",
             span);
      }
    };
    require(s.data != nullptr, "data");
    require(s.dimensionality.has_value(), "dimensionality");
    require(s.synchronicity.has_value(), "synchronicity");
    require(s.complexity.has_value(), "complexity");

    StreamType out;
    out.data = type(*s.data);
    if (s.throughput) {
      out.throughput = at(s.throughput->span, [&] {
        return Throughput::parse(s.throughput->text);
      });
    }
    out.dimensionality = small_number(*s.dimensionality, "dimensionality");
    const std::string& sync = s.synchronicity->text;
    out.synchronicity = sync == "Sync"      ? Synchronicity::Sync
                        : sync == "Flatten" ? Synchronicity::Flatten
                        : sync == "Desync"  ? Synchronicity::Desync
                                            : Synchronicity::FlatDesync;
    out.complexity = at(s.complexity->span, [&] {
      return Complexity::parse(s.complexity->text);
    });
    if (s.direction) {
      out.direction = s.direction->text == "Reverse" ? Direction::Reverse
                                                     : Direction::Forward;
    }
    out.user = s.user ? type(*s.user) : db_.types().null();
    out.keep = s.keep && s.keep->text == "true";
    return at(span, [&] { return db_.types().intern(out); });
  }

  Interface interface(const InterfaceExpr& e,
                      std::optional<std::string> documentation) {
    if (const auto* ref = std::get_if<InterfaceRef>(&e.node)) {
      Name n = name(ref->name);
      if (auto id = db_.find_interface(ns_, n)) {
        return db_.interface(*id).interface;
      }
      if (auto id = db_.find_streamlet(ns_, n)) {
        return db_.streamlet(*id).interface;
      }
      fail(ErrorKind::UnknownIdentifier,
           "unknown interface or streamlet `" + n.str() + "`", ref->name.span);
    }
    const auto& inl = std::get<InlineInterface>(e.node);
    std::vector<Name> domains;
    for (const auto& d : inl.domains) domains.push_back(name(d));
    std::vector<Port> ports;
    std::vector<Diagnostic> warnings;
    for (const auto& p : inl.ports) {
      Port port{name(p.name), p.mode, type(*p.type), Domain::default_domain(),
                doc_text(p.doc)};
      if (p.domain) port.domain = Domain::named(name(*p.domain));
      // Lowering here puts split errors on the port that caused them.
      auto streams = at(p.span, [&] {
        return db_.physical_streams(port.stream_type);
      });
      // One warning per stream type is enough.
      bool fresh = warned_.insert(port.stream_type).second;
      for (const auto& ss : *streams) {
        if (!fresh) break;
        if (auto w = lane_activity_warning(ss.stream)) {
          warnings.push_back(Diagnostic{Severity::Warning, "LaneActivity",
                                        "port `" + port.name.str() + "`: " + *w,
                                        p.span, {}, {}});
        }
      }
      ports.push_back(std::move(port));
    }
    Interface out = at(e.span, [&] {
      return Interface::make(std::move(domains), std::move(ports), db_.types(),
                             std::move(documentation));
    });
    for (auto& w : warnings) diags_.push_back(std::move(w));
    return out;
  }

  Implementation implementation(const ImplExpr& e, const Interface& iface) {
    if (const auto* l = std::get_if<LinkedImpl>(&e.node)) {
      LinkedImplementation link =
          at(l->path.span, [&] { return make_linked(l->path.text); });
      return Implementation{std::move(link), doc_text(e.doc)};
    }
    if (const auto* ref = std::get_if<ImplRef>(&e.node)) {
      Name n = name(ref->name);
      auto id = db_.find_implementation(ns_, n);
      if (!id) {
        fail(ErrorKind::UnknownIdentifier,
             "unknown implementation `" + n.str() + "`", ref->name.span);
      }
      const ImplementationDecl& decl = db_.implementation(*id);
      if (!decl.interface.same_contract(iface)) {
        fail(ErrorKind::InterfaceMismatch,
             "implementation `" + n.str() +
                 "` was declared for a different interface",
             ref->name.span);
      }
      Implementation out = decl.implementation;
      if (e.doc) out.documentation = e.doc->text;
      return out;
    }
    const auto& body = std::get<StructuralImpl>(e.node);
    StructuralImplementation s(iface);
    // Instances first, so connections may name instances declared below
    // them.
    for (const auto& stmt : body.statements) {
      const auto* inst = std::get_if<InstanceStmt>(&stmt.node);
      if (!inst) continue;
      Name n = name(inst->name);
      Name target = name(inst->streamlet);
      auto id = db_.find_streamlet(ns_, target);
      if (!id) {
        fail(ErrorKind::UnknownIdentifier,
             "unknown streamlet `" + target.str() + "`", inst->streamlet.span);
      }
      DomainAssignment assignment;
      for (const auto& a : inst->domains) {
        DomainAssignmentEntry entry{std::nullopt, name(a.parent)};
        if (a.child) entry.child = name(*a.child);
        assignment.push_back(std::move(entry));
      }
      at(stmt.span, [&] {
        s.instantiate(db_, std::move(n), *id, std::move(assignment));
      });
    }
    for (const auto& stmt : body.statements) {
      const auto* c = std::get_if<ConnectionStmt>(&stmt.node);
      if (!c) continue;
      Endpoint left = endpoint(c->left);
      Endpoint right = endpoint(c->right);
      at(stmt.span, [&] { s.connect(db_, std::move(left), std::move(right)); });
    }
    at(e.span, [&] { s.validate(db_); });
    return Implementation{std::move(s), doc_text(e.doc)};
  }

  Endpoint endpoint(const EndpointExpr& e) {
    Endpoint out{std::nullopt, name(e.port)};
    if (e.instance) out.instance = name(*e.instance);
    return out;
  }

  IrDatabase& db_;
  PathName ns_;
  std::vector<Diagnostic> diags_;
  std::unordered_set<TypeId> warned_;
};

}  // namespace

std::vector<Diagnostic> evaluate(const File& file, IrDatabase& db) {
  return Evaluator(db).run(file);
}

FrontendResult run_frontend(const SourceFile& source, IrDatabase& db,
                            bool continue_on_ast_errors) {
  FrontendResult out;
  LexResult lexed = lex(source.text());
  out.diagnostics = std::move(lexed.diagnostics);
  if (has_errors(out.diagnostics)) {
    out.failed = Stage::Parse;
    if (!continue_on_ast_errors) return out;
  }
  ParseResult parsed = parse(lexed.tokens, source.text().size());
  if (has_errors(parsed.diagnostics)) out.failed = Stage::Parse;
  for (auto& d : parsed.diagnostics) out.diagnostics.push_back(std::move(d));
  if (out.failed != Stage::Ok && !continue_on_ast_errors) return out;
  auto evaluated = evaluate(parsed.file, db);
  if (has_errors(evaluated) && out.failed == Stage::Ok) out.failed = Stage::Eval;
  for (auto& d : evaluated) out.diagnostics.push_back(std::move(d));
  return out;
}

}  // namespace tilc::frontend

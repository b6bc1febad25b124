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


#include "tilc/frontend/printer.hpp"

namespace tilc::frontend {

namespace {

class Printer {
 public:
  explicit Printer(const IrDatabase& db) : db_(db) {}

  std::string run() {
    for (const auto& ns : db_.namespaces()) namespace_entry(ns);
    return std::move(out_);
  }

 private:
  void line(int indent, const std::string& text) {
    out_ += std::string(static_cast<std::size_t>(indent) * 4, ' ');
    out_ += text;
    out_ += '\n';
  }

  void doc(int indent, const std::optional<std::string>& d) {
    if (d) line(indent, "#" + *d + "#");
  }

  void namespace_entry(const NamespaceEntry& ns) {
    std::string path;
    for (const auto& seg : ns.path.segments()) {
      if (!path.empty()) path += "::";
      path += seg.str();
    }
    line(0, "namespace " + path + " {");
    for (const auto& t : ns.types) {
      line(1, "type " + t.name.str() + " = " + describe(t.type, db_.types()) +
                  ";");
    }
    for (InterfaceId id : ns.interfaces) {
      const InterfaceDecl& d = db_.interface(id);
      doc(1, d.interface.documentation());
      interface(1, "interface " + d.name.str() + " = ", d.interface);
      out_ += ";\n";
    }
    for (StreamletId id : ns.streamlets) {
      const Streamlet& s = db_.streamlet(id);
      doc(1, s.documentation);
      interface(1, "streamlet " + s.name.str() + " = ", s.interface);
      if (s.implementation) {
        out_ += " {\n";
        out_ += std::string(8, ' ') + "impl: ";
        if (s.implementation->documentation) {
          out_ += "#" + *s.implementation->documentation + "# ";
        }
        body(2, *s.implementation);
        out_ += "\n    }";
      }
      out_ += ";\n";
    }
    for (ImplementationId id : ns.implementations) {
      const ImplementationDecl& d = db_.implementation(id);
      doc(1, d.implementation.documentation);
      interface(1, "impl " + d.name.str() + " = ", d.interface);
      out_ += ' ';
      body(1, d.implementation);
      out_ += ";\n";
    }
    line(0, "}");
  }

  /// Writes `head` and the interface, leaving the cursor after its `)`.
  void interface(int indent, const std::string& head, const Interface& iface) {
    out_ += std::string(static_cast<std::size_t>(indent) * 4, ' ') + head;
    bool named = !iface.has_default_domain();
    if (named) {
      out_ += '<';
      for (std::size_t i = 0; i < iface.domains().size(); ++i) {
        if (i) out_ += ", ";
        out_ += "'" + iface.domains()[i].name->str();
      }
      out_ += '>';
    }
    if (iface.ports().empty()) {
      out_ += "()";
      return;
    }
    out_ += "(\n";
    for (const auto& p : iface.ports()) {
      doc(indent + 1, p.documentation);
      std::string text = p.name.str() + ": " + std::string(to_string(p.mode)) +
                         " " + describe(p.stream_type, db_.types());
      if (named) text += " '" + p.domain.name->str();
      line(indent + 1, text + ",");
    }
    out_ += std::string(static_cast<std::size_t>(indent) * 4, ' ') + ")";
  }

  /// A path string or a `{ ... }` body; documentation is written by the
  /// caller.
  void body(int indent, const Implementation& impl) {
    if (const auto* l = impl.linked()) {
      out_ += "\"" + l->path + "\"";
      return;
    }
    const StructuralImplementation& s = *impl.structural();
    out_ += "{\n";
    for (const auto& inst : s.instances()) {
      std::string text = inst.name.str() + " = " +
                         db_.streamlet(inst.streamlet).name.str();
      if (!inst.assignment.empty()) {
        text += '<';
        for (std::size_t i = 0; i < inst.assignment.size(); ++i) {
          const auto& a = inst.assignment[i];
          if (i) text += ", ";
          if (a.child) text += "'" + a.child->str() + " = ";
          text += "'" + a.parent.str();
        }
        text += '>';
      }
      line(indent + 1, text + ";");
    }
    for (const auto& c : s.connections()) {
      line(indent + 1, c.left.display() + " -- " + c.right.display() + ";");
    }
    out_ += std::string(static_cast<std::size_t>(indent) * 4, ' ') + "}";
  }

  const IrDatabase& db_;
  std::string out_;
};

}  // namespace

std::string print(const IrDatabase& db) { return Printer(db).run(); }

}  // namespace tilc::frontend

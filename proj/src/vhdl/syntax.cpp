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

#include "tilc/vhdl/syntax.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

#include "tilc/error.hpp"
#include "tilc/name.hpp"

namespace tilc::vhdl {

std::string_view to_string(Mode m) { return m == Mode::In ? "in" : "out"; }

std::string Type::render() const {
  if (!vector) return "std_logic";
  return "std_logic_vector(" + std::to_string(width - 1) + " downto 0)";
}

const Component* Package::find(std::string_view component) const {
  std::string key = ascii_fold(component);
  for (const auto& c : components) {
    if (ascii_fold(c.name) == key) return &c;
  }
  return nullptr;
}

std::string Ref::render() const {
  if (!slice) return id;
  return id + "(" + std::to_string(slice->high) + " downto " +
         std::to_string(slice->low) + ")";
}

std::string Expr::render() const {
  switch (kind) {
    case Kind::Ref: return ref.render();
    case Kind::Bit: return "'" + text + "'";
    case Kind::BitString: return "\"" + text + "\"";
    case Kind::Others: return "(others => '" + text + "')";
    case Kind::ToUnsigned:
      return "std_logic_vector(to_unsigned(" + std::to_string(value) + ", " +
             std::to_string(width) + "))";
  }
  return {};
}

namespace {

void comments(std::string& out, const std::vector<std::string>& lines,
              std::string_view indent) {
  for (const auto& l : lines) {
    out += indent;
    out += l.empty() ? "--" : "-- " + l;
    out += '\n';
  }
}

void port_clause(std::string& out, const std::vector<PortDecl>& ports,
                 std::string_view indent) {
  std::string inner = std::string(indent) + "  ";
  out += std::string(indent) + "port (\n";
  for (std::size_t i = 0; i < ports.size(); ++i) {
    const auto& p = ports[i];
    comments(out, p.comments, inner);
    out += inner + p.name + " : " + std::string(to_string(p.mode)) + " " +
           p.type.render();
    out += i + 1 < ports.size() ? ";\n" : "\n";
  }
  out += std::string(indent) + ");\n";
}

std::string statement(const Statement& s) {
  if (auto* a = std::get_if<SignalAssign>(&s)) {
    return a->target.render() + " <= " + a->value.render() + ";";
  }
  if (auto* w = std::get_if<WaitUntil>(&s)) {
    std::string out = "wait until rising_edge(" + w->clock + ")";
    if (w->condition) {
      out += " and " + w->condition->render() + " = '" + w->level + "'";
    }
    return out + ";";
  }
  const auto& a = std::get<Assert>(s);
  return "assert " + a.subject.render() + " = " + a.expected.render() +
         " report \"" + a.message + "\";";
}

}  // namespace

std::string render(const Package& p) {
  std::string out = "package " + p.name + " is\n\n";
  for (const auto& c : p.components) {
    comments(out, c.comments, "  ");
    out += "  component " + c.name + "\n";
    if (!c.ports.empty()) port_clause(out, c.ports, "    ");
    out += "  end component;\n\n";
  }
  out += "end " + p.name + ";\n";
  return out;
}

std::string render(const Entity& e) {
  std::string out;
  comments(out, e.comments, "");
  out += "entity " + e.name + " is\n";
  if (!e.ports.empty()) port_clause(out, e.ports, "  ");
  out += "end " + e.name + ";\n";
  return out;
}

std::string render(const Process& p, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  std::string out = pad + "process is\n" + pad + "begin\n";
  for (const auto& s : p.body) out += pad + "  " + statement(s) + "\n";
  out += pad + "end process";
  if (p.label) out += " " + *p.label;
  out += ";\n";
  return out;
}

std::string render(const Architecture& a) {
  std::string out;
  comments(out, a.comments, "");
  out += "architecture " + a.name + " of " + a.entity + " is\n";
  for (const auto& s : a.signals) {
    out += "  signal " + s.name + " : " + s.type.render() + ";\n";
  }
  out += "begin\n";
  for (const auto& inst : a.instances) {
    out += "  " + inst.label + ": " + inst.component;
    if (inst.ports.empty()) {
      out += ";\n";
      continue;
    }
    out += " port map(\n";
    for (std::size_t i = 0; i < inst.ports.size(); ++i) {
      out += "    " + inst.ports[i].formal + " => " + inst.ports[i].actual;
      out += i + 1 < inst.ports.size() ? ",\n" : "\n";
    }
    out += "  );\n";
  }
  for (const auto& s : a.assignments) out += "  " + statement(s) + "\n";
  for (const auto& p : a.processes) out += render(p, 2);
  out += "end " + a.name + ";\n";
  return out;
}

std::string render(const DesignFile& f) {
  std::string out = "library ieee;\nuse ieee.std_logic_1164.all;\n";
  if (f.numeric_std) out += "use ieee.numeric_std.all;\n";
  out += "\n";
  if (f.work_package) {
    out += "library work;\nuse work." + *f.work_package + ".all;\n\n";
  }
  std::vector<std::string> units;
  if (f.package) units.push_back(render(*f.package));
  if (f.entity) units.push_back(render(*f.entity));
  if (f.architecture) units.push_back(render(*f.architecture));
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (i) out += "\n";
    out += units[i];
  }
  return out;
}

namespace {

constexpr std::string_view kReserved[] = {
    "abs",       "access",    "after",     "alias",     "all",
    "and",       "architecture", "array",  "assert",    "attribute",
    "begin",     "block",     "body",      "buffer",    "bus",
    "case",      "component", "configuration", "constant", "disconnect",
    "downto",    "else",      "elsif",     "end",       "entity",
    "exit",      "file",      "for",       "function",  "generate",
    "generic",   "group",     "guarded",   "if",        "impure",
    "in",        "inertial",  "inout",     "is",        "label",
    "library",   "linkage",   "literal",   "loop",      "map",
    "mod",       "nand",      "new",       "next",      "nor",
    "not",       "null",      "of",        "on",        "open",
    "or",        "others",    "out",       "package",   "port",
    "postponed", "procedure", "process",   "pure",      "range",
    "record",    "register",  "reject",    "rem",       "report",
    "return",    "rol",       "ror",       "select",    "severity",
    "signal",    "shared",    "sla",       "sll",       "sra",
    "srl",       "subtype",   "then",      "to",        "transport",
    "type",      "unaffected", "units",    "until",     "use",
    "variable",  "wait",      "when",      "while",     "with",
    "xnor",      "xor"};

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::InvalidVhdl, what);
}

void check_identifier(std::string_view id, std::string_view what) {
  if (auto why = identifier_violation(id)) {
    invalid(std::string(what) + " \"" + std::string(id) + "\": " + *why);
  }
}

struct Symbol {
  Type type;
  std::optional<Mode> mode;  ///< Set for ports.
};

class Scope {
 public:
  void declare(const std::string& name, Symbol s, std::string_view what) {
    check_identifier(name, what);
    if (!symbols_.emplace(ascii_fold(name), s).second) {
      invalid(std::string(what) + " \"" + name + "\" is declared twice");
    }
  }
  const Symbol& get(const std::string& name) const {
    auto it = symbols_.find(ascii_fold(name));
    if (it == symbols_.end()) invalid("\"" + name + "\" is not declared");
    return it->second;
  }

 private:
  std::map<std::string, Symbol> symbols_;
};

void check_ports(const std::vector<PortDecl>& ports, Scope& scope) {
  for (const auto& p : ports) {
    if (p.type.vector && p.type.width == 0) {
      invalid("port \"" + p.name + "\" has an empty vector type");
    }
    scope.declare(p.name, Symbol{p.type, p.mode}, "port");
  }
}

// Width and vector-ness of a reference after slicing.
Type reference_type(const Scope& scope, const Ref& r) {
  const Symbol& s = scope.get(r.id);
  if (!r.slice) return s.type;
  if (!s.type.vector) invalid("\"" + r.id + "\" is not a vector and cannot be sliced");
  if (r.slice->low > r.slice->high || r.slice->high >= s.type.width) {
    invalid("slice " + r.render() + " is outside " + s.type.render());
  }
  return Type::logic_vector(r.slice->width());
}

void check_value(const Scope& scope, const Type& target, const Expr& v,
                 const std::string& where) {
  auto fail = [&](const std::string& why) { invalid(where + ": " + why); };
  switch (v.kind) {
    case Expr::Kind::Ref:
      if (!(reference_type(scope, v.ref) == target)) {
        fail("width of " + v.ref.render() + " does not match");
      }
      break;
    case Expr::Kind::Bit:
      if (target.vector) fail("a bit literal needs a std_logic target");
      if (v.text != "0" && v.text != "1") fail("invalid bit literal");
      break;
    case Expr::Kind::BitString:
      if (!target.vector || v.text.size() != target.width) {
        fail("literal \"" + v.text + "\" does not match " + target.render());
      }
      if (v.text.find_first_not_of("01") != std::string::npos) {
        fail("invalid bit string literal");
      }
      break;
    case Expr::Kind::Others:
      if (!target.vector) fail("an aggregate needs a vector target");
      break;
    case Expr::Kind::ToUnsigned:
      if (!target.vector || v.width != target.width) {
        fail("conversion width does not match " + target.render());
      }
      if (v.width < 64 && v.value >= (std::uint64_t{1} << v.width)) {
        fail("value does not fit " + std::to_string(v.width) + " bits");
      }
      break;
  }
}

void check_assign(const Scope& scope, const SignalAssign& a) {
  const Symbol& s = scope.get(a.target.id);
  if (s.mode == Mode::In) {
    invalid("input port \"" + a.target.id + "\" cannot be assigned");
  }
  check_value(scope, reference_type(scope, a.target), a.value,
              "assignment to " + a.target.render());
}

}  // namespace

std::optional<std::string> identifier_violation(std::string_view id) {
  if (id.empty()) return "identifier is empty";
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  if (!alpha(id.front())) return "identifier must start with a letter";
  for (char c : id) {
    if (!alpha(c) && !(c >= '0' && c <= '9') && c != '_') {
      return "identifier may only contain letters, digits and underscores";
    }
  }
  if (id.back() == '_') return "identifier ends with an underscore";
  if (id.find("___") != std::string_view::npos) {
    return "identifier contains three consecutive underscores";
  }
  std::string folded = ascii_fold(id);
  if (std::find(std::begin(kReserved), std::end(kReserved), folded) != std::end(kReserved)) {
    return "\"" + folded + "\" is a reserved word";
  }
  return std::nullopt;
}

void validate(const Package& p) {
  check_identifier(p.name, "package");
  std::set<std::string> names;
  for (const auto& c : p.components) {
    check_identifier(c.name, "component");
    if (!names.insert(ascii_fold(c.name)).second) {
      invalid("component \"" + c.name + "\" is declared twice");
    }
    Scope scope;
    check_ports(c.ports, scope);
  }
}

void validate(const Entity& e) {
  check_identifier(e.name, "entity");
  Scope scope;
  check_ports(e.ports, scope);
}

void validate(const Architecture& a, const Entity& e, const Package* package) {
  check_identifier(a.name, "architecture");
  if (ascii_fold(a.entity) != ascii_fold(e.name)) {
    invalid("architecture " + a.name + " is not of entity " + e.name);
  }
  Scope scope;
  check_ports(e.ports, scope);
  for (const auto& s : a.signals) {
    if (s.type.vector && s.type.width == 0) {
      invalid("signal \"" + s.name + "\" has an empty vector type");
    }
    scope.declare(s.name, Symbol{s.type, std::nullopt}, "signal");
  }

  std::set<std::string> labels;
  for (const auto& inst : a.instances) {
    check_identifier(inst.label, "instance label");
    if (!labels.insert(ascii_fold(inst.label)).second) {
      invalid("instance label \"" + inst.label + "\" is used twice");
    }
    const Component* comp = package ? package->find(inst.component) : nullptr;
    if (package && !comp) {
      invalid("instance " + inst.label + " refers to unknown component " +
              inst.component);
    }
    std::set<std::string> formals;
    for (const auto& assoc : inst.ports) {
      if (!formals.insert(ascii_fold(assoc.formal)).second) {
        invalid("formal \"" + assoc.formal + "\" of " + inst.label +
                " is associated twice");
      }
      const Type& actual = scope.get(assoc.actual).type;
      if (!comp) continue;
      auto it = std::find_if(comp->ports.begin(), comp->ports.end(),
                             [&](const PortDecl& p) {
                               return ascii_fold(p.name) == ascii_fold(assoc.formal);
                             });
      if (it == comp->ports.end()) {
        invalid(inst.component + " has no port \"" + assoc.formal + "\"");
      }
      if (!(it->type == actual)) {
        invalid("port map " + inst.label + "." + assoc.formal +
                " => " + assoc.actual + " has mismatched widths");
      }
    }
    if (comp && formals.size() != comp->ports.size()) {
      invalid("instance " + inst.label + " leaves ports of " + inst.component +
              " unassociated");
    }
  }

  for (const auto& s : a.assignments) check_assign(scope, s);
  for (const auto& p : a.processes) {
    if (p.label) check_identifier(*p.label, "process label");
    for (const auto& st : p.body) {
      if (auto* as = std::get_if<SignalAssign>(&st)) {
        check_assign(scope, *as);
      } else if (auto* w = std::get_if<WaitUntil>(&st)) {
        if (scope.get(w->clock).type.vector) {
          invalid("clock \"" + w->clock + "\" must be a std_logic");
        }
        if (w->condition && reference_type(scope, *w->condition).vector) {
          invalid("wait condition " + w->condition->render() +
                  " must be a std_logic");
        }
      } else {
        const auto& at = std::get<Assert>(st);
        check_value(scope, reference_type(scope, at.subject), at.expected,
                    "assertion on " + at.subject.render());
      }
    }
  }
}

void validate(const DesignFile& f, const Package* package) {
  if (f.package) validate(*f.package);
  if (f.entity) validate(*f.entity);
  if (f.architecture) {
    if (!f.entity) invalid("architecture without an entity");
    validate(*f.architecture, *f.entity, package ? package : f.package ? &*f.package : nullptr);
  }
}

}  // namespace tilc::vhdl

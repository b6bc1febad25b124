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

#include "tilc/vhdl/backend.hpp"

#include <fstream>
#include <sstream>

#include "tilc/error.hpp"

namespace tilc::vhdl {

namespace fs = std::filesystem;

std::string clock_name(const Domain& d) {
  return d.is_default() ? "clk" : d.name->str() + "__clk";
}

std::string reset_name(const Domain& d) {
  return d.is_default() ? "rst" : d.name->str() + "__rst";
}

std::string port_signal_name(const tilc::Name& port, const PathName& stream,
                             Signal s) {
  std::string out = port.str();
  if (!stream.empty()) out += "__" + stream.render();
  return out + "_" + std::string(to_string(s));
}

Mode signal_mode(PortMode port, Direction stream, Signal s) {
  Mode m = port == PortMode::In ? Mode::In : Mode::Out;
  if (stream == Direction::Reverse) m = flipped(m);
  return s == Signal::Ready ? flipped(m) : m;
}

Type signal_type(const SynthesizedStream& stream, Signal s) {
  switch (s) {
    case Signal::Valid:
    case Signal::Ready:
      return Type::logic();
    case Signal::Last:
      if (stream.signals.last == 1 && stream.stream.complexity.major() < 8) {
        return Type::logic();
      }
      break;
    default:
      break;
  }
  return Type::logic_vector(stream.signals.width(s));
}

std::string component_name(const PathName& streamlet) {
  return streamlet.render() + "_com";
}

std::vector<std::string> comment_lines(const std::optional<std::string>& doc) {
  std::vector<std::string> out;
  if (!doc) return out;
  std::istringstream in(*doc);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(first == std::string::npos
                      ? std::string()
                      : line.substr(first, last - first + 1));
  }
  // Blank lines at either end carry nothing.
  while (!out.empty() && out.back().empty()) out.pop_back();
  while (!out.empty() && out.front().empty()) out.erase(out.begin());
  return out;
}

std::vector<PortDecl> component_ports(const IrDatabase& db, StreamletId id) {
  const Interface& iface = db.streamlet(id).interface;
  std::vector<PortDecl> out;
  for (const auto& d : iface.domains()) {
    out.push_back(PortDecl{clock_name(d), Mode::In, Type::logic(), {}});
    out.push_back(PortDecl{reset_name(d), Mode::In, Type::logic(), {}});
  }
  for (const auto& port : iface.ports()) {
    auto docs = comment_lines(port.documentation);
    for (const auto& ss : *db.port_physical_streams(port)) {
      for (Signal s : ss.signals.present()) {
        out.push_back(PortDecl{
            port_signal_name(port.name, ss.stream.name, s),
            signal_mode(port.mode, ss.stream.direction, s),
            signal_type(ss, s), std::move(docs)});
        docs.clear();
      }
    }
  }
  return out;
}

Component component(const IrDatabase& db, StreamletId id) {
  return Component{component_name(db.streamlet_path(id)),
                   component_ports(db, id),
                   comment_lines(db.streamlet(id).documentation)};
}

Entity entity(const IrDatabase& db, StreamletId id) {
  return Entity{component_name(db.streamlet_path(id)), component_ports(db, id),
                comment_lines(db.streamlet(id).documentation)};
}

Package package(const IrDatabase& db) {
  Package p{std::string(IrDatabase::kProjectName), {}};
  for (const auto& [path, id] : db.all_streamlets()) {
    p.components.push_back(component(db, id));
  }
  return p;
}

std::string emit_package(const IrDatabase& db) {
  DesignFile f;
  f.package = package(db);
  validate(f, nullptr);
  return render(f);
}

namespace {

struct ResolvedEnd {
  const Port* port;
  std::string prefix;  ///< "<instance>__" for instance ports.
  bool is_source;
};

ResolvedEnd resolve_end(const IrDatabase& db,
                        const StructuralImplementation& impl,
                        const tilc::Endpoint& e) {
  if (!e.instance) {
    const Port* p = impl.parent().find_port(e.port);
    return ResolvedEnd{p, "", p->mode == PortMode::In};
  }
  const Instance* inst = impl.find_instance(*e.instance);
  const Port* p = db.streamlet(inst->streamlet).interface.find_port(e.port);
  return ResolvedEnd{p, inst->name.str() + "__", p->mode == PortMode::Out};
}

DesignFile architecture_file(const IrDatabase& db, StreamletId id) {
  DesignFile f;
  f.work_package = std::string(IrDatabase::kProjectName);
  f.entity = entity(db, id);
  Architecture a;
  a.name = db.streamlet_path(id).render();
  a.entity = f.entity->name;
  f.architecture = std::move(a);
  return f;
}

}  // namespace

std::string emit_structural(const IrDatabase& db, StreamletId id) {
  const Streamlet& s = db.streamlet(id);
  const StructuralImplementation* impl =
      s.implementation ? s.implementation->structural() : nullptr;
  if (!impl) {
    throw Error(ErrorKind::InvalidArgument,
                "streamlet \"" + s.name.str() +
                    "\" has no structural implementation");
  }
  impl->validate(db);

  DesignFile f = architecture_file(db, id);
  Architecture& a = *f.architecture;
  a.comments = comment_lines(s.implementation->documentation);

  for (const auto& inst : impl->instances()) {
    const Streamlet& child = db.streamlet(inst.streamlet);
    Instantiation in{inst.name.str(),
                     component_name(db.streamlet_path(inst.streamlet)), {}};
    const auto& domains = child.interface.domains();
    for (std::size_t i = 0; i < domains.size(); ++i) {
      in.ports.push_back({clock_name(domains[i]), clock_name(inst.bound_domains[i])});
      in.ports.push_back({reset_name(domains[i]), reset_name(inst.bound_domains[i])});
    }
    for (const auto& port : child.interface.ports()) {
      for (const auto& ss : *db.port_physical_streams(port)) {
        for (Signal sig : ss.signals.present()) {
          std::string formal = port_signal_name(port.name, ss.stream.name, sig);
          std::string local = inst.name.str() + "__" + formal;
          a.signals.push_back(SignalDecl{local, signal_type(ss, sig)});
          in.ports.push_back({formal, local});
        }
      }
    }
    a.instances.push_back(std::move(in));
  }

  for (const auto& c : impl->connections()) {
    ResolvedEnd l = resolve_end(db, *impl, c.left);
    ResolvedEnd r = resolve_end(db, *impl, c.right);
    for (const auto& ss : *db.port_physical_streams(*l.port)) {
      for (Signal sig : ss.signals.present()) {
        bool left_drives = l.is_source;
        if (ss.stream.direction == Direction::Reverse) left_drives = !left_drives;
        if (sig == Signal::Ready) left_drives = !left_drives;
        Ref lhs{l.prefix + port_signal_name(l.port->name, ss.stream.name, sig), {}};
        Ref rhs{r.prefix + port_signal_name(r.port->name, ss.stream.name, sig), {}};
        if (left_drives) {
          a.assignments.push_back(SignalAssign{rhs, Expr::signal(lhs)});
        } else {
          a.assignments.push_back(SignalAssign{lhs, Expr::signal(rhs)});
        }
      }
    }
  }

  Package pkg = package(db);
  validate(f, &pkg);
  return render(f);
}

std::string emit_template(const IrDatabase& db, StreamletId id) {
  DesignFile f = architecture_file(db, id);
  const Streamlet& s = db.streamlet(id);
  if (s.implementation) {
    f.architecture->comments = comment_lines(s.implementation->documentation);
  }
  validate(f, nullptr);
  return render(f);
}

LinkedOutput emit_linked(const IrDatabase& db, StreamletId id,
                         const fs::path& root, LinkedMissing missing) {
  const Streamlet& s = db.streamlet(id);
  const LinkedImplementation* link =
      s.implementation ? s.implementation->linked() : nullptr;
  if (!link) {
    throw Error(ErrorKind::InvalidArgument,
                "streamlet \"" + s.name.str() + "\" has no linked implementation");
  }
  fs::path dir = root / link->path;
  fs::path file = dir / (db.streamlet_path(id).render() + ".vhd");
  std::error_code ec;
  if (fs::is_regular_file(file, ec)) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    if (!in || !text) {
      throw Error(ErrorKind::Io, "cannot read " + file.string());
    }
    return LinkedOutput{text.str(), std::nullopt};
  }
  if (missing == LinkedMissing::Fail && !fs::is_directory(dir, ec)) {
    throw Error(ErrorKind::Io, "linked implementation directory " +
                                   dir.string() + " of streamlet \"" +
                                   s.name.str() + "\" does not exist");
  }
  return LinkedOutput{emit_template(db, id), file};
}

EmittedProject emit_project(const IrDatabase& db, const fs::path& root,
                            LinkedMissing missing) {
  EmittedProject out;
  out.files.push_back(
      {std::string(IrDatabase::kProjectName) + ".vhd", emit_package(db)});
  for (const auto& [path, id] : db.all_streamlets()) {
    const auto& impl = db.streamlet(id).implementation;
    if (!impl) continue;
    std::string name = path.render() + ".vhd";
    if (impl->structural()) {
      out.files.push_back({name, emit_structural(db, id)});
      continue;
    }
    LinkedOutput linked = emit_linked(db, id, root, missing);
    if (linked.template_path) {
      out.templates.push_back({linked.template_path->string(), linked.text});
    }
    out.files.push_back({name, std::move(linked.text)});
  }
  return out;
}

}  // namespace tilc::vhdl

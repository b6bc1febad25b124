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

#include "tilc/ir.hpp"

#include <algorithm>
#include <unordered_set>

#include "tilc/error.hpp"

namespace tilc {

std::string Domain::display() const {
  return name ? "'" + name->str() : std::string("default");
}

std::string_view to_string(PortMode m) {
  return m == PortMode::In ? "in" : "out";
}

std::string Endpoint::display() const {
  return instance ? instance->str() + "." + port.str() : port.str();
}

Interface Interface::make(std::vector<Name> domains, std::vector<Port> ports,
                          const TypeInterner& types,
                          std::optional<std::string> documentation) {
  Interface iface;
  iface.documentation_ = std::move(documentation);
  std::unordered_set<std::string> seen;
  for (auto& d : domains) {
    if (!seen.insert(d.folded()).second) {
      throw Error(ErrorKind::DuplicateIdentifier,
                  "domain '" + d.str() + " is declared twice");
    }
    iface.domains_.push_back(Domain::named(std::move(d)));
  }
  if (iface.domains_.empty()) iface.domains_.push_back(Domain::default_domain());

  seen.clear();
  for (auto& p : ports) {
    if (!seen.insert(p.name.folded()).second) {
      throw Error(ErrorKind::DuplicateIdentifier,
                  "port \"" + p.name.str() + "\" is declared twice");
    }
    if (!std::holds_alternative<StreamType>(types.get(p.stream_type))) {
      throw Error(ErrorKind::InvalidInterface,
                  "port \"" + p.name.str() + "\" must carry a Stream, found " +
                      describe(p.stream_type, types));
    }
    if (iface.has_default_domain()) {
      if (!p.domain.is_default()) {
        throw Error(ErrorKind::UnknownDomain,
                    "port \"" + p.name.str() + "\" uses domain " +
                        p.domain.display() +
                        ", but the interface declares no domains");
      }
    } else if (p.domain.is_default()) {
      throw Error(ErrorKind::InvalidInterface,
                  "port \"" + p.name.str() +
                      "\" must be assigned one of the interface's domains");
    } else if (const Domain* d = iface.find_domain(*p.domain.name)) {
      p.domain = *d;
    } else {
      throw Error(ErrorKind::UnknownDomain,
                  "port \"" + p.name.str() + "\" uses undeclared domain " +
                      p.domain.display());
    }
    iface.ports_.push_back(std::move(p));
  }
  return iface;
}

const Port* Interface::find_port(const Name& name) const {
  for (const auto& p : ports_) {
    if (p.name.same_as(name)) return &p;
  }
  return nullptr;
}

const Domain* Interface::find_domain(const Name& name) const {
  for (const auto& d : domains_) {
    if (d.name && d.name->same_as(name)) return &d;
  }
  return nullptr;
}

bool Interface::same_contract(const Interface& other) const {
  if (domains_ != other.domains_ || ports_.size() != other.ports_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < ports_.size(); ++i) {
    const Port& a = ports_[i];
    const Port& b = other.ports_[i];
    if (a.name != b.name || a.mode != b.mode ||
        a.stream_type != b.stream_type || a.domain != b.domain) {
      return false;
    }
  }
  return true;
}

const Instance* StructuralImplementation::find_instance(const Name& name) const {
  for (const auto& i : instances_) {
    if (i.name.same_as(name)) return &i;
  }
  return nullptr;
}

void StructuralImplementation::instantiate(const IrDatabase& db, Name name,
                                           StreamletId target,
                                           DomainAssignment assignment) {
  if (find_instance(name)) {
    throw Error(ErrorKind::DuplicateIdentifier,
                "instance \"" + name.str() + "\" is declared twice");
  }
  const Streamlet& child = db.streamlet(target);
  const auto& child_domains = child.interface.domains();
  std::vector<std::optional<Domain>> bound(child_domains.size());

  if (assignment.empty()) {
    if (!parent_.has_default_domain()) {
      throw Error(ErrorKind::MissingDomainAssignment,
                  "instance \"" + name.str() + "\" of " + child.name.str() +
                      " must be assigned domains of the enclosing streamlet");
    }
    // A parent with only the default domain hands it to every child domain.
    std::fill(bound.begin(), bound.end(), Domain::default_domain());
  }

  bool seen_named = false;
  std::size_t ordered = 0;
  for (const auto& entry : assignment) {
    const Domain* parent_domain = parent_.find_domain(entry.parent);
    if (!parent_domain) {
      throw Error(ErrorKind::UnknownDomain,
                  "enclosing streamlet has no domain '" + entry.parent.str());
    }
    std::size_t index = 0;
    if (!entry.child) {
      if (seen_named) {
        throw Error(ErrorKind::NamedBeforeOrdered,
                    "ordered domain assignment '" + entry.parent.str() +
                        " follows a named assignment");
      }
      if (ordered >= child_domains.size()) {
        throw Error(ErrorKind::UnknownDomain,
                    child.name.str() + " has only " +
                        std::to_string(child_domains.size()) +
                        " domain(s) to assign");
      }
      index = ordered++;
    } else {
      seen_named = true;
      const Domain* child_domain = child.interface.find_domain(*entry.child);
      if (!child_domain) {
        throw Error(ErrorKind::UnknownDomain,
                    child.name.str() + " has no domain '" + entry.child->str());
      }
      index = static_cast<std::size_t>(child_domain - child_domains.data());
    }
    if (bound[index]) {
      throw Error(ErrorKind::DoubleAssignment,
                  "domain " + child_domains[index].display() + " of instance \"" +
                      name.str() + "\" is assigned more than once");
    }
    bound[index] = *parent_domain;
  }

  Instance inst{std::move(name), target, std::move(assignment), {}};
  for (std::size_t i = 0; i < bound.size(); ++i) {
    if (!bound[i]) {
      throw Error(ErrorKind::MissingDomainAssignment,
                  "domain " + child_domains[i].display() + " of instance \"" +
                      inst.name.str() + "\" is not assigned");
    }
    inst.bound_domains.push_back(*bound[i]);
  }
  instances_.push_back(std::move(inst));
}

StructuralImplementation::Resolved StructuralImplementation::resolve(
    const IrDatabase& db, const Endpoint& e) const {
  if (!e.instance) {
    const Port* port = parent_.find_port(e.port);
    if (!port) {
      throw Error(ErrorKind::UnknownIdentifier,
                  "enclosing streamlet has no port \"" + e.port.str() + "\"");
    }
    // A parent input feeds the implementation, so it acts as a source.
    return Resolved{port, port->domain, port->mode == PortMode::In};
  }
  const Instance* inst = find_instance(*e.instance);
  if (!inst) {
    throw Error(ErrorKind::UnknownIdentifier,
                "no instance named \"" + e.instance->str() + "\"");
  }
  const Interface& iface = db.streamlet(inst->streamlet).interface;
  const Port* port = iface.find_port(e.port);
  if (!port) {
    throw Error(ErrorKind::UnknownIdentifier,
                "instance \"" + inst->name.str() + "\" has no port \"" +
                    e.port.str() + "\"");
  }
  const auto& domains = iface.domains();
  auto it = std::find(domains.begin(), domains.end(), port->domain);
  Domain bound = inst->bound_domains[static_cast<std::size_t>(it - domains.begin())];
  return Resolved{port, bound, port->mode == PortMode::Out};
}

void StructuralImplementation::connect(const IrDatabase& db, Endpoint left,
                                       Endpoint right) {
  Resolved l = resolve(db, left);
  Resolved r = resolve(db, right);
  // Store endpoints with their declared spelling.
  left.port = l.port->name;
  right.port = r.port->name;
  if (left.instance) left.instance = find_instance(*left.instance)->name;
  if (right.instance) right.instance = find_instance(*right.instance)->name;

  std::string what = left.display() + " -- " + right.display();
  if (l.port->stream_type != r.port->stream_type) {
    throw Error(ErrorKind::TypeMismatch,
                "cannot connect " + what + ": the port types differ");
  }
  if (l.domain != r.domain) {
    throw Error(ErrorKind::DomainMismatch,
                "cannot connect " + what + ": " + left.display() +
                    " is in domain " + l.domain.display() + " but " +
                    right.display() + " is in domain " + r.domain.display());
  }
  if (l.is_source == r.is_source) {
    throw Error(ErrorKind::DirectionMismatch,
                "cannot connect " + what + ": both ends are " +
                    (l.is_source ? "sources" : "sinks"));
  }
  for (const auto& c : connections_) {
    for (const Endpoint* e : {&left, &right}) {
      if (c.left == *e || c.right == *e) {
        throw Error(ErrorKind::AlreadyConnected,
                    "cannot connect " + what + ": " + e->display() +
                        " is already connected");
      }
    }
  }
  connections_.push_back(Connection{std::move(left), std::move(right)});
}

std::vector<Endpoint> StructuralImplementation::all_endpoints(
    const IrDatabase& db) const {
  std::vector<Endpoint> out;
  for (const auto& p : parent_.ports()) out.push_back(Endpoint{{}, p.name});
  for (const auto& inst : instances_) {
    for (const auto& p : db.streamlet(inst.streamlet).interface.ports()) {
      out.push_back(Endpoint{inst.name, p.name});
    }
  }
  return out;
}

void StructuralImplementation::validate(const IrDatabase& db) const {
  std::vector<std::string> missing;
  for (const auto& e : all_endpoints(db)) {
    bool connected = std::any_of(
        connections_.begin(), connections_.end(),
        [&](const Connection& c) { return c.left == e || c.right == e; });
    if (!connected) missing.push_back(e.display());
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw Error(ErrorKind::UnconnectedPort, "unconnected ports: " + list,
                std::move(missing));
  }
}

LinkedImplementation make_linked(std::string path) {
  if (path.empty()) {
    throw Error(ErrorKind::InvalidPath, "linked implementation path is empty");
  }
  if (path.front() == '/' || path.front() == '\\' ||
      (path.size() >= 2 && path[1] == ':')) {
    throw Error(ErrorKind::InvalidPath,
                "linked implementation path \"" + path +
                    "\" must be relative to the project root");
  }
  for (char c : path) {
    if (static_cast<unsigned char>(c) < 0x20 || c == '"') {
      throw Error(ErrorKind::InvalidPath,
                  "linked implementation path contains an invalid character");
    }
  }
  return LinkedImplementation{std::move(path)};
}

void IrDatabase::add_namespace(const PathName& ns) { namespace_index(ns); }

std::size_t IrDatabase::namespace_index(const PathName& ns) {
  std::string key = ns.folded();
  if (auto it = namespace_lookup_.find(key); it != namespace_lookup_.end()) {
    return it->second;
  }
  namespaces_.push_back(NamespaceEntry{ns, {}, {}, {}, {}});
  scopes_.emplace_back();
  namespace_lookup_.emplace(key, namespaces_.size() - 1);
  return namespaces_.size() - 1;
}

const IrDatabase::Scope* IrDatabase::find_scope(const PathName& ns) const {
  auto it = namespace_lookup_.find(ns.folded());
  return it == namespace_lookup_.end() ? nullptr : &scopes_[it->second];
}

namespace {

template <typename Map>
void claim(Map& map, const Name& name, const char* kind) {
  if (map.count(name.folded())) {
    throw Error(ErrorKind::DuplicateIdentifier,
                std::string(kind) + " \"" + name.str() +
                    "\" is already declared in this namespace");
  }
}

template <typename Map>
auto lookup(const Map* map, const Name& name)
    -> std::optional<typename Map::mapped_type> {
  if (!map) return std::nullopt;
  auto it = map->find(name.folded());
  if (it == map->end()) return std::nullopt;
  return it->second;
}

}  // namespace

void IrDatabase::declare_type(const PathName& ns, const Name& name,
                              TypeId type) {
  std::size_t idx = namespace_index(ns);
  claim(scopes_[idx].types, name, "type");
  types_.get(type);
  scopes_[idx].types.emplace(name.folded(), type);
  namespaces_[idx].types.push_back(TypeDecl{name, type});
}

InterfaceId IrDatabase::declare_interface(const PathName& ns, const Name& name,
                                          Interface iface) {
  std::size_t idx = namespace_index(ns);
  claim(scopes_[idx].interfaces, name, "interface");
  for (const auto& p : iface.ports()) physical_streams(p.stream_type);
  InterfaceId id{static_cast<std::uint32_t>(interfaces_.size())};
  interfaces_.push_back(InterfaceDecl{name, std::move(iface)});
  scopes_[idx].interfaces.emplace(name.folded(), id);
  namespaces_[idx].interfaces.push_back(id);
  return id;
}

ImplementationId IrDatabase::declare_implementation(const PathName& ns,
                                                    const Name& name,
                                                    Interface iface,
                                                    Implementation impl) {
  std::size_t idx = namespace_index(ns);
  claim(scopes_[idx].implementations, name, "implementation");
  if (auto* s = impl.structural(); s && !s->parent().same_contract(iface)) {
    throw Error(ErrorKind::InterfaceMismatch,
                "implementation \"" + name.str() +
                    "\" was built for a different interface");
  }
  for (const auto& p : iface.ports()) physical_streams(p.stream_type);
  ImplementationId id{static_cast<std::uint32_t>(implementations_.size())};
  implementations_.push_back(
      ImplementationDecl{name, std::move(iface), std::move(impl)});
  scopes_[idx].implementations.emplace(name.folded(), id);
  namespaces_[idx].implementations.push_back(id);
  return id;
}

StreamletId IrDatabase::declare_streamlet(
    const PathName& ns, const Name& name, Interface iface,
    std::optional<Implementation> impl,
    std::optional<std::string> documentation) {
  std::size_t idx = namespace_index(ns);
  claim(scopes_[idx].streamlets, name, "streamlet");
  if (impl) {
    if (auto* s = impl->structural(); s && !s->parent().same_contract(iface)) {
      throw Error(ErrorKind::InterfaceMismatch,
                  "implementation of streamlet \"" + name.str() +
                      "\" does not match its interface");
    }
  }
  for (const auto& p : iface.ports()) physical_streams(p.stream_type);
  StreamletId id{static_cast<std::uint32_t>(streamlets_.size())};
  streamlets_.push_back(Streamlet{name, std::move(iface), std::move(impl),
                                  std::move(documentation)});
  streamlet_namespace_.push_back(idx);
  scopes_[idx].streamlets.emplace(name.folded(), id);
  namespaces_[idx].streamlets.push_back(id);
  return id;
}

std::optional<TypeId> IrDatabase::find_type(const PathName& ns,
                                            const Name& name) const {
  const Scope* s = find_scope(ns);
  return lookup(s ? &s->types : nullptr, name);
}

std::optional<InterfaceId> IrDatabase::find_interface(const PathName& ns,
                                                      const Name& name) const {
  const Scope* s = find_scope(ns);
  return lookup(s ? &s->interfaces : nullptr, name);
}

std::optional<ImplementationId> IrDatabase::find_implementation(
    const PathName& ns, const Name& name) const {
  const Scope* s = find_scope(ns);
  return lookup(s ? &s->implementations : nullptr, name);
}

std::optional<StreamletId> IrDatabase::find_streamlet(const PathName& ns,
                                                      const Name& name) const {
  const Scope* s = find_scope(ns);
  return lookup(s ? &s->streamlets : nullptr, name);
}

const InterfaceDecl& IrDatabase::interface(InterfaceId id) const {
  return interfaces_.at(id.value);
}

const ImplementationDecl& IrDatabase::implementation(ImplementationId id) const {
  return implementations_.at(id.value);
}

const Streamlet& IrDatabase::streamlet(StreamletId id) const {
  return streamlets_.at(id.value);
}

PathName IrDatabase::streamlet_path(StreamletId id) const {
  const auto& ns = namespaces_.at(streamlet_namespace_.at(id.value));
  return ns.path.with(streamlet(id).name);
}

std::vector<std::pair<PathName, StreamletId>> IrDatabase::all_streamlets() const {
  std::vector<std::pair<PathName, StreamletId>> out;
  for (const auto& ns : namespaces_) {
    for (StreamletId id : ns.streamlets) {
      out.emplace_back(ns.path.with(streamlet(id).name), id);
    }
  }
  return out;
}

std::shared_ptr<const IrDatabase::PhysicalStreams> IrDatabase::physical_streams(
    TypeId type) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (auto it = stream_cache_.find(type); it != stream_cache_.end()) {
    return it->second;
  }
  auto result = std::make_shared<const PhysicalStreams>(synthesize(type, types_));
  ++cache_misses_;
  stream_cache_.emplace(type, result);
  return result;
}

std::size_t IrDatabase::physical_stream_computations() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return cache_misses_;
}

}  // namespace tilc

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

#ifndef TILC_IR_HPP
#define TILC_IR_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tilc/lowering.hpp"
#include "tilc/name.hpp"
#include "tilc/types.hpp"

namespace tilc {

/// A clock/reset domain. The unnamed domain is the default one.
struct Domain {
  std::optional<Name> name;

  static Domain default_domain() { return Domain{}; }
  static Domain named(Name n) { return Domain{std::move(n)}; }
  bool is_default() const noexcept { return !name.has_value(); }
  /// "'name" or "default".
  std::string display() const;

  friend bool operator==(const Domain&, const Domain&) = default;
};

enum class PortMode { In, Out };
std::string_view to_string(PortMode m);

struct Port {
  Name name;
  PortMode mode = PortMode::In;
  TypeId stream_type;
  Domain domain;
  std::optional<std::string> documentation;

  friend bool operator==(const Port&, const Port&) = default;
};

/// Ports plus clock/reset domains. Built only through `make`, which enforces
/// that every port carries a Stream and a declared domain.
class Interface {
 public:
  /// With no named domains a single default domain is created and every
  /// port gets it. Ports given a default domain while named domains exist
  /// are rejected. Throws InvalidInterface / DuplicateIdentifier.
  static Interface make(std::vector<Name> domains, std::vector<Port> ports,
                        const TypeInterner& types,
                        std::optional<std::string> documentation = {});

  const std::vector<Domain>& domains() const noexcept { return domains_; }
  const std::vector<Port>& ports() const noexcept { return ports_; }
  const std::optional<std::string>& documentation() const noexcept {
    return documentation_;
  }
  bool has_default_domain() const noexcept {
    return domains_.size() == 1 && domains_.front().is_default();
  }
  const Port* find_port(const Name& name) const;
  const Domain* find_domain(const Name& name) const;

  /// Same domains and ports (documentation is not part of the contract).
  bool same_contract(const Interface& other) const;

  friend bool operator==(const Interface&, const Interface&) = default;

 private:
  std::vector<Domain> domains_;
  std::vector<Port> ports_;
  std::optional<std::string> documentation_;
};

struct StreamletId {
  std::uint32_t value = 0;
  friend bool operator==(StreamletId, StreamletId) = default;
};
struct InterfaceId {
  std::uint32_t value = 0;
  friend bool operator==(InterfaceId, InterfaceId) = default;
};
struct ImplementationId {
  std::uint32_t value = 0;
  friend bool operator==(ImplementationId, ImplementationId) = default;
};

/// One entry of an instance's domain assignment list, in source order:
/// either ordered (`'parent`) or named (`'child = 'parent`).
struct DomainAssignmentEntry {
  std::optional<Name> child;
  Name parent;
  friend bool operator==(const DomainAssignmentEntry&,
                         const DomainAssignmentEntry&) = default;
};
using DomainAssignment = std::vector<DomainAssignmentEntry>;

struct Instance {
  Name name;
  StreamletId streamlet;
  DomainAssignment assignment;  ///< As written.
  /// Resolved binding, parallel to the instantiated streamlet's domains.
  std::vector<Domain> bound_domains;
  friend bool operator==(const Instance&, const Instance&) = default;
};

/// A connection endpoint: an instance port, or a port of the enclosing
/// streamlet when `instance` is empty.
struct Endpoint {
  std::optional<Name> instance;
  Name port;
  std::string display() const;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Connection {
  Endpoint left;
  Endpoint right;
  friend bool operator==(const Connection&, const Connection&) = default;
};

class IrDatabase;

/// Instances and connections inside a streamlet. Every mutation is checked
/// against the enclosing interface and the database it was created for.
class StructuralImplementation {
 public:
  explicit StructuralImplementation(Interface parent)
      : parent_(std::move(parent)) {}

  /// Throws DuplicateIdentifier, UnknownIdentifier, NamedBeforeOrdered,
  /// UnknownDomain, DoubleAssignment or MissingDomainAssignment.
  void instantiate(const IrDatabase& db, Name name, StreamletId target,
                   DomainAssignment assignment = {});

  /// Throws UnknownIdentifier, TypeMismatch, DomainMismatch,
  /// DirectionMismatch or AlreadyConnected.
  void connect(const IrDatabase& db, Endpoint left, Endpoint right);

  /// Throws UnconnectedPort (with every missing endpoint in details()).
  void validate(const IrDatabase& db) const;

  const Interface& parent() const noexcept { return parent_; }
  const std::vector<Instance>& instances() const noexcept { return instances_; }
  const std::vector<Connection>& connections() const noexcept {
    return connections_;
  }
  const Instance* find_instance(const Name& name) const;

  friend bool operator==(const StructuralImplementation&,
                         const StructuralImplementation&) = default;

 private:
  struct Resolved {
    const Port* port;
    Domain domain;     ///< Parent domain the port is bound to.
    bool is_source;    ///< Effective direction inside the implementation.
  };
  Resolved resolve(const IrDatabase& db, const Endpoint& e) const;
  std::vector<Endpoint> all_endpoints(const IrDatabase& db) const;

  Interface parent_;
  std::vector<Instance> instances_;
  std::vector<Connection> connections_;
};

struct LinkedImplementation {
  std::string path;
  friend bool operator==(const LinkedImplementation&,
                         const LinkedImplementation&) = default;
};

/// Throws InvalidPath unless `path` is a non-empty relative path.
LinkedImplementation make_linked(std::string path);

struct Implementation {
  std::variant<StructuralImplementation, LinkedImplementation> body;
  std::optional<std::string> documentation;

  const StructuralImplementation* structural() const {
    return std::get_if<StructuralImplementation>(&body);
  }
  const LinkedImplementation* linked() const {
    return std::get_if<LinkedImplementation>(&body);
  }
  friend bool operator==(const Implementation&, const Implementation&) = default;
};

struct Streamlet {
  Name name;
  Interface interface;
  std::optional<Implementation> implementation;
  std::optional<std::string> documentation;
  friend bool operator==(const Streamlet&, const Streamlet&) = default;
};

/// A named implementation declaration, together with the interface it was
/// written against.
struct ImplementationDecl {
  Name name;
  Interface interface;
  Implementation implementation;
};

struct InterfaceDecl {
  Name name;
  Interface interface;
};

struct TypeDecl {
  Name name;
  TypeId type;
};

struct NamespaceEntry {
  PathName path;
  std::vector<TypeDecl> types;
  std::vector<InterfaceId> interfaces;
  std::vector<ImplementationId> implementations;
  std::vector<StreamletId> streamlets;
};

/// Declaration store and query layer. Construction is single-threaded.
/// Declaring a port lowers its type, so once populated the const queries
/// (including the memoized physical-stream query) may run concurrently.
class IrDatabase {
 public:
  static constexpr std::string_view kProjectName = "proj";

  IrDatabase() = default;
  IrDatabase(const IrDatabase&) = delete;
  IrDatabase& operator=(const IrDatabase&) = delete;

  TypeInterner& types() noexcept { return types_; }
  const TypeInterner& types() const noexcept { return types_; }
  TypeId intern(const LogicalType& t) { return types_.intern(t); }

  /// Creates the namespace if needed; namespaces keep first-seen order.
  void add_namespace(const PathName& ns);

  // Declarations. Identifiers are unique per kind and namespace, compared
  // case-insensitively; clashes throw DuplicateIdentifier.
  void declare_type(const PathName& ns, const Name& name, TypeId type);
  InterfaceId declare_interface(const PathName& ns, const Name& name,
                                Interface iface);
  ImplementationId declare_implementation(const PathName& ns, const Name& name,
                                          Interface iface,
                                          Implementation impl);
  /// Throws InterfaceMismatch if a structural implementation was built for a
  /// different interface.
  StreamletId declare_streamlet(const PathName& ns, const Name& name,
                                Interface iface,
                                std::optional<Implementation> impl = {},
                                std::optional<std::string> documentation = {});

  std::optional<TypeId> find_type(const PathName& ns, const Name& name) const;
  std::optional<InterfaceId> find_interface(const PathName& ns,
                                            const Name& name) const;
  std::optional<ImplementationId> find_implementation(const PathName& ns,
                                                      const Name& name) const;
  std::optional<StreamletId> find_streamlet(const PathName& ns,
                                            const Name& name) const;

  const InterfaceDecl& interface(InterfaceId id) const;
  const ImplementationDecl& implementation(ImplementationId id) const;
  const Streamlet& streamlet(StreamletId id) const;
  /// Namespace path of a streamlet joined with its name.
  PathName streamlet_path(StreamletId id) const;

  const std::vector<NamespaceEntry>& namespaces() const noexcept {
    return namespaces_;
  }

  /// Every streamlet in namespace order, then declaration order.
  std::vector<std::pair<PathName, StreamletId>> all_streamlets() const;

  using PhysicalStreams = std::vector<SynthesizedStream>;
  /// Physical streams of a port's type, memoized per TypeId.
  std::shared_ptr<const PhysicalStreams> physical_streams(TypeId type) const;
  std::shared_ptr<const PhysicalStreams> port_physical_streams(
      const Port& port) const {
    return physical_streams(port.stream_type);
  }
  /// Number of cache misses served so far.
  std::size_t physical_stream_computations() const;

 private:
  struct Scope {
    std::unordered_map<std::string, TypeId> types;
    std::unordered_map<std::string, InterfaceId> interfaces;
    std::unordered_map<std::string, ImplementationId> implementations;
    std::unordered_map<std::string, StreamletId> streamlets;
  };
  std::size_t namespace_index(const PathName& ns);
  const Scope* find_scope(const PathName& ns) const;

  // Lowering interns the Stream-free remainders of split types. Port types
  // are lowered when declared, so later const queries only read the cache.
  mutable TypeInterner types_;
  std::vector<NamespaceEntry> namespaces_;
  std::vector<Scope> scopes_;
  std::map<std::string, std::size_t> namespace_lookup_;
  std::vector<InterfaceDecl> interfaces_;
  std::vector<ImplementationDecl> implementations_;
  std::vector<Streamlet> streamlets_;
  std::vector<std::size_t> streamlet_namespace_;

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<TypeId, std::shared_ptr<const PhysicalStreams>>
      stream_cache_;
  mutable std::size_t cache_misses_ = 0;
};

}  // namespace tilc

#endif  // TILC_IR_HPP

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

#ifndef TILC_VHDL_SYNTAX_HPP
#define TILC_VHDL_SYNTAX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tilc::vhdl {

enum class Mode { In, Out };
std::string_view to_string(Mode m);
constexpr Mode flipped(Mode m) noexcept {
  return m == Mode::In ? Mode::Out : Mode::In;
}

/// std_logic, or std_logic_vector(width-1 downto 0).
struct Type {
  bool vector = false;
  std::uint64_t width = 1;

  static Type logic() { return Type{false, 1}; }
  static Type logic_vector(std::uint64_t w) { return Type{true, w}; }
  std::string render() const;
  friend bool operator==(const Type&, const Type&) = default;
};

struct PortDecl {
  std::string name;
  Mode mode = Mode::In;
  Type type;
  std::vector<std::string> comments;  ///< Rendered as "--" lines above.
};

struct Component {
  std::string name;
  std::vector<PortDecl> ports;
  std::vector<std::string> comments;
};

struct Package {
  std::string name;
  std::vector<Component> components;
  const Component* find(std::string_view component) const;
};

struct Entity {
  std::string name;
  std::vector<PortDecl> ports;
  std::vector<std::string> comments;
};

struct Range {
  std::uint64_t high = 0;
  std::uint64_t low = 0;
  std::uint64_t width() const noexcept { return high - low + 1; }
  friend bool operator==(const Range&, const Range&) = default;
};

/// A signal or port, optionally sliced.
struct Ref {
  std::string id;
  std::optional<Range> slice;
  std::string render() const;
};

struct Expr {
  enum class Kind { Ref, Bit, BitString, Others, ToUnsigned };
  Kind kind = Kind::Bit;
  Ref ref;
  std::string text;  ///< Bit: one character; BitString: MSB first.
  std::uint64_t value = 0;
  std::uint64_t width = 0;

  static Expr signal(Ref r) { return Expr{Kind::Ref, std::move(r), {}, 0, 0}; }
  static Expr bit(char b) { return Expr{Kind::Bit, {}, std::string(1, b), 0, 0}; }
  static Expr bit_string(std::string msb_first) {
    return Expr{Kind::BitString, {}, std::move(msb_first), 0, 0};
  }
  /// (others => c)
  static Expr others(char c) { return Expr{Kind::Others, {}, std::string(1, c), 0, 0}; }
  /// std_logic_vector(to_unsigned(value, width))
  static Expr to_unsigned(std::uint64_t value, std::uint64_t width) {
    return Expr{Kind::ToUnsigned, {}, {}, value, width};
  }
  std::string render() const;
};

struct SignalAssign {
  Ref target;
  Expr value;
};

/// wait until rising_edge(clock) [and condition = 'level'];
struct WaitUntil {
  std::string clock;
  std::optional<Ref> condition;
  char level = '1';
};

/// assert subject = expected report "message";
struct Assert {
  Ref subject;
  Expr expected;
  std::string message;
};

using Statement = std::variant<SignalAssign, WaitUntil, Assert>;

/// A process with a sensitivity-free body. The label only appears on the
/// closing line, following the established layout of generated benches.
struct Process {
  std::optional<std::string> label;
  std::vector<Statement> body;
};

struct SignalDecl {
  std::string name;
  Type type;
};

struct Association {
  std::string formal;
  std::string actual;
};

struct Instantiation {
  std::string label;
  std::string component;
  std::vector<Association> ports;
};

struct Architecture {
  std::string name;
  std::string entity;
  std::vector<std::string> comments;
  std::vector<SignalDecl> signals;
  std::vector<Instantiation> instances;
  std::vector<SignalAssign> assignments;
  std::vector<Process> processes;
};

/// Context clauses plus the library units of one source file.
struct DesignFile {
  bool numeric_std = false;
  /// Emits "library work; use work.<name>.all;" when set.
  std::optional<std::string> work_package;
  std::optional<Package> package;
  std::optional<Entity> entity;
  std::optional<Architecture> architecture;
};

std::string render(const Package& p);
std::string render(const Entity& e);
std::string render(const Architecture& a);
std::string render(const Process& p, int indent = 0);
std::string render(const DesignFile& f);

/// Why `id` is not a usable basic identifier, or nullopt. Allows the double
/// underscores used for hierarchical names but rejects three in a row,
/// leading or trailing underscores and reserved words.
std::optional<std::string> identifier_violation(std::string_view id);

// Validators throw Error(InvalidVhdl).
void validate(const Package& p);
void validate(const Entity& e);
/// Checks identifiers, that every referenced signal and component exists,
/// that port maps name real formals and that assignment widths agree.
void validate(const Architecture& a, const Entity& e, const Package* package);
void validate(const DesignFile& f, const Package* package);

}  // namespace tilc::vhdl

#endif  // TILC_VHDL_SYNTAX_HPP

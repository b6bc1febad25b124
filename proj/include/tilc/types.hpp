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

#ifndef TILC_TYPES_HPP
#define TILC_TYPES_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "tilc/name.hpp"

namespace tilc {

/// Positive rational number of elements per handshake. Always kept in lowest
/// terms, so equality is representation equality.
class Throughput {
 public:
  Throughput() = default;
  /// Throws InvalidArgument unless num > 0 and den > 0.
  Throughput(std::uint64_t num, std::uint64_t den);

  /// Parses "2", "2.0" or "0.125" exactly.
  static Throughput parse(std::string_view literal);

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }

  /// Smallest integer >= value.
  std::uint64_t ceil() const noexcept { return (num_ + den_ - 1) / den_; }

  /// Throws Overflow if the reduced product does not fit 64 bits.
  friend Throughput operator*(Throughput a, Throughput b);

  /// Shortest decimal rendering when one exists ("2.0", "0.5"), otherwise
  /// "n/d".
  std::string to_string() const;

  friend bool operator==(const Throughput&, const Throughput&) = default;
  friend std::strong_ordering operator<=>(const Throughput& a,
                                          const Throughput& b);

 private:
  std::uint64_t num_ = 1;
  std::uint64_t den_ = 1;
};

/// Complexity level: a major level 1..8 plus optional minor components,
/// ordered lexicographically.
class Complexity {
 public:
  Complexity() = default;
  explicit Complexity(std::uint32_t major,
                      std::vector<std::uint32_t> minor = {});
  /// Parses "4" or "4.1.3".
  static Complexity parse(std::string_view literal);

  std::uint32_t major() const noexcept { return major_; }
  const std::vector<std::uint32_t>& minor() const noexcept { return minor_; }
  std::string to_string() const;

  friend bool operator==(const Complexity&, const Complexity&) = default;
  friend auto operator<=>(const Complexity&, const Complexity&) = default;

 private:
  std::uint32_t major_ = 1;
  std::vector<std::uint32_t> minor_;
};

enum class Synchronicity { Sync, Flatten, Desync, FlatDesync };
enum class Direction { Forward, Reverse };

constexpr Direction reversed(Direction d) noexcept {
  return d == Direction::Forward ? Direction::Reverse : Direction::Forward;
}
/// Direction of a child relative to the root, given its parent's absolute
/// direction.
constexpr Direction compose(Direction parent, Direction child) noexcept {
  return parent == child ? Direction::Forward : Direction::Reverse;
}

std::string_view to_string(Synchronicity s);
std::string_view to_string(Direction d);

struct TypeId {
  std::uint32_t value = 0;
  friend bool operator==(TypeId, TypeId) = default;
  friend auto operator<=>(TypeId, TypeId) = default;
};

struct Field {
  Name name;
  TypeId type;
  friend bool operator==(const Field&, const Field&) = default;
};

struct NullType {
  friend bool operator==(const NullType&, const NullType&) = default;
};
struct BitsType {
  std::uint32_t count = 1;
  friend bool operator==(const BitsType&, const BitsType&) = default;
};
struct GroupType {
  std::vector<Field> fields;
  friend bool operator==(const GroupType&, const GroupType&) = default;
};
struct UnionType {
  std::vector<Field> fields;
  friend bool operator==(const UnionType&, const UnionType&) = default;
};
struct StreamType {
  TypeId data;
  Throughput throughput;
  std::uint32_t dimensionality = 0;
  Synchronicity synchronicity = Synchronicity::Sync;
  Complexity complexity;
  Direction direction = Direction::Forward;
  TypeId user;  ///< Defaults to the interned Null.
  bool keep = false;
  friend bool operator==(const StreamType&, const StreamType&) = default;
};

using LogicalType =
    std::variant<NullType, BitsType, GroupType, UnionType, StreamType>;

/// Stores every distinct logical type exactly once. Nested types refer to
/// each other by TypeId, so structural equality of interned values reduces
/// to TypeId equality.
class TypeInterner {
 public:
  TypeInterner();

  /// Validates `t` and returns its id; idempotent for equal values.
  TypeId intern(const LogicalType& t);

  const LogicalType& get(TypeId id) const;
  std::size_t size() const noexcept { return types_.size(); }

  TypeId null() const noexcept { return TypeId{0}; }
  TypeId bits(std::uint32_t count) { return intern(BitsType{count}); }

  /// True if no Stream occurs anywhere inside `id`.
  bool is_element_only(TypeId id) const;

 private:
  struct Hash {
    std::size_t operator()(const LogicalType& t) const noexcept;
  };
  void validate(const LogicalType& t) const;

  std::vector<LogicalType> types_;
  std::unordered_map<LogicalType, TypeId, Hash> index_;
};

/// ceil(log2(n)) for n >= 1; 0 for n <= 1.
std::uint32_t ceil_log2(std::uint64_t n) noexcept;

/// Bit width of an element-manipulating type. Throws NotElementManipulating
/// if a Stream is reached.
std::uint64_t element_bit_width(TypeId id, const TypeInterner& types);

/// Readable rendering in TIL expression syntax, fully expanded.
std::string describe(TypeId id, const TypeInterner& types);

}  // namespace tilc

template <>
struct std::hash<tilc::TypeId> {
  std::size_t operator()(tilc::TypeId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

#endif  // TILC_TYPES_HPP

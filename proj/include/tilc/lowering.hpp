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

#ifndef TILC_LOWERING_HPP
#define TILC_LOWERING_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tilc/name.hpp"
#include "tilc/types.hpp"

namespace tilc {

/// Named bitfields of an element type. Entries are listed from the least
/// significant bits upward; zero-width members never appear.
class Fields {
 public:
  struct Entry {
    PathName name;
    std::uint64_t width = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Fields() = default;
  /// Throws InvalidType on a zero width or a case-insensitive name clash.
  void push(PathName name, std::uint64_t width);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::uint64_t total_width() const noexcept { return total_; }
  /// Bit offset of entry `i` from the least significant bit.
  std::uint64_t offset(std::size_t i) const;

  friend bool operator==(const Fields&, const Fields&) = default;

 private:
  std::vector<Entry> entries_;
  std::uint64_t total_ = 0;
};

/// The fields function. A Union lays out as its payload ("union", least
/// significant) followed by its tag ("tag", most significant); either is
/// omitted when zero bits wide. Throws NotElementManipulating.
Fields fields(TypeId type, const TypeInterner& types,
              const PathName& prefix = {});

/// A Stream extracted by the split function, with properties made absolute.
struct SplitStream {
  PathName name;
  TypeId data;  ///< Element-only remainder of the Stream's data.
  Throughput throughput;  ///< Product over this Stream and its ancestors.
  std::uint32_t dimensionality = 0;  ///< Including inherited dimensions.
  Synchronicity synchronicity = Synchronicity::Sync;
  Complexity complexity;
  Direction direction = Direction::Forward;  ///< Relative to the root.
  TypeId user;
  bool keep = false;
};

/// The split function. Throws DuplicateStreamName when two retained Streams
/// end up with the same (case-insensitive) name. Needs a mutable interner
/// because Stream-free remainders of Groups and Unions are interned.
std::vector<SplitStream> split(TypeId type, TypeInterner& types);

enum class Signal { Valid, Ready, Data, Last, Stai, Endi, Strb, User };
inline constexpr std::array<Signal, 8> kAllSignals = {
    Signal::Valid, Signal::Ready, Signal::Data, Signal::Last,
    Signal::Stai,  Signal::Endi,  Signal::Strb, Signal::User};
std::string_view to_string(Signal s);

/// PhysicalStream(E, N, D, C, U) plus the direction retained from split.
struct PhysicalStream {
  PathName name;
  Fields element_fields;
  std::uint64_t lanes = 1;
  std::uint32_t dimensionality = 0;
  Complexity complexity;
  Fields user_fields;
  Direction direction = Direction::Forward;
  TypeId data_type;
  TypeId user_type;
};

/// Bit widths of the signals of a physical stream. Zero means omitted.
struct SignalMap {
  std::uint64_t valid = 1;
  std::uint64_t ready = 1;
  std::uint64_t data = 0;
  std::uint64_t last = 0;
  std::uint64_t stai = 0;
  std::uint64_t endi = 0;
  std::uint64_t strb = 0;
  std::uint64_t user = 0;

  std::uint64_t width(Signal s) const noexcept;
  /// Emitted signals in canonical port order.
  std::vector<Signal> present() const;

  friend bool operator==(const SignalMap&, const SignalMap&) = default;
};

SignalMap signal_map(const PhysicalStream& stream);

struct SynthesizedStream {
  PhysicalStream stream;
  SignalMap signals;
};

/// The synthesis function over every split Stream of `type`.
std::vector<SynthesizedStream> synthesize(TypeId type, TypeInterner& types);

/// A multi-lane stream below complexity 5 without dimensionality cannot mark
/// any lane inactive. Returns a warning text for such streams.
std::optional<std::string> lane_activity_warning(const PhysicalStream& stream);

struct BitRange {
  std::uint64_t high = 0;
  std::uint64_t low = 0;
  std::uint64_t width() const noexcept { return high - low + 1; }
  friend bool operator==(const BitRange&, const BitRange&) = default;
};

/// Bits of lane `lane` within the data signal, or within a per-lane last
/// signal (complexity 8). Lane 0 is least significant. Throws LaneOutOfRange,
/// or InvalidArgument for signals that are not laned.
BitRange lane_slice(Signal signal, std::uint64_t lane,
                    const PhysicalStream& stream, const SignalMap& map);

}  // namespace tilc

#endif  // TILC_LOWERING_HPP

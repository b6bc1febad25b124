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

#ifndef TILC_TRANSFER_HPP
#define TILC_TRANSFER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tilc/lowering.hpp"
#include "tilc/name.hpp"
#include "tilc/types.hpp"

namespace tilc {

/// Contents of one element lane. Bit strings are written least significant
/// bit first: character i is bit i.
class ElementData {
 public:
  enum class Kind { Null, Bits, Group, Union };

  static ElementData null() { return ElementData(Kind::Null); }
  /// Throws InvalidArgument on characters other than '0' and '1'.
  static ElementData bits(std::string lsb_first);
  static ElementData group(std::vector<ElementData> fields);
  static ElementData union_of(Name field, ElementData value);

  Kind kind() const noexcept { return kind_; }
  const std::string& bit_string() const noexcept { return bits_; }
  const std::vector<ElementData>& children() const noexcept { return children_; }
  const std::optional<Name>& variant() const noexcept { return variant_; }

  /// Encodes against an element type. Group fields fill from the least
  /// significant bit upward; a Union puts the payload in the low bits and the
  /// field index as tag above it. Throws TypeMismatch.
  std::string encode(TypeId type, const TypeInterner& types) const;
  /// Untyped encoding: only Bits (or Null for zero width) are accepted.
  std::string encode(std::uint64_t width) const;

  friend bool operator==(const ElementData&, const ElementData&) = default;

 private:
  explicit ElementData(Kind k) : kind_(k) {}
  Kind kind_;
  std::string bits_;
  std::vector<ElementData> children_;
  std::optional<Name> variant_;
};

/// Inclusive range of dimensions closed by an element, 0 being innermost.
struct LastRange {
  std::uint32_t low = 0;
  std::uint32_t high = 0;
  friend bool operator==(const LastRange&, const LastRange&) = default;
};

struct LogicalElement {
  std::optional<ElementData> data;  ///< Empty: the lane is inactive.
  std::optional<LastRange> last;    ///< Empty: last is not asserted.
  friend bool operator==(const LogicalElement&, const LogicalElement&) = default;
};

class LogicalTransfer {
 public:
  static LogicalTransfer empty_sequence(LastRange last);
  static LogicalTransfer elements(std::vector<LogicalElement> elements,
                                  std::optional<ElementData> user = {});

  bool is_empty_sequence() const noexcept { return empty_; }
  const std::vector<LogicalElement>& items() const noexcept { return items_; }
  const std::optional<LastRange>& sequence_last() const noexcept {
    return sequence_last_;
  }
  const std::optional<ElementData>& user() const noexcept { return user_; }

 private:
  bool empty_ = false;
  std::vector<LogicalElement> items_;
  std::optional<LastRange> sequence_last_;
  std::optional<ElementData> user_;
};

/// The per-lane signal contents of a single handshake on a physical stream.
/// A skeleton only carries the stream parameters; `with_logical_transfer`
/// fills in the contents after checking them against those parameters.
class PhysicalTransfer {
 public:
  PhysicalTransfer(Complexity complexity, std::uint64_t lanes,
                   std::uint64_t element_width, std::uint32_t dimensionality,
                   std::uint64_t user_width);
  /// Skeleton for a physical stream; element and user values are then
  /// encoded against the stream's logical types.
  static PhysicalTransfer for_stream(const PhysicalStream& stream,
                                     const TypeInterner& types);

  /// Throws TypeMismatch, InvalidLast, LastTooComplexForC,
  /// NonContiguousActiveLanes or TooManyElements.
  PhysicalTransfer with_logical_transfer(const LogicalTransfer& t) const;

  const Complexity& complexity() const noexcept { return complexity_; }
  std::uint64_t lanes() const noexcept { return lanes_; }
  std::uint64_t element_width() const noexcept { return element_width_; }
  std::uint32_t dimensionality() const noexcept { return dimensionality_; }
  std::uint64_t user_width() const noexcept { return user_width_; }
  /// Signal widths implied by the parameters.
  const SignalMap& signals() const noexcept { return signals_; }

  /// Per lane; empty for inactive lanes. Bit strings are LSB first.
  const std::vector<std::optional<std::string>>& data() const noexcept {
    return data_;
  }
  /// D bits per lane at complexity 8, otherwise a single transfer-level entry.
  /// Empty when there is no last signal.
  const std::vector<std::string>& last() const noexcept { return last_; }
  /// Indexed by lane ('1' active). One character below complexity 7.
  const std::string& strb() const noexcept { return strb_; }
  const std::optional<std::uint64_t>& stai() const noexcept { return stai_; }
  const std::optional<std::uint64_t>& endi() const noexcept { return endi_; }
  const std::optional<std::string>& user() const noexcept { return user_; }

  /// Whether stai/endi carry information for this transfer: always below
  /// complexity 7 when lanes are active, otherwise only when every strobe bit
  /// is high.
  bool index_significant() const;

 private:
  Complexity complexity_;
  std::uint64_t lanes_;
  std::uint64_t element_width_;
  std::uint32_t dimensionality_;
  std::uint64_t user_width_;
  SignalMap signals_;
  const TypeInterner* types_ = nullptr;
  std::optional<TypeId> data_type_;
  std::optional<TypeId> user_type_;

  std::vector<std::optional<std::string>> data_;
  std::vector<std::string> last_;
  std::string strb_;
  std::optional<std::uint64_t> stai_;
  std::optional<std::uint64_t> endi_;
  std::optional<std::string> user_;
};

/// A value driven onto, or expected from, a signal or slice.
struct SignalValue {
  enum class Kind { Bit, BitString, Zeros, Unsigned };
  Kind kind = Kind::Bit;
  std::string bits;  ///< Most significant first (Bit: one character).
  std::uint64_t value = 0;
  std::uint64_t width = 0;

  static SignalValue bit(char b) { return {Kind::Bit, std::string(1, b), 0, 1}; }
  static SignalValue bit_string(std::string msb_first) {
    std::uint64_t w = msb_first.size();
    return {Kind::BitString, std::move(msb_first), 0, w};
  }
  static SignalValue zeros(std::uint64_t w) { return {Kind::Zeros, {}, 0, w}; }
  static SignalValue unsigned_value(std::uint64_t v, std::uint64_t w) {
    return {Kind::Unsigned, {}, v, w};
  }
  friend bool operator==(const SignalValue&, const SignalValue&) = default;
};

/// Whether the test bench produces a physical stream or checks it.
enum class StreamRole { Source, Sink };

/// Signal-level access to one physical stream. Implementations render the
/// actions in some target language; `put` picks drive or expect from the
/// role, so the same transfer can be driven or checked.
class PhysicalSignals {
 public:
  virtual ~PhysicalSignals() = default;

  virtual StreamRole role() const = 0;
  virtual const SignalMap& signal_map() const = 0;
  /// `lanes` is the full lane count, used for slicing.
  virtual std::uint64_t lanes() const = 0;

  virtual void drive(Signal s, std::optional<BitRange> slice,
                     const SignalValue& v) = 0;
  virtual void expect(Signal s, std::optional<BitRange> slice,
                      const SignalValue& v, std::string_view message) = 0;
  /// Waits for a rising clock edge, and for `handshake` to be high if given.
  virtual void wait(std::optional<Signal> handshake) = 0;

  void put(Signal s, std::optional<BitRange> slice, const SignalValue& v,
           std::string_view message) {
    if (role() == StreamRole::Source) {
      drive(s, slice, v);
    } else {
      expect(s, slice, v, message);
    }
  }
};

void open_transfer(PhysicalSignals& signals);
/// Throws InvalidArgument if the transfer was built for different widths.
void transfer(PhysicalSignals& signals, const PhysicalTransfer& t,
              bool test_staggered, std::string_view message);
void close_transfer(PhysicalSignals& signals);

/// Converts an LSB-first bit string to the MSB-first order of HDL literals.
std::string msb_first(std::string_view lsb_first);

}  // namespace tilc

#endif  // TILC_TRANSFER_HPP

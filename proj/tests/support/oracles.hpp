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


#ifndef TILC_TESTS_SUPPORT_ORACLES_HPP
#define TILC_TESTS_SUPPORT_ORACLES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tilc/lowering.hpp"
#include "tilc/transfer.hpp"
#include "tilc/types.hpp"

namespace tilc::testing {

// Element-only type trees, kept apart from the interner so widths can be
// computed without it.
struct Tree {
  enum class Kind { Null, Bits, Group, Union };
  Kind kind = Kind::Null;
  std::uint32_t bits = 0;
  std::vector<Tree> children;
};

Tree random_tree(std::mt19937_64& rng, int depth);
std::uint64_t oracle_width(const Tree& t);
TypeId intern_tree(const Tree& t, TypeInterner& types);

/// Signal widths from a per-complexity table instead of the rules.
SignalMap oracle_signal_map(std::uint32_t complexity, std::uint32_t d,
                            std::uint64_t lanes, std::uint64_t element_width,
                            std::uint64_t user_width);

/// A simulated set of stream signals that records every drive and expect.
/// Vectors are stored LSB first. stai and endi start each transfer at 0 and
/// N-1, the values an undriven index takes in the emitted benches.
class Bus : public PhysicalSignals {
 public:
  Bus(StreamRole role, SignalMap map, std::uint64_t lanes);

  StreamRole role() const override { return role_; }
  const SignalMap& signal_map() const override { return map_; }
  std::uint64_t lanes() const override { return lanes_; }
  void drive(Signal s, std::optional<BitRange> slice,
             const SignalValue& v) override;
  void expect(Signal s, std::optional<BitRange> slice, const SignalValue& v,
              std::string_view message) override;
  void wait(std::optional<Signal> handshake) override;

  /// Clears the signals before the next transfer.
  void reset();
  const std::string& bits(Signal s) const { return values_.at(s); }
  bool driven(Signal s) const { return driven_.count(s) != 0; }
  std::size_t waits() const { return waits_; }

 private:
  void assign(Signal s, std::optional<BitRange> slice, const SignalValue& v);

  StreamRole role_;
  SignalMap map_;
  std::uint64_t lanes_;
  std::map<Signal, std::string> values_;
  std::map<Signal, bool> driven_;
  std::size_t waits_ = 0;
};

/// Reads a transfer back off the bus following the physical stream rules:
/// a lane is active if it lies within stai..endi and its strobe is high.
LogicalTransfer decode(const Bus& bus, std::uint64_t element_width,
                       std::uint32_t dimensionality, std::uint32_t complexity);

/// Drops trailing lanes that carry nothing; at complexity 8 an empty
/// sequence is its lane 0 marker.
LogicalTransfer normalize(const LogicalTransfer& t, std::uint32_t complexity);
bool same_transfer(const LogicalTransfer& a, const LogicalTransfer& b);
std::string describe_transfer(const LogicalTransfer& t);

}  // namespace tilc::testing

#endif  // TILC_TESTS_SUPPORT_ORACLES_HPP

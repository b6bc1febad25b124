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


#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "support/files.hpp"
#include "support/oracles.hpp"
#include "tilc/frontend/printer.hpp"
#include "tilc/error.hpp"
#include "tilc/ir.hpp"
#include "tilc/lowering.hpp"
#include "tilc/transfer.hpp"

namespace tilc {
namespace {

using testing::Bus;
using testing::decode;
using testing::describe_transfer;
using testing::intern_tree;
using testing::normalize;
using testing::oracle_signal_map;
using testing::oracle_width;
using testing::random_tree;
using testing::same_transfer;

TypeId make_stream(TypeInterner& types, TypeId data, Throughput t,
                   std::uint32_t d, std::uint32_t c,
                   Direction dir = Direction::Forward, TypeId user = {},
                   bool keep = false,
                   Synchronicity sync = Synchronicity::Sync) {
  return types.intern(
      StreamType{data, t, d, sync, Complexity(c), dir, user, keep});
}

TEST(Properties, WidthAdditivity) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    TypeInterner types;
    auto tree = random_tree(rng, 4);
    TypeId id = intern_tree(tree, types);
    std::uint64_t expected = oracle_width(tree);
    ASSERT_EQ(element_bit_width(id, types), expected) << describe(id, types);
    Fields f = fields(id, types);
    ASSERT_EQ(f.total_width(), expected) << describe(id, types);
    std::uint64_t sum = 0;
    for (std::size_t k = 0; k < f.entries().size(); ++k) {
      ASSERT_EQ(f.offset(k), sum);
      ASSERT_GT(f.entries()[k].width, 0u);
      sum += f.entries()[k].width;
    }
    ASSERT_EQ(sum, expected);
  }
}

TEST(Properties, SignalMapMatchesTable) {
  std::mt19937_64 rng(2);
  for (std::uint32_t c = 1; c <= 8; ++c) {
    for (std::uint32_t d = 0; d <= 3; ++d) {
      for (std::uint64_t n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
          TypeInterner types;
          auto data = random_tree(rng, 2);
          auto user = random_tree(rng, 2);
          // Fractional throughputs round up to the same lane count.
          Throughput t = trial % 2 ? Throughput(2 * n - 1, 2) : Throughput(n, 1);
          if (n == 1) t = Throughput(1, 1 + trial);
          // A stream without data or user only survives split with keep.
          bool keep = oracle_width(data) == 0 && oracle_width(user) == 0;
          TypeId s = make_stream(types, intern_tree(data, types), t, d, c,
                                 Direction::Forward, intern_tree(user, types),
                                 keep);
          auto out = synthesize(s, types);
          ASSERT_EQ(out.size(), 1u);
          EXPECT_EQ(out[0].stream.lanes, n);
          EXPECT_EQ(out[0].signals,
                    oracle_signal_map(c, d, n, oracle_width(data),
                                      oracle_width(user)))
              << "C=" << c << " D=" << d << " N=" << n;
        }
      }
    }
  }
}

TEST(Properties, RaisingComplexityNeverDropsSignals) {
  TypeInterner types;
  for (std::uint32_t d = 0; d <= 3; ++d) {
    for (std::uint64_t n = 1; n <= 8; ++n) {
      for (std::uint32_t c = 1; c < 8; ++c) {
        auto lo = synthesize(make_stream(types, types.bits(3), Throughput(n, 1),
                                         d, c),
                             types)[0].signals;
        auto hi = synthesize(make_stream(types, types.bits(3), Throughput(n, 1),
                                         d, c + 1),
                             types)[0].signals;
        for (Signal s : kAllSignals) EXPECT_GE(hi.width(s), lo.width(s));
      }
    }
  }
}

TEST(Properties, FlatteningEquivalence) {
  const Throughput ts[] = {Throughput(1, 1), Throughput(3, 2), Throughput(2, 1)};
  const Synchronicity syncs[] = {Synchronicity::Sync, Synchronicity::Flatten,
                                 Synchronicity::Desync,
                                 Synchronicity::FlatDesync};
  int checked = 0;
  for (std::uint32_t bits = 1; bits <= 3; ++bits) {
    for (std::uint32_t d1 = 0; d1 <= 2; ++d1) {
      for (std::uint32_t d2 = 0; d2 <= 2; ++d2) {
        for (Throughput t1 : ts) {
          for (Throughput t2 : ts) {
            for (Synchronicity sync : syncs) {
              TypeInterner types;
              TypeId inner = make_stream(types, types.bits(bits), t2, d2, 6,
                                         Direction::Forward, {}, false, sync);
              TypeId outer = make_stream(types, inner, t1, d1, 2);
              bool inherits = sync == Synchronicity::Sync ||
                              sync == Synchronicity::Desync;
              TypeId single = make_stream(types, types.bits(bits), t1 * t2,
                                          inherits ? d1 + d2 : d2, 6,
                                          Direction::Forward, {}, false, sync);
              auto a = synthesize(outer, types);
              auto b = synthesize(single, types);
              ASSERT_EQ(a.size(), 1u);
              ASSERT_EQ(b.size(), 1u);
              EXPECT_EQ(a[0].signals, b[0].signals);
              EXPECT_EQ(a[0].stream.lanes, b[0].stream.lanes);
              EXPECT_EQ(a[0].stream.dimensionality, b[0].stream.dimensionality);
              EXPECT_EQ(a[0].stream.element_fields, b[0].stream.element_fields);
              EXPECT_EQ(a[0].stream.complexity, b[0].stream.complexity);
              ++checked;
            }
          }
        }
      }
    }
  }
  EXPECT_EQ(checked, 3 * 3 * 3 * 9 * 4);
}

TEST(Properties, DirectionComposition) {
  for (int depth = 1; depth <= 3; ++depth) {
    for (int mask = 0; mask < (1 << depth); ++mask) {
      auto dir = [&](int level) {
        return (mask >> level) & 1 ? Direction::Reverse : Direction::Forward;
      };
      // Directly nested: flattened into one stream.
      {
        TypeInterner types;
        TypeId s = make_stream(types, types.bits(1), {}, 0, 1, dir(depth - 1));
        for (int level = depth - 2; level >= 0; --level) {
          s = make_stream(types, s, {}, 0, 1, dir(level));
        }
        auto out = split(s, types);
        ASSERT_EQ(out.size(), 1u);
        bool odd = __builtin_popcount(static_cast<unsigned>(mask)) % 2;
        EXPECT_EQ(out[0].direction, odd ? Direction::Reverse : Direction::Forward);
      }
      // Nested through Groups: every level is its own stream.
      {
        TypeInterner types;
        TypeId s = make_stream(types, types.bits(1), {}, 0, 1, dir(depth - 1));
        for (int level = depth - 2; level >= 0; --level) {
          TypeId g = types.intern(GroupType{{Field{Name::make("x"), types.bits(1)},
                                             Field{Name::make("c"), s}}});
          s = make_stream(types, g, {}, 0, 1, dir(level));
        }
        auto out = split(s, types);
        ASSERT_EQ(out.size(), static_cast<std::size_t>(depth));
        int reversed = 0;
        for (int level = 0; level < depth; ++level) {
          reversed += dir(level) == Direction::Reverse;
          EXPECT_EQ(out[level].direction,
                    reversed % 2 ? Direction::Reverse : Direction::Forward);
          EXPECT_EQ(out[level].name.size(), static_cast<std::size_t>(level));
        }
      }
    }
  }
}

std::string random_bits(std::mt19937_64& rng, std::uint64_t width) {
  std::string s(width, '0');
  for (auto& c : s) c = rng() & 1 ? '1' : '0';
  return s;
}

LogicalTransfer random_transfer(std::mt19937_64& rng, std::uint64_t lanes,
                                std::uint64_t e, std::uint32_t d,
                                std::uint64_t u) {
  auto last = [&]() -> std::optional<LastRange> {
    if (d == 0 || rng() % 3 != 0) return std::nullopt;
    std::uint32_t lo = static_cast<std::uint32_t>(rng() % d);
    std::uint32_t hi = lo + static_cast<std::uint32_t>(rng() % (d - lo));
    return LastRange{lo, hi};
  };
  if (d > 0 && rng() % 10 == 0) {
    return LogicalTransfer::empty_sequence(
        last().value_or(LastRange{0, d - 1}));
  }
  std::vector<LogicalElement> items(1 + rng() % lanes);
  for (auto& item : items) {
    if (rng() % 4 != 0) item.data = ElementData::bits(random_bits(rng, e));
    item.last = last();
  }
  std::optional<ElementData> user;
  if (u > 0) user = ElementData::bits(random_bits(rng, u));
  return LogicalTransfer::elements(std::move(items), user);
}

TEST(Properties, DecoderRoundTrip) {
  std::mt19937_64 rng(3);
  std::size_t accepted = 0, tried = 0;
  for (std::uint32_t c = 1; c <= 8; ++c) {
    for (std::uint32_t d = 0; d <= 3; ++d) {
      for (std::uint64_t n = 1; n <= 4; ++n) {
        for (std::uint64_t e = 1; e <= 3; e += 2) {
          for (std::uint64_t u = 0; u <= 2; u += 2) {
            PhysicalTransfer skeleton(Complexity(c), n, e, d, u);
            std::size_t here = 0;
            for (int trial = 0; trial < 60; ++trial) {
              LogicalTransfer t = random_transfer(rng, n, e, d, u);
              ++tried;
              std::optional<PhysicalTransfer> p;
              try {
                p = skeleton.with_logical_transfer(t);
              } catch (const Error&) {
                continue;
              }
              ++accepted;
              ++here;
              Bus bus(StreamRole::Source, skeleton.signals(), n);
              open_transfer(bus);
              transfer(bus, *p, trial % 2 == 0, "m");
              LogicalTransfer back = decode(bus, e, d, c);
              LogicalTransfer want = normalize(t, c);
              ASSERT_TRUE(same_transfer(back, want))
                  << "C=" << c << " D=" << d << " N=" << n << " sent "
                  << describe_transfer(want) << " decoded "
                  << describe_transfer(back);
            }
            EXPECT_GT(here, 0u) << "C=" << c << " D=" << d << " N=" << n;
          }
        }
      }
    }
  }
  EXPECT_GT(accepted, tried / 10);
}

TEST(Properties, PrintedSourceRoundTrips) {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 50; ++round) {
    IrDatabase db;
    PathName ns{Name::make("gen"), Name::make("r" + std::to_string(round))};
    std::vector<Port> ports;
    for (int i = 0; i < 4; ++i) {
      TypeId data = intern_tree(random_tree(rng, 3), db.types());
      TypeId user = intern_tree(random_tree(rng, 1), db.types());
      db.declare_type(ns, Name::make("t" + std::to_string(i)), data);
      TypeId s = make_stream(db.types(), data,
                             Throughput(1 + rng() % 4, 1 + rng() % 2),
                             static_cast<std::uint32_t>(rng() % 3),
                             1 + static_cast<std::uint32_t>(rng() % 8),
                             rng() & 1 ? Direction::Reverse : Direction::Forward,
                             user, (rng() & 1) != 0);
      ports.push_back(Port{Name::make("p" + std::to_string(i)),
                           rng() & 1 ? PortMode::In : PortMode::Out, s,
                           Domain::default_domain(),
                           rng() % 3 == 0
                               ? std::optional<std::string>("doc " +
                                                            std::to_string(i))
                               : std::nullopt});
    }
    db.declare_streamlet(ns, Name::make("s"),
                         Interface::make({}, ports, db.types()));
    std::string printed = frontend::print(db);
    IrDatabase again;
    auto r = testing::load_source(printed, again);
    ASSERT_EQ(r.failed, frontend::Stage::Ok) << printed;
    ASSERT_EQ(frontend::print(again), printed);
  }
}

}  // namespace
}  // namespace tilc

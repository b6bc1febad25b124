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

#include "support/expect.hpp"
#include "tilc/types.hpp"

namespace tilc {
namespace {

TEST(Throughput, ParsesDecimalsExactly) {
  Throughput t = Throughput::parse("0.125");
  EXPECT_EQ(t.numerator(), 1u);
  EXPECT_EQ(t.denominator(), 8u);
  EXPECT_EQ(Throughput::parse("2"), Throughput(2, 1));
  EXPECT_EQ(Throughput::parse("128.0"), Throughput(128, 1));
  EXPECT_EQ(Throughput::parse("1.50"), Throughput(3, 2));
}

TEST(Throughput, RejectsZeroAndGarbage) {
  EXPECT_TILC_ERROR(Throughput::parse("0.0"), InvalidArgument);
  EXPECT_TILC_ERROR(Throughput::parse("2."), InvalidArgument);
  EXPECT_TILC_ERROR(Throughput(1, 0), InvalidArgument);
  EXPECT_TILC_ERROR(Throughput::parse("99999999999999999999"), Overflow);
}

TEST(Throughput, RendersShortestDecimal) {
  EXPECT_EQ(Throughput(2, 1).to_string(), "2.0");
  EXPECT_EQ(Throughput(1, 2).to_string(), "0.5");
  EXPECT_EQ(Throughput(3, 8).to_string(), "0.375");
  EXPECT_EQ(Throughput(1, 3).to_string(), "1/3");
}

TEST(Throughput, MultipliesAndRoundsUp) {
  Throughput p = Throughput(3, 2) * Throughput(4, 3);
  EXPECT_EQ(p, Throughput(2, 1));
  EXPECT_EQ(Throughput(3, 2).ceil(), 2u);
  EXPECT_EQ(Throughput(128, 1).ceil(), 128u);
  EXPECT_LT(Throughput(1, 2), Throughput(2, 3));
}

TEST(Complexity, ParsesMinorLevels) {
  Complexity c = Complexity::parse("4.1.3");
  EXPECT_EQ(c.major(), 4u);
  EXPECT_EQ(c.minor(), (std::vector<std::uint32_t>{1, 3}));
  EXPECT_EQ(c.to_string(), "4.1.3");
  EXPECT_LT(Complexity::parse("4"), Complexity::parse("4.1"));
  EXPECT_LT(Complexity::parse("4.9"), Complexity::parse("5"));
}

TEST(Complexity, MajorOutOfRange) {
  EXPECT_TILC_ERROR(Complexity::parse("0"), InvalidArgument);
  EXPECT_TILC_ERROR(Complexity::parse("9"), InvalidArgument);
}

TEST(Direction, ComposesAsParity) {
  EXPECT_EQ(compose(Direction::Forward, Direction::Reverse), Direction::Reverse);
  EXPECT_EQ(compose(Direction::Reverse, Direction::Reverse), Direction::Forward);
  EXPECT_EQ(reversed(Direction::Forward), Direction::Reverse);
}

TEST(TypeInterner, InternsStructurally) {
  TypeInterner types;
  TypeId a = types.bits(8);
  TypeId b = types.bits(8);
  EXPECT_EQ(a, b);
  TypeId g1 = types.intern(GroupType{{Field{Name::make("x"), a}}});
  TypeId g2 = types.intern(GroupType{{Field{Name::make("x"), b}}});
  EXPECT_EQ(g1, g2);
  EXPECT_NE(g1, types.intern(UnionType{{Field{Name::make("x"), a}}}));
  EXPECT_EQ(types.null(), types.intern(NullType{}));
}

TEST(TypeInterner, RejectsInvalidTypes) {
  TypeInterner types;
  EXPECT_TILC_ERROR(types.bits(0), InvalidType);
  EXPECT_TILC_ERROR(types.intern(UnionType{}), InvalidType);
  TypeId b = types.bits(1);
  EXPECT_TILC_ERROR(
      types.intern(GroupType{{Field{Name::make("a"), b}, Field{Name::make("A"), b}}}),
      InvalidType);
  TypeId s = types.intern(StreamType{b, {}, 0, Synchronicity::Sync,
                                     Complexity::parse("1"), Direction::Forward,
                                     types.null(), false});
  EXPECT_TILC_ERROR(types.intern(StreamType{b, {}, 0, Synchronicity::Sync,
                                            Complexity::parse("1"),
                                            Direction::Forward, s, false}),
                    InvalidType);
}

TEST(TypeInterner, ElementWidths) {
  TypeInterner types;
  TypeId byte = types.bits(8);
  TypeId select = types.intern(UnionType{
      {Field{Name::make("val"), byte}, Field{Name::make("empty"), types.null()}}});
  TypeId rgb = types.intern(GroupType{{Field{Name::make("r"), select},
                                       Field{Name::make("g"), select},
                                       Field{Name::make("b"), select}}});
  EXPECT_EQ(element_bit_width(select, types), 9u);
  EXPECT_EQ(element_bit_width(rgb, types), 27u);
  TypeId s = types.intern(StreamType{rgb, {}, 0, Synchronicity::Sync,
                                     Complexity::parse("1"), Direction::Forward,
                                     types.null(), false});
  EXPECT_FALSE(types.is_element_only(s));
  EXPECT_TILC_ERROR(element_bit_width(s, types), NotElementManipulating);
}

TEST(TypeInterner, CeilLog2) {
  EXPECT_EQ(ceil_log2(1), 0u);
  EXPECT_EQ(ceil_log2(2), 1u);
  EXPECT_EQ(ceil_log2(3), 2u);
  EXPECT_EQ(ceil_log2(128), 7u);
  EXPECT_EQ(ceil_log2(129), 8u);
}

TEST(Describe, WritesTilSyntax) {
  TypeInterner types;
  TypeId u = types.intern(UnionType{
      {Field{Name::make("a"), types.bits(2)}, Field{Name::make("b"), types.null()}}});
  EXPECT_EQ(describe(u, types), "Union(a: Bits(2), b: Null)");
  TypeId s = types.intern(StreamType{u, Throughput(3, 2), 1, Synchronicity::Desync,
                                     Complexity::parse("7.1"), Direction::Reverse,
                                     types.bits(3), true});
  EXPECT_EQ(describe(s, types),
            "Stream(data: Union(a: Bits(2), b: Null), throughput: 1.5, "
            "dimensionality: 1, synchronicity: Desync, complexity: 7.1, "
            "direction: Reverse, user: Bits(3), keep: true)");
}

}  // namespace
}  // namespace tilc

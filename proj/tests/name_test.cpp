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
#include "tilc/name.hpp"

namespace tilc {
namespace {

TEST(Name, AcceptsIdentifiers) {
  for (const char* ok : {"a", "a1", "a_b", "Abc_9_x", "TID"}) {
    EXPECT_EQ(Name::make(ok).str(), ok);
  }
}

TEST(Name, RejectsMalformed) {
  for (const char* bad : {"", "_a", "a_", "1a", "a__b", "a-b", "a b", "é"}) {
    EXPECT_TILC_ERROR(Name::make(bad), InvalidName);
    EXPECT_FALSE(Name::try_make(bad).has_value()) << bad;
    EXPECT_TRUE(name_violation(bad).has_value()) << bad;
  }
}

TEST(Name, CaseInsensitiveSameness) {
  Name a = Name::make("Data");
  Name b = Name::make("dATA");
  EXPECT_NE(a, b);
  EXPECT_TRUE(a.same_as(b));
  EXPECT_EQ(a.folded(), "data");
}

TEST(PathName, RendersWithDoubleUnderscore) {
  PathName p{Name::make("my"), Name::make("example"), Name::make("comp1")};
  EXPECT_EQ(p.render(), "my__example__comp1");
  EXPECT_EQ(PathName::parse("my__example__comp1"), p);
  EXPECT_EQ(PathName().render(), "");
  EXPECT_TRUE(PathName::parse("").empty());
}

TEST(PathName, JoinAndWith) {
  PathName a{Name::make("a")};
  PathName b{Name::make("b"), Name::make("c")};
  EXPECT_EQ(a.join(b).render(), "a__b__c");
  EXPECT_EQ(a.with(Name::make("z")).render(), "a__z");
  EXPECT_EQ(a.join(b).size(), 3u);
}

}  // namespace
}  // namespace tilc

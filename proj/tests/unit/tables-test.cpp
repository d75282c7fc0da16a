/*
    Copyright (C) 2026 The cepnet authors

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#include "cepnet/sim/dataset.hpp"
#include "cepnet/tables/content-store.hpp"
#include "cepnet/tables/dump.hpp"
#include "cepnet/tables/fib.hpp"
#include "cepnet/tables/pit.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace cepnet {
namespace {

TEST(ContentStore, HitAndStaleGate)
{
  ContentStore cs;
  cs.insert("q", "v5", 5);
  auto hit = cs.lookup("q", 0);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->logicalTs, 5);
  EXPECT_FALSE(cs.lookup("q", 6));
  EXPECT_FALSE(cs.lookup("r", 0));
}

TEST(ContentStore, KeepsNewestPerKey)
{
  ContentStore cs;
  cs.insert("q", "a", 5);
  cs.insert("q", "b", 7);
  EXPECT_EQ(cs.lookup("q")->logicalTs, 7);
  cs.insert("q", "c", 5);
  EXPECT_EQ(cs.lookup("q")->payload, "b");
  cs.insert("r", "x", 1);
  EXPECT_TRUE(cs.lookup("q"));
  EXPECT_TRUE(cs.lookup("r"));
}

TEST(ContentStore, StoredTsIsMaximumInserted)
{
  SeededRandom rng(3);
  ContentStore cs;
  std::map<std::string, Timestamp> oracle;
  for (int i = 0; i < 5000; ++i) {
    std::string key = "k" + std::to_string(rng.next() % 20);
    Timestamp ts = static_cast<Timestamp>(rng.next() % 1000);
    cs.insert(key, "p", ts);
    oracle[key] = std::max(oracle.count(key) ? oracle[key] : ts, ts);
  }
  for (const auto& [key, ts] : oracle) {
    EXPECT_EQ(cs.lookup(key)->logicalTs, ts) << key;
  }
}

TEST(ContentStore, CapacityEvictsOldestTs)
{
  ContentStore cs(2);
  cs.insert("a", "", 10);
  cs.insert("b", "", 5);
  cs.insert("c", "", 7);
  EXPECT_EQ(cs.size(), 2u);
  EXPECT_FALSE(cs.lookup("b"));
  EXPECT_TRUE(cs.lookup("a"));
  EXPECT_TRUE(cs.lookup("c"));
}

TEST(ContentStore, PrefixLookup)
{
  ContentStore cs;
  cs.insert("/node/gps1/latest", "x", 3);
  EXPECT_TRUE(cs.lookupPrefix(Name::parse("/node/gps1")));
  EXPECT_FALSE(cs.lookupPrefix(Name::parse("/node/gps2")));
}

TEST(Pit, AddFaceSemantics)
{
  Pit pit;
  EXPECT_TRUE(pit.addFace("q", 1));
  EXPECT_EQ(pit.lookup("q")->faces, (std::set<FaceId>{1}));
  EXPECT_FALSE(pit.addFace("q", 1));
  EXPECT_TRUE(pit.addFace("q", 2));
  EXPECT_EQ(pit.lookup("q")->faces, (std::set<FaceId>{1, 2}));
}

TEST(Pit, RemoveAndRecreate)
{
  Pit pit;
  pit.addFace("q", 1);
  pit.lookup("q")->lastResultTs = 99;
  EXPECT_TRUE(pit.remove("q"));
  EXPECT_EQ(pit.lookup("q"), nullptr);
  EXPECT_FALSE(pit.remove("q"));
  EXPECT_TRUE(pit.addFace("q", 3));
  EXPECT_EQ(pit.lookup("q")->lastResultTs, -1);
  EXPECT_EQ(pit.lookup("q")->faces, (std::set<FaceId>{3}));
}

TEST(Pit, RemoveFaceDropsEmptyEntry)
{
  Pit pit;
  pit.addFace("q", 1);
  pit.addFace("q", 2);
  EXPECT_TRUE(pit.removeFace("q", 1));
  ASSERT_NE(pit.lookup("q"), nullptr);
  EXPECT_FALSE(pit.removeFace("q", 1));
  EXPECT_TRUE(pit.removeFace("q", 2));
  EXPECT_EQ(pit.lookup("q"), nullptr);
}

TEST(Fib, LongestPrefixExamples)
{
  Fib fib;
  fib.addRoute(Name::parse("/node"), 1);
  fib.addRoute(Name::parse("/node/A"), 2);
  EXPECT_EQ(fib.longestPrefix(Name::parse("/node/A/temp"))->prefix, Name::parse("/node/A"));
  EXPECT_FALSE(fib.longestPrefix(Name::parse("/other/x")));

  Fib ab;
  ab.addRoute(Name::parse("/a/b"), 1);
  ab.addRoute(Name::parse("/a/c"), 2);
  EXPECT_EQ(ab.longestPrefix(Name::parse("/a/b/d"))->prefix, Name::parse("/a/b"));
}

TEST(Fib, RouteReferenceCounts)
{
  Fib fib;
  Name p = Name::parse("/s");
  fib.addRoute(p, 4);
  fib.addRoute(p, 4);
  EXPECT_TRUE(fib.removeRoute(p, 4));
  EXPECT_TRUE(fib.findExact(p));
  EXPECT_TRUE(fib.removeRoute(p, 4));
  EXPECT_FALSE(fib.findExact(p));
  EXPECT_FALSE(fib.removeRoute(p, 4));
}

TEST(Fib, MatchesScanOracle)
{
  SeededRandom rng(17);
  auto randomName = [&](std::size_t maxLen) {
    std::vector<std::string> parts;
    std::size_t n = 1 + rng.next() % maxLen;
    for (std::size_t i = 0; i < n; ++i) {
      parts.push_back(std::string(1, static_cast<char>('a' + rng.next() % 3)));
    }
    return Name(parts);
  };
  for (int round = 0; round < 50; ++round) {
    Fib fib;
    std::vector<Name> prefixes;
    std::size_t count = 1 + rng.next() % 100;
    for (std::size_t i = 0; i < count; ++i) {
      Name p = randomName(4);
      fib.addRoute(p, static_cast<FaceId>(i));
      prefixes.push_back(p);
    }
    for (int q = 0; q < 100; ++q) {
      Name name = randomName(6);
      std::optional<Name> best;
      for (const auto& p : prefixes) {
        if (is_prefix_of(p, name) && (!best || p.size() > best->size())) {
          best = p;
        }
      }
      auto got = fib.longestPrefix(name);
      ASSERT_EQ(got.has_value(), best.has_value()) << name.toUri();
      if (best) {
        EXPECT_EQ(got->prefix, *best) << name.toUri();
      }
    }
  }
}

TEST(Dump, PitWithTwoFacesListsBoth)
{
  Pit pit;
  pit.addFace("WINDOW(GPS_S1,4s)", 1);
  pit.addFace("WINDOW(GPS_S1,4s)", 7);
  std::istringstream in("[pit]\n" + dump_csv(pit));
  auto sections = parse_dump(in);
  ASSERT_EQ(sections.size(), 1u);
  ASSERT_EQ(sections[0].rows.size(), 1u);
  EXPECT_EQ(sections[0].rows[0][2], "1 7");
  std::string table = format_table(sections[0]);
  EXPECT_NE(table.find("1 7"), std::string::npos);
}

TEST(Dump, EmptyCsIsHeaderOnly)
{
  ContentStore cs;
  EXPECT_EQ(dump_csv(cs), "key,ts\n");
  std::istringstream in("[cs]\n" + dump_csv(cs));
  auto sections = parse_dump(in);
  ASSERT_EQ(sections.size(), 1u);
  EXPECT_TRUE(sections[0].rows.empty());
  EXPECT_EQ(sections[0].header, (std::vector<std::string>{"key", "ts"}));
}

} // namespace
} // namespace cepnet

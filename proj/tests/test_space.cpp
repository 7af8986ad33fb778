#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "topo/enumerate.hpp"
#include "topo/errors.hpp"

using namespace topo;

namespace {

const FinSpace kSierpinski = FinSpace::sierpinski();

std::vector<PointSet> sets(std::initializer_list<PointSet> s) { return s; }

}  // namespace

TEST_CASE("make accepts valid families and canonicalises them") {
  const FinSpace a = FinSpace::make(2, {PointSet{}, PointSet{0}, PointSet{0, 1}});
  CHECK(a == kSierpinski);
  const FinSpace b = FinSpace::make(2, {PointSet{0, 1}, PointSet{0}, PointSet{}, PointSet{0}});
  CHECK(a == b);
  CHECK(FinSpace::make(1, {PointSet{}, PointSet{0}}).size() == 1);
  CHECK(FinSpace::make(0, {PointSet{}}).size() == 0);
}

TEST_CASE("make rejects non-topologies") {
  CHECK_THROWS_AS(FinSpace::make(2, {PointSet{}, PointSet{0}}), NotATopology);
  CHECK_THROWS_AS(FinSpace::make(2, {PointSet{0}, PointSet{0, 1}}), NotATopology);
  CHECK_THROWS_AS(FinSpace::make(2, {PointSet{}, PointSet{0, 2}, PointSet{0, 1}}), NotATopology);
  try {
    FinSpace::make(3, {PointSet{}, PointSet{0}, PointSet{1}, PointSet{0, 1, 2}});
    FAIL("expected NotATopology");
  } catch (const NotATopology& e) {
    const std::string msg = e.what();
    CHECK(msg.find("{0}") != std::string::npos);
    CHECK(msg.find("{1}") != std::string::npos);
  }
}

TEST_CASE("generate matches the naive closure") {
  const auto s = sets({PointSet{0, 1}, PointSet{1, 2}});
  const FinSpace g = FinSpace::generate(3, s);
  CHECK(g.is_open(PointSet{1}));
  CHECK(family_of(g) == oracle::generate(3, {0b011, 0b110}));
  CHECK(FinSpace::generate(2, {}) == FinSpace::indiscrete(2));
  CHECK(FinSpace::generate(3, sets({PointSet{0}, PointSet{1}, PointSet{2}})) == FinSpace::discrete(3));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    oracle::Family sub;
    std::vector<PointSet> subbasis;
    for (std::size_t k = rng() % 4; k > 0; --k) {
      const oracle::Mask m = rng() & oracle::full(n);
      sub.push_back(m);
      subbasis.emplace_back(m);
    }
    CHECK(family_of(FinSpace::generate(n, subbasis)) == oracle::generate(n, sub));
  }
}

TEST_CASE("closure and interior") {
  CHECK(closure(kSierpinski, PointSet{0}) == PointSet{0, 1});
  CHECK(closure(kSierpinski, PointSet{1}) == PointSet{1});
  CHECK(interior(kSierpinski, PointSet{1}) == PointSet{});
  CHECK(closure(FinSpace::discrete(3), PointSet{}) == PointSet{});
  const DoubledSpace d = double_points(kSierpinski, PointSet{1});
  CHECK(closure(d.space, PointSet{0}) == PointSet{0, 1, 2});

  for (std::size_t n = 0; n <= 3; ++n) {
    for (const oracle::Family& f : oracle::all_topologies(n)) {
      const FinSpace x = space_of(n, f);
      for_each_subset(x.points(), [&](PointSet a) {
        CHECK(closure(x, a).bits() == oracle::closure(n, f, a.bits()));
      });
    }
  }
}

TEST_CASE("minimal neighbourhoods and the specialisation preorder") {
  CHECK(kSierpinski.min_nbhd(1) == PointSet{0, 1});
  CHECK(kSierpinski.min_nbhd(0) == PointSet{0});
  CHECK(FinSpace::discrete(3).min_nbhd(2) == PointSet{2});
  CHECK(FinSpace::indiscrete(2).min_nbhd(0) == PointSet{0, 1});
  const auto pre = specialization_preorder(kSierpinski);
  CHECK(pre[0][1]);
  CHECK_FALSE(pre[1][0]);
  CHECK(pre[0][0]);
}

TEST_CASE("products") {
  const ProductSpace sq = product(kSierpinski, kSierpinski);
  CHECK(sq.space.size() == 4);
  CHECK(sq.space.open_count() == 6);
  CHECK(pair_index(kSierpinski, 1, 0) == 2);
  CHECK(sq.space.min_nbhd(pair_index(kSierpinski, 1, 1)) == PointSet{0, 1, 2, 3});
  CHECK(sq.first(pair_index(kSierpinski, 1, 0)) == 1);
  CHECK(sq.second(pair_index(kSierpinski, 1, 0)) == 0);
  CHECK(is_homeomorphic(product(kSierpinski, FinSpace::discrete(1)).space, kSierpinski));
  CHECK(product(FinSpace::discrete(2), FinSpace::discrete(3)).space == FinSpace::discrete(6));
  CHECK(diagonal(kSierpinski) == PointSet{0, 3});
}

TEST_CASE("coproducts, subspaces and quotients") {
  CHECK(coproduct(FinSpace::discrete(1), FinSpace::discrete(1)).space == FinSpace::discrete(2));
  const CoproductSpace c = coproduct(kSierpinski, FinSpace::indiscrete(2));
  CHECK(c.space.min_nbhd(3) == PointSet{2, 3});
  CHECK(c.right(1) == 3);

  const Subspace s = subspace(kSierpinski, PointSet{1});
  CHECK(s.space == FinSpace::discrete(1));
  CHECK(s.inclusion(0) == 1);

  const auto one_block = sets({PointSet{0, 1}});
  CHECK(quotient(FinSpace::discrete(2), one_block).space == FinSpace::discrete(1));
  const auto split = sets({PointSet{0, 2}, PointSet{1}});
  const QuotientSpace q = quotient(FinSpace::make(3, {PointSet{}, PointSet{0}, PointSet{0, 1}, PointSet{0, 1, 2}}), split);
  CHECK(q.space.size() == 2);
  CHECK(q.projection(2) == q.projection(0));

  CHECK_THROWS_AS(quotient(kSierpinski, sets({PointSet{0}})), InvalidPartition);
  CHECK_THROWS_AS(quotient(kSierpinski, sets({PointSet{0, 1}, PointSet{1}})), InvalidPartition);
  CHECK_THROWS_AS(quotient(kSierpinski, sets({PointSet{0, 1}, PointSet{}})), InvalidPartition);
}

TEST_CASE("point doubling") {
  CHECK(double_points(kSierpinski, PointSet{}).space == kSierpinski);

  const DoubledSpace closed = double_points(kSierpinski, PointSet{1});
  CHECK(closed.space == FinSpace::make(3, {PointSet{}, PointSet{0}, PointSet{0, 1}, PointSet{0, 2}, PointSet{0, 1, 2}}));
  REQUIRE(closed.twins.size() == 1);
  CHECK(closed.twins[0] == std::pair<Point, Point>{1, 2});

  CHECK(double_points(kSierpinski, PointSet{0}).space == FinSpace::discrete(3));

  // One doubled point: the closed form agrees with generating from the
  // single-swap subbasis.
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const oracle::Family& f : oracle::all_topologies(n)) {
      for (unsigned x = 0; x < n; ++x) {
        oracle::Family sub = f;
        const oracle::Mask bit = oracle::Mask{1} << x;
        const oracle::Mask twin = oracle::Mask{1} << n;
        for (oracle::Mask u : f) {
          if (u & bit) sub.push_back((u & ~bit) | twin);
        }
        CHECK(family_of(double_points(space_of(n, f), PointSet::singleton(x)).space) == oracle::generate(n + 1, sub));
      }
    }
  }
}

TEST_CASE("continuous map enumeration") {
  CHECK(enumerate_continuous_maps(FinSpace::indiscrete(2), kSierpinski).size() == 2);
  const auto self = enumerate_continuous_maps(kSierpinski, kSierpinski);
  REQUIRE(self.size() == 3);
  CHECK(std::vector<Point>(self[0].image().begin(), self[0].image().end()) == std::vector<Point>{0, 0});
  CHECK(std::vector<Point>(self[1].image().begin(), self[1].image().end()) == std::vector<Point>{0, 1});
  CHECK(std::vector<Point>(self[2].image().begin(), self[2].image().end()) == std::vector<Point>{1, 1});
  CHECK(enumerate_continuous_maps(FinSpace::discrete(3), FinSpace::discrete(1)).size() == 1);
  CHECK_THROWS_AS(ContinuousMap::make(kSierpinski, kSierpinski, {1, 0}), NotContinuous);

  // Against preimage continuity, every pair in the n <= 3 census.
  std::vector<std::pair<std::size_t, oracle::Family>> census;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& f : oracle::all_topologies(n)) census.emplace_back(n, f);
  }
  for (const auto& [zn, zf] : census) {
    for (const auto& [xn, xf] : census) {
      std::size_t expected = 0;
      for (const auto& f : oracle::all_functions(zn, xn)) expected += oracle::continuous(zf, xf, f) ? 1 : 0;
      CHECK(enumerate_continuous_maps(space_of(zn, zf), space_of(xn, xf)).size() == expected);
    }
  }
}

TEST_CASE("map composition, preimages and images") {
  const ContinuousMap id = ContinuousMap::identity(kSierpinski);
  const ContinuousMap c0 = ContinuousMap::make(kSierpinski, kSierpinski, {0, 0});
  CHECK(c0.after(id).image()[1] == 0);
  CHECK(c0.preimage(PointSet{0}) == PointSet{0, 1});
  CHECK(c0.image_of(PointSet{0, 1}) == PointSet{0});
}

TEST_CASE("topology enumeration") {
  const std::size_t expected[] = {1, 1, 4, 29, 355};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(enumerate_topologies(n).size() == expected[n]);
  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<oracle::Family> mine;
    for (const FinSpace& x : enumerate_topologies(n)) mine.push_back(family_of(x));
    std::vector<oracle::Family> brute = oracle::all_topologies(n);
    std::sort(mine.begin(), mine.end());
    std::sort(brute.begin(), brute.end());
    CHECK(mine == brute);
  }
  CHECK(enumerate_topologies(0)[0].size() == 0);
  CHECK_THROWS_AS(enumerate_topologies(5), CensusTooLarge);
  CHECK_THROWS_AS(enumerate_topologies(6, 6), CensusTooLarge);
  CHECK(census(3).size() == 1 + 1 + 4 + 29);
  CHECK(enumerate_topologies(2) == enumerate_topologies(2));
}

TEST_CASE("enumeration shards partition the census") {
  const auto all = enumerate_topologies(4);
  std::vector<FinSpace> joined;
  for (std::size_t i = 0; i < 5; ++i) {
    for_each_topology(4, [&](const FinSpace& x) { joined.push_back(x); }, Shard{i, 5});
  }
  CHECK(joined.size() == all.size());
  for (const FinSpace& x : all) CHECK(std::count(joined.begin(), joined.end(), x) == 1);
}

TEST_CASE("homeomorphism") {
  const FinSpace flipped = FinSpace::make(2, {PointSet{}, PointSet{1}, PointSet{0, 1}});
  CHECK(is_homeomorphic(kSierpinski, flipped));
  const auto perm = find_homeomorphism(kSierpinski, flipped);
  REQUIRE(perm.has_value());
  CHECK((*perm)[0] == 1);
  CHECK_FALSE(is_homeomorphic(kSierpinski, FinSpace::discrete(2)));

  const FinSpace d = double_points(kSierpinski, PointSet{1}).space;
  const FinSpace relabeled = FinSpace::make(3, {PointSet{}, PointSet{2}, PointSet{1, 2}, PointSet{0, 2}, PointSet{0, 1, 2}});
  CHECK(is_homeomorphic(d, relabeled));

  const std::size_t classes[] = {1, 1, 3, 9, 33};
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto spaces = enumerate_topologies(n);
    CHECK(homeomorphism_classes(spaces).size() == classes[n]);
  }
}

TEST_CASE("point sets") {
  PointSet s{0, 3, 5};
  CHECK(s.size() == 3);
  CHECK(s.to_string() == "{0 3 5}");
  CHECK(PointSet{}.to_string() == "{}");
  CHECK(s.complement(6) == PointSet{1, 2, 4});
  CHECK(s.members() == std::vector<Point>{0, 3, 5});
  std::size_t count = 0;
  for_each_subset(s, [&](PointSet) { ++count; });
  CHECK(count == 8);
  CHECK(PointSet::full(64).size() == 64);
}

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "spqg/catalog.hpp"
#include "spqg/oracles.hpp"

using namespace spqg;
using testing::error_of;
using testing::P;

TEST_SUITE("partition") {
  TEST_CASE("construction validates coverage, overlap and range") {
    CHECK(error_of([] { SpatialPartition::from_blocks(1, 1, 1, {{upper(1)}}); }) == ErrorCode::Coverage);
    CHECK(error_of([] { SpatialPartition::from_blocks(1, 1, 1, {{upper(1), lower(1)}, {lower(1)}}); }) ==
          ErrorCode::Overlap);
    CHECK(error_of([] { SpatialPartition::from_blocks(1, 1, 1, {{upper(1), lower(2)}}); }) == ErrorCode::Range);
    CHECK(error_of([] { SpatialPartition::from_blocks(1, 1, 1, {{upper(1, 2), lower(1)}}); }) == ErrorCode::Range);
    CHECK(error_of([] { SpatialPartition::from_blocks(1, 0, 0, {}); }) == ErrorCode::Range);
  }

  TEST_CASE("block order does not matter") {
    const auto a = SpatialPartition::from_blocks(2, 0, 1, {{upper(2)}, {upper(1)}});
    const auto b = SpatialPartition::from_blocks(2, 0, 1, {{upper(1)}, {upper(2)}});
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
  }

  TEST_CASE("flat index layout") {
    const auto p = oracle::all_partitions(2, 3, 2).front();
    CHECK(p.index_of(upper(2, 1)) == 2);
    CHECK(p.index_of(lower(1, 2)) == 5);
    CHECK(p.point_at(9) == lower(3, 2));
    for (std::size_t i = 0; i < p.point_count(); ++i) CHECK(p.index_of(p.point_at(i)) == i);
  }

  TEST_CASE("base partitions") {
    CHECK(identity(2) == P("P(1,1;2){u1.1,l1.1|u1.2,l1.2}"));
    CHECK(pair(2) == P("P(0,2;2){l1.1,l2.1|l1.2,l2.2}"));
    CHECK(copair(1) == involution(pair(1)));
    CHECK(empty_partition(3).point_count() == 0);
  }

  TEST_CASE("closing a pair into a copair leaves one loop per level") {
    const auto one = compose(pair(1), copair(1));
    CHECK(one.partition == empty_partition(1));
    CHECK(one.loops == 1);
    const auto two = compose(pair(2), copair(2));
    CHECK(two.loops == 2);
    CHECK(two.loop_levels == std::vector<std::uint32_t>{1, 2});
  }

  TEST_CASE("snake identity") {
    const auto upper_part = tensor(pair(1), identity(1));
    const auto lower_part = tensor(identity(1), copair(1));
    const auto r = compose(upper_part, lower_part);
    CHECK(r.partition == identity(1));
    CHECK(r.loops == 0);
    CHECK(compose(identity(1), identity(1)).partition == identity(1));
  }

  TEST_CASE("composition matches graph search") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
      const std::uint32_t m = 1 + i % 3, r = std::uint32_t(rng() % 4);
      const auto lo = oracle::random_partition(r, std::uint32_t(rng() % 3), m, rng);
      const auto up = oracle::random_partition(std::uint32_t(rng() % 3), r, m, rng);
      const auto got = compose(up, lo), want = oracle::compose_by_search(up, lo);
      REQUIRE(got.partition == want.partition);
      CHECK(got.loops == want.loops);
      CHECK(got.loop_levels == want.loop_levels);
    }
  }

  TEST_CASE("composition errors") {
    CHECK(error_of([] { compose(pair(1), identity(1)); }) == ErrorCode::InterfaceMismatch);
    CHECK(error_of([] { compose(identity(1), identity(2)); }) == ErrorCode::LevelMismatch);
    CHECK(error_of([] { tensor(identity(1), identity(2)); }) == ErrorCode::LevelMismatch);
  }

  TEST_CASE("category laws on random partitions") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      const std::uint32_t m = 1 + i % 2;
      const auto a = oracle::random_partition(std::uint32_t(rng() % 3), std::uint32_t(rng() % 3), m, rng);
      const auto b = oracle::random_partition(a.l(), std::uint32_t(rng() % 3), m, rng);
      const auto c = oracle::random_partition(b.l(), std::uint32_t(rng() % 3), m, rng);
      CHECK(involution(involution(a)) == a);
      CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
      CHECK(tensor(empty_partition(m), a) == a);
      std::vector<SpatialPartition> ids(a.k(), identity(m));
      auto id_k = ids.empty() ? empty_partition(m) : ids[0];
      for (std::size_t j = 1; j < ids.size(); ++j) id_k = tensor(id_k, ids[j]);
      if (a.k() > 0) CHECK(compose(id_k, a).partition == a);
      const auto ab_c = compose(compose(a, b).partition, c), a_bc = compose(a, compose(b, c).partition);
      CHECK(ab_c.partition == a_bc.partition);
      CHECK(ab_c.loops + compose(a, b).loops == a_bc.loops + compose(b, c).loops);
      CHECK(involution(compose(a, b).partition) == compose(involution(b), involution(a)).partition);
    }
  }

  TEST_CASE("rotations undo each other") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      const auto p = oracle::random_partition(1 + std::uint32_t(rng() % 3), 1 + std::uint32_t(rng() % 3), 2, rng);
      CHECK(rotate(rotate(p, Corner::LeftUpperDown), Corner::LeftLowerUp) == p);
      CHECK(rotate(rotate(p, Corner::LeftLowerUp), Corner::LeftUpperDown) == p);
      CHECK(rotate(rotate(p, Corner::RightUpperDown), Corner::RightLowerUp) == p);
      CHECK(rotate(rotate(p, Corner::RightLowerUp), Corner::RightUpperDown) == p);
    }
    CHECK(rotate(identity(1), Corner::LeftUpperDown) == pair(1));
    CHECK(error_of([] { rotate(pair(1), Corner::LeftUpperDown); }) == ErrorCode::EmptyRow);
  }

  TEST_CASE("rotation keeps the point and moves it to the other row") {
    const auto p = P("P(2,1;1){u1.1|u2.1,l1.1}");
    CHECK(rotate(p, Corner::LeftUpperDown) == P("P(1,2;1){l1.1|u1.1,l2.1}"));
    CHECK(rotate(p, Corner::RightUpperDown) == P("P(1,2;1){u1.1|l1.1,l2.1}"));
  }

  TEST_CASE("amplify, stack, flatten") {
    CHECK(amplify(catalog::cross(), 1) == catalog::cross());
    const auto a = amplify(catalog::cross(), 3);
    CHECK(a.m() == 3);
    CHECK(a.block_count() == 6);
    const SpatialPartition parts[] = {catalog::cross(), catalog::four_block()};
    const auto s = stack(parts);
    CHECK(s.m() == 2);
    CHECK(respects_levels(s));
    CHECK(flatten(s).k() == 4);
    CHECK(unflatten(flatten(s), 2) == s);
    CHECK(error_of([] {
            const SpatialPartition bad[] = {identity(1), pair(1)};
            stack(bad);
          }) == ErrorCode::ShapeMismatch);
    CHECK(error_of([] { unflatten(P("P(3,0;1){u1.1|u2.1|u3.1}"), 2); }) == ErrorCode::Divisibility);
    CHECK(error_of([] { amplify(identity(2), 2); }) == ErrorCode::LevelMismatch);
  }

  TEST_CASE("planarity matches the quadruple test") {
    for (std::uint32_t cols = 0; cols <= 6; ++cols)
      for (std::uint32_t k = 0; k <= cols; ++k)
        for (const auto& p : oracle::all_partitions(k, cols - k, 1))
          REQUIRE(is_noncrossing(p) == oracle::noncrossing_by_quadruples(p));
    CHECK_FALSE(is_noncrossing(catalog::cross()));
    CHECK(is_noncrossing(catalog::four_block()));
  }

  TEST_CASE("enumeration oracles give Bell and double factorial counts") {
    CHECK(oracle::all_partitions(2, 2, 1).size() == 15);
    CHECK(oracle::all_partitions(1, 2, 2).size() == 203);
    CHECK(oracle::all_pair_partitions(0, 6, 1).size() == 15);
    CHECK(oracle::all_pair_partitions(1, 2, 2).size() == 15);
    CHECK(oracle::all_pair_partitions(1, 2, 1).empty());
  }

  TEST_CASE("corner names") {
    for (auto c : {Corner::LeftUpperDown, Corner::LeftLowerUp, Corner::RightUpperDown, Corner::RightLowerUp})
      CHECK(parse_corner(corner_name(c)) == c);
    CHECK(error_of([] { parse_corner("up"); }) == ErrorCode::Parse);
  }

  TEST_CASE("canonical order is total and deterministic") {
    auto all = oracle::all_partitions(1, 1, 2);
    auto shuffled = all;
    std::shuffle(shuffled.begin(), shuffled.end(), std::mt19937_64(3));
    std::sort(all.begin(), all.end());
    std::sort(shuffled.begin(), shuffled.end());
    CHECK(all == shuffled);
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

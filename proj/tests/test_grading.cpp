#include "helpers.hpp"
#include "spqg/catalog.hpp"
#include "spqg/closure.hpp"
#include "spqg/grading.hpp"
#include "spqg/oracles.hpp"

using namespace spqg;
using testing::error_of;

namespace {

std::vector<SpatialPartition> pair_partitions_in(const SeparatingClass& c, std::uint32_t max_cols) {
  std::vector<SpatialPartition> out;
  for (std::uint32_t cols = 0; cols <= max_cols; ++cols)
    for (std::uint32_t k = 0; k <= cols; ++k)
      for (auto& p : oracle::all_pair_partitions(k, cols - k, 2))
        if (try_class_membership(p, c) == std::optional<bool>(true)) out.push_back(p);
  return out;
}

}  // namespace

TEST_SUITE("grading") {
  TEST_CASE("kernel partition groups equal dimensions") {
    const std::uint32_t dims[] = {2, 3, 2};
    CHECK(ker_partition(dims).to_string() == "{1,3|2}");
    CHECK(ker_partition(dims) == GradingPartition(3, {{1, 3}, {2}}));
    CHECK(error_of([] { GradingPartition(2, {{1}}); }) == ErrorCode::Coverage);
  }

  TEST_CASE("graded partitions") {
    const auto pi = GradingPartition(2, {{1}, {2}});
    CHECK(is_pi_graded(identity(2), pi));
    CHECK_FALSE(is_pi_graded(catalog::level_pair(), pi));
    CHECK(is_pi_graded(catalog::level_pair(), GradingPartition::one_block(2)));
  }

  TEST_CASE("class membership of named partitions") {
    const SeparatingClass symm{ClassTag::Symm, {}}, even{ClassTag::EvenCols, {}}, resp{ClassTag::RespLevels, {}};
    CHECK(class_membership(catalog::level_swap(), symm));
    CHECK_FALSE(class_membership(catalog::cross_on_level(1), symm));
    CHECK(class_membership(catalog::level_double_pair(), even));
    CHECK_FALSE(class_membership(catalog::level_pair(), even));
    CHECK(class_membership(amplify(catalog::halflib(), 2), resp));
    CHECK(error_of([&] { class_membership(identity(3), symm); }) == ErrorCode::NotApplicable);
    CHECK(error_of([&] { class_membership(catalog::level_four(), even); }) == ErrorCode::NotApplicable);
    CHECK_FALSE(try_class_membership(identity(3), symm).has_value());
  }

  TEST_CASE("class names parse back") {
    for (const auto& c : all_classes()) CHECK(parse_class(c.name()) == c);
    const auto pg = parse_class("PiGraded{1,3|2}");
    CHECK(pg.tag == ClassTag::PiGraded);
    CHECK(pg.pi->m() == 3);
    CHECK(error_of([] { parse_class("Round"); }) == ErrorCode::Parse);
  }

  TEST_CASE("classes used as separators stay closed on small pair generators") {
    Bounds b;
    b.max_cols = 5;
    b.threads = 1;
    for (const auto& c : table_classes()) {
      REQUIRE(class_is_closed(c, 2, true));
      const auto cs = generate_closure(pair_partitions_in(c, 3), 2, b);
      CHECK(cs.saturated());
      for (const auto& p : cs.members()) CHECK(try_class_membership(p, c) != std::optional<bool>(false));
    }
  }

  TEST_CASE("plain no-geodesic pair partitions do not form a category") {
    const SeparatingClass c{ClassTag::NoGeodesic, {}};
    CHECK_FALSE(class_is_closed(c, 2, true));
    const auto gens = pair_partitions_in(c, 3);
    Bounds b;
    b.max_cols = 5;
    b.threads = 1;
    const auto target = catalog::level_pair();
    REQUIRE_FALSE(class_membership(target, c));
    const auto cs = generate_closure(gens, 2, b, &target);
    const auto answer = contains(cs, target, all_classes());
    REQUIRE(answer.verdict == Verdict::Member);
    CHECK(replay_trace(answer.trace, gens, 2) == target);
  }

  TEST_CASE("plain no-diagonal pair partitions stay closed within small bounds") {
    const SeparatingClass c{ClassTag::NoDiagonal, {}};
    CHECK_FALSE(class_is_closed(c, 2, true));
    Bounds b;
    b.max_cols = 5;
    b.threads = 1;
    const auto cs = generate_closure(pair_partitions_in(c, 3), 2, b);
    CHECK(cs.saturated());
    for (const auto& p : cs.members()) CHECK(class_membership(p, c));
  }
}

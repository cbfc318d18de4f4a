#include <algorithm>
#include <sstream>

#include "helpers.hpp"
#include "spqg/catalog.hpp"
#include "spqg/closure.hpp"
#include "spqg/closure_io.hpp"
#include "spqg/oracles.hpp"

using namespace spqg;
using testing::error_of;

namespace {

Bounds cap(std::uint32_t cols, unsigned threads = 1) {
  Bounds b;
  b.max_cols = cols;
  b.threads = threads;
  return b;
}

std::size_t planar_pairs(std::uint32_t k, std::uint32_t l) {
  const auto all = oracle::all_pair_partitions(k, l, 1);
  return std::size_t(std::count_if(all.begin(), all.end(), oracle::noncrossing_by_quadruples));
}

}  // namespace

TEST_SUITE("closure") {
  TEST_CASE("empty generator set gives planar pair partitions of every shape") {
    const auto cs = generate_closure({}, 1, cap(6));
    CHECK(cs.saturated());
    CHECK(cs.stop_reason() == StopReason::Saturated);
    for (std::uint32_t cols = 0; cols <= 6; ++cols)
      for (std::uint32_t k = 0; k <= cols; ++k) CHECK(cs.count(k, cols - k) == planar_pairs(k, cols - k));
    CHECK(cs.contains(empty_partition(1)));
  }

  TEST_CASE("the four block generates planar partitions with even blocks") {
    const auto cs = generate_closure({catalog::four_block()}, 1, cap(5));
    for (std::uint32_t cols = 0; cols <= 5; ++cols)
      for (std::uint32_t k = 0; k <= cols; ++k) {
        auto all = oracle::all_partitions(k, cols - k, 1);
        const auto even = std::count_if(all.begin(), all.end(), [](const SpatialPartition& p) {
          if (!oracle::noncrossing_by_quadruples(p)) return false;
          for (auto s : p.block_sizes())
            if (s % 2) return false;
          return true;
        });
        CHECK(cs.count(k, cols - k) == std::size_t(even));
      }
  }

  TEST_CASE("output does not depend on the thread count") {
    const std::vector<SpatialPartition> gens = {catalog::cross_on_level(1), catalog::level_pair()};
    const auto one = generate_closure(gens, 2, cap(4, 1));
    const auto four = generate_closure(gens, 2, cap(4, 4));
    CHECK(one.members() == four.members());
    CHECK(one.ops() == four.ops());
  }

  TEST_CASE("bounds stop generation") {
    Bounds b = cap(8);
    b.max_set = 50;
    const auto small = generate_closure({catalog::cross()}, 1, b);
    CHECK_FALSE(small.saturated());
    CHECK(small.stop_reason() == StopReason::MaxSet);
    CHECK(small.size() <= 50);
    b = cap(8);
    b.max_rounds = 1;
    CHECK(generate_closure({catalog::cross()}, 1, b).stop_reason() == StopReason::MaxRounds);
    b = cap(8);
    b.max_ops = 10;
    CHECK(generate_closure({catalog::cross()}, 1, b).stop_reason() == StopReason::MaxOps);
    CHECK(error_of([] { generate_closure({catalog::halflib()}, 1, cap(4)); }) == ErrorCode::Range);
    CHECK(error_of([] { generate_closure({identity(2)}, 1, cap(4)); }) == ErrorCode::LevelMismatch);
  }

  TEST_CASE("traces replay to their members") {
    const std::vector<SpatialPartition> gens = {catalog::cross()};
    const auto cs = generate_closure(gens, 1, cap(6));
    for (std::size_t i = 0; i < cs.size(); i += 7) {
      const auto trace = extract_trace(cs, i);
      CHECK(replay_trace(trace, gens, 1) == cs.members()[i]);
    }
    auto trace = extract_trace(cs, cs.size() - 1);
    trace.back().result = identity(1);
    CHECK(error_of([&] { replay_trace(trace, gens, 1); }) == ErrorCode::Internal);
    CHECK(error_of([&] { replay_trace(extract_trace(cs, cs.size() - 1), {}, 1); }) == ErrorCode::Internal);
  }

  TEST_CASE("membership verdicts") {
    const auto planar = generate_closure({}, 1, cap(6));
    const auto member = contains(planar, catalog::cross(), all_classes());
    CHECK(member.verdict == Verdict::SeparatedBy);
    CHECK(member.separator->name() == "NonCrossing");
    const auto found = contains(planar, rotate(pair(1), Corner::RightLowerUp), all_classes());
    CHECK(found.verdict == Verdict::Member);
    const auto swaps = generate_closure({catalog::level_swap()}, 2, cap(4));
    const auto miss = contains(swaps, catalog::level_pair(), table_classes());
    CHECK(miss.verdict == Verdict::SeparatedBy);
    CHECK(miss.separator->name() == "NoGeoSymm");
    const auto p2 = generate_closure({catalog::cross()}, 1, cap(4));
    CHECK(contains(p2, catalog::four_block(), all_classes()).verdict == Verdict::NotFoundWithinBounds);
  }

  TEST_CASE("product of closures stacks members shape by shape") {
    const auto nc = generate_closure({}, 1, cap(4));
    const auto p2 = generate_closure({catalog::cross()}, 1, cap(4));
    const auto prod = kronecker_product(nc, p2);
    CHECK(prod.m() == 2);
    for (std::uint32_t cols = 0; cols <= 4; ++cols)
      for (std::uint32_t k = 0; k <= cols; ++k)
        CHECK(prod.count(k, cols - k) == nc.count(k, cols - k) * p2.count(k, cols - k));
    const auto glued = amalgamated_closure(nc, p2, {catalog::level_swap()}, cap(4));
    CHECK(glued.size() >= prod.size());
    CHECK(glued.contains(catalog::level_swap()));
  }

  TEST_CASE("closure dumps round trip") {
    const std::vector<SpatialPartition> gens = {catalog::cross_on_level(2)};
    const auto cs = generate_closure(gens, 2, cap(4));
    std::stringstream jsonl;
    write_closure_jsonl(cs, jsonl);
    const auto back = read_closure(jsonl, closure_meta(cs));
    CHECK(back.members() == cs.members());
    CHECK(back.saturated() == cs.saturated());
    CHECK(back.generators() == cs.generators());
    const auto target = cs.members().back();
    const auto answer = contains(back, target, all_classes());
    REQUIRE(answer.verdict == Verdict::Member);
    CHECK(replay_trace(answer.trace, gens, 2) == target);
    std::stringstream bad("{\"k\":0}\n");
    CHECK(error_of([&] { read_closure(bad, closure_meta(cs)); }) == ErrorCode::Parse);
  }
}

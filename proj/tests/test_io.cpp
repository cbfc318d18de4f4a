#include <random>

#include "helpers.hpp"
#include "spqg/catalog.hpp"
#include "spqg/oracles.hpp"

using namespace spqg;
using testing::error_of;

TEST_SUITE("io") {
  TEST_CASE("text and JSON round trip") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
      const auto p = oracle::random_partition(std::uint32_t(rng() % 4), std::uint32_t(rng() % 4), 1 + i % 3, rng);
      CHECK(parse_text(to_text(p)) == p);
      CHECK(partition_from_json(to_json(p)) == p);
      CHECK(parse_partition(to_json(p).dump()) == p);
      CHECK(parse_partition(to_text(p)) == p);
    }
  }

  TEST_CASE("text form") {
    CHECK(to_text(pair(1)) == "P(0,2;1){l1.1,l2.1}");
    CHECK(to_text(empty_partition(1)) == "P(0,0;1){}");
    CHECK(parse_text("P(1,1;1){ l1.1 , u1.1 }") == identity(1));
  }

  TEST_CASE("JSON form") {
    CHECK(to_json(identity(1)).dump() == R"({"blocks":[[["u",1,1],["l",1,1]]],"k":1,"l":1,"m":1})");
  }

  TEST_CASE("parse errors") {
    CHECK(error_of([] { parse_text("P(1,1;1){u1.1}"); }) == ErrorCode::Coverage);
    CHECK(error_of([] { parse_text("P(1,1;1){u1.1,x1.1}"); }) == ErrorCode::Parse);
    CHECK(error_of([] { parse_partition("no_such_partition"); }) == ErrorCode::Parse);
    CHECK(error_of([] { parse_partition(R"({"k":1})"); }) == ErrorCode::Parse);
  }

  TEST_CASE("every catalog name parses") {
    for (const auto& name : catalog::catalog_names()) {
      const auto p = parse_partition(name);
      CHECK(parse_text(to_text(p)) == p);
    }
  }

  TEST_CASE("rendering") {
    CHECK(render_ascii(catalog::cross()) == "upper: a b\nlower: b a\n");
  }
}

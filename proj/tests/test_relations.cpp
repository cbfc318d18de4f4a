#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "spqg/catalog.hpp"
#include "spqg/oracles.hpp"
#include "spqg/relations.hpp"

using namespace spqg;
using testing::error_of;

namespace {

MatrixModel random_orthogonal_free_model(const Dims& d, std::mt19937_64& rng) {
  MatrixModel m(d, 1);
  for (std::uint64_t I = 0; I < d.N(); ++I)
    for (std::uint64_t J = 0; J < d.N(); ++J) m.set(I, J, RepMatrix::scalar(1, Rational(int(rng() % 3) - 1)));
  return m;
}

}  // namespace

TEST_SUITE("relations") {
  TEST_CASE("one equation per index pair") {
    const auto r = emit_relations(catalog::level_swap(), Dims({2, 2}));
    CHECK(r.equations.size() == 16);
    const auto p = emit_relations(pair(1), Dims({3}));
    CHECK(p.equations.size() == 9);
  }

  TEST_CASE("pair relation reads as orthogonality") {
    const auto r = emit_relations(pair(1), Dims({2}));
    // No upper points: the left side is the delta of J alone.
    const auto& same = r.equations.front();
    CHECK(format_sum(same.lhs, Dims({2})) == "1");
    CHECK(format_sum(same.rhs, Dims({2})) == "u(1|1) u(1|1) + u(1|2) u(1|2)");
    const auto& mixed = r.equations[1];
    CHECK(format_sum(mixed.lhs, Dims({2})) == "0");
    CHECK(format_sum(mixed.rhs, Dims({2})) == "u(1|1) u(2|1) + u(1|2) u(2|2)");
    CHECK(format_word({}, Dims({2})) == "1");
    CHECK(format_sum(FormalSum{}, Dims({2})) == "0");
  }

  TEST_CASE("identity relation is tautological") {
    const auto text = format_relations(emit_relations(identity(2), Dims({2, 2})), true);
    CHECK(text.empty());
  }

  TEST_CASE("the two checking methods agree") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 60; ++i) {
      const Dims d = i % 2 ? Dims({2}) : Dims({2, 2});
      const auto k = std::uint32_t(rng() % 3);
      const auto p = oracle::random_partition(k, std::uint32_t(rng() % (3 - k)), d.m(), rng);
      const auto model = random_orthogonal_free_model(d, rng);
      CHECK(relation_holds_by_equations(p, model) == relation_holds_by_intertwiner(p, model));
    }
  }

  TEST_CASE("permutation models satisfy relations of level-respecting partitions") {
    std::vector<std::uint32_t> sigma = {3, 1, 2};
    const auto model = permutation_model(sigma, 2);
    CHECK(model.orthogonal());
    for (const auto& name : {"cross_both_levels", "halflib_both_levels", "singleton_both_levels", "pair_both_levels"})
      CHECK(check_relation(catalog::named(name), model).holds);
    CHECK(check_relation(identity(2), identity_model(Dims({2, 2}))).holds);
  }

  TEST_CASE("non-permutation models break relations") {
    MatrixModel m(Dims({2}), 1);
    m.set(0, 0, RepMatrix::scalar(1, 1));
    m.set(0, 1, RepMatrix::scalar(1, 1));
    m.set(1, 0, RepMatrix::scalar(1, 0));
    m.set(1, 1, RepMatrix::scalar(1, 1));
    const auto r = check_relation(pair(1), m);
    CHECK_FALSE(r.holds);
    CHECK(r.failures > 0);
    CHECK_FALSE(r.first_failure.empty());
    CHECK_FALSE(m.orthogonal());
  }

  TEST_CASE("incomplete models are rejected") {
    MatrixModel m(Dims({2}), 1);
    m.set(0, 0, RepMatrix::scalar(1, 1));
    CHECK(error_of([&] { check_relation(identity(1), m); }) == ErrorCode::IncompleteModel);
  }

  TEST_CASE("model JSON round trip") {
    const auto model = scaled_model(permutation_model({2, 1}, 2), Rational(1, 2));
    const auto back = MatrixModel::from_json(model.to_json());
    for (std::uint64_t I = 0; I < 4; ++I)
      for (std::uint64_t J = 0; J < 4; ++J) CHECK(back.u(I, J) == model.u(I, J));
    const auto j = nlohmann::json::parse(R"({"dims":[2],"rep_dim":1,"entries":{"1|1":1,"1|2":0,"2|1":"0","2|2":"3/3"}})");
    const auto m = MatrixModel::from_json(j);
    CHECK(m.u(1, 1) == RepMatrix::identity(1));
    CHECK(error_of([] { MatrixModel::from_json(nlohmann::json::parse(R"({"dims":[2],"entries":{"1|1":"1/0"}})")); }) ==
          ErrorCode::Parse);
    CHECK(error_of([] { MatrixModel::from_json(nlohmann::json::parse(R"({"dims":[2],"entries":{"3|1":1}})")); }) ==
          ErrorCode::Range);
  }

  TEST_CASE("relations are closed under the category operations") {
    const auto model = permutation_model({2, 3, 1}, 2);
    const auto c = check_relation_closure(catalog::cross_on_level(1), catalog::level_pair(), model);
    CHECK(c.ok());
    MatrixModel bad(Dims({2}), 1);
    for (std::uint64_t I = 0; I < 2; ++I)
      for (std::uint64_t J = 0; J < 2; ++J) bad.set(I, J, RepMatrix::scalar(1, 1));
    CHECK(error_of([&] { check_relation_closure(pair(1), identity(1), bad); }) == ErrorCode::Precondition);
  }

  TEST_CASE("ring matrix of a permutation model") {
    const auto r = ring_matrix(permutation_model({2, 1}, 2));
    CHECK(r.n == 2);
    CHECK(r.independent);
    CHECK(r.orthogonal);
    CHECK(r.magic());
    CHECK(r.ring[1].at(0, 0) == 1);
    CHECK(r.ring[0].at(0, 0) == 0);
    CHECK(error_of([] { ring_matrix(permutation_model({1, 2}, 1)); }) == ErrorCode::Shape);
    std::mt19937_64 rng(1);
    auto noisy = random_orthogonal_free_model(Dims({2, 2}), rng);
    if (!check_relation(catalog::singletons_on_level(2), noisy).holds)
      CHECK(error_of([&] { ring_matrix(noisy); }) == ErrorCode::Precondition);
  }
}

#include <random>

#include "helpers.hpp"
#include "spqg/catalog.hpp"
#include "spqg/oracles.hpp"
#include "spqg/tensor_maps.hpp"

using namespace spqg;
using testing::error_of;

namespace {

std::vector<std::uint8_t> dense(const SpMatrix& s) {
  std::vector<std::uint8_t> out(s.rows() * s.cols(), 0);
  for (const auto& e : s.entries()) out[e.row * s.cols() + e.col] = 1;
  return out;
}

}  // namespace

TEST_SUITE("tensor_maps") {
  TEST_CASE("dims") {
    const auto d = Dims::parse("2,3");
    CHECK(d.N() == 6);
    CHECK(d.m() == 2);
    CHECK(d.to_string() == "2,3");
    CHECK(error_of([] { Dims::parse("2,x"); }) == ErrorCode::Parse);
    CHECK(error_of([] { Dims::parse("0"); }) == ErrorCode::Parse);
  }

  TEST_CASE("basis indices are lexicographic with level one leading") {
    const Dims d({2, 3});
    CHECK(basis_index({{1, 1}}, d) == 0);
    CHECK(basis_index({{1, 3}}, d) == 2);
    CHECK(basis_index({{2, 1}}, d) == 3);
    CHECK(basis_index({{1, 2}, {2, 1}}, d) == 1 * 6 + 3);
    for (std::uint64_t i = 0; i < 36; ++i) CHECK(basis_index(multi_index_at(i, 2, d), d) == i);
  }

  TEST_CASE("maps of base partitions") {
    CHECK(s_map(identity(1), Dims({3})) == SpMatrix::identity(3));
    CHECK(s_map(identity(2), Dims({2, 3})) == SpMatrix::identity(6));
    const auto p = s_map(pair(1), Dims({2}));
    CHECK(p.rows() == 4);
    CHECK(p.cols() == 1);
    CHECK(p.to_matrix_market() == "%%MatrixMarket matrix coordinate integer general\n4 1 2\n1 1 1\n4 1 1\n");
    CHECK(s_map(catalog::singleton(), Dims({3})).nnz() == 3);
    const auto p2 = s_map(pair(2), Dims({2, 2}));
    REQUIRE(p2.rows() == 16);
    for (std::uint64_t r = 0; r < 16; ++r) CHECK(p2.at(r, 0) == (r / 4 == r % 4 ? 1 : 0));
    const auto c = s_map(catalog::cross(), Dims({3}));
    CHECK(c * c == SpMatrix::identity(9));
    CHECK(s_map(copair(1), Dims({2})) * s_map(pair(1), Dims({2})) == SpMatrix::identity(1).scaled(2));
  }

  TEST_CASE("maps agree with the dense oracle") {
    std::mt19937_64 rng(9);
    const std::vector<Dims> dims = {Dims({2}), Dims({3}), Dims({2, 2}), Dims({1, 3}), Dims({2, 2, 2})};
    for (int i = 0; i < 150; ++i) {
      const auto& d = dims[std::size_t(i) % dims.size()];
      const auto k = std::uint32_t(rng() % 3);
      auto p = oracle::random_partition(k, std::uint32_t(rng() % (4 - k)), d.m(), rng);
      if (!is_pi_graded(p, ker_partition(d.n))) continue;
      CHECK(dense(s_map(p, d)) == oracle::dense_s_map(p, d));
    }
  }

  TEST_CASE("grading and size errors") {
    CHECK(error_of([] { s_map(catalog::level_pair(), Dims({2, 3})); }) == ErrorCode::Grading);
    CHECK(error_of([] { s_map(identity(2), Dims({2})); }) == ErrorCode::Shape);
    set_max_cells(100);
    CHECK(error_of([] { s_map(catalog::halflib(), Dims({3})); }) == ErrorCode::Size);
    set_max_cells(10'000'000);
    CHECK(s_map(catalog::halflib(), Dims({3})).nnz() == 27);
  }

  TEST_CASE("loop factor counts the level of each erased component") {
    const auto r = verify_functoriality(copair(2), pair(2), Dims({2, 3}));
    CHECK(r.ok());
    CHECK(r.compose_checked);
    CHECK(r.loops == 2);
    CHECK(r.loop_factor == 6);
    CHECK(r.power_of_N_ok == false);
    const auto one = verify_functoriality(copair(1), pair(1), Dims({3}));
    CHECK(one.loop_factor == 3);
    CHECK(one.power_of_N_ok);
  }

  TEST_CASE("sparse rank agrees with dense rank") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 40; ++t) {
      std::vector<std::vector<std::uint8_t>> dv;
      std::vector<std::vector<std::pair<std::uint64_t, mpz_class>>> sv;
      const std::size_t n = 1 + rng() % 6, len = 1 + rng() % 8;
      for (std::size_t i = 0; i < n; ++i) {
        auto& d = dv.emplace_back(len, 0);
        auto& s = sv.emplace_back();
        for (std::size_t j = 0; j < len; ++j)
          if (rng() % 3 == 0) {
            d[j] = 1;
            s.push_back({j, 1});
          }
      }
      CHECK(sparse_integer_rank(sv) == oracle::dense_rank(dv));
    }
  }

  TEST_CASE("hom dimensions") {
    CHECK(hom_dim(oracle::all_pair_partitions(0, 4, 1), Dims({2})) == 3);
    CHECK(hom_dim(oracle::all_partitions(0, 2, 1), Dims({1})) == 1);
    CHECK(hom_dim({}, Dims({2})) == 0);
    CHECK(error_of([] { hom_dim({identity(1), pair(1)}, Dims({2})); }) == ErrorCode::Shape);
  }

  TEST_CASE("matrix algebra") {
    const auto a = s_map(catalog::cross(), Dims({2}));
    CHECK(a * a == SpMatrix::identity(4));
    CHECK(a.transpose() == a);
    CHECK(SpMatrix::identity(2).kron(SpMatrix::identity(3)) == SpMatrix::identity(6));
    CHECK(a.scaled(2).at(1, 2) == 2);
  }
}

#include "spqg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "spqg/catalog.hpp"
#include "spqg/closure.hpp"
#include "spqg/grading.hpp"
#include "spqg/oracles.hpp"
#include "spqg/relations.hpp"

namespace spqg::verify {

namespace {

std::vector<std::uint8_t> to_dense(const SpMatrix& s, bool& zero_one) {
  std::vector<std::uint8_t> out(s.rows() * s.cols(), 0);
  for (const auto& e : s.entries()) {
    if (e.value != 1) zero_one = false;
    out[e.row * s.cols() + e.col] = 1;
  }
  return out;
}

// Dense integer product of a (r x s) and b (s x t).
std::vector<std::uint64_t> dense_product(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b,
                                         std::uint64_t r, std::uint64_t s, std::uint64_t t) {
  std::vector<std::uint64_t> out(r * t, 0);
  for (std::uint64_t i = 0; i < r; ++i)
    for (std::uint64_t k = 0; k < s; ++k)
      if (a[i * s + k])
        for (std::uint64_t j = 0; j < t; ++j) out[i * t + j] += b[k * t + j];
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// ---------------------------------------------------------------- criterion 1

CriterionResult functoriality(const Options& opt) {
  CriterionResult r{1, "functoriality of s_map", false, "", 0};
  std::mt19937_64 rng(opt.seed);
  const std::vector<Dims> choices = {Dims({2}), Dims({3}), Dims({2, 2})};
  std::size_t pairs = 0, with_loops = 0, literal_failures = 0, corrected_failures = 0, oracle_failures = 0;
  std::string first_literal_failure;
  auto pick = [&](std::uint32_t lo, std::uint32_t hi) { return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng); };
  for (int i = 0; i < 200; ++i) {
    const Dims& d = choices[std::size_t(i) % choices.size()];
    const std::uint32_t m = d.m();
    const std::uint32_t r_mid = pick(0, 3);
    const auto p = oracle::random_partition(r_mid, pick(0, 4 - r_mid), m, rng);
    const auto q = oracle::random_partition(pick(0, 4 - r_mid), r_mid, m, rng);
    ++pairs;
    const auto rep = verify_functoriality(p, q, d);

    // Oracle side: dense maps from block lists, graph-search composition.
    bool zero_one = true;
    const auto dp = oracle::dense_s_map(p, d), dq = oracle::dense_s_map(q, d);
    const bool maps_ok = to_dense(s_map(p, d), zero_one) == dp && to_dense(s_map(q, d), zero_one) == dq &&
                         to_dense(s_map(tensor(p, q), d), zero_one) == oracle::dense_s_map(tensor(p, q), d) &&
                         zero_one;
    const auto c = oracle::compose_by_search(q, p);
    const auto lib_c = compose(q, p);
    std::uint64_t factor = 1;
    for (auto level : c.loop_levels) factor *= d.n[level - 1];
    const std::uint64_t N = d.N();
    const auto prod = dense_product(dp, dq, ipow(N, p.l()), ipow(N, r_mid), ipow(N, q.k()));
    const auto dc = oracle::dense_s_map(c.partition, d);
    bool corrected = prod.size() == dc.size();
    bool literal = corrected;
    const std::uint64_t power = ipow(N, c.loops);
    for (std::size_t e = 0; e < prod.size() && corrected; ++e) {
      corrected = corrected && prod[e] == factor * dc[e];
      literal = literal && prod[e] == power * dc[e];
    }
    if (c.loops) ++with_loops;
    const bool lib_ok = rep.ok() && rep.compose_checked && lib_c.partition == c.partition &&
                        lib_c.loops == c.loops && rep.loop_factor == Rational(std::to_string(factor)) &&
                        rep.power_of_N_ok == literal;
    if (!maps_ok || !lib_ok) ++oracle_failures;
    if (!corrected) ++corrected_failures;
    if (!literal) {
      if (literal_failures++ == 0) {
        std::ostringstream os;
        os << "dims (" << d.to_string() << "), " << c.loops << " loops: factor " << factor << " where N^loops = " << power;
        first_literal_failure = os.str();
      }
    }
  }
  std::ostringstream out;
  out << pairs << " random pairs, " << with_loops << " with loops; tensor/involution/composition vs dense oracle: "
      << (oracle_failures ? std::to_string(oracle_failures) + " mismatches" : "exact")
      << "; with per-level loop factor: " << (corrected_failures ? "fails" : "holds") << " on all composable pairs"
      << "; with literal N^loops: fails on " << literal_failures << " pairs";
  if (literal_failures) out << " (first: " << first_literal_failure << ")";
  r.detail = out.str();
  r.passed = oracle_failures == 0 && corrected_failures == 0 && literal_failures == 0;
  return r;
}

// ---------------------------------------------------------------- criterion 2

CriterionResult closure_counts(const Options& opt) {
  CriterionResult r{2, "closure counts NC2 and P2", false, "", 0};
  Bounds b;
  b.max_cols = 8;
  b.threads = opt.threads;
  const auto nc = generate_closure({}, 1, b);
  const auto p2 = generate_closure({catalog::cross()}, 1, b);
  const std::size_t want_nc[] = {1, 2, 5, 14}, want_p2[] = {1, 3, 15, 105};
  bool ok = nc.saturated() && p2.saturated();
  std::ostringstream out;
  out << "(0,2k) counts NC2:";
  for (std::uint32_t k = 1; k <= 4; ++k) {
    auto all = oracle::all_pair_partitions(0, 2 * k, 1);
    std::vector<SpatialPartition> planar;
    std::copy_if(all.begin(), all.end(), std::back_inserter(planar), oracle::noncrossing_by_quadruples);
    std::sort(all.begin(), all.end());
    std::sort(planar.begin(), planar.end());
    const auto got_nc = nc.members_of_shape(0, 2 * k), got_p2 = p2.members_of_shape(0, 2 * k);
    ok = ok && got_nc == planar && got_p2 == all && planar.size() == want_nc[k - 1] && all.size() == want_p2[k - 1];
    out << " " << got_nc.size();
  }
  out << "; P2:";
  for (std::uint32_t k = 1; k <= 4; ++k) out << " " << p2.count(0, 2 * k);
  out << "; member sets equal oracle enumeration: " << (ok ? "yes" : "no") << "; closure sizes " << nc.size() << "/"
      << p2.size();
  r.detail = out.str();
  r.passed = ok;
  return r;
}

// ---------------------------------------------------------------- criterion 3

struct TableRow {
  std::string label;
  std::vector<std::vector<SpatialPartition>> categories;  // generator lists
};

std::vector<TableRow> table_rows() {
  using namespace catalog;
  std::vector<TableRow> rows;
  rows.push_back({"(a)", {{}, {named("halflib_both_levels")}, {named("cross_both_levels")}}});
  // (b): every product of two of NC2, <halflib>, P2, represented by its bounded members.
  Bounds b;
  b.max_cols = 6;
  const std::vector<std::vector<SpatialPartition>> factor_gens = {{}, {halflib()}, {cross()}};
  std::vector<ClosureSet> factors;
  for (const auto& g : factor_gens) factors.push_back(generate_closure(g, 1, b));
  TableRow products{"(b)", {}};
  for (const auto& f1 : factors)
    for (const auto& f2 : factors) products.categories.push_back(kronecker_product(f1, f2).members());
  rows.push_back(products);
  rows.push_back({"(c)", {{level_double_pair()}}});
  rows.push_back({"(d)", {{level_swap()}}});
  rows.push_back({"(e)", {{level_swap(), level_double_pair()}}});
  rows.push_back({"(f)", {{level_pair()}}});
  rows.push_back({"(g)", {{level_swap(), level_pair()}}});
  rows.push_back({"(h)", {{twisted_pairs()}}});
  rows.push_back({"(i)",
                  {{cap_cup_on_level(1), cap_cup_on_level(2), cross_on_level(1), cross_on_level(2), level_pair()}}});
  return rows;
}

// ---------------------------------------------------------------- criterion 6

using Eq = std::pair<FormalSum, FormalSum>;

std::set<Eq> normalize(const std::vector<Eq>& eqs) {
  std::set<Eq> out;
  for (const auto& [a, b] : eqs) {
    if (a == b) continue;
    out.insert(a < b ? Eq{a, b} : Eq{b, a});
  }
  return out;
}

std::set<Eq> emitted(const std::vector<SpatialPartition>& parts, const Dims& d) {
  std::vector<Eq> eqs;
  for (const auto& p : parts)
    for (auto& e : emit_relations(p, d).equations) eqs.push_back({e.lhs, e.rhs});
  return normalize(eqs);
}

struct Schema {
  std::string name;
  std::vector<SpatialPartition> partitions;
  int vars;
  std::function<void(const std::vector<std::uint32_t>&, std::vector<Eq>&)> instantiate;
};

class SchemaBuilder {
 public:
  explicit SchemaBuilder(std::uint32_t n) : n_(n) {}
  Generator u(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t e) const {
    return {std::uint64_t(a) * n_ + b, std::uint64_t(c) * n_ + e};
  }
  FormalSum one() const {
    FormalSum s;
    s.add({});
    return s;
  }
  FormalSum word(std::initializer_list<Generator> w) const {
    FormalSum s;
    s.add(Word(w));
    return s;
  }
  // sum over g of f(g)
  FormalSum sum1(const std::function<Word(std::uint32_t)>& f) const {
    FormalSum s;
    for (std::uint32_t g = 0; g < n_; ++g) s.add(f(g));
    return s;
  }
  FormalSum sum2(const std::function<Word(std::uint32_t, std::uint32_t)>& f) const {
    FormalSum s;
    for (std::uint32_t g = 0; g < n_; ++g)
      for (std::uint32_t h = 0; h < n_; ++h) s.add(f(g, h));
    return s;
  }
  static FormalSum when(bool c, FormalSum s) { return c ? s : FormalSum{}; }
  std::uint32_t n() const { return n_; }

 private:
  std::uint32_t n_;
};

std::set<Eq> instantiate(const Schema& s, std::uint32_t n) {
  std::vector<Eq> eqs;
  std::vector<std::uint32_t> v(std::size_t(s.vars), 0);
  while (true) {
    s.instantiate(v, eqs);
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == n) v[i++] = 0;
    if (i == v.size()) break;
  }
  return normalize(eqs);
}

std::vector<Schema> reference_schemas(const SchemaBuilder& B) {
  using namespace catalog;
  std::vector<Schema> s;
  s.push_back({"identity", {identity(2)}, 4, [&B](auto& v, auto& out) {
                 out.push_back({B.word({B.u(v[0], v[1], v[2], v[3])}), B.word({B.u(v[0], v[1], v[2], v[3])})});
               }});
  s.push_back({"pair and copair", {pair(2), copair(2)}, 4, [&B](auto& v, auto& out) {
                 const auto rows = B.sum2([&](auto g, auto h) { return Word{B.u(v[0], v[1], g, h), B.u(v[2], v[3], g, h)}; });
                 const auto cols = B.sum2([&](auto g, auto h) { return Word{B.u(g, h, v[0], v[1]), B.u(g, h, v[2], v[3])}; });
                 const auto delta = B.when(v[0] == v[2] && v[1] == v[3], B.one());
                 out.push_back({rows, delta});
                 out.push_back({cols, delta});
               }});
  s.push_back({"four_on_level1", {four_on_level(1)}, 7, [&B](auto& v, auto& out) {
                 // k1..k4 = v0..v3, i1..i3 = v4..v6
                 if (v[0] == v[2]) return;
                 out.push_back({B.word({B.u(v[0], v[1], v[4], v[5]), B.u(v[2], v[3], v[4], v[6])}), FormalSum{}});
                 out.push_back({B.word({B.u(v[4], v[5], v[0], v[1]), B.u(v[4], v[6], v[2], v[3])}), FormalSum{}});
               }});
  s.push_back({"four_on_level2", {four_on_level(2)}, 7, [&B](auto& v, auto& out) {
                 if (v[1] == v[3]) return;
                 out.push_back({B.word({B.u(v[0], v[1], v[4], v[5]), B.u(v[2], v[3], v[6], v[5])}), FormalSum{}});
                 out.push_back({B.word({B.u(v[4], v[5], v[0], v[1]), B.u(v[6], v[5], v[2], v[3])}), FormalSum{}});
               }});
  s.push_back({"singletons_on_level1", {singletons_on_level(1)}, 4, [&B](auto& v, auto& out) {
                 // b1 b2 i1 i2
                 out.push_back({B.sum1([&](auto g) { return Word{B.u(g, v[1], v[2], v[3])}; }),
                                B.sum1([&](auto h) { return Word{B.u(v[0], v[1], h, v[3])}; })});
               }});
  s.push_back({"singletons_on_level2", {singletons_on_level(2)}, 4, [&B](auto& v, auto& out) {
                 out.push_back({B.sum1([&](auto g) { return Word{B.u(v[0], g, v[2], v[3])}; }),
                                B.sum1([&](auto h) { return Word{B.u(v[0], v[1], v[2], h)}; })});
               }});
  s.push_back({"singleton_both_levels and involution",
               {amplify(singleton(), 2), involution(amplify(singleton(), 2))}, 4, [&B](auto& v, auto& out) {
                 out.push_back({B.sum2([&](auto g, auto h) { return Word{B.u(v[0], v[1], g, h)}; }), B.one()});
                 out.push_back({B.sum2([&](auto g, auto h) { return Word{B.u(g, h, v[2], v[3])}; }), B.one()});
               }});
  s.push_back({"cross_on_level1", {cross_on_level(1)}, 8, [&B](auto& v, auto& out) {
                 // b1..b4 = v0..v3, i1..i4 = v4..v7
                 out.push_back({B.word({B.u(v[0], v[1], v[4], v[5]), B.u(v[2], v[3], v[6], v[7])}),
                                B.word({B.u(v[2], v[1], v[6], v[5]), B.u(v[0], v[3], v[4], v[7])})});
               }});
  s.push_back({"cross_on_level2", {cross_on_level(2)}, 8, [&B](auto& v, auto& out) {
                 out.push_back({B.word({B.u(v[0], v[1], v[4], v[5]), B.u(v[2], v[3], v[6], v[7])}),
                                B.word({B.u(v[0], v[3], v[4], v[7]), B.u(v[2], v[1], v[6], v[5])})});
               }});
  s.push_back({"cap_cup_on_level1", {cap_cup_on_level(1)}, 8, [&B](auto& v, auto& out) {
                 // j1..j4 = v0..v3, i1..i4 = v4..v7
                 out.push_back(
                     {B.when(v[0] == v[2], B.sum1([&](auto g) { return Word{B.u(g, v[1], v[4], v[5]), B.u(g, v[3], v[6], v[7])}; })),
                      B.when(v[4] == v[6], B.sum1([&](auto h) { return Word{B.u(v[0], v[1], h, v[5]), B.u(v[2], v[3], h, v[7])}; }))});
               }});
  s.push_back({"cap_cup_on_level2", {cap_cup_on_level(2)}, 8, [&B](auto& v, auto& out) {
                 out.push_back(
                     {B.when(v[1] == v[3], B.sum1([&](auto g) { return Word{B.u(v[0], g, v[4], v[5]), B.u(v[2], g, v[6], v[7])}; })),
                      B.when(v[5] == v[7], B.sum1([&](auto h) { return Word{B.u(v[0], v[1], v[4], h), B.u(v[2], v[3], v[6], h)}; }))});
               }});
  s.push_back({"level_four", {level_four()}, 4, [&B](auto& v, auto& out) {
                 // b1 b2 i1 i2
                 out.push_back({B.when(v[0] == v[1], B.sum1([&](auto g) { return Word{B.u(g, g, v[2], v[3])}; })),
                                B.when(v[2] == v[3], B.sum1([&](auto h) { return Word{B.u(v[0], v[1], h, h)}; }))});
               }});
  s.push_back({"level_pair", {level_pair()}, 2, [&B](auto& v, auto& out) {
                 out.push_back({B.sum1([&](auto g) { return Word{B.u(v[0], v[1], g, g)}; }),
                                B.when(v[0] == v[1], B.one())});
               }});
  s.push_back({"level_double_pair", {level_double_pair()}, 4, [&B](auto& v, auto& out) {
                 // i1 i2 j1 j2
                 out.push_back({B.when(v[0] == v[1], B.sum1([&](auto g) { return Word{B.u(g, g, v[2], v[3])}; })),
                                B.when(v[2] == v[3], B.sum1([&](auto g) { return Word{B.u(v[0], v[1], g, g)}; }))});
               }});
  s.push_back({"level_swap", {level_swap()}, 4, [&B](auto& v, auto& out) {
                 out.push_back({B.word({B.u(v[0], v[1], v[2], v[3])}), B.word({B.u(v[1], v[0], v[3], v[2])})});
               }});
  return s;
}

// Relations of level_four worked out by hand: no sums remain.
Schema derived_level_four(const SchemaBuilder& B) {
  return {"level_four (derived)", {catalog::level_four()}, 4, [&B](auto& v, auto& out) {
            // j1 j2 i1 i2
            out.push_back({B.when(v[0] == v[1], B.word({B.u(v[0], v[0], v[2], v[3])})),
                           B.when(v[2] == v[3], B.word({B.u(v[0], v[1], v[2], v[2])}))});
          }};
}

CriterionResult relation_fidelity(const Options& opt) {
  CriterionResult r{6, "relation list fidelity", false, "", 0};
  const Dims& d = opt.relation_dims;
  if (d.m() != 2 || d.n[0] != d.n[1]) {
    r.detail = "relation dims must be (n,n)";
    return r;
  }
  const SchemaBuilder B(d.n[0]);
  std::size_t matched = 0;
  std::vector<std::string> mismatched;
  bool four_reference_is_double_pair = false, four_derived_ok = false;
  const auto schemas = reference_schemas(B);
  for (const auto& s : schemas) {
    const auto want = instantiate(s, B.n());
    if (emitted(s.partitions, d) == want) {
      ++matched;
    } else {
      mismatched.push_back(s.name);
    }
    if (s.name == "level_four") {
      four_reference_is_double_pair = emitted({catalog::level_double_pair()}, d) == want;
      four_derived_ok = emitted(s.partitions, d) == instantiate(derived_level_four(B), B.n());
    }
  }
  std::ostringstream out;
  out << matched << "/" << schemas.size() << " reference schemas match at n=" << B.n();
  if (!mismatched.empty()) {
    out << "; mismatch:";
    for (const auto& m : mismatched) out << " " << m;
  }
  out << "; reference level_four schema equals the relations of level_double_pair: " << (four_reference_is_double_pair ? "yes" : "no")
      << "; level_four relations match the schema derived by hand: " << (four_derived_ok ? "yes" : "no");
  r.detail = out.str();
  r.passed = matched == schemas.size();
  return r;
}

// ---------------------------------------------------------------- other criteria

CriterionResult generator_theorems(const Options& opt) {
  CriterionResult r{4, "generator theorems", false, "", 0};
  using namespace catalog;
  Bounds b;
  b.max_cols = 8;
  b.threads = opt.threads;
  struct Case {
    const char* what;
    std::vector<SpatialPartition> gens;
    SpatialPartition target;
  };
  const std::vector<Case> cases = {
      {"level_four in <singleton_both_levels, four_on_level1/2, cross_on_level1/2, level_pair>",
       {amplify(singleton(), 2), four_on_level(1), four_on_level(2), cross_on_level(1), cross_on_level(2), level_pair()},
       level_four()},
      {"level_swap in <cross_on_level1/2, level_pair>",
       {cross_on_level(1), cross_on_level(2), level_pair()},
       level_swap()},
  };
  bool ok = true;
  std::ostringstream out;
  for (const auto& c : cases) {
    const auto cs = generate_closure(c.gens, 2, b, &c.target);
    const auto ans = contains(cs, c.target, all_classes());
    bool replayed = false;
    if (ans.verdict == Verdict::Member) replayed = replay_trace(ans.trace, c.gens, 2) == c.target;
    ok = ok && replayed;
    if (out.tellp() > 0) out << "; ";
    out << c.what << ": " << verdict_name(ans.verdict);
    if (ans.verdict == Verdict::Member) out << " (" << ans.trace.size() << "-step trace, replay " << (replayed ? "ok" : "FAILED") << ")";
    out << " after " << cs.size() << " members";
  }
  r.detail = out.str();
  r.passed = ok;
  return r;
}

const std::vector<SpatialPartition>& model_check_generators() {
  using namespace catalog;
  static const std::vector<SpatialPartition> g = {amplify(singleton(), 2), four_on_level(1), four_on_level(2),
                                                  cross_on_level(1),      cross_on_level(2), level_four(),
                                                  level_pair()};
  return g;
}

std::vector<std::vector<std::uint32_t>> permutations(std::uint32_t n) {
  std::vector<std::uint32_t> s(n);
  std::iota(s.begin(), s.end(), 1u);
  std::vector<std::vector<std::uint32_t>> out;
  do out.push_back(s);
  while (std::next_permutation(s.begin(), s.end()));
  return out;
}

CriterionResult permutation_model_check(const Options&) {
  CriterionResult r{5, "permutation models satisfy the relations", false, "", 0};
  std::size_t checks = 0, failures = 0;
  std::string error;
  for (std::uint32_t n : {2u, 3u})
    for (const auto& sigma : permutations(n)) {
      const auto model = permutation_model(sigma, 2);
      for (const auto& g : model_check_generators()) {
        ++checks;
        try {
          if (!check_relation(g, model).holds) ++failures;
        } catch (const Error& e) {
          ++failures;
          error = e.what();
        }
      }
    }
  std::ostringstream out;
  out << checks << " (sigma, generator) checks for n=2,3: " << (checks - failures)
      << " hold with equation-level and intertwiner methods agreeing";
  if (!error.empty()) out << "; " << error;
  r.detail = out.str();
  r.passed = failures == 0;
  return r;
}

CriterionResult ring_construction(const Options&) {
  CriterionResult r{7, "ring construction", false, "", 0};
  bool ok = true;
  std::size_t models = 0;
  for (std::uint32_t n : {2u, 3u})
    for (const auto& sigma : permutations(n)) {
      ++models;
      const auto rep = ring_matrix(permutation_model(sigma, 2));
      bool is_sigma = true;
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
          is_sigma = is_sigma && rep.ring[i * n + j].at(0, 0) == (sigma[j] == i + 1 ? 1 : 0);
      ok = ok && rep.independent && rep.orthogonal && rep.magic() && is_sigma;
    }
  const auto scaled = ring_matrix(scaled_model(permutation_model({2, 3, 1}, 2), 2));
  const bool counter = !scaled.orthogonal;
  std::ostringstream out;
  out << models << " permutation models: independence, orthogonality and magic checks "
      << (ok ? "pass" : "FAIL") << "; scaled model: precondition holds, orthogonality "
      << (scaled.orthogonal ? "passes (unexpected)" : "fails as expected");
  r.detail = out.str();
  r.passed = ok && counter;
  return r;
}

CriterionResult amplification(const Options& opt) {
  CriterionResult r{8, "amplification and flatten consistency", false, "", 0};
  std::mt19937_64 rng(opt.seed + 8);
  auto pick = [&](std::uint32_t lo, std::uint32_t hi) { return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng); };
  std::size_t amp_ok = 0, flat_ok = 0;
  for (int i = 0; i < 100; ++i) {
    const auto k = pick(0, 4);
    const auto p = oracle::random_partition(k, pick(0, 4 - k), 1, rng);
    if (s_map(amplify(p, 2), Dims({2, 2})) == s_map(p, Dims({4}))) ++amp_ok;
  }
  for (int i = 0; i < 100; ++i) {
    const auto m = pick(1, 3);
    const auto k = pick(0, 3);
    const auto q = oracle::random_partition(k, pick(0, 3 - k), m, rng);
    bool ok = unflatten(flatten(q), m) == q;
    if (m == 2) ok = ok && s_map(q, Dims({2, 2})) == s_map(flatten(q), Dims({2}));
    if (ok) ++flat_ok;
  }
  std::ostringstream out;
  out << amp_ok << "/100 amplified maps equal the n=4 maps; " << flat_ok << "/100 flatten round trips";
  r.detail = out.str();
  r.passed = amp_ok == 100 && flat_ok == 100;
  return r;
}

CriterionResult hom_dimensions(const Options&) {
  CriterionResult r{9, "hom dimension vs dense oracle", false, "", 0};
  constexpr std::uint64_t kMaxCells = 10'000;
  constexpr std::size_t kMaxFamily = 200;
  constexpr std::uint32_t kMaxCols = 10;
  struct Family {
    std::string name;
    std::uint32_t m;
    std::function<std::vector<SpatialPartition>(std::uint32_t, std::uint32_t)> members;
    std::vector<Dims> dims;
    std::uint32_t max_cols = kMaxCols;
  };
  auto planar_pairs = [](std::uint32_t k, std::uint32_t l) {
    auto all = oracle::all_pair_partitions(k, l, 1);
    std::erase_if(all, [](const SpatialPartition& p) { return !oracle::noncrossing_by_quadruples(p); });
    return all;
  };
  const std::vector<Family> families = {
      {"NC2", 1, planar_pairs, {Dims({1}), Dims({2}), Dims({3})}},
      {"P2", 1, [](auto k, auto l) { return oracle::all_pair_partitions(k, l, 1); }, {Dims({1}), Dims({2}), Dims({3})}},
      {"P", 1, [](auto k, auto l) { return oracle::all_partitions(k, l, 1); }, {Dims({2}), Dims({3})}, 6},
      {"amplified NC2", 2,
       [&](auto k, auto l) {
         auto base = planar_pairs(k, l);
         std::vector<SpatialPartition> out;
         for (const auto& p : base) out.push_back(amplify(p, 2));
         return out;
       },
       {Dims({1, 1}), Dims({2, 2})}},
      {"amplified P2", 2,
       [](auto k, auto l) {
         std::vector<SpatialPartition> out;
         for (const auto& p : oracle::all_pair_partitions(k, l, 1)) out.push_back(amplify(p, 2));
         return out;
       },
       {Dims({1, 1}), Dims({2, 2})}},
      {"P2 on two levels", 2, [](auto k, auto l) { return oracle::all_pair_partitions(k, l, 2); },
       {Dims({1, 1}), Dims({2, 2})}, 5},
  };
  std::size_t shapes = 0, skipped = 0, mismatches = 0;
  std::string first_mismatch;
  for (const auto& f : families)
    for (const auto& d : f.dims)
      for (std::uint32_t cols = 0; cols <= f.max_cols; ++cols) {
        if (ipow(d.N(), cols) > kMaxCells) break;
        for (std::uint32_t k = 0; k <= cols; ++k) {
          const std::uint32_t l = cols - k;
          const auto parts = f.members(k, l);
          if (parts.empty()) continue;
          if (parts.size() > kMaxFamily) {
            ++skipped;
            continue;
          }
          ++shapes;
          std::vector<std::vector<std::uint8_t>> dense;
          for (const auto& p : parts) dense.push_back(oracle::dense_s_map(p, d));
          const auto want = oracle::dense_rank(dense);
          const auto got = hom_dim(parts, d);
          if (want != got && mismatches++ == 0) {
            std::ostringstream os;
            os << f.name << " (" << k << "," << l << ") dims (" << d.to_string() << "): " << got << " vs " << want;
            first_mismatch = os.str();
          }
        }
      }
  const auto nc04 = hom_dim(planar_pairs(0, 4), Dims({2}));
  const auto ones = hom_dim(oracle::all_partitions(1, 2, 2), Dims({1, 1}));
  std::ostringstream out;
  out << shapes << " (family, dims, shape) cases agree" << (mismatches ? " except " + std::to_string(mismatches) : "")
      << "; " << skipped << " shapes skipped for family size > " << kMaxFamily << "; NC2(0,4) at n=2: " << nc04
      << "; all dims 1: " << ones;
  if (mismatches) out << "; first mismatch " << first_mismatch;
  r.detail = out.str();
  r.passed = mismatches == 0 && nc04 == 2 && ones == 1;
  return r;
}

}  // namespace

const std::vector<std::string>& expected_containment_table() {
  static const std::vector<std::string> t = {
      "++   ",  // (a)
      "+-   ",  // (b)
      "-++-+",  // (c)
      "-+-++",  // (d)
      "-+--+",  // (e)
      "-++--",  // (f)
      "-+---",  // (g)
      "--  +",  // (h)
      "--  -",  // (i)
  };
  return t;
}

std::vector<ContainmentRow> compute_containment_table() {
  const auto classes = table_classes();
  std::vector<ContainmentRow> out;
  for (const auto& row : table_rows()) {
    std::string cells;
    for (const auto& c : classes) {
      char cell = 0;
      for (auto gens : row.categories) {
        gens.push_back(identity(2));
        gens.push_back(pair(2));
        bool all_in = true;
        for (const auto& g : gens) all_in = all_in && try_class_membership(g, c) == std::optional<bool>(true);
        const char v = all_in ? '+' : '-';
        cell = cell == 0 || cell == v ? v : '?';
      }
      cells += cell;
    }
    out.push_back({row.label, cells});
  }
  return out;
}

namespace {

CriterionResult containment_table(const Options&) {
  CriterionResult r{3, "containment table", false, "", 0};
  const auto& want = expected_containment_table();
  const auto got = compute_containment_table();
  bool ok = got.size() == want.size();
  std::size_t filled = 0, agreed = 0;
  for (std::size_t i = 0; ok && i < want.size(); ++i)
    for (std::size_t j = 0; j < want[i].size(); ++j) {
      if (want[i][j] == ' ') continue;
      ++filled;
      if (got[i].cells[j] == want[i][j]) ++agreed;
    }
  ok = ok && agreed == filled;
  bool sound = true;
  for (const auto& c : table_classes()) sound = sound && class_is_closed(c, 2, true);
  std::size_t separated = 0, pairs = 0;
  for (std::size_t a = 0; a < want.size(); ++a)
    for (std::size_t b = a + 1; b < want.size(); ++b) {
      ++pairs;
      for (std::size_t j = 0; j < want[a].size(); ++j)
        if (want[a][j] != ' ' && want[b][j] != ' ' && got[a].cells[j] != got[b].cells[j]) {
          ++separated;
          break;
        }
    }
  std::ostringstream out;
  out << agreed << "/" << filled << " filled cells reproduced; " << separated << "/" << pairs
      << " row pairs separated by a class" << (sound ? "" : "; a class is not known to be closed") << "; rows:";
  for (const auto& row : got) out << " " << row.label << "=" << row.cells;
  r.detail = out.str();
  r.passed = ok && sound && separated == pairs;
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const Options& options) {
  using Fn = CriterionResult (*)(const Options&);
  static const Fn fns[] = {functoriality,        closure_counts,    containment_table,
                           generator_theorems,   permutation_model_check, relation_fidelity,
                           ring_construction,    amplification,     hom_dimensions};
  if (id < 1 || id > 9) throw Error(ErrorCode::Range, "criterion id must be 1..9");
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = fns[id - 1](options);
  } catch (const Error& e) {
    r.id = id;
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all(const Options& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 9; ++id) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_table(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  for (const auto& r : results)
    out << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.name << " (" << std::fixed
        << std::setprecision(1) << r.seconds << "s)  " << r.detail << "\n";
  return out.str();
}

}  // namespace spqg::verify

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spqg/tensor_maps.hpp"

namespace spqg {

/// u_{X Y} for single basis indices X, Y in [0, N).
struct Generator {
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Ordered product of generators; the empty word is the unit.
using Word = std::vector<Generator>;

/// Integer combination of words in canonical (sorted) order, zero terms dropped.
class FormalSum {
 public:
  void add(const Word& w, std::int64_t coeff = 1);
  const std::map<Word, std::int64_t>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  friend bool operator==(const FormalSum&, const FormalSum&) = default;
  friend auto operator<=>(const FormalSum& a, const FormalSum& b) { return a.terms_ <=> b.terms_; }

 private:
  std::map<Word, std::int64_t> terms_;
};

struct Equation {
  std::vector<std::uint64_t> I;  // basis index of each upper tuple
  std::vector<std::uint64_t> J;  // basis index of each lower tuple
  FormalSum lhs;                 // sum_A delta(A, J) u_{A_1 I_1} ... u_{A_k I_k}
  FormalSum rhs;                 // sum_B delta(I, B) u_{J_1 B_1} ... u_{J_l B_l}
};

struct RelationSet {
  SpatialPartition partition;
  Dims dims;
  std::vector<Equation> equations;  // one per (I, J), I-major
};

RelationSet emit_relations(const SpatialPartition& p, const Dims& d);

/// Human-readable form, one equation per line, e.g. "u(1,2|1,1) u(2,2|1,2) = 0".
std::string format_word(const Word& w, const Dims& d);
std::string format_sum(const FormalSum& s, const Dims& d);
std::string format_relations(const RelationSet& r, bool skip_tautologies);
nlohmann::json relations_to_json(const RelationSet& r);

/// Square matrix over the rationals, row-major.
class RepMatrix {
 public:
  RepMatrix() = default;
  explicit RepMatrix(std::uint32_t dim) : dim_(dim), a_(std::size_t(dim) * dim) {}
  static RepMatrix identity(std::uint32_t dim);
  static RepMatrix scalar(std::uint32_t dim, const Rational& s);

  std::uint32_t dim() const noexcept { return dim_; }
  Rational& at(std::uint32_t r, std::uint32_t c) { return a_[std::size_t(r) * dim_ + c]; }
  const Rational& at(std::uint32_t r, std::uint32_t c) const { return a_[std::size_t(r) * dim_ + c]; }
  bool is_zero() const;

  RepMatrix operator*(const RepMatrix& rhs) const;
  RepMatrix& operator+=(const RepMatrix& rhs);
  RepMatrix scaled(const Rational& s) const;
  friend bool operator==(const RepMatrix&, const RepMatrix&) = default;

 private:
  std::uint32_t dim_ = 0;
  std::vector<Rational> a_;
};

/// Assignment (I, J) -> u_{IJ} for single tuples I, J.
class MatrixModel {
 public:
  MatrixModel(Dims dims, std::uint32_t rep_dim);

  const Dims& dims() const noexcept { return dims_; }
  std::uint32_t rep_dim() const noexcept { return rep_dim_; }
  std::uint64_t N() const noexcept { return N_; }

  void set(std::uint64_t I, std::uint64_t J, RepMatrix value);
  bool has(std::uint64_t I, std::uint64_t J) const { return entries_.at(I * N_ + J).has_value(); }
  /// Throws IncompleteModel when unset.
  const RepMatrix& u(std::uint64_t I, std::uint64_t J) const;
  bool complete() const;
  void require_complete() const;

  /// sum_K u_{IK} u_{JK} = delta_{IJ} and sum_K u_{KI} u_{KJ} = delta_{IJ}.
  bool orthogonal() const;

  nlohmann::json to_json() const;
  static MatrixModel from_json(const nlohmann::json& j);

 private:
  Dims dims_;
  std::uint32_t rep_dim_;
  std::uint64_t N_;
  std::vector<std::optional<RepMatrix>> entries_;
};

/// u_{(i_1..i_m)(j_1..j_m)} = prod_y [sigma(j_y) = i_y], on dims (n,...,n).
/// sigma holds 1-based images.
MatrixModel permutation_model(const std::vector<std::uint32_t>& sigma, std::uint32_t levels);
MatrixModel identity_model(const Dims& d);
MatrixModel scaled_model(const MatrixModel& model, const Rational& s);

struct RelationCheck {
  bool holds = false;
  std::size_t equations = 0;
  std::size_t failures = 0;
  /// First failing (I, J) in human-readable form, if any.
  std::string first_failure;
};

/// Evaluates the relations of p equation by equation and, independently, compares
/// s_map(p) u^(x k) with u^(x l) s_map(p) column by column. Throws OracleMismatch if
/// the two disagree.
RelationCheck check_relation(const SpatialPartition& p, const MatrixModel& model);

/// The two methods on their own, for testing.
bool relation_holds_by_equations(const SpatialPartition& p, const MatrixModel& model);
bool relation_holds_by_intertwiner(const SpatialPartition& p, const MatrixModel& model);

struct ClosureCheck {
  bool tensor_ok = false;
  bool involution_ok = false;
  bool compose_pq_checked = false;  // p above q
  bool compose_pq_ok = false;
  bool compose_qp_checked = false;  // q above p
  bool compose_qp_ok = false;
  bool ok() const {
    return tensor_ok && involution_ok && (!compose_pq_checked || compose_pq_ok) &&
           (!compose_qp_checked || compose_qp_ok);
  }
};

/// Throws Precondition unless the relations of p and q hold.
ClosureCheck check_relation_closure(const SpatialPartition& p, const SpatialPartition& q, const MatrixModel& model);

struct RingReport {
  std::uint32_t n = 0;
  std::vector<RepMatrix> ring;  // n x n, row-major: sum_k u_{(i,k)(j,1)}
  bool independent = false;     // same value for every x and y
  bool orthogonal = false;
  bool magic_checked = false;   // extra relations hold
  bool idempotent = false;
  bool row_col_sums_one = false;
  bool magic() const { return magic_checked && idempotent && row_col_sums_one; }
};

/// Requires m = 2 and n_1 = n_2; throws Precondition unless R holds for
/// singletons on level two.
RingReport ring_matrix(const MatrixModel& model);
nlohmann::json ring_report_to_json(const RingReport& r);

}  // namespace spqg

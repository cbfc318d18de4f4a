#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "spqg/grading.hpp"
#include "spqg/partition.hpp"

namespace spqg {

using Rational = mpq_class;

/// Level dimensions n_1..n_m.
struct Dims {
  std::vector<std::uint32_t> n;

  Dims() = default;
  explicit Dims(std::vector<std::uint32_t> dims);
  /// "2,3" -> {2,3}
  static Dims parse(const std::string& text);

  std::uint32_t m() const noexcept { return std::uint32_t(n.size()); }
  std::uint64_t N() const noexcept;
  std::string to_string() const;
  friend bool operator==(const Dims&, const Dims&) = default;
};

/// k tuples of 1-based level indices.
using MultiIndex = std::vector<std::vector<std::uint32_t>>;

/// Position of e_{I_1} x ... x e_{I_k} in the lexicographic basis; the first
/// tuple and, inside a tuple, level 1 are most significant.
std::uint64_t basis_index(const MultiIndex& I, const Dims& d);
MultiIndex multi_index_at(std::uint64_t index, std::size_t k, const Dims& d);

/// Upper bound on N^(k+l) for any map built here. Defaults to 10^7 and can
/// be overridden with SPQG_MAX_CELLS.
std::uint64_t max_cells();
void set_max_cells(std::uint64_t cells);

class SpMatrix {
 public:
  struct Entry {
    std::uint64_t row;
    std::uint64_t col;
    Rational value;
  };

  SpMatrix() = default;
  SpMatrix(std::uint64_t rows, std::uint64_t cols) : rows_(rows), cols_(cols) {}
  /// Entries may come in any order; duplicates are summed and zeros dropped.
  SpMatrix(std::uint64_t rows, std::uint64_t cols, std::vector<Entry> entries);
  static SpMatrix identity(std::uint64_t n);

  std::uint64_t rows() const noexcept { return rows_; }
  std::uint64_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  Rational at(std::uint64_t row, std::uint64_t col) const;

  SpMatrix operator*(const SpMatrix& rhs) const;
  SpMatrix transpose() const;
  SpMatrix scaled(const Rational& s) const;
  /// Standard Kronecker product; the left factor is most significant.
  SpMatrix kron(const SpMatrix& rhs) const;

  friend bool operator==(const SpMatrix& a, const SpMatrix& b);

  /// Matrix Market coordinate format; requires integer entries.
  std::string to_matrix_market() const;

 private:
  std::uint64_t rows_ = 0;
  std::uint64_t cols_ = 0;
  std::vector<Entry> entries_;  // sorted by (row, col), no zeros
};

/// Throws Grading unless p is ker(d)-graded, Shape if level counts differ.
void require_graded(const SpatialPartition& p, const Dims& d);

/// 1 iff every block of p is constant under the labelling by I (upper) and J (lower).
int delta(const SpatialPartition& p, const MultiIndex& I, const MultiIndex& J, const Dims& d);

/// The N^l x N^k 0/1 matrix with entry (J, I) = delta(p, I, J).
SpMatrix s_map(const SpatialPartition& p, const Dims& d);

struct FunctorialityReport {
  bool tensor_ok = false;
  bool involution_ok = false;
  bool compose_checked = false;  // q.l == p.k
  bool compose_ok = false;
  std::uint32_t loops = 0;
  /// Product over erased components of the dimension of their levels.
  Rational loop_factor = 1;
  /// Whether the identity also holds with the factor N^loops.
  bool power_of_N_ok = false;

  bool ok() const { return tensor_ok && involution_ok && (!compose_checked || compose_ok); }
};

/// Checks s_map(p x q) = s_map(p) kron s_map(q), s_map(p*) = s_map(p)^T and,
/// when q (upper) and p (lower) compose, s_map(p) s_map(q) = factor s_map(q then p).
FunctorialityReport verify_functoriality(const SpatialPartition& p, const SpatialPartition& q, const Dims& d);

/// Exact rank of {s_map(p)} as vectors of length N^(k+l).
std::size_t hom_dim(const std::vector<SpatialPartition>& parts, const Dims& d);

/// Exact rank of sparse integer vectors, by fraction-free elimination.
std::size_t sparse_integer_rank(std::vector<std::vector<std::pair<std::uint64_t, mpz_class>>> vectors);

}  // namespace spqg

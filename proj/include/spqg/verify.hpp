#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spqg/tensor_maps.hpp"

/// Acceptance suite: nine numbered checks of the library's combinatorial and
/// algebraic claims, each against an independent oracle or a fixed table.
namespace spqg::verify {

struct Options {
  /// Dimensions (n,n) used for the relation-list comparison.
  Dims relation_dims = Dims({2, 2});
  unsigned threads = 0;
  std::uint64_t seed = 20240611;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

CriterionResult run_criterion(int id, const Options& options);
std::vector<CriterionResult> run_all(const Options& options);

std::string format_table(const std::vector<CriterionResult>& results);

// Pieces reused by tests and the CLI.

/// Expected cells of the two-level containment table, rows (a)..(i), columns
/// RespLevels, Symm, NoDiagSymm, NoGeoSymm, EvenCols: '+' contained,
/// '-' not contained, ' ' not stated.
const std::vector<std::string>& expected_containment_table();

struct ContainmentRow {
  std::string label;
  std::string cells;  // computed, same alphabet
};
std::vector<ContainmentRow> compute_containment_table();

}  // namespace spqg::verify

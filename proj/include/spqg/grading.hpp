#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spqg/partition.hpp"

namespace spqg {

/// A set partition of the levels {1..m}.
class GradingPartition {
 public:
  /// Validating constructor; blocks hold 1-based levels.
  GradingPartition(std::uint32_t m, const std::vector<std::vector<std::uint32_t>>& blocks);

  static GradingPartition one_block(std::uint32_t m);
  static GradingPartition singletons(std::uint32_t m);

  std::uint32_t m() const noexcept { return std::uint32_t(block_of_.size()); }
  /// 0-based block id of a 1-based level.
  std::uint32_t block_of(std::uint32_t level) const { return block_of_.at(level - 1); }
  std::vector<std::vector<std::uint32_t>> blocks() const;
  std::string to_string() const;

  friend bool operator==(const GradingPartition&, const GradingPartition&) = default;

 private:
  GradingPartition() = default;
  std::vector<std::uint32_t> block_of_;
};

/// Levels s, t share a block iff dims[s] == dims[t].
GradingPartition ker_partition(std::span<const std::uint32_t> dims);

bool is_pi_graded(const SpatialPartition& p, const GradingPartition& pi);

enum class ClassTag {
  RespLevels,
  Symm,
  NoDiagonal,
  NoGeodesic,
  NoDiagonalSymm,
  NoGeodesicSymm,
  EvenCols,
  NonCrossing,
  PiGraded,
};

struct SeparatingClass {
  ClassTag tag = ClassTag::RespLevels;
  std::optional<GradingPartition> pi;  // only for PiGraded

  std::string name() const;
  friend bool operator==(const SeparatingClass&, const SeparatingClass&) = default;
};

/// Throws NotApplicable when the class is undefined for p.
bool class_membership(const SpatialPartition& p, const SeparatingClass& c);
/// nullopt instead of NotApplicable.
std::optional<bool> try_class_membership(const SpatialPartition& p, const SeparatingClass& c);

/// Whether membership in c is known to be preserved by all category
/// operations for partitions like these, so that it may certify
/// non-membership. pair_only: every partition involved is a pair partition.
bool class_is_closed(const SeparatingClass& c, std::uint32_t m, bool pair_only);

/// The five columns of the two-level containment table.
std::vector<SeparatingClass> table_classes();
/// Every parameter-free class.
std::vector<SeparatingClass> all_classes();
/// Parses a class name as printed by name(), e.g. "Symm" or "PiGraded{1,3|2}".
SeparatingClass parse_class(const std::string& name);

}  // namespace spqg

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "spqg/error.hpp"

/// Spatial set partitions and their structural operations.
///
/// A spatial partition of shape (k, l; m) partitions the points of an upper
/// plane (k columns x m levels) and a lower plane (l columns x m levels).
/// Columns are numbered left to right on BOTH planes, starting at 1, and
/// levels are numbered 1..m.
///
/// Points are stored in flattening order: first the upper plane row-major by
/// (column, level), then the lower plane in the same way. The upper point
/// (x, y) has flat index (x-1)*m + (y-1); the lower point (x, y) has flat
/// index k*m + (x-1)*m + (y-1). Block labels over that sequence are kept as a
/// restricted-growth string, so structural equality is label equality.
namespace spqg {

enum class Side : std::uint8_t { Upper, Lower };

struct PointRef {
  Side side = Side::Upper;
  std::uint32_t col = 1;
  std::uint32_t level = 1;

  friend bool operator==(const PointRef&, const PointRef&) = default;
};

inline PointRef upper(std::uint32_t col, std::uint32_t level = 1) { return {Side::Upper, col, level}; }
inline PointRef lower(std::uint32_t col, std::uint32_t level = 1) { return {Side::Lower, col, level}; }

enum class Corner : std::uint8_t { LeftUpperDown, LeftLowerUp, RightUpperDown, RightLowerUp };

struct CanonicalForm {
  std::uint32_t k = 0;
  std::uint32_t l = 0;
  std::uint32_t m = 1;
  std::vector<std::uint16_t> rgs;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

class SpatialPartition {
 public:
  using Label = std::uint16_t;
  using Block = std::vector<PointRef>;

  /// The empty partition in P^(1)(0,0).
  SpatialPartition() = default;

  /// Validating constructor. Throws Overlap, Coverage or Range errors.
  static SpatialPartition from_blocks(std::uint32_t k, std::uint32_t l, std::uint32_t m,
                                      const std::vector<Block>& blocks);

  /// Builds a partition from an arbitrary labelling of the points in
  /// flattening order; equal labels mean same block.
  static SpatialPartition from_labels(std::uint32_t k, std::uint32_t l, std::uint32_t m,
                                      std::span<const std::uint32_t> labels);

  /// Same as from_labels for a labelling already in restricted-growth form.
  /// Only checked in debug builds.
  static SpatialPartition from_rgs(std::uint32_t k, std::uint32_t l, std::uint32_t m,
                                   std::vector<Label> rgs);

  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t l() const noexcept { return l_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t columns() const noexcept { return k_ + l_; }
  std::size_t point_count() const noexcept { return labels_.size(); }
  std::size_t upper_point_count() const noexcept { return std::size_t(k_) * m_; }
  std::size_t block_count() const noexcept { return blocks_; }

  std::size_t index_of(const PointRef& p) const;
  PointRef point_at(std::size_t index) const;
  bool contains_point(const PointRef& p) const noexcept;

  Label label_at(std::size_t index) const { return labels_[index]; }
  Label label(const PointRef& p) const { return labels_[index_of(p)]; }
  std::span<const Label> labels() const noexcept { return labels_; }

  /// Blocks in label order; points inside a block in flattening order.
  std::vector<Block> blocks() const;
  std::vector<std::size_t> block_sizes() const;
  bool is_pair_partition() const;

  CanonicalForm canonical_form() const { return {k_, l_, m_, labels_}; }
  std::size_t hash() const noexcept;

  friend bool operator==(const SpatialPartition& a, const SpatialPartition& b) noexcept {
    return a.k_ == b.k_ && a.l_ == b.l_ && a.m_ == b.m_ && a.labels_ == b.labels_;
  }
  /// Total order: by columns, then shape, then labels. Used for deterministic output.
  friend bool operator<(const SpatialPartition& a, const SpatialPartition& b) noexcept;

 private:
  SpatialPartition(std::uint32_t k, std::uint32_t l, std::uint32_t m, std::vector<Label> labels,
                   std::size_t blocks)
      : k_(k), l_(l), m_(m), labels_(std::move(labels)), blocks_(blocks) {}

  std::uint32_t k_ = 0;
  std::uint32_t l_ = 0;
  std::uint32_t m_ = 1;
  std::vector<Label> labels_;
  std::size_t blocks_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const SpatialPartition& p) const noexcept { return p.hash(); }
};

struct CompositionResult {
  SpatialPartition partition;
  /// Number of connected components erased in the middle plane.
  std::uint32_t loops = 0;
  /// For each erased component, the smallest level it touches; sorted.
  std::vector<std::uint32_t> loop_levels;
};

// Base partitions.
SpatialPartition identity(std::uint32_t m = 1);   // |^(m) in P^(m)(1,1)
SpatialPartition pair(std::uint32_t m = 1);       // the amplified pair in P^(m)(0,2)
SpatialPartition copair(std::uint32_t m = 1);     // its involution in P^(m)(2,0)
SpatialPartition empty_partition(std::uint32_t m = 1);

// Category operations.
SpatialPartition tensor(const SpatialPartition& p, const SpatialPartition& q);
/// Glues upper's lower plane to lower's upper plane. upper is in (k, r), lower in (r, l).
CompositionResult compose(const SpatialPartition& upper, const SpatialPartition& lower);
SpatialPartition involution(const SpatialPartition& p);
SpatialPartition rotate(const SpatialPartition& p, Corner corner);

SpatialPartition amplify(const SpatialPartition& p, std::uint32_t m);
SpatialPartition stack(std::span<const SpatialPartition> parts);
SpatialPartition flatten(const SpatialPartition& p);
SpatialPartition unflatten(const SpatialPartition& q, std::uint32_t m);

/// Planarity of the flattened partition, tested on the cyclic boundary order
/// (upper points left to right, then lower points right to left).
bool is_noncrossing(const SpatialPartition& p);

/// True iff no block mixes levels.
bool respects_levels(const SpatialPartition& p);

const char* corner_name(Corner c) noexcept;
Corner parse_corner(const std::string& name);

}  // namespace spqg

template <>
struct std::hash<spqg::SpatialPartition> {
  std::size_t operator()(const spqg::SpatialPartition& p) const noexcept { return p.hash(); }
};

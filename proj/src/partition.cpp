#include "spqg/partition.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <unordered_map>

#include "union_find.hpp"

namespace spqg {

namespace {

constexpr std::size_t kMaxPoints = std::numeric_limits<SpatialPartition::Label>::max();

void check_size(std::uint32_t k, std::uint32_t l, std::uint32_t m) {
  if (m == 0) throw Error(ErrorCode::Range, "level count m must be at least 1");
  if ((std::size_t(k) + l) * m > kMaxPoints)
    throw Error(ErrorCode::Size, "partition has too many points");
}

// Restricted-growth relabelling of an arbitrary label sequence.
template <class T>
std::vector<SpatialPartition::Label> to_rgs(std::span<const T> labels, std::size_t& blocks) {
  std::vector<SpatialPartition::Label> out(labels.size());
  std::unordered_map<std::uint64_t, SpatialPartition::Label> seen;
  const auto max_label = labels.empty() ? T{0} : *std::max_element(labels.begin(), labels.end());
  SpatialPartition::Label next = 0;
  if (std::uint64_t(max_label) < 4 * labels.size() + 16) {
    std::vector<std::int32_t> remap(std::size_t(max_label) + 1, -1);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto& r = remap[std::size_t(labels[i])];
      if (r < 0) r = next++;
      out[i] = SpatialPartition::Label(r);
    }
  } else {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [it, inserted] = seen.try_emplace(std::uint64_t(labels[i]), next);
      if (inserted) ++next;
      out[i] = it->second;
    }
  }
  blocks = next;
  return out;
}

}  // namespace

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Overlap: return "OverlapError";
    case ErrorCode::Coverage: return "CoverageError";
    case ErrorCode::Range: return "RangeError";
    case ErrorCode::Divisibility: return "DivisibilityError";
    case ErrorCode::LevelMismatch: return "LevelMismatchError";
    case ErrorCode::InterfaceMismatch: return "InterfaceMismatchError";
    case ErrorCode::EmptyRow: return "EmptyRowError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatchError";
    case ErrorCode::NotApplicable: return "NotApplicableError";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::Grading: return "GradingError";
    case ErrorCode::Size: return "SizeError";
    case ErrorCode::Shape: return "ShapeError";
    case ErrorCode::IncompleteModel: return "IncompleteModelError";
    case ErrorCode::OracleMismatch: return "OracleMismatchError";
    case ErrorCode::Precondition: return "PreconditionError";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::Internal: return "InternalError";
  }
  return "UnknownError";
}

SpatialPartition SpatialPartition::from_blocks(std::uint32_t k, std::uint32_t l, std::uint32_t m,
                                               const std::vector<Block>& blocks) {
  check_size(k, l, m);
  const std::size_t n = (std::size_t(k) + l) * m;
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> raw(n, kUnset);
  SpatialPartition shape(k, l, m, {}, 0);
  for (std::uint32_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorCode::Range, "empty block");
    for (const auto& pt : blocks[b]) {
      if (!shape.contains_point(pt))
        throw Error(ErrorCode::Range, std::string(pt.side == Side::Upper ? "u" : "l") +
                                          std::to_string(pt.col) + "." + std::to_string(pt.level) +
                                          " is outside shape (" + std::to_string(k) + "," +
                                          std::to_string(l) + ";" + std::to_string(m) + ")");
      const std::size_t i = shape.index_of(pt);
      if (raw[i] != kUnset) throw Error(ErrorCode::Overlap, "a point occurs in two blocks");
      raw[i] = b;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (raw[i] == kUnset) throw Error(ErrorCode::Coverage, "a point belongs to no block");
  return from_labels(k, l, m, raw);
}

SpatialPartition SpatialPartition::from_labels(std::uint32_t k, std::uint32_t l, std::uint32_t m,
                                               std::span<const std::uint32_t> labels) {
  check_size(k, l, m);
  if (labels.size() != (std::size_t(k) + l) * m)
    throw Error(ErrorCode::Shape, "label count does not match shape");
  std::size_t blocks = 0;
  auto rgs = to_rgs(labels, blocks);
  return SpatialPartition(k, l, m, std::move(rgs), blocks);
}

SpatialPartition SpatialPartition::from_rgs(std::uint32_t k, std::uint32_t l, std::uint32_t m,
                                            std::vector<Label> rgs) {
  std::size_t blocks = 0;
  for (auto x : rgs) {
    assert(x <= blocks);
    if (x == blocks) ++blocks;
  }
  assert(rgs.size() == (std::size_t(k) + l) * m);
  return SpatialPartition(k, l, m, std::move(rgs), blocks);
}

bool SpatialPartition::contains_point(const PointRef& p) const noexcept {
  const std::uint32_t cols = p.side == Side::Upper ? k_ : l_;
  return p.col >= 1 && p.col <= cols && p.level >= 1 && p.level <= m_;
}

std::size_t SpatialPartition::index_of(const PointRef& p) const {
  if (!contains_point(p)) throw Error(ErrorCode::Range, "point outside partition shape");
  const std::size_t base = p.side == Side::Upper ? 0 : upper_point_count();
  return base + std::size_t(p.col - 1) * m_ + (p.level - 1);
}

PointRef SpatialPartition::point_at(std::size_t index) const {
  if (index >= labels_.size()) throw Error(ErrorCode::Range, "point index out of range");
  const std::size_t up = upper_point_count();
  const Side side = index < up ? Side::Upper : Side::Lower;
  const std::size_t rel = index < up ? index : index - up;
  return {side, std::uint32_t(rel / m_ + 1), std::uint32_t(rel % m_ + 1)};
}

std::vector<SpatialPartition::Block> SpatialPartition::blocks() const {
  std::vector<Block> out(blocks_);
  for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i]].push_back(point_at(i));
  return out;
}

std::vector<std::size_t> SpatialPartition::block_sizes() const {
  std::vector<std::size_t> sizes(blocks_, 0);
  for (auto x : labels_) ++sizes[x];
  return sizes;
}

bool SpatialPartition::is_pair_partition() const {
  const auto sizes = block_sizes();
  return std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 2; });
}

std::size_t SpatialPartition::hash() const noexcept {
  // FNV-1a over the shape and labels.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(k_);
  mix(l_);
  mix(m_);
  for (auto x : labels_) mix(x);
  return std::size_t(h);
}

bool operator<(const SpatialPartition& a, const SpatialPartition& b) noexcept {
  if (a.columns() != b.columns()) return a.columns() < b.columns();
  if (a.k_ != b.k_) return a.k_ < b.k_;
  if (a.m_ != b.m_) return a.m_ < b.m_;
  return a.labels_ < b.labels_;
}

SpatialPartition identity(std::uint32_t m) {
  std::vector<std::uint32_t> labels(2 * std::size_t(m));
  for (std::uint32_t y = 0; y < m; ++y) labels[y] = labels[m + y] = y;
  return SpatialPartition::from_labels(1, 1, m, labels);
}

SpatialPartition pair(std::uint32_t m) { return rotate(identity(m), Corner::LeftUpperDown); }

SpatialPartition copair(std::uint32_t m) { return involution(pair(m)); }

SpatialPartition empty_partition(std::uint32_t m) {
  return SpatialPartition::from_labels(0, 0, m, std::span<const std::uint32_t>{});
}

SpatialPartition tensor(const SpatialPartition& p, const SpatialPartition& q) {
  if (p.m() != q.m()) throw Error(ErrorCode::LevelMismatch, "tensor of partitions with different level counts");
  const std::uint32_t m = p.m();
  const std::size_t pu = p.upper_point_count(), qu = q.upper_point_count();
  const auto off = std::uint32_t(p.block_count());
  std::vector<std::uint32_t> labels;
  labels.reserve(p.point_count() + q.point_count());
  auto pl = p.labels();
  auto ql = q.labels();
  for (std::size_t i = 0; i < pu; ++i) labels.push_back(pl[i]);
  for (std::size_t i = 0; i < qu; ++i) labels.push_back(ql[i] + off);
  for (std::size_t i = pu; i < pl.size(); ++i) labels.push_back(pl[i]);
  for (std::size_t i = qu; i < ql.size(); ++i) labels.push_back(ql[i] + off);
  return SpatialPartition::from_labels(p.k() + q.k(), p.l() + q.l(), m, labels);
}

CompositionResult compose(const SpatialPartition& upper, const SpatialPartition& lower) {
  if (upper.m() != lower.m())
    throw Error(ErrorCode::LevelMismatch, "composition of partitions with different level counts");
  if (upper.l() != lower.k())
    throw Error(ErrorCode::InterfaceMismatch,
                "upper partition has " + std::to_string(upper.l()) + " lower columns but lower partition has " +
                    std::to_string(lower.k()) + " upper columns");
  const std::uint32_t m = upper.m();
  const std::size_t top = upper.upper_point_count();
  const std::size_t mid = lower.upper_point_count();
  const std::size_t bottom = std::size_t(lower.l()) * m;
  const std::size_t total = top + mid + bottom;

  // Node ids: upper's points keep their indices, lower's points are shifted by top.
  detail::DisjointSets uf(total);
  {
    std::vector<std::int64_t> first(upper.block_count(), -1);
    auto labels = upper.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto& f = first[labels[i]];
      if (f < 0)
        f = std::int64_t(i);
      else
        uf.unite(std::uint32_t(f), std::uint32_t(i));
    }
  }
  {
    std::vector<std::int64_t> first(lower.block_count(), -1);
    auto labels = lower.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const std::size_t node = top + i;
      auto& f = first[labels[i]];
      if (f < 0)
        f = std::int64_t(node);
      else
        uf.unite(std::uint32_t(f), std::uint32_t(node));
    }
  }

  std::vector<std::uint32_t> labels;
  labels.reserve(top + bottom);
  std::vector<char> outer(total, 0);
  for (std::size_t i = 0; i < top; ++i) {
    const auto r = uf.find(std::uint32_t(i));
    outer[r] = 1;
    labels.push_back(r);
  }
  for (std::size_t i = top + mid; i < total; ++i) {
    const auto r = uf.find(std::uint32_t(i));
    outer[r] = 1;
    labels.push_back(r);
  }

  CompositionResult result;
  std::vector<std::uint32_t> loop_min_level(total, 0);
  for (std::size_t i = top; i < top + mid; ++i) {
    const auto r = uf.find(std::uint32_t(i));
    if (outer[r]) continue;
    const auto level = std::uint32_t((i - top) % m + 1);
    if (loop_min_level[r] == 0) {
      loop_min_level[r] = level;
      ++result.loops;
    } else {
      loop_min_level[r] = std::min(loop_min_level[r], level);
    }
  }
  for (std::size_t i = 0; i < total; ++i)
    if (loop_min_level[i] != 0) result.loop_levels.push_back(loop_min_level[i]);
  std::sort(result.loop_levels.begin(), result.loop_levels.end());
  result.partition = SpatialPartition::from_labels(upper.k(), lower.l(), m, labels);
  return result;
}

SpatialPartition involution(const SpatialPartition& p) {
  const std::size_t up = p.upper_point_count();
  auto pl = p.labels();
  std::vector<std::uint32_t> labels;
  labels.reserve(pl.size());
  for (std::size_t i = up; i < pl.size(); ++i) labels.push_back(pl[i]);
  for (std::size_t i = 0; i < up; ++i) labels.push_back(pl[i]);
  return SpatialPartition::from_labels(p.l(), p.k(), p.m(), labels);
}

SpatialPartition rotate(const SpatialPartition& p, Corner corner) {
  const std::uint32_t k = p.k(), l = p.l(), m = p.m();
  auto pl = p.labels();
  // Each column is copied as a unit; levels are untouched.
  std::vector<std::uint32_t> labels;
  labels.reserve(pl.size());
  auto upper_col = [&](std::uint32_t c) {
    for (std::uint32_t y = 0; y < m; ++y) labels.push_back(pl[std::size_t(c) * m + y]);
  };
  auto lower_col = [&](std::uint32_t c) {
    for (std::uint32_t y = 0; y < m; ++y) labels.push_back(pl[std::size_t(k + c) * m + y]);
  };
  switch (corner) {
    case Corner::LeftUpperDown:
      if (k == 0) throw Error(ErrorCode::EmptyRow, "no upper column to rotate");
      for (std::uint32_t c = 1; c < k; ++c) upper_col(c);
      upper_col(0);
      for (std::uint32_t c = 0; c < l; ++c) lower_col(c);
      return SpatialPartition::from_labels(k - 1, l + 1, m, labels);
    case Corner::LeftLowerUp:
      if (l == 0) throw Error(ErrorCode::EmptyRow, "no lower column to rotate");
      lower_col(0);
      for (std::uint32_t c = 0; c < k; ++c) upper_col(c);
      for (std::uint32_t c = 1; c < l; ++c) lower_col(c);
      return SpatialPartition::from_labels(k + 1, l - 1, m, labels);
    case Corner::RightUpperDown:
      if (k == 0) throw Error(ErrorCode::EmptyRow, "no upper column to rotate");
      for (std::uint32_t c = 0; c + 1 < k; ++c) upper_col(c);
      for (std::uint32_t c = 0; c < l; ++c) lower_col(c);
      upper_col(k - 1);
      return SpatialPartition::from_labels(k - 1, l + 1, m, labels);
    case Corner::RightLowerUp:
      if (l == 0) throw Error(ErrorCode::EmptyRow, "no lower column to rotate");
      for (std::uint32_t c = 0; c < k; ++c) upper_col(c);
      lower_col(l - 1);
      for (std::uint32_t c = 0; c + 1 < l; ++c) lower_col(c);
      return SpatialPartition::from_labels(k + 1, l - 1, m, labels);
  }
  throw Error(ErrorCode::Internal, "unknown corner");
}

SpatialPartition amplify(const SpatialPartition& p, std::uint32_t m) {
  if (p.m() != 1) throw Error(ErrorCode::LevelMismatch, "only one-level partitions can be amplified");
  if (m == 0) throw Error(ErrorCode::Range, "level count m must be at least 1");
  auto pl = p.labels();
  std::vector<std::uint32_t> labels;
  labels.reserve(pl.size() * m);
  for (auto x : pl)
    for (std::uint32_t y = 0; y < m; ++y) labels.push_back(std::uint32_t(x) * m + y);
  return SpatialPartition::from_labels(p.k(), p.l(), m, labels);
}

SpatialPartition stack(std::span<const SpatialPartition> parts) {
  if (parts.empty()) throw Error(ErrorCode::ShapeMismatch, "stack needs at least one partition");
  const std::uint32_t k = parts[0].k(), l = parts[0].l();
  std::uint32_t m = 0;
  for (const auto& p : parts) {
    if (p.k() != k || p.l() != l) throw Error(ErrorCode::ShapeMismatch, "stacked partitions must share (k,l)");
    m += p.m();
  }
  std::vector<std::uint32_t> labels((std::size_t(k) + l) * m);
  std::uint32_t base_level = 0, base_label = 0;
  for (const auto& p : parts) {
    auto pl = p.labels();
    for (std::uint32_t c = 0; c < k + l; ++c)
      for (std::uint32_t y = 0; y < p.m(); ++y)
        labels[std::size_t(c) * m + base_level + y] = base_label + pl[std::size_t(c) * p.m() + y];
    base_level += p.m();
    base_label += std::uint32_t(p.block_count());
  }
  return SpatialPartition::from_labels(k, l, m, labels);
}

SpatialPartition flatten(const SpatialPartition& p) {
  auto pl = p.labels();
  return SpatialPartition::from_rgs(p.k() * p.m(), p.l() * p.m(), 1, {pl.begin(), pl.end()});
}

SpatialPartition unflatten(const SpatialPartition& q, std::uint32_t m) {
  if (m == 0) throw Error(ErrorCode::Range, "level count m must be at least 1");
  const std::uint32_t up = q.k() * q.m(), down = q.l() * q.m();
  if (up % m != 0 || down % m != 0)
    throw Error(ErrorCode::Divisibility, "point counts " + std::to_string(up) + "/" + std::to_string(down) +
                                             " are not divisible by m=" + std::to_string(m));
  auto ql = q.labels();
  return SpatialPartition::from_rgs(up / m, down / m, m, {ql.begin(), ql.end()});
}

bool is_noncrossing(const SpatialPartition& p) {
  auto pl = p.labels();
  const std::size_t up = p.upper_point_count();
  std::vector<std::size_t> order;
  order.reserve(pl.size());
  for (std::size_t i = 0; i < up; ++i) order.push_back(i);
  for (std::size_t i = pl.size(); i > up; --i) order.push_back(i - 1);

  // A block may only reappear when it is the most recently opened open block.
  auto remaining = p.block_sizes();
  std::vector<char> open(p.block_count(), 0);
  std::vector<SpatialPartition::Label> stack;
  for (auto i : order) {
    const auto b = pl[i];
    if (open[b]) {
      if (stack.back() != b) return false;
    }
    if (--remaining[b] == 0) {
      if (open[b]) {
        stack.pop_back();
        open[b] = 0;
      }
    } else if (!open[b]) {
      open[b] = 1;
      stack.push_back(b);
    }
  }
  return true;
}

bool respects_levels(const SpatialPartition& p) {
  std::vector<std::int64_t> level(p.block_count(), -1);
  const std::uint32_t m = p.m();
  auto pl = p.labels();
  for (std::size_t i = 0; i < pl.size(); ++i) {
    const std::int64_t y = std::int64_t(i % m);
    auto& lv = level[pl[i]];
    if (lv < 0)
      lv = y;
    else if (lv != y)
      return false;
  }
  return true;
}

const char* corner_name(Corner c) noexcept {
  switch (c) {
    case Corner::LeftUpperDown: return "left-upper-down";
    case Corner::LeftLowerUp: return "left-lower-up";
    case Corner::RightUpperDown: return "right-upper-down";
    case Corner::RightLowerUp: return "right-lower-up";
  }
  return "?";
}

Corner parse_corner(const std::string& name) {
  for (auto c : {Corner::LeftUpperDown, Corner::LeftLowerUp, Corner::RightUpperDown, Corner::RightLowerUp})
    if (name == corner_name(c)) return c;
  throw Error(ErrorCode::Parse, "unknown rotation corner '" + name + "'");
}

}  // namespace spqg

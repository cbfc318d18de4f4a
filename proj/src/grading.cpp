#include "spqg/grading.hpp"

#include <algorithm>
#include <sstream>

namespace spqg {

GradingPartition::GradingPartition(std::uint32_t m, const std::vector<std::vector<std::uint32_t>>& blocks) {
  if (m == 0) throw Error(ErrorCode::Range, "level count m must be at least 1");
  constexpr auto kUnset = std::uint32_t(-1);
  block_of_.assign(m, kUnset);
  for (std::uint32_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorCode::Range, "empty grading block");
    for (auto level : blocks[b]) {
      if (level < 1 || level > m) throw Error(ErrorCode::Range, "grading level out of range");
      if (block_of_[level - 1] != kUnset) throw Error(ErrorCode::Overlap, "level in two grading blocks");
      block_of_[level - 1] = b;
    }
  }
  if (std::find(block_of_.begin(), block_of_.end(), kUnset) != block_of_.end())
    throw Error(ErrorCode::Coverage, "level in no grading block");
  // Renumber by first occurrence so equality is structural.
  std::vector<std::uint32_t> remap(blocks.size(), kUnset);
  std::uint32_t next = 0;
  for (auto& b : block_of_) {
    if (remap[b] == kUnset) remap[b] = next++;
    b = remap[b];
  }
}

GradingPartition GradingPartition::one_block(std::uint32_t m) {
  std::vector<std::uint32_t> all(m);
  for (std::uint32_t i = 0; i < m; ++i) all[i] = i + 1;
  return GradingPartition(m, {all});
}

GradingPartition GradingPartition::singletons(std::uint32_t m) {
  std::vector<std::vector<std::uint32_t>> blocks;
  for (std::uint32_t i = 1; i <= m; ++i) blocks.push_back({i});
  return GradingPartition(m, blocks);
}

std::vector<std::vector<std::uint32_t>> GradingPartition::blocks() const {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t i = 0; i < block_of_.size(); ++i) {
    if (block_of_[i] >= out.size()) out.resize(block_of_[i] + 1);
    out[block_of_[i]].push_back(i + 1);
  }
  return out;
}

std::string GradingPartition::to_string() const {
  std::ostringstream out;
  out << "{";
  bool first_block = true;
  for (const auto& b : blocks()) {
    if (!first_block) out << "|";
    first_block = false;
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
  }
  out << "}";
  return out.str();
}

GradingPartition ker_partition(std::span<const std::uint32_t> dims) {
  if (dims.empty()) throw Error(ErrorCode::Range, "dims must be nonempty");
  std::vector<std::vector<std::uint32_t>> blocks;
  std::vector<std::uint32_t> seen;
  for (std::uint32_t s = 0; s < dims.size(); ++s) {
    if (dims[s] < 1) throw Error(ErrorCode::Range, "dimensions must be at least 1");
    auto it = std::find(seen.begin(), seen.end(), dims[s]);
    if (it == seen.end()) {
      seen.push_back(dims[s]);
      blocks.push_back({s + 1});
    } else {
      blocks[std::size_t(it - seen.begin())].push_back(s + 1);
    }
  }
  return GradingPartition(std::uint32_t(dims.size()), blocks);
}

bool is_pi_graded(const SpatialPartition& p, const GradingPartition& pi) {
  if (p.m() != pi.m()) throw Error(ErrorCode::LevelMismatch, "grading partition has a different level count");
  const std::uint32_t m = p.m();
  std::vector<std::int64_t> grade(p.block_count(), -1);
  auto labels = p.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::int64_t g = pi.block_of(std::uint32_t(i % m) + 1);
    auto& cur = grade[labels[i]];
    if (cur < 0)
      cur = g;
    else if (cur != g)
      return false;
  }
  return true;
}

namespace {

void require_two_levels(const SpatialPartition& p, const SeparatingClass& c) {
  if (p.m() != 2) throw Error(ErrorCode::NotApplicable, c.name() + " is defined for m=2 only");
}

bool level_symmetric(const SpatialPartition& p) {
  auto labels = p.labels();
  std::vector<std::uint32_t> swapped(labels.size());
  for (std::size_t i = 0; i < labels.size(); i += 2) {
    swapped[i] = labels[i + 1];
    swapped[i + 1] = labels[i];
  }
  return SpatialPartition::from_labels(p.k(), p.l(), 2, swapped) == p;
}

// Side-extended column of a flat index in a two-level partition: 0..k+l-1.
// Upper column c and lower column c are distinct columns (c and k+c).
std::uint32_t extended_column(std::size_t index) { return std::uint32_t(index / 2); }

bool no_diagonal(const SpatialPartition& p) {
  // Per block, the set of columns used on each level. A diagonal exists iff
  // some level-1 column differs from some level-2 column in the same block.
  const auto nb = p.block_count();
  std::vector<std::vector<std::uint32_t>> cols1(nb), cols2(nb);
  auto labels = p.labels();
  for (std::size_t i = 0; i < labels.size(); ++i)
    (i % 2 == 0 ? cols1 : cols2)[labels[i]].push_back(extended_column(i));
  for (std::size_t b = 0; b < nb; ++b) {
    if (cols1[b].empty() || cols2[b].empty()) continue;
    for (auto x : cols1[b])
      for (auto y : cols2[b])
        if (x != y) return false;
  }
  return true;
}

bool no_geodesic(const SpatialPartition& p) {
  auto labels = p.labels();
  for (std::size_t i = 0; i < labels.size(); i += 2)
    if (labels[i] == labels[i + 1]) return false;
  return true;
}

}  // namespace

std::string SeparatingClass::name() const {
  switch (tag) {
    case ClassTag::RespLevels: return "RespLevels";
    case ClassTag::Symm: return "Symm";
    case ClassTag::NoDiagonal: return "NoDiagonal";
    case ClassTag::NoGeodesic: return "NoGeodesic";
    case ClassTag::NoDiagonalSymm: return "NoDiagSymm";
    case ClassTag::NoGeodesicSymm: return "NoGeoSymm";
    case ClassTag::EvenCols: return "EvenCols";
    case ClassTag::NonCrossing: return "NonCrossing";
    case ClassTag::PiGraded: return "PiGraded" + (pi ? pi->to_string() : std::string("{}"));
  }
  return "?";
}

bool class_membership(const SpatialPartition& p, const SeparatingClass& c) {
  switch (c.tag) {
    case ClassTag::RespLevels: return respects_levels(p);
    case ClassTag::Symm: require_two_levels(p, c); return level_symmetric(p);
    case ClassTag::NoDiagonal: require_two_levels(p, c); return no_diagonal(p);
    case ClassTag::NoGeodesic: require_two_levels(p, c); return no_geodesic(p);
    case ClassTag::NoDiagonalSymm:
      require_two_levels(p, c);
      return no_diagonal(p) && level_symmetric(p);
    case ClassTag::NoGeodesicSymm:
      require_two_levels(p, c);
      return no_geodesic(p) && level_symmetric(p);
    case ClassTag::EvenCols:
      if (!p.is_pair_partition()) throw Error(ErrorCode::NotApplicable, "EvenCols needs a pair partition");
      return p.columns() % 2 == 0;
    case ClassTag::NonCrossing: return is_noncrossing(p);
    case ClassTag::PiGraded:
      if (!c.pi) throw Error(ErrorCode::NotApplicable, "PiGraded needs a grading partition");
      if (c.pi->m() != p.m()) throw Error(ErrorCode::NotApplicable, "grading partition has a different level count");
      return is_pi_graded(p, *c.pi);
  }
  throw Error(ErrorCode::Internal, "unknown class");
}

std::optional<bool> try_class_membership(const SpatialPartition& p, const SeparatingClass& c) {
  try {
    return class_membership(p, c);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotApplicable) return std::nullopt;
    throw;
  }
}

bool class_is_closed(const SeparatingClass& c, std::uint32_t m, bool pair_only) {
  switch (c.tag) {
    case ClassTag::RespLevels: return true;
    case ClassTag::PiGraded: return c.pi && c.pi->m() == m;
    case ClassTag::Symm: return m == 2;
    case ClassTag::NoDiagonalSymm:
    case ClassTag::NoGeodesicSymm:
    case ClassTag::EvenCols: return m == 2 && pair_only;
    case ClassTag::NonCrossing: return m == 1;
    case ClassTag::NoDiagonal:
    case ClassTag::NoGeodesic: return false;
  }
  return false;
}

std::vector<SeparatingClass> table_classes() {
  return {{ClassTag::RespLevels, {}},
          {ClassTag::Symm, {}},
          {ClassTag::NoDiagonalSymm, {}},
          {ClassTag::NoGeodesicSymm, {}},
          {ClassTag::EvenCols, {}}};
}

std::vector<SeparatingClass> all_classes() {
  return {{ClassTag::RespLevels, {}},     {ClassTag::Symm, {}},           {ClassTag::NoDiagonal, {}},
          {ClassTag::NoGeodesic, {}},     {ClassTag::NoDiagonalSymm, {}}, {ClassTag::NoGeodesicSymm, {}},
          {ClassTag::EvenCols, {}},       {ClassTag::NonCrossing, {}}};
}

SeparatingClass parse_class(const std::string& name) {
  for (const auto& c : all_classes())
    if (c.name() == name) return c;
  const std::string prefix = "PiGraded{";
  if (name.rfind(prefix, 0) == 0 && name.back() == '}') {
    std::vector<std::vector<std::uint32_t>> blocks(1);
    std::uint32_t m = 0;
    std::string num;
    auto flush = [&] {
      if (num.empty()) throw Error(ErrorCode::Parse, "bad grading partition in '" + name + "'");
      const auto v = std::uint32_t(std::stoul(num));
      blocks.back().push_back(v);
      m = std::max(m, v);
      num.clear();
    };
    for (std::size_t i = prefix.size(); i + 1 < name.size(); ++i) {
      const char ch = name[i];
      if (std::isdigit(static_cast<unsigned char>(ch)))
        num += ch;
      else if (ch == ',')
        flush();
      else if (ch == '|') {
        flush();
        blocks.emplace_back();
      } else
        throw Error(ErrorCode::Parse, "bad grading partition in '" + name + "'");
    }
    flush();
    return {ClassTag::PiGraded, GradingPartition(m, blocks)};
  }
  throw Error(ErrorCode::Parse, "unknown class '" + name + "'");
}

}  // namespace spqg

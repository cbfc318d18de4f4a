#include "spqg/catalog.hpp"

#include <functional>
#include <map>

namespace spqg::catalog {

namespace {

using B = SpatialPartition::Block;

std::uint32_t other(int level) { return level == 1 ? 2u : 1u; }

std::uint32_t checked_level(int level) {
  if (level != 1 && level != 2) throw Error(ErrorCode::Range, "level must be 1 or 2");
  return std::uint32_t(level);
}

// |x| on level y of a two-level (2,2) partition.
void add_identities(std::vector<B>& blocks, std::uint32_t y) {
  blocks.push_back({upper(1, y), lower(1, y)});
  blocks.push_back({upper(2, y), lower(2, y)});
}

const std::map<std::string, std::function<SpatialPartition()>>& registry() {
  static const std::map<std::string, std::function<SpatialPartition()>> r = {
      {"identity", [] { return identity(1); }},
      {"pair", [] { return pair(1); }},
      {"copair", [] { return copair(1); }},
      {"cross", cross},
      {"singleton", singleton},
      {"four_block", four_block},
      {"halflib", halflib},
      {"identity_both_levels", [] { return identity(2); }},
      {"pair_both_levels", [] { return pair(2); }},
      {"copair_both_levels", [] { return copair(2); }},
      {"cross_both_levels", [] { return amplify(cross(), 2); }},
      {"singleton_both_levels", [] { return amplify(singleton(), 2); }},
      {"halflib_both_levels", [] { return amplify(halflib(), 2); }},
      {"level_pair", level_pair},
      {"level_swap", level_swap},
      {"level_four", level_four},
      {"level_double_pair", level_double_pair},
      {"cross_on_level1", [] { return cross_on_level(1); }},
      {"cross_on_level2", [] { return cross_on_level(2); }},
      {"four_on_level1", [] { return four_on_level(1); }},
      {"four_on_level2", [] { return four_on_level(2); }},
      {"cap_cup_on_level1", [] { return cap_cup_on_level(1); }},
      {"cap_cup_on_level2", [] { return cap_cup_on_level(2); }},
      {"singletons_on_level1", [] { return singletons_on_level(1); }},
      {"singletons_on_level2", [] { return singletons_on_level(2); }},
      {"half_three", half_three},
      {"twisted_pairs", twisted_pairs},
  };
  return r;
}

}  // namespace

SpatialPartition cross() {
  return SpatialPartition::from_blocks(2, 2, 1, {{upper(1), lower(2)}, {upper(2), lower(1)}});
}

SpatialPartition singleton() { return SpatialPartition::from_blocks(0, 1, 1, {{lower(1)}}); }

SpatialPartition four_block() {
  return SpatialPartition::from_blocks(2, 2, 1, {{upper(1), upper(2), lower(1), lower(2)}});
}

SpatialPartition halflib() {
  return SpatialPartition::from_blocks(3, 3, 1,
                                       {{upper(1), lower(3)}, {upper(2), lower(2)}, {upper(3), lower(1)}});
}

SpatialPartition level_pair() { return SpatialPartition::from_blocks(0, 1, 2, {{lower(1, 1), lower(1, 2)}}); }

SpatialPartition level_swap() {
  return SpatialPartition::from_blocks(1, 1, 2, {{upper(1, 1), lower(1, 2)}, {upper(1, 2), lower(1, 1)}});
}

SpatialPartition level_four() {
  return SpatialPartition::from_blocks(1, 1, 2, {{upper(1, 1), upper(1, 2), lower(1, 1), lower(1, 2)}});
}

SpatialPartition level_double_pair() {
  return SpatialPartition::from_blocks(1, 1, 2, {{upper(1, 1), upper(1, 2)}, {lower(1, 1), lower(1, 2)}});
}

SpatialPartition cross_on_level(int level) {
  const auto y = checked_level(level);
  std::vector<B> blocks = {{upper(1, y), lower(2, y)}, {upper(2, y), lower(1, y)}};
  add_identities(blocks, other(level));
  return SpatialPartition::from_blocks(2, 2, 2, blocks);
}

SpatialPartition four_on_level(int level) {
  const auto y = checked_level(level);
  std::vector<B> blocks = {{upper(1, y), upper(2, y), lower(1, y), lower(2, y)}};
  add_identities(blocks, other(level));
  return SpatialPartition::from_blocks(2, 2, 2, blocks);
}

SpatialPartition cap_cup_on_level(int level) {
  const auto y = checked_level(level);
  std::vector<B> blocks = {{upper(1, y), upper(2, y)}, {lower(1, y), lower(2, y)}};
  add_identities(blocks, other(level));
  return SpatialPartition::from_blocks(2, 2, 2, blocks);
}

SpatialPartition singletons_on_level(int level) {
  const auto y = checked_level(level);
  const auto z = other(level);
  return SpatialPartition::from_blocks(1, 1, 2, {{upper(1, y)}, {lower(1, y)}, {upper(1, z), lower(1, z)}});
}

SpatialPartition half_three() {
  return SpatialPartition::from_blocks(
      2, 1, 2, {{upper(1, 1), upper(2, 1), lower(1, 1)}, {upper(1, 2), lower(1, 2)}, {upper(2, 2)}});
}

SpatialPartition twisted_pairs() {
  return SpatialPartition::from_blocks(2, 2, 2,
                                       {{lower(1, 1), upper(1, 2)},
                                        {lower(2, 1), upper(2, 2)},
                                        {upper(1, 1), upper(2, 1)},
                                        {lower(1, 2), lower(2, 2)}});
}

SpatialPartition named(const std::string& name) {
  const auto& r = registry();
  auto it = r.find(name);
  if (it == r.end()) throw Error(ErrorCode::Parse, "unknown partition name '" + name + "'");
  return it->second();
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

}  // namespace spqg::catalog

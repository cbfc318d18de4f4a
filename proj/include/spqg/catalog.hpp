#pragma once

#include <string>
#include <vector>

#include "spqg/partition.hpp"

/// Named partitions used across the library, tests and CLI.
///
/// One-level names: identity, pair, copair, cross, singleton, four_block,
/// halflib. Two-level names describe what sits on each level; see
/// catalog_names() for the full list and README.md for pictures.
namespace spqg::catalog {

SpatialPartition cross();                 // {U1,L2},{U2,L1} in P(2,2)
SpatialPartition singleton();             // {L1} in P(0,1)
SpatialPartition four_block();            // one block over all points of P(2,2)
SpatialPartition halflib();               // {U1,L3},{U2,L2},{U3,L1} in P(3,3)

SpatialPartition level_pair();            // {L1.1,L1.2} in P2(0,1)
SpatialPartition level_swap();            // {U1.1,L1.2},{U1.2,L1.1} in P2(1,1)
SpatialPartition level_four();            // one block over P2(1,1)
SpatialPartition level_double_pair();     // {U1.1,U1.2},{L1.1,L1.2} in P2(1,1)
SpatialPartition cross_on_level(int level);      // cross on `level`, |x| on the other
SpatialPartition four_on_level(int level);       // four block on `level`, |x| on the other
SpatialPartition cap_cup_on_level(int level);    // {U1,U2},{L1,L2} on `level`, |x| on the other
SpatialPartition singletons_on_level(int level); // singletons on `level`, | on the other, P2(1,1)
SpatialPartition half_three();            // level 1 {U1,U2,L1}; level 2 {U1,L1},{U2}
SpatialPartition twisted_pairs();         // {L1.1,U1.2},{L2.1,U2.2},{U1.1,U2.1},{L1.2,L2.2}

/// Throws Parse if unknown.
SpatialPartition named(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace spqg::catalog

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "spqg/partition.hpp"
#include "spqg/tensor_maps.hpp"

/// Brute-force reference implementations. They share no code with the
/// algorithms they check beyond the SpatialPartition value type.
namespace spqg::oracle {

/// Every set partition of shape (k, l; m), by restricted-growth enumeration.
std::vector<SpatialPartition> all_partitions(std::uint32_t k, std::uint32_t l, std::uint32_t m);
/// Every partition of shape (k, l; m) whose blocks all have two points.
std::vector<SpatialPartition> all_pair_partitions(std::uint32_t k, std::uint32_t l, std::uint32_t m);

/// Planarity by checking every quadruple of boundary positions.
bool noncrossing_by_quadruples(const SpatialPartition& p);

/// Composition by graph search over an explicit adjacency list.
CompositionResult compose_by_search(const SpatialPartition& upper, const SpatialPartition& lower);

/// Dense 0/1 entries of s_map(p), row-major over (J, I), from the block lists.
std::vector<std::uint8_t> dense_s_map(const SpatialPartition& p, const Dims& d);

/// Exact rank of 0/1 vectors via their integer Gram matrix.
std::size_t dense_rank(const std::vector<std::vector<std::uint8_t>>& vectors);

/// Each point joins a random earlier block with probability 1/2.
SpatialPartition random_partition(std::uint32_t k, std::uint32_t l, std::uint32_t m, std::mt19937_64& rng);

}  // namespace spqg::oracle

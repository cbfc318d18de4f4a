#include "spqg/oracles.hpp"

#include <algorithm>
#include <functional>

#include <gmpxx.h>

namespace spqg::oracle {

std::vector<SpatialPartition> all_partitions(std::uint32_t k, std::uint32_t l, std::uint32_t m) {
  const std::size_t n = (std::size_t(k) + l) * m;
  std::vector<SpatialPartition> out;
  std::vector<std::uint32_t> labels(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t used) {
    if (i == n) {
      out.push_back(SpatialPartition::from_labels(k, l, m, labels));
      return;
    }
    for (std::uint32_t b = 0; b <= used; ++b) {
      labels[i] = b;
      rec(i + 1, b == used ? used + 1 : used);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<SpatialPartition> all_pair_partitions(std::uint32_t k, std::uint32_t l, std::uint32_t m) {
  const std::size_t n = (std::size_t(k) + l) * m;
  std::vector<SpatialPartition> out;
  if (n % 2) return out;
  constexpr std::uint32_t kFree = ~0u;
  std::vector<std::uint32_t> labels(n, kFree);
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t next_label) {
    auto first = std::find(labels.begin(), labels.end(), kFree);
    if (first == labels.end()) {
      out.push_back(SpatialPartition::from_labels(k, l, m, labels));
      return;
    }
    *first = next_label;
    for (auto it = first + 1; it != labels.end(); ++it) {
      if (*it != kFree) continue;
      *it = next_label;
      rec(next_label + 1);
      *it = kFree;
    }
    *first = kFree;
  };
  rec(0);
  return out;
}

bool noncrossing_by_quadruples(const SpatialPartition& p) {
  const auto f = flatten(p);
  // Boundary order: upper left to right, then lower right to left.
  std::vector<std::uint32_t> order;
  for (std::uint32_t c = 1; c <= f.k(); ++c) order.push_back(f.label(upper(c)));
  for (std::uint32_t c = f.l(); c >= 1; --c) order.push_back(f.label(lower(c)));
  const std::size_t n = order.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (order[a] == order[c] && order[b] == order[d] && order[a] != order[b]) return false;
  return true;
}

CompositionResult compose_by_search(const SpatialPartition& upper_p, const SpatialPartition& lower_p) {
  // Nodes: upper's points, then lower's points. Middle points of lower are
  // identified with upper's lower points through extra edges.
  const std::size_t nu = upper_p.point_count(), nl = lower_p.point_count();
  std::vector<std::vector<std::size_t>> adj(nu + nl);
  auto link_blocks = [&](const SpatialPartition& p, std::size_t offset) {
    for (const auto& block : p.blocks())
      for (std::size_t i = 1; i < block.size(); ++i) {
        const auto a = offset + p.index_of(block[0]), b = offset + p.index_of(block[i]);
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
  };
  link_blocks(upper_p, 0);
  link_blocks(lower_p, nu);
  for (std::uint32_t c = 1; c <= upper_p.l(); ++c)
    for (std::uint32_t y = 1; y <= upper_p.m(); ++y) {
      const auto a = upper_p.index_of(lower(c, y)), b = nu + lower_p.index_of(upper(c, y));
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  std::vector<std::int64_t> comp(nu + nl, -1);
  std::int64_t ncomp = 0;
  for (std::size_t s = 0; s < comp.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> queue{s};
    comp[s] = ncomp;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (auto v : adj[queue[h]])
        if (comp[v] < 0) {
          comp[v] = ncomp;
          queue.push_back(v);
        }
    ++ncomp;
  }
  std::vector<std::uint32_t> labels;
  std::vector<char> outer(std::size_t(ncomp), 0);
  for (std::size_t i = 0; i < upper_p.upper_point_count(); ++i) {
    labels.push_back(std::uint32_t(comp[i]));
    outer[std::size_t(comp[i])] = 1;
  }
  for (std::size_t i = lower_p.upper_point_count(); i < nl; ++i) {
    labels.push_back(std::uint32_t(comp[nu + i]));
    outer[std::size_t(comp[nu + i])] = 1;
  }
  CompositionResult r;
  r.partition = SpatialPartition::from_labels(upper_p.k(), lower_p.l(), upper_p.m(), labels);
  std::vector<std::uint32_t> min_level(std::size_t(ncomp), ~0u);
  for (std::size_t i = upper_p.upper_point_count(); i < nu; ++i) {
    const auto c = std::size_t(comp[i]);
    if (outer[c]) continue;
    min_level[c] = std::min(min_level[c], upper_p.point_at(i).level);
  }
  for (std::size_t c = 0; c < min_level.size(); ++c)
    if (min_level[c] != ~0u) {
      ++r.loops;
      r.loop_levels.push_back(min_level[c]);
    }
  std::sort(r.loop_levels.begin(), r.loop_levels.end());
  return r;
}

std::vector<std::uint8_t> dense_s_map(const SpatialPartition& p, const Dims& d) {
  const std::uint64_t N = d.N();
  std::uint64_t rows = 1, cols = 1;
  for (std::uint32_t i = 0; i < p.l(); ++i) rows *= N;
  for (std::uint32_t i = 0; i < p.k(); ++i) cols *= N;
  std::vector<std::uint8_t> out(rows * cols, 0);
  const auto blocks = p.blocks();
  for (std::uint64_t r = 0; r < rows; ++r)
    for (std::uint64_t c = 0; c < cols; ++c) {
      const auto J = multi_index_at(r, p.l(), d), I = multi_index_at(c, p.k(), d);
      bool ok = true;
      for (const auto& block : blocks) {
        auto value = [&](const PointRef& pt) {
          return (pt.side == Side::Upper ? I : J)[pt.col - 1][pt.level - 1];
        };
        const auto v0 = value(block[0]);
        for (const auto& pt : block) ok = ok && value(pt) == v0;
        if (!ok) break;
      }
      out[r * cols + c] = ok ? 1 : 0;
    }
  return out;
}

std::size_t dense_rank(const std::vector<std::vector<std::uint8_t>>& vectors) {
  const std::size_t n = vectors.size();
  std::vector<std::vector<mpq_class>> g(n, std::vector<mpq_class>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      std::uint64_t dot = 0;
      for (std::size_t i = 0; i < vectors[a].size(); ++i) dot += vectors[a][i] & vectors[b][i];
      g[a][b] = g[b][a] = mpq_class(std::to_string(dot));
    }
  // Plain Gaussian elimination over Q.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && g[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(g[piv], g[rank]);
    for (std::size_t r = rank + 1; r < n; ++r) {
      if (g[r][col] == 0) continue;
      const mpq_class f = g[r][col] / g[rank][col];
      for (std::size_t c = col; c < n; ++c) g[r][c] -= f * g[rank][c];
    }
    ++rank;
  }
  return rank;
}

SpatialPartition random_partition(std::uint32_t k, std::uint32_t l, std::uint32_t m, std::mt19937_64& rng) {
  const std::size_t n = (std::size_t(k) + l) * m;
  std::vector<std::uint32_t> labels(n);
  std::uint32_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (used == 0 || std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
      labels[i] = used++;
    } else {
      labels[i] = std::uniform_int_distribution<std::uint32_t>(0, used - 1)(rng);
    }
  }
  std::shuffle(labels.begin(), labels.end(), rng);
  return SpatialPartition::from_labels(k, l, m, labels);
}

}  // namespace spqg::oracle

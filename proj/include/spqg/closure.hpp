#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "spqg/grading.hpp"
#include "spqg/partition.hpp"

namespace spqg {

struct Bounds {
  std::uint32_t max_cols = 8;
  std::size_t max_set = 1'000'000;
  std::uint32_t max_rounds = 64;
  /// Cap on attempted binary operations; 0 means unlimited.
  std::uint64_t max_ops = 0;
  /// Worker threads for candidate generation; 0 means hardware concurrency.
  unsigned threads = 0;
};

enum class StopReason { Saturated, MaxSet, MaxRounds, MaxOps, TargetFound };
const char* stop_reason_name(StopReason r) noexcept;

enum class TraceOp : std::uint8_t { Seed, Involution, Rotate, Compose, Tensor };

/// One derivation step. Parents index into ClosureSet::members().
/// For Compose, a is the upper and b the lower partition.
struct TraceNode {
  TraceOp op = TraceOp::Seed;
  Corner corner = Corner::LeftUpperDown;
  std::int64_t a = -1;
  std::int64_t b = -1;
};

class ClosureSet {
 public:
  ClosureSet() = default;
  ClosureSet(std::uint32_t m, std::vector<SpatialPartition> generators, Bounds bounds);

  std::uint32_t m() const noexcept { return m_; }
  const Bounds& bounds() const noexcept { return bounds_; }
  const std::vector<SpatialPartition>& generators() const noexcept { return generators_; }
  const std::vector<SpatialPartition>& members() const noexcept { return members_; }
  const std::vector<TraceNode>& traces() const noexcept { return traces_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool saturated() const noexcept { return saturated_; }
  StopReason stop_reason() const noexcept { return stop_; }
  std::uint32_t rounds() const noexcept { return rounds_; }
  std::uint64_t ops() const noexcept { return ops_; }

  std::optional<std::size_t> find(const SpatialPartition& p) const;
  bool contains(const SpatialPartition& p) const { return find(p).has_value(); }
  std::vector<SpatialPartition> members_of_shape(std::uint32_t k, std::uint32_t l) const;
  std::size_t count(std::uint32_t k, std::uint32_t l) const;
  /// Members sorted by the canonical total order.
  std::vector<SpatialPartition> sorted_members() const;

  /// Adds p if absent; returns its index and whether it was inserted.
  std::pair<std::size_t, bool> insert(SpatialPartition p, TraceNode node);
  void set_status(bool saturated, StopReason stop, std::uint32_t rounds, std::uint64_t ops);

 private:
  std::uint32_t m_ = 1;
  Bounds bounds_;
  std::vector<SpatialPartition> generators_;
  std::vector<SpatialPartition> members_;
  std::vector<TraceNode> traces_;
  std::unordered_map<SpatialPartition, std::size_t, PartitionHash> index_;
  bool saturated_ = false;
  StopReason stop_ = StopReason::Saturated;
  std::uint32_t rounds_ = 0;
  std::uint64_t ops_ = 0;
};

/// Bounded saturation of the category generated by `generators` on m levels.
/// With a target, generation stops as soon as the target is a member.
/// Never throws BoundExceeded; inspect saturated() and stop_reason().
ClosureSet generate_closure(const std::vector<SpatialPartition>& generators, std::uint32_t m,
                            const Bounds& bounds, const SpatialPartition* target = nullptr);

/// A linear derivation: each step is a seed or an operation on earlier steps.
struct TraceStep {
  TraceOp op = TraceOp::Seed;
  Corner corner = Corner::LeftUpperDown;
  std::int64_t a = -1;
  std::int64_t b = -1;
  SpatialPartition result;
};

/// Derivation of member `index`, parents before children.
std::vector<TraceStep> extract_trace(const ClosureSet& cs, std::size_t index);

/// Recomputes every step from its parents. Seeds must be generators or base
/// partitions. Returns the final partition; throws Internal on any mismatch.
SpatialPartition replay_trace(const std::vector<TraceStep>& steps, const std::vector<SpatialPartition>& generators,
                              std::uint32_t m);

std::string describe_trace(const std::vector<TraceStep>& steps);

enum class Verdict { Member, NotFoundWithinBounds, SeparatedBy };
const char* verdict_name(Verdict v) noexcept;

struct MembershipAnswer {
  Verdict verdict = Verdict::NotFoundWithinBounds;
  std::vector<TraceStep> trace;              // Member
  std::optional<SeparatingClass> separator;  // SeparatedBy
};

/// Separation only uses classes that are categories for the generators and
/// target at hand (see class_is_closed).
MembershipAnswer contains(const ClosureSet& cs, const SpatialPartition& target,
                          const std::vector<SeparatingClass>& classes);

/// Shape-wise stacking of two closures onto disjoint level ranges, for all
/// shapes within both column caps. Its members are also its generators.
ClosureSet kronecker_product(const ClosureSet& a, const ClosureSet& b);

ClosureSet amalgamated_closure(const ClosureSet& a, const ClosureSet& b, const std::vector<SpatialPartition>& extra,
                               const Bounds& bounds);

}  // namespace spqg

#include "spqg/closure.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "spqg/io.hpp"

namespace spqg {

const char* stop_reason_name(StopReason r) noexcept {
  switch (r) {
    case StopReason::Saturated: return "saturated";
    case StopReason::MaxSet: return "max_set";
    case StopReason::MaxRounds: return "max_rounds";
    case StopReason::MaxOps: return "max_ops";
    case StopReason::TargetFound: return "target_found";
  }
  return "?";
}

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Member: return "Member";
    case Verdict::NotFoundWithinBounds: return "NotFoundWithinBounds";
    case Verdict::SeparatedBy: return "SeparatedBy";
  }
  return "?";
}

ClosureSet::ClosureSet(std::uint32_t m, std::vector<SpatialPartition> generators, Bounds bounds)
    : m_(m), bounds_(bounds), generators_(std::move(generators)) {}

std::optional<std::size_t> ClosureSet::find(const SpatialPartition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<SpatialPartition> ClosureSet::members_of_shape(std::uint32_t k, std::uint32_t l) const {
  std::vector<SpatialPartition> out;
  for (const auto& p : members_)
    if (p.k() == k && p.l() == l) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ClosureSet::count(std::uint32_t k, std::uint32_t l) const {
  return std::size_t(std::count_if(members_.begin(), members_.end(),
                                   [&](const SpatialPartition& p) { return p.k() == k && p.l() == l; }));
}

std::vector<SpatialPartition> ClosureSet::sorted_members() const {
  auto out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<std::size_t, bool> ClosureSet::insert(SpatialPartition p, TraceNode node) {
  auto [it, inserted] = index_.try_emplace(p, members_.size());
  if (inserted) {
    members_.push_back(std::move(p));
    traces_.push_back(node);
  }
  return {it->second, inserted};
}

void ClosureSet::set_status(bool saturated, StopReason stop, std::uint32_t rounds, std::uint64_t ops) {
  saturated_ = saturated;
  stop_ = stop;
  rounds_ = rounds;
  ops_ = ops;
}

namespace {

constexpr std::size_t kChunk = 32;
constexpr std::size_t kChunksPerBatch = 16;

struct Candidate {
  SpatialPartition p;
  TraceNode node;
};

class Engine {
 public:
  Engine(ClosureSet& cs, const Bounds& bounds, const SpatialPartition* target)
      : cs_(cs), bounds_(bounds), target_(target) {
    threads_ = bounds.threads ? bounds.threads : std::max(1u, std::thread::hardware_concurrency());
  }

  void run(std::uint32_t start_cap) {
    std::uint32_t cap = start_cap;
    std::size_t frontier = 0;
    std::uint32_t widen_floor = 0;
    std::uint32_t rounds = 0;
    while (true) {
      if (target_found()) return finish(false, StopReason::TargetFound, rounds);
      if (rounds >= bounds_.max_rounds) return finish(false, StopReason::MaxRounds, rounds);
      ++rounds;
      const std::size_t end = cs_.size();
      index_shapes(end);
      const auto status = round(cap, frontier, end, widen_floor);
      if (status) return finish(false, *status, rounds);
      widen_floor = 0;
      if (cs_.size() == end) {
        if (cap >= bounds_.max_cols) return finish(true, StopReason::Saturated, rounds);
        // Saturated at this cap: revisit every pair whose result only fits the wider cap.
        widen_floor = cap;
        ++cap;
        frontier = 0;
      } else {
        frontier = end;
      }
    }
  }

 private:
  bool target_found() const { return target_ && cs_.contains(*target_); }

  void finish(bool saturated, StopReason reason, std::uint32_t rounds) {
    cs_.set_status(saturated, reason, rounds, ops_);
  }

  void index_shapes(std::size_t end) {
    for (std::size_t i = indexed_; i < end; ++i) {
      const auto& p = cs_.members()[i];
      grow(by_k_, p.k()).push_back(i);
      grow(by_cols_, p.columns()).push_back(i);
    }
    indexed_ = end;
  }

  static std::vector<std::size_t>& grow(std::vector<std::vector<std::size_t>>& v, std::size_t at) {
    if (v.size() <= at) v.resize(at + 1);
    return v[at];
  }

  static std::span<const std::size_t> bucket(const std::vector<std::vector<std::size_t>>& v, std::size_t at,
                                             std::size_t from, std::size_t end) {
    if (at >= v.size()) return {};
    const auto& b = v[at];
    auto lo = std::lower_bound(b.begin(), b.end(), from);
    auto hi = std::lower_bound(lo, b.end(), end);
    return {b.data() + (lo - b.begin()), std::size_t(hi - lo)};
  }

  // Candidates derived with `a` as the left operand, in a fixed order.
  void expand(std::size_t a, std::uint32_t cap, std::size_t frontier, std::size_t end, std::uint32_t widen_floor,
              std::vector<Candidate>& out, std::unordered_set<SpatialPartition, PartitionHash>& local,
              std::uint64_t& ops) const {
    const auto& members = cs_.members();
    const auto& pa = members[a];
    auto offer = [&](SpatialPartition&& p, TraceNode node) {
      if (cs_.contains(p) || local.count(p)) return;
      local.insert(p);
      out.push_back({std::move(p), node});
    };
    const bool a_new = a >= frontier;
    if (a_new && widen_floor == 0) {
      offer(involution(pa), {TraceOp::Involution, Corner::LeftUpperDown, std::int64_t(a), -1});
      for (auto c : {Corner::LeftUpperDown, Corner::LeftLowerUp, Corner::RightUpperDown, Corner::RightLowerUp}) {
        const bool upper_move = c == Corner::LeftUpperDown || c == Corner::RightUpperDown;
        if ((upper_move ? pa.k() : pa.l()) == 0) continue;
        offer(rotate(pa, c), {TraceOp::Rotate, c, std::int64_t(a), -1});
      }
    }
    // Pairs with both operands older than the frontier were handled in earlier rounds.
    const std::size_t partner_from = a_new ? 0 : frontier;
    for (auto b : bucket(by_k_, pa.l(), partner_from, end)) {
      const auto& pb = members[b];
      const std::uint32_t cols = pa.k() + pb.l();
      if (cols > cap || (widen_floor && cols <= widen_floor)) continue;
      ++ops;
      offer(compose(pa, pb).partition, {TraceOp::Compose, Corner::LeftUpperDown, std::int64_t(a), std::int64_t(b)});
    }
    for (std::uint32_t cb = 0; cb + pa.columns() <= cap; ++cb) {
      if (widen_floor && cb + pa.columns() <= widen_floor) continue;
      for (auto b : bucket(by_cols_, cb, partner_from, end)) {
        ++ops;
        offer(tensor(pa, members[b]), {TraceOp::Tensor, Corner::LeftUpperDown, std::int64_t(a), std::int64_t(b)});
      }
    }
  }

  std::optional<StopReason> round(std::uint32_t cap, std::size_t frontier, std::size_t end,
                                  std::uint32_t widen_floor) {
    const std::size_t chunks = (end + kChunk - 1) / kChunk;
    for (std::size_t batch = 0; batch < chunks; batch += kChunksPerBatch) {
      const std::size_t batch_end = std::min(chunks, batch + kChunksPerBatch);
      std::vector<std::vector<Candidate>> results(batch_end - batch);
      std::vector<std::uint64_t> ops(batch_end - batch, 0);
      std::atomic<std::size_t> next{batch};
      auto worker = [&] {
        while (true) {
          const std::size_t c = next.fetch_add(1);
          if (c >= batch_end) return;
          std::unordered_set<SpatialPartition, PartitionHash> local;
          for (std::size_t a = c * kChunk; a < std::min(end, (c + 1) * kChunk); ++a)
            expand(a, cap, frontier, end, widen_floor, results[c - batch], local, ops[c - batch]);
        }
      };
      const unsigned n = std::min<std::size_t>(threads_, batch_end - batch);
      if (n <= 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
      }
      for (std::size_t i = 0; i < results.size(); ++i) {
        ops_ += ops[i];
        for (auto& cand : results[i]) {
          if (cs_.size() >= bounds_.max_set) return StopReason::MaxSet;
          cs_.insert(std::move(cand.p), cand.node);
        }
      }
      if (target_found()) return StopReason::TargetFound;
      if (bounds_.max_ops && ops_ >= bounds_.max_ops) return StopReason::MaxOps;
    }
    return std::nullopt;
  }

  ClosureSet& cs_;
  Bounds bounds_;
  const SpatialPartition* target_;
  unsigned threads_ = 1;
  std::uint64_t ops_ = 0;
  std::size_t indexed_ = 0;
  std::vector<std::vector<std::size_t>> by_k_;
  std::vector<std::vector<std::size_t>> by_cols_;
};

bool is_base(const SpatialPartition& p, std::uint32_t m) {
  return p == identity(m) || p == pair(m) || p == copair(m);
}

}  // namespace

ClosureSet generate_closure(const std::vector<SpatialPartition>& generators, std::uint32_t m, const Bounds& bounds,
                            const SpatialPartition* target) {
  if (m == 0) throw Error(ErrorCode::Range, "level count m must be at least 1");
  if (bounds.max_cols == 0 || bounds.max_set == 0 || bounds.max_rounds == 0)
    throw Error(ErrorCode::Range, "bounds must be positive");
  std::uint32_t start_cap = 2;
  for (const auto& g : generators) {
    if (g.m() != m) throw Error(ErrorCode::LevelMismatch, "generator has a different level count");
    if (g.columns() > bounds.max_cols)
      throw Error(ErrorCode::Range, "generator has more than max_cols columns");
    start_cap = std::max(start_cap, g.columns());
  }
  if (target && target->m() != m) throw Error(ErrorCode::LevelMismatch, "target has a different level count");
  start_cap = std::min(start_cap, bounds.max_cols);

  ClosureSet cs(m, generators, bounds);
  std::vector<SpatialPartition> seeds = generators;
  for (auto base : {identity(m), pair(m), copair(m)})
    if (base.columns() <= bounds.max_cols) seeds.push_back(base);
  for (auto& s : seeds) {
    if (cs.size() >= bounds.max_set) {
      cs.set_status(false, StopReason::MaxSet, 0, 0);
      return cs;
    }
    cs.insert(s, {});
  }
  Engine(cs, bounds, target).run(start_cap);
  return cs;
}

std::vector<TraceStep> extract_trace(const ClosureSet& cs, std::size_t index) {
  if (index >= cs.size()) throw Error(ErrorCode::Range, "member index out of range");
  // Post-order over the derivation DAG, each node once.
  std::unordered_map<std::size_t, std::int64_t> position;
  std::vector<TraceStep> steps;
  std::vector<std::pair<std::size_t, bool>> stack{{index, false}};
  while (!stack.empty()) {
    auto [node, expanded] = stack.back();
    stack.pop_back();
    if (position.count(node)) continue;
    const auto& t = cs.traces()[node];
    if (!expanded) {
      stack.push_back({node, true});
      if (t.b >= 0 && !position.count(std::size_t(t.b))) stack.push_back({std::size_t(t.b), false});
      if (t.a >= 0 && !position.count(std::size_t(t.a))) stack.push_back({std::size_t(t.a), false});
      continue;
    }
    TraceStep step{t.op, t.corner, -1, -1, cs.members()[node]};
    if (t.a >= 0) step.a = position.at(std::size_t(t.a));
    if (t.b >= 0) step.b = position.at(std::size_t(t.b));
    position[node] = std::int64_t(steps.size());
    steps.push_back(std::move(step));
  }
  return steps;
}

SpatialPartition replay_trace(const std::vector<TraceStep>& steps, const std::vector<SpatialPartition>& generators,
                              std::uint32_t m) {
  if (steps.empty()) throw Error(ErrorCode::Internal, "empty trace");
  std::vector<SpatialPartition> values;
  values.reserve(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    auto parent = [&](std::int64_t j) -> const SpatialPartition& {
      if (j < 0 || std::size_t(j) >= i) throw Error(ErrorCode::Internal, "trace refers to a later step");
      return values[std::size_t(j)];
    };
    SpatialPartition v;
    switch (s.op) {
      case TraceOp::Seed:
        if (!is_base(s.result, m) && std::find(generators.begin(), generators.end(), s.result) == generators.end())
          throw Error(ErrorCode::Internal, "trace seed is neither a generator nor a base partition");
        v = s.result;
        break;
      case TraceOp::Involution: v = involution(parent(s.a)); break;
      case TraceOp::Rotate: v = rotate(parent(s.a), s.corner); break;
      case TraceOp::Compose: v = compose(parent(s.a), parent(s.b)).partition; break;
      case TraceOp::Tensor: v = tensor(parent(s.a), parent(s.b)); break;
    }
    if (!(v == s.result)) throw Error(ErrorCode::Internal, "trace step " + std::to_string(i) + " does not replay");
    values.push_back(std::move(v));
  }
  return values.back();
}

std::string describe_trace(const std::vector<TraceStep>& steps) {
  std::ostringstream out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    out << "#" << i << " = ";
    switch (s.op) {
      case TraceOp::Seed: out << "seed"; break;
      case TraceOp::Involution: out << "involution(#" << s.a << ")"; break;
      case TraceOp::Rotate: out << "rotate(#" << s.a << ", " << corner_name(s.corner) << ")"; break;
      case TraceOp::Compose: out << "compose(#" << s.a << ", #" << s.b << ")"; break;
      case TraceOp::Tensor: out << "tensor(#" << s.a << ", #" << s.b << ")"; break;
    }
    out << "  " << to_text(s.result) << "\n";
  }
  return out.str();
}

MembershipAnswer contains(const ClosureSet& cs, const SpatialPartition& target,
                          const std::vector<SeparatingClass>& classes) {
  if (target.m() != cs.m()) throw Error(ErrorCode::LevelMismatch, "target has a different level count");
  MembershipAnswer answer;
  if (auto idx = cs.find(target)) {
    answer.verdict = Verdict::Member;
    answer.trace = extract_trace(cs, *idx);
    return answer;
  }
  const std::uint32_t m = cs.m();
  std::vector<SpatialPartition> required = cs.generators();
  required.push_back(identity(m));
  required.push_back(pair(m));
  const bool pair_only =
      target.is_pair_partition() &&
      std::all_of(required.begin(), required.end(), [](const SpatialPartition& p) { return p.is_pair_partition(); });
  for (const auto& c : classes) {
    if (!class_is_closed(c, m, pair_only)) continue;
    if (try_class_membership(target, c) != std::optional<bool>(false)) continue;
    const bool all_in = std::all_of(required.begin(), required.end(), [&](const SpatialPartition& p) {
      return try_class_membership(p, c) == std::optional<bool>(true);
    });
    if (all_in) {
      answer.verdict = Verdict::SeparatedBy;
      answer.separator = c;
      return answer;
    }
  }
  answer.verdict = Verdict::NotFoundWithinBounds;
  return answer;
}

ClosureSet kronecker_product(const ClosureSet& a, const ClosureSet& b) {
  Bounds bounds = a.bounds();
  bounds.max_cols = std::min(a.bounds().max_cols, b.bounds().max_cols);
  std::vector<SpatialPartition> members;
  const auto sa = a.sorted_members(), sb = b.sorted_members();
  for (const auto& p : sa) {
    if (p.columns() > bounds.max_cols) continue;
    for (const auto& q : sb) {
      if (q.k() != p.k() || q.l() != p.l()) continue;
      const SpatialPartition parts[] = {p, q};
      members.push_back(stack(parts));
    }
  }
  ClosureSet out(a.m() + b.m(), members, bounds);
  for (auto& p : members) out.insert(p, {});
  out.set_status(a.saturated() && b.saturated(), StopReason::Saturated, 0, 0);
  if (!out.saturated())
    out.set_status(false, a.saturated() ? b.stop_reason() : a.stop_reason(), 0, 0);
  return out;
}

ClosureSet amalgamated_closure(const ClosureSet& a, const ClosureSet& b, const std::vector<SpatialPartition>& extra,
                               const Bounds& bounds) {
  auto product = kronecker_product(a, b);
  std::vector<SpatialPartition> gens = product.sorted_members();
  for (const auto& p : extra) {
    if (p.m() != a.m() + b.m()) throw Error(ErrorCode::LevelMismatch, "extra partition has the wrong level count");
    gens.push_back(p);
  }
  return generate_closure(gens, a.m() + b.m(), bounds);
}

}  // namespace spqg

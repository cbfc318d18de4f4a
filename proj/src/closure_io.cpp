#include "spqg/closure_io.hpp"

#include <string>

#include "spqg/io.hpp"

namespace spqg {

namespace {

const char* op_name(TraceOp op) {
  switch (op) {
    case TraceOp::Seed: return "seed";
    case TraceOp::Involution: return "involution";
    case TraceOp::Rotate: return "rotate";
    case TraceOp::Compose: return "compose";
    case TraceOp::Tensor: return "tensor";
  }
  return "?";
}

TraceOp parse_op(const std::string& s) {
  for (auto op : {TraceOp::Seed, TraceOp::Involution, TraceOp::Rotate, TraceOp::Compose, TraceOp::Tensor})
    if (s == op_name(op)) return op;
  throw Error(ErrorCode::Parse, "unknown trace op '" + s + "'");
}

StopReason parse_stop(const std::string& s) {
  for (auto r : {StopReason::Saturated, StopReason::MaxSet, StopReason::MaxRounds, StopReason::MaxOps,
                 StopReason::TargetFound})
    if (s == stop_reason_name(r)) return r;
  throw Error(ErrorCode::Parse, "unknown stop reason '" + s + "'");
}

nlohmann::json trace_json(TraceOp op, Corner corner, std::int64_t a, std::int64_t b) {
  nlohmann::json t = {{"op", op_name(op)}};
  if (a >= 0) t["a"] = a;
  if (b >= 0) t["b"] = b;
  if (op == TraceOp::Rotate) t["corner"] = corner_name(corner);
  return t;
}

}  // namespace

void write_closure_jsonl(const ClosureSet& cs, std::ostream& out) {
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto j = to_json(cs.members()[i]);
    const auto& t = cs.traces()[i];
    j["trace"] = trace_json(t.op, t.corner, t.a, t.b);
    out << j.dump() << "\n";
  }
}

nlohmann::json closure_meta(const ClosureSet& cs) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : cs.generators()) gens.push_back(to_json(g));
  const auto& b = cs.bounds();
  return {{"m", cs.m()},
          {"size", cs.size()},
          {"generators", gens},
          {"bounds", {{"max_cols", b.max_cols}, {"max_set", b.max_set}, {"max_rounds", b.max_rounds}, {"max_ops", b.max_ops}}},
          {"saturated", cs.saturated()},
          {"stop_reason", stop_reason_name(cs.stop_reason())},
          {"rounds", cs.rounds()},
          {"ops", cs.ops()}};
}

ClosureSet read_closure(std::istream& jsonl, const nlohmann::json& meta) {
  try {
    Bounds b;
    const auto& jb = meta.at("bounds");
    b.max_cols = jb.at("max_cols").get<std::uint32_t>();
    b.max_set = jb.at("max_set").get<std::size_t>();
    b.max_rounds = jb.at("max_rounds").get<std::uint32_t>();
    b.max_ops = jb.value("max_ops", std::uint64_t(0));
    std::vector<SpatialPartition> gens;
    for (const auto& g : meta.at("generators")) gens.push_back(partition_from_json(g));
    ClosureSet cs(meta.at("m").get<std::uint32_t>(), gens, b);
    std::string line;
    std::size_t n = 0;
    while (std::getline(jsonl, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const auto j = nlohmann::json::parse(line);
      auto p = partition_from_json(j);
      if (p.m() != cs.m()) throw Error(ErrorCode::LevelMismatch, "closure line " + std::to_string(n + 1));
      TraceNode node;
      if (j.contains("trace")) {
        const auto& t = j["trace"];
        node.op = parse_op(t.at("op").get<std::string>());
        node.a = t.value("a", std::int64_t(-1));
        node.b = t.value("b", std::int64_t(-1));
        if (t.contains("corner")) node.corner = parse_corner(t["corner"].get<std::string>());
        if (node.a >= std::int64_t(n) || node.b >= std::int64_t(n))
          throw Error(ErrorCode::Parse, "trace on line " + std::to_string(n + 1) + " refers forward");
      }
      if (!cs.insert(std::move(p), node).second)
        throw Error(ErrorCode::Parse, "duplicate partition on line " + std::to_string(n + 1));
      ++n;
    }
    cs.set_status(meta.value("saturated", false), parse_stop(meta.value("stop_reason", std::string("max_set"))),
                  meta.value("rounds", 0u), meta.value("ops", std::uint64_t(0)));
    return cs;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

nlohmann::json membership_to_json(const MembershipAnswer& answer) {
  nlohmann::json j = {{"verdict", verdict_name(answer.verdict)}};
  if (answer.separator) j["separator"] = answer.separator->name();
  if (answer.verdict == Verdict::Member) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : answer.trace) {
      auto t = trace_json(s.op, s.corner, s.a, s.b);
      t["result"] = to_text(s.result);
      steps.push_back(t);
    }
    j["trace"] = steps;
  }
  return j;
}

}  // namespace spqg

#include "hyperconn/report.hpp"

#include <sstream>

namespace hyperconn {

using nlohmann::json;

json bound_to_json(const BigInt& value) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (value >= lo && value <= hi) return value.convert_to<std::int64_t>();
  return value.str();
}

json to_json(const CrossingProfile& p) {
  return json{{"c", p.c}, {"t", p.t}, {"s", p.s}, {"j", p.j}, {"n", p.n}, {"r", p.r}};
}

json to_json(const Theorem42Params& p) {
  json out{{"x", p.x}};
  const auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  out["y"] = opt(p.y);
  out["z"] = opt(p.z);
  out["q"] = opt(p.q);
  out["R"] = opt(p.R);
  return out;
}

namespace {

json clauses_to_json(const std::vector<ClauseBound>& clauses) {
  json out = json::array();
  for (const auto& c : clauses) out.push_back({{"index", c.index}, {"bound", bound_to_json(c.bound)}});
  return out;
}

}  // namespace

json to_json(const Verdict& v) {
  if (v.satisfied()) {
    return json{{"satisfied", true}, {"condition_id", nullptr}, {"j", nullptr},        {"profile", nullptr},
                {"params", nullptr}, {"antecedent", json::array()}, {"failed_consequent", json::array()}};
  }
  const Violation& x = *v.violation;
  return json{{"satisfied", false},
              {"condition_id", std::string(condition_label(x.condition))},
              {"j", x.j},
              {"profile", x.profile ? to_json(*x.profile) : json(nullptr)},
              {"params", x.params ? to_json(*x.params) : json(nullptr)},
              {"antecedent", clauses_to_json(x.antecedent)},
              {"failed_consequent", clauses_to_json(x.failed_consequent)}};
}

json to_json(const Hypergraph& h) {
  return json{{"n", h.vertex_count()}, {"r", h.rank()}, {"edges", h.edges()}};
}

json to_json(const ForcibleResult& result) {
  return json{{"holds", result.holds},
              {"counterexample", result.counterexample ? to_json(*result.counterexample) : json(nullptr)}};
}

std::string verdict_summary(const Verdict& v) {
  if (v.satisfied()) return "satisfied";
  const Violation& x = *v.violation;
  std::ostringstream out;
  out << "violated " << condition_label(x.condition) << " at j=" << x.j;
  if (x.profile && x.profile->c > 0) {
    out << " t=" << json(x.profile->t).dump() << " s=" << json(x.profile->s).dump();
  }
  if (x.params) out << " params=" << to_json(*x.params).dump();
  return out.str();
}

std::string verdict_details(const Verdict& v) {
  if (v.satisfied()) return {};
  std::ostringstream out;
  for (const auto& c : v.violation->antecedent) out << "  holds  d_" << c.index << " <= " << c.bound << '\n';
  for (const auto& c : v.violation->failed_consequent) out << "  fails  d_" << c.index << " >= " << c.bound << '\n';
  return out.str();
}

}  // namespace hyperconn

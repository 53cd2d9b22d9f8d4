// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes. Usage: acceptance <path-to-hyperconn-cli>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperconn/conditions.hpp"
#include "hyperconn/error.hpp"
#include "hyperconn/extremal.hpp"
#include "hyperconn/hypergraph.hpp"
#include "hyperconn/realizations.hpp"

using namespace hyperconn;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string cli_path;

// Every non-decreasing sequence of length n with entries in [0, max_value].
std::vector<std::vector<int>> monotone_sequences(int n, int max_value) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= max_value; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

struct SweepSpec {
  int r;
  std::vector<int> ns;
};

std::vector<DegreeSequence> sweep(const std::vector<SweepSpec>& specs) {
  std::vector<DegreeSequence> out;
  for (const auto& spec : specs) {
    for (int n : spec.ns) {
      const int max_value = binom(n - 1, spec.r - 1).convert_to<int>();
      for (const auto& v : monotone_sequences(n, max_value)) out.push_back(DegreeSequence::make(v, spec.r));
    }
  }
  return out;
}

const std::vector<DegreeSequence>& sweep2() {
  static const auto seqs = sweep({{2, {4, 5, 6}}, {3, {5, 6}}});
  return seqs;
}

std::string text(const DegreeSequence& d) {
  std::ostringstream out;
  out << "r=" << d.rank() << " d=(";
  for (int i = 1; i <= d.size(); ++i) out << (i > 1 ? "," : "") << d.at(i);
  return out.str() + ")";
}

// Memoized oracles keyed by (sequence, property, k).
class OracleCache {
 public:
  bool hypergraphic(const DegreeSequence& d) {
    auto key = std::make_pair(d.values(), d.rank());
    auto it = hypergraphic_.find(key);
    if (it != hypergraphic_.end()) return it->second;
    return hypergraphic_[key] = is_hypergraphic(d);
  }

  bool k_edge(const DegreeSequence& d, int k) {
    return lookup(d, k, [&] { return forcibly_k_edge_connected(d, k).holds; });
  }

  bool super(const DegreeSequence& d) {
    return lookup(d, -1, [&] { return forcibly_super(d).holds; });
  }

 private:
  template <typename F>
  bool lookup(const DegreeSequence& d, int tag, F&& compute) {
    auto key = std::make_tuple(d.values(), d.rank(), tag);
    auto it = results_.find(key);
    if (it != results_.end()) return it->second;
    return results_[key] = compute();
  }

  std::map<std::pair<std::vector<int>, int>, bool> hypergraphic_;
  std::map<std::tuple<std::vector<int>, int, int>, bool> results_;
};

OracleCache& oracle() {
  static OracleCache cache;
  return cache;
}

// Counts "Satisfied and hypergraphic but the oracle disagrees" cases.
struct SoundnessTally {
  int satisfied = 0;
  int failures = 0;
  std::string first_failure;

  void record(const DegreeSequence& d, const std::string& checker, const Verdict& v,
              const std::function<bool()>& holds) {
    if (!v.satisfied() || d.size() < 2 || !oracle().hypergraphic(d)) return;
    ++satisfied;
    if (!holds()) {
      if (failures++ == 0) first_failure = checker + " on " + text(d);
    }
  }

  Outcome outcome(const std::string& what) const {
    std::ostringstream out;
    out << what << ": " << satisfied << " satisfied hypergraphic cases, " << failures << " counterexamples";
    if (failures) out << "; first " << first_failure;
    return {failures == 0, out.str()};
  }
};

// ---- criterion 1 ----

std::vector<Edge> all_r_subsets(int n, int r) {
  std::vector<Edge> out;
  Edge e;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(e.size()) == r) {
      out.push_back(e);
      return;
    }
    for (int v = from; v < n; ++v) {
      e.push_back(v);
      rec(v + 1);
      e.pop_back();
    }
  };
  rec(0);
  return out;
}

Outcome criterion_lambda_equivalence() {
  long exhaustive = 0;
  long mismatches = 0;
  std::string first;
  const auto compare = [&](const Hypergraph& h) {
    if (edge_connectivity(h) != edge_connectivity_bruteforce(h)) {
      if (mismatches++ == 0) first = to_text(h);
    }
  };
  for (int r : {2, 3}) {
    for (int n = 2; n <= 5; ++n) {
      const auto candidates = all_r_subsets(n, r);
      const std::uint32_t subsets = std::uint32_t{1} << candidates.size();
      for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          if (mask >> i & 1u) edges.push_back(candidates[i]);
        }
        compare(Hypergraph::make(n, r, std::move(edges)));
        ++exhaustive;
      }
    }
  }
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 10000; ++i) {
    const int r = 2 + static_cast<int>(rng() % 2);
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto candidates = all_r_subsets(n, r);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double p = unit(rng);
    std::vector<Edge> edges;
    for (const auto& e : candidates) {
      if (unit(rng) < p) edges.push_back(e);
    }
    compare(Hypergraph::make(n, r, std::move(edges)));
  }
  std::ostringstream out;
  out << exhaustive << " exhaustive + 10000 random hypergraphs, " << mismatches << " mismatches";
  if (mismatches) out << "; first:\n" << first;
  return {mismatches == 0, out.str()};
}

// ---- criteria 2 and 3 ----

Outcome criterion_theorem23_soundness() {
  SoundnessTally tally;
  for (const auto& d : sweep2()) {
    for (int k = 1; k <= 3; ++k) {
      tally.record(d, "k=" + std::to_string(k), check_theorem23(d, k, Mode::Sound),
                   [&] { return oracle().k_edge(d, k); });
    }
  }
  return tally.outcome(std::to_string(sweep2().size()) + " sequences x k=1..3");
}

Outcome criterion_strongest() {
  int violations = 0;
  int failures = 0;
  int infeasible = 0;
  std::string first;
  const auto fail = [&](const std::string& why) {
    if (failures++ == 0) first = why;
  };
  for (const auto& d : sweep2()) {
    for (int k = 1; k <= 3; ++k) {
      const Verdict v = check_theorem23(d, k, Mode::Sound);
      if (v.satisfied() || v.violation->condition == ConditionId::T23_1) continue;
      ++violations;
      const std::string where = std::string(condition_label(v.violation->condition)) + " k=" + std::to_string(k) +
                                " on " + text(d);
      try {
        const auto w = strongest_witness(d, k, v);
        if (!majorizes(w.dprime, d)) fail("d' does not majorize d for " + where);
        else if (!(degree_sequence_of(w.h) == w.dprime)) fail("degree sequence of H' differs from d' for " + where);
        else if (edge_connectivity(w.h) != k - 1) fail("lambda(H') != k-1 for " + where);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::InfeasibleProfile) ++infeasible;
        fail(std::string(error_code_name(e.code())) + " for " + where + ": " + e.what());
      }
    }
  }
  std::ostringstream out;
  out << violations << " violations of conditions (2)-(4), " << failures << " failures (" << infeasible
      << " infeasible profiles)";
  if (failures) out << "; first: " << first;
  return {failures == 0, out.str()};
}

// ---- criterion 4 ----

Outcome criterion_equivalences() {
  int disagreements = 0;
  std::string first;
  SoundnessTally t21;
  SoundnessTally c29;
  SoundnessTally c29_k1;
  for (const auto& d : sweep2()) {
    if (check_theorem22(d).satisfied() != check_theorem23(d, 2).satisfied()) {
      if (disagreements++ == 0) first = text(d);
    }
    for (int k = 2; k <= 3; ++k) {
      t21.record(d, "2.1 k=" + std::to_string(k), check_theorem21(d, k), [&] { return oracle().k_edge(d, k); });
    }
    // The tuple simplification needs k >= 2, the range it shares with 2.1.
    for (int k = 2; k <= 3; ++k) {
      c29.record(d, "2.9 k=" + std::to_string(k), check_corollary29(d, k), [&] { return oracle().k_edge(d, k); });
    }
    c29_k1.record(d, "2.9 k=1", check_corollary29(d, 1), [&] { return oracle().k_edge(d, 1); });
  }
  const Outcome a = t21.outcome("2.1");
  const Outcome b = c29.outcome("2.9");
  std::ostringstream out;
  out << "2.2 vs 2.3(k=2): " << disagreements << " disagreements" << (disagreements ? " first " + first : "")
      << "; " << a.detail << "; " << b.detail << "; informational k=1: " << c29_k1.outcome("2.9").detail;
  return {disagreements == 0 && a.pass && b.pass, out.str()};
}

// ---- criterion 5 ----

Outcome criterion_super_soundness() {
  SoundnessTally t32;
  SoundnessTally c33;
  int skipped = 0;
  for (const auto& d : sweep({{2, {3, 4, 5, 6}}, {3, {5, 6}}})) {
    if (d.min_degree() < 1) {
      ++skipped;
      continue;
    }
    t32.record(d, "3.2", check_super_t32(d, Mode::Sound), [&] { return oracle().super(d); });
    c33.record(d, "3.3", check_super_cor33(d), [&] { return oracle().super(d); });
  }
  const Outcome a = t32.outcome("3.2");
  const Outcome b = c33.outcome("3.3");
  return {a.pass && b.pass, a.detail + "; " + b.detail + "; " + std::to_string(skipped) + " sequences with d_1 = 0 skipped"};
}

// ---- criterion 6 ----

Outcome criterion_literal_gaps() {
  std::vector<std::string> problems;
  const auto d1 = DegreeSequence::make(std::vector<int>{1, 1, 1, 1}, 2);
  if (!check_theorem23(d1, 1, Mode::PaperLiteral).satisfied()) problems.push_back("(1,1,1,1) not satisfied as stated");
  if (forcibly_k_edge_connected(d1, 1).holds) problems.push_back("(1,1,1,1) forcibly connected");
  if (check_theorem23(d1, 1, Mode::Sound).satisfied()) problems.push_back("(1,1,1,1) satisfied in sound mode");
  const auto d2 = DegreeSequence::make(std::vector<int>{2, 2, 2, 2}, 2);
  if (!check_super_t32(d2, Mode::PaperLiteral).satisfied()) problems.push_back("(2,2,2,2) not satisfied as stated");
  if (forcibly_super(d2).holds) problems.push_back("(2,2,2,2) forcibly super");
  if (check_super_t32(d2, Mode::Sound).satisfied()) problems.push_back("(2,2,2,2) satisfied in sound mode");
  std::string detail = "both documented gaps reproduced";
  if (!problems.empty()) {
    detail.clear();
    for (const auto& p : problems) detail += (detail.empty() ? "" : "; ") + p;
  }
  return {problems.empty(), detail};
}

// ---- criterion 7 ----

Outcome criterion_theorem42_soundness() {
  SoundnessTally t42;
  SoundnessTally c43;
  SoundnessTally c44;
  for (const auto& d : sweep2()) {
    for (int k = 2; k <= 3; ++k) {
      t42.record(d, "4.2 k=" + std::to_string(k), check_theorem42(d, k), [&] { return oracle().k_edge(d, k); });
    }
    c43.record(d, "4.3", check_corollary43(d), [&] { return oracle().k_edge(d, 2); });
    c44.record(d, "4.4", check_corollary44(d), [&] { return oracle().k_edge(d, 3); });
  }
  const Outcome a = t42.outcome("4.2");
  const Outcome b = c43.outcome("4.3");
  const Outcome c = c44.outcome("4.4");
  return {a.pass && b.pass && c.pass, a.detail + "; " + b.detail + "; " + c.detail};
}

// ---- criterion 8 ----

Outcome criterion_thresholds() {
  int checked = 0;
  int mismatches = 0;
  std::string first;
  const auto mismatch = [&](const std::string& what) {
    if (mismatches++ == 0) first = what;
  };
  for (int r = 2; r <= 6; ++r) {
    for (int k = 2; k <= 6; ++k) {
      std::optional<int> naive;
      for (int g = 1; g <= 1000 && !naive; ++g) {
        if (g >= r && BigInt(g) * k <= BigInt(g) * binom(g - 1, r - 1) + (r - 1) * (k - 1)) naive = g;
      }
      ++checked;
      if (!naive || compute_g(k, r) != *naive) mismatch("g(" + std::to_string(k) + "," + std::to_string(r) + ")");
    }
    for (int n = 1; n <= 40; ++n) {
      for (int c = 1; c <= 6; ++c) {
        std::optional<int> naive;
        for (int j = 1; j <= n; ++j) {
          if (j >= r + 1 && 2 * j < n && binom(j - 1, r - 1) + c <= binom(n - j - 1, r - 1)) naive = j;
        }
        checked += 2;
        if (compute_jstar(n, r, c) != naive) mismatch("jstar(" + std::to_string(n) + "," + std::to_string(r) + ")");
        if (compute_j0(n, c, r) != naive) mismatch("j0(" + std::to_string(n) + "," + std::to_string(r) + ")");
      }
    }
  }
  std::ostringstream out;
  out << checked << " values, " << mismatches << " mismatches" << (mismatches ? "; first " + first : "");
  return {mismatches == 0, out.str()};
}

// ---- criterion 9 ----

struct NamedChecker {
  std::string name;
  std::function<Verdict(const DegreeSequence&)> run;
};

std::vector<NamedChecker> all_checkers() {
  std::vector<NamedChecker> out;
  for (int k = 2; k <= 3; ++k) {
    out.push_back({"2.1 k=" + std::to_string(k), [k](const DegreeSequence& d) { return check_theorem21(d, k); }});
    out.push_back({"4.2 k=" + std::to_string(k), [k](const DegreeSequence& d) { return check_theorem42(d, k); }});
  }
  for (int k = 1; k <= 3; ++k) {
    for (Mode mode : {Mode::Sound, Mode::PaperLiteral}) {
      out.push_back({"2.3 k=" + std::to_string(k) + (mode == Mode::Sound ? " sound" : " literal"),
                     [k, mode](const DegreeSequence& d) { return check_theorem23(d, k, mode); }});
    }
    out.push_back({"2.9 k=" + std::to_string(k), [k](const DegreeSequence& d) { return check_corollary29(d, k); }});
  }
  out.push_back({"2.2", [](const DegreeSequence& d) { return check_theorem22(d); }});
  out.push_back({"2.5", [](const DegreeSequence& d) { return check_corollary25(d); }});
  out.push_back({"2.8", [](const DegreeSequence& d) { return check_maximally(d); }});
  out.push_back({"3.1", [](const DegreeSequence& d) { return check_super_t31(d); }});
  out.push_back({"3.2 sound", [](const DegreeSequence& d) { return check_super_t32(d, Mode::Sound); }});
  out.push_back({"3.2 literal", [](const DegreeSequence& d) { return check_super_t32(d, Mode::PaperLiteral); }});
  out.push_back({"3.3", [](const DegreeSequence& d) { return check_super_cor33(d); }});
  out.push_back({"4.3", [](const DegreeSequence& d) { return check_corollary43(d); }});
  out.push_back({"4.4", [](const DegreeSequence& d) { return check_corollary44(d); }});
  return out;
}

Outcome criterion_monotonicity() {
  std::mt19937_64 rng(77);
  const auto checkers = all_checkers();
  int comparisons = 0;
  int violations = 0;
  std::map<std::string, int> per_checker;
  std::string first;
  for (int pair = 0; pair < 1000; ++pair) {
    const int r = 2 + static_cast<int>(rng() % 3);
    const int n = std::max(r + 1, 2 + static_cast<int>(rng() % 11));
    const int max_value = binom(n - 1, r - 1).convert_to<int>();
    // Bias toward dense sequences, where Satisfied verdicts occur.
    std::uniform_int_distribution<int> low(0, max_value);
    const int floor = low(rng);
    std::uniform_int_distribution<int> pick(floor, max_value);
    std::vector<int> a(n);
    for (auto& v : a) v = pick(rng);
    std::sort(a.begin(), a.end());
    std::vector<int> b = a;
    std::uniform_int_distribution<int> bump(0, 2);
    for (auto& v : b) v = std::min(max_value, v + bump(rng));
    const auto d = DegreeSequence::make(a, r);
    const auto dprime = DegreeSequence::make(b, r);
    for (const auto& checker : checkers) {
      Verdict low_verdict;
      Verdict high_verdict;
      try {
        low_verdict = checker.run(d);
        high_verdict = checker.run(dprime);
      } catch (const Error&) {
        continue;  // precondition not met on one side (e.g. r or d_1 restrictions)
      }
      ++comparisons;
      if (low_verdict.satisfied() && !high_verdict.satisfied()) {
        ++per_checker[checker.name];
        if (violations++ == 0) first = checker.name + " on " + text(d) + " -> " + text(dprime);
      }
    }
  }
  std::ostringstream out;
  out << comparisons << " comparisons over 1000 pairs, " << violations << " violations";
  if (violations) {
    out << " (";
    bool firstEntry = true;
    for (const auto& [name, count] : per_checker) {
      out << (firstEntry ? "" : ", ") << name << ": " << count;
      firstEntry = false;
    }
    out << "); first " << first;
  }
  return {violations == 0, out.str()};
}

// ---- criterion 10 ----

std::pair<int, std::string> run_capture(const std::string& command) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

Outcome criterion_parallel_determinism() {
  if (cli_path.empty()) return {false, "no CLI path given"};
  // 100 fixed hypergraphic inputs spread over both sweeps and all properties.
  std::vector<std::string> commands;
  const auto candidates = sweep({{2, {5, 6}}, {3, {6}}});
  std::vector<const DegreeSequence*> eligible;
  for (const auto& d : candidates) {
    if (d.min_degree() >= 1 && oracle().hypergraphic(d)) eligible.push_back(&d);
  }
  std::vector<const DegreeSequence*> chosen;
  for (std::size_t i = 0; i < 100 && !eligible.empty(); ++i) {
    chosen.push_back(eligible[i * eligible.size() / 100]);
  }
  int index = 0;
  for (const auto* d : chosen) {
    std::string seq;
    for (int v : d->values()) seq += (seq.empty() ? "" : ",") + std::to_string(v);
    std::string property;
    switch (index++ % 4) {
      case 0: property = "--property k-edge --k 2"; break;
      case 1: property = "--property k-edge --k 3"; break;
      case 2: property = "--property super"; break;
      default: property = "--property maximally"; break;
    }
    commands.push_back("'" + cli_path + "' oracle " + property + " --r " + std::to_string(d->rank()) + " --seq " +
                       seq + " --format json");
  }
  int differing = 0;
  std::string first;
  for (const auto& base : commands) {
    const auto reference = run_capture(base + " --workers 1");
    for (int workers : {2, 4}) {
      const auto other = run_capture(base + " --workers " + std::to_string(workers));
      if (other != reference) {
        if (differing++ == 0) first = base;
      }
    }
    if (reference.first != 0 && reference.first != 1) {
      if (differing++ == 0) first = base + " exited " + std::to_string(reference.first);
    }
  }
  std::ostringstream out;
  out << commands.size() << " inputs x workers {1,2,4}, " << differing << " differences";
  if (differing) out << "; first " << first;
  return {differing == 0 && commands.size() == 100, out.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"lambda oracle equivalence", criterion_lambda_equivalence},
      {"general k-edge condition soundness", criterion_theorem23_soundness},
      {"strongest-ness witnesses", criterion_strongest},
      {"equivalence and generalization claims", criterion_equivalences},
      {"super edge-connectivity soundness", criterion_super_soundness},
      {"literal-mode gaps", criterion_literal_gaps},
      {"residue-class condition soundness", criterion_theorem42_soundness},
      {"threshold scalars", criterion_thresholds},
      {"monotonicity", criterion_monotonicity},
      {"determinism under parallelism", criterion_parallel_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.pass) ++failed;
    std::printf("%s criterion %zu: %s (%.2f s) -- %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), seconds, outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

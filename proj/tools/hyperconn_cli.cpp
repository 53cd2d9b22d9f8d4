// hyperconn command-line front end. Talks to the library only through the
// C API in hyperconn/hyperconn.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperconn/hyperconn.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_for(hc_status status) {
  switch (status) {
    case HC_OK: return kExitOk;
    case HC_ERR_BUDGET_EXHAUSTED:
    case HC_ERR_INSTANCE_TOO_LARGE:
    case HC_ERR_INFEASIBLE_PROFILE: return kExitResource;
    default: return kExitUsage;
  }
}

void check_status(hc_status status) {
  if (status == HC_OK) return;
  throw CliError{exit_code_for(status),
                 std::string(hc_status_string(status)) + ": " + hc_last_error_message()};
}

struct SequenceDeleter {
  void operator()(hc_sequence* p) const { hc_sequence_free(p); }
};
struct HypergraphDeleter {
  void operator()(hc_hypergraph* p) const { hc_hypergraph_free(p); }
};
struct VerdictDeleter {
  void operator()(hc_verdict* p) const { hc_verdict_free(p); }
};
struct ProfileListDeleter {
  void operator()(hc_profile_list* p) const { hc_profile_list_free(p); }
};
using SequencePtr = std::unique_ptr<hc_sequence, SequenceDeleter>;
using HypergraphPtr = std::unique_ptr<hc_hypergraph, HypergraphDeleter>;
using VerdictPtr = std::unique_ptr<hc_verdict, VerdictDeleter>;
using ProfileListPtr = std::unique_ptr<hc_profile_list, ProfileListDeleter>;

std::string take_string(char* s) {
  std::string out(s);
  hc_string_free(s);
  return out;
}

std::string sequence_text(const hc_sequence* d) {
  char* s = nullptr;
  check_status(hc_sequence_to_text(d, &s));
  return take_string(s);
}

std::string hypergraph_text(const hc_hypergraph* h) {
  char* s = nullptr;
  check_status(hc_hypergraph_to_text(h, &s));
  return take_string(s);
}

json hypergraph_json(const hc_hypergraph* h) {
  char* s = nullptr;
  check_status(hc_hypergraph_to_json(h, &s));
  return json::parse(take_string(s));
}

json sequence_json(const hc_sequence* d) {
  json arr = json::array();
  for (size_t i = 0; i < hc_sequence_length(d); ++i) arr.push_back(hc_sequence_value(d, i));
  return arr;
}

SequencePtr parse_sequence(const std::string& text, int r) {
  hc_sequence* d = nullptr;
  check_status(hc_sequence_parse(text.c_str(), r, &d));
  return SequencePtr(d);
}

// Sequences from --seq or every non-comment line of --file.
std::vector<SequencePtr> load_sequences(const std::string& seq, const std::string& file, int r) {
  std::vector<SequencePtr> out;
  if (!seq.empty()) {
    out.push_back(parse_sequence(seq, r));
    return out;
  }
  std::ifstream in(file);
  if (!in) throw CliError{kExitUsage, "cannot open sequence file '" + file + "'"};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_sequence(line, r));
  }
  if (out.empty()) throw CliError{kExitUsage, "sequence file '" + file + "' has no sequences"};
  return out;
}

HypergraphPtr load_hypergraph(const std::string& path) {
  hc_hypergraph* h = nullptr;
  check_status(hc_hypergraph_read_file(path.c_str(), &h));
  return HypergraphPtr(h);
}

void emit_hypergraph(const hc_hypergraph* h, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << hypergraph_text(h);
  } else {
    check_status(hc_hypergraph_write_file(h, out_path.c_str()));
  }
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw CliError{kExitUsage, std::string("malformed integer list for ") + flag + ": '" + text + "'"};
    }
  }
  return out;
}

std::optional<uint64_t> budget_from_environment() {
  const char* env = std::getenv("HYPERCONN_BUDGET");
  if (!env || !*env) return std::nullopt;
  try {
    size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw CliError{kExitUsage, std::string("HYPERCONN_BUDGET must be a positive integer, got '") + env + "'"};
  }
}

uint64_t resolve_budget(uint64_t flag_value) {
  if (flag_value != 0) return flag_value;
  return budget_from_environment().value_or(hc_default_budget());
}

bool theorem_needs_k(const std::string& theorem) {
  return theorem == "2.1" || theorem == "2.3" || theorem == "2.9" || theorem == "4.2";
}

struct Options {
  std::string format = "text";
  std::string mode = "sound";
  std::string theorem;
  std::string property;
  std::string seq;
  std::string file;
  std::string out;
  std::string t;
  std::string s;
  int r = 2;
  std::optional<int> k;
  int n = 0;
  int j = 0;
  int c = 0;
  int z = 0;
  int workers = 1;
  uint64_t budget = 0;
  uint64_t limit = 0;
};

bool json_output(const Options& o) { return o.format == "json"; }

int cmd_check(const Options& o) {
  if (theorem_needs_k(o.theorem) && !o.k) throw CliError{kExitUsage, "theorem " + o.theorem + " needs --k"};
  const hc_mode mode = o.mode == "paper-literal" ? HC_MODE_PAPER_LITERAL : HC_MODE_SOUND;
  const auto sequences = load_sequences(o.seq, o.file, o.r);
  const bool many = sequences.size() > 1;
  bool any_violated = false;
  for (const auto& d : sequences) {
    hc_verdict* raw = nullptr;
    check_status(hc_check(d.get(), o.theorem.c_str(), o.k.value_or(0), mode, &raw));
    VerdictPtr v(raw);
    any_violated = any_violated || !hc_verdict_satisfied(v.get());
    char* s = nullptr;
    if (json_output(o)) {
      check_status(hc_verdict_to_json(v.get(), &s));
      std::cout << take_string(s) << '\n';
    } else {
      check_status(hc_verdict_to_text(v.get(), &s));
      if (many) std::cout << sequence_text(d.get()) << ": ";
      std::cout << take_string(s);
    }
  }
  return any_violated ? kExitFails : kExitOk;
}

int cmd_oracle(const Options& o) {
  hc_property property;
  if (o.property == "k-edge") {
    if (!o.k) throw CliError{kExitUsage, "property k-edge needs --k"};
    property = HC_PROPERTY_K_EDGE;
  } else if (o.property == "super") {
    property = HC_PROPERTY_SUPER;
  } else {
    property = HC_PROPERTY_MAXIMALLY;
  }
  const uint64_t budget = resolve_budget(o.budget);
  const auto sequences = load_sequences(o.seq, o.file, o.r);
  bool all_hold = true;
  for (const auto& d : sequences) {
    int holds = 0;
    hc_hypergraph* raw = nullptr;
    const hc_status status = hc_oracle(d.get(), property, o.k.value_or(0), budget, o.workers, &holds, &raw);
    if (status == HC_ERR_NOT_HYPERGRAPHIC) {
      throw CliError{kExitUsage, "sequence " + sequence_text(d.get()) + " is not " + std::to_string(o.r) +
                                     "-uniform hypergraphic"};
    }
    check_status(status);
    HypergraphPtr counterexample(raw);
    all_hold = all_hold && holds;
    if (json_output(o)) {
      json record{{"property", o.property},
                  {"k", property == HC_PROPERTY_K_EDGE ? json(*o.k) : json(nullptr)},
                  {"sequence", sequence_json(d.get())},
                  {"holds", holds != 0},
                  {"counterexample", counterexample ? hypergraph_json(counterexample.get()) : json(nullptr)}};
      std::cout << record.dump() << '\n';
    } else {
      if (sequences.size() > 1) std::cout << sequence_text(d.get()) << ": ";
      std::cout << (holds ? "holds" : "fails") << '\n';
      if (counterexample && o.out.empty()) {
        std::istringstream lines(hypergraph_text(counterexample.get()));
        for (std::string line; std::getline(lines, line);) std::cout << "  " << line << '\n';
      }
    }
    if (counterexample && !o.out.empty()) check_status(hc_hypergraph_write_file(counterexample.get(), o.out.c_str()));
  }
  return all_hold ? kExitOk : kExitFails;
}

int cmd_lambda(const Options& o) {
  const auto h = load_hypergraph(o.file);
  int lambda = 0;
  check_status(hc_edge_connectivity(h.get(), &lambda));
  if (json_output(o)) {
    std::cout << json{{"lambda", lambda}}.dump() << '\n';
  } else {
    std::cout << lambda << '\n';
  }
  return kExitOk;
}

int cmd_superlambda(const Options& o) {
  const auto h = load_hypergraph(o.file);
  int super = 0;
  check_status(hc_is_super_edge_connected(h.get(), &super));
  if (json_output(o)) {
    std::cout << json{{"super", super != 0}}.dump() << '\n';
  } else {
    std::cout << (super ? "true" : "false") << '\n';
  }
  return super ? kExitOk : kExitFails;
}

int cmd_construct(const Options& o) {
  const auto t = o.c > 0 ? parse_int_list(o.t, "--t") : std::vector<int>{};
  const auto s = o.c > 0 ? parse_int_list(o.s, "--s") : std::vector<int>{};
  if (static_cast<int>(t.size()) != o.c || static_cast<int>(s.size()) != o.c) {
    throw CliError{kExitUsage, "--t and --s must list exactly c values"};
  }
  hc_hypergraph* raw = nullptr;
  check_status(hc_build_extremal(o.n, o.j, o.r, o.c, t.data(), s.data(), &raw));
  HypergraphPtr h(raw);
  if (json_output(o)) {
    std::cout << hypergraph_json(h.get()).dump() << '\n';
    if (!o.out.empty() && o.out != "-") emit_hypergraph(h.get(), o.out);
  } else {
    emit_hypergraph(h.get(), o.out);
  }
  return kExitOk;
}

int cmd_witness(const Options& o) {
  if (!o.k) throw CliError{kExitUsage, "witness needs --k"};
  const hc_mode mode = o.mode == "paper-literal" ? HC_MODE_PAPER_LITERAL : HC_MODE_SOUND;
  const auto d = parse_sequence(o.seq, o.r);
  hc_verdict* raw_verdict = nullptr;
  check_status(hc_check(d.get(), "2.3", *o.k, mode, &raw_verdict));
  VerdictPtr v(raw_verdict);
  if (hc_verdict_satisfied(v.get())) {
    if (json_output(o)) {
      std::cout << json{{"satisfied", true}, {"dprime", nullptr}, {"hypergraph", nullptr}}.dump() << '\n';
    } else {
      std::cout << "satisfied: no witness\n";
    }
    return kExitFails;
  }
  hc_sequence* raw_dprime = nullptr;
  hc_hypergraph* raw_h = nullptr;
  check_status(hc_strongest_witness(d.get(), *o.k, v.get(), &raw_dprime, &raw_h));
  SequencePtr dprime(raw_dprime);
  HypergraphPtr h(raw_h);
  if (json_output(o)) {
    std::cout << json{{"satisfied", false},
                      {"condition_id", hc_verdict_condition(v.get())},
                      {"dprime", sequence_json(dprime.get())},
                      {"hypergraph", hypergraph_json(h.get())}}
                     .dump()
              << '\n';
    if (!o.out.empty() && o.out != "-") emit_hypergraph(h.get(), o.out);
  } else {
    std::cout << "dprime=" << sequence_text(dprime.get()) << '\n';
    emit_hypergraph(h.get(), o.out);
  }
  return kExitOk;
}

int cmd_params(const Options& o) {
  hc_profile_list* raw = nullptr;
  check_status(hc_profiles_enumerate(o.c, o.r, o.j, o.n, &raw));
  ProfileListPtr list(raw);
  if (json_output(o)) {
    char* s = nullptr;
    check_status(hc_profile_list_to_json(list.get(), &s));
    std::cout << take_string(s) << '\n';
    return kExitOk;
  }
  std::vector<int> t(o.c);
  std::vector<int> s(o.c);
  const auto join = [](const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
  };
  for (size_t i = 0; i < hc_profile_list_size(list.get()); ++i) {
    check_status(hc_profile_list_get(list.get(), i, t.data(), s.data()));
    std::cout << "t=(" << join(t) << ") s=(" << join(s) << ")\n";
  }
  return kExitOk;
}

int cmd_thresholds(const Options& o) {
  const int k = o.k.value_or(2);
  if (k < 1) throw CliError{kExitUsage, "--k must be at least 1"};
  std::optional<int> g;
  if (k >= 2) {
    int value = 0;
    check_status(hc_compute_g(k, o.r, &value));
    g = value;
  }
  int found = 0;
  int jstar = 0;
  check_status(hc_compute_jstar(o.n, o.r, k - 1, &found, &jstar));
  const std::optional<int> jstar_opt = found ? std::optional<int>(jstar) : std::nullopt;
  std::vector<std::pair<int, std::optional<int>>> j0;
  for (int z = 1; z <= k - 1; ++z) {
    int f = 0;
    int value = 0;
    check_status(hc_compute_j0(o.n, z, o.r, &f, &value));
    j0.emplace_back(z, f ? std::optional<int>(value) : std::nullopt);
  }
  std::optional<std::string> gap;
  if (o.j > 0) {
    char* s = nullptr;
    check_status(hc_delta_gap(o.n, o.j, o.r, &s));
    gap = take_string(s);
  }
  const auto text = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("none"); };
  if (json_output(o)) {
    const auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
    json table = json::array();
    for (const auto& [z, v] : j0) table.push_back({{"z", z}, {"j0", opt(v)}});
    std::cout << json{{"n", o.n}, {"r", o.r},         {"k", k},
                      {"g", opt(g)}, {"jstar", opt(jstar_opt)}, {"j0", table},
                      {"delta_gap", gap ? json(*gap) : json(nullptr)}}
                     .dump()
              << '\n';
    return kExitOk;
  }
  std::cout << "g=" << text(g) << " jstar=" << text(jstar_opt) << '\n';
  for (const auto& [z, v] : j0) std::cout << "j0(" << z << ")=" << text(v) << '\n';
  if (gap) std::cout << "delta(" << o.j << ")=" << *gap << '\n';
  return kExitOk;
}

int cmd_enumerate(const Options& o) {
  const auto d = parse_sequence(o.seq, o.r);
  int hypergraphic = 0;
  check_status(hc_sequence_is_hypergraphic(d.get(), resolve_budget(o.budget), &hypergraphic));
  std::cout << (hypergraphic ? "hypergraphic" : "not hypergraphic") << '\n';
  return hypergraphic ? kExitOk : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-sequence conditions for forcible edge-connectivity of uniform hypergraphs"};
  app.require_subcommand(1);
  Options o;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  const auto add_sequence_input = [&](CLI::App* cmd, bool allow_file) {
    auto* seq = cmd->add_option("--seq", o.seq, "Degree sequence, comma separated");
    if (allow_file) {
      auto* file = cmd->add_option("--file", o.file, "Sequence file, one per line");
      seq->excludes(file);
      file->excludes(seq);
      cmd->callback([cmd] {
        if (cmd->count("--seq") + cmd->count("--file") == 0) throw CLI::RequiredError("--seq or --file");
      });
    } else {
      seq->required();
    }
  };

  auto* check = app.add_subcommand("check", "Evaluate a theorem's degree condition");
  check->add_option("--theorem", o.theorem, "Theorem id")
      ->required()
      ->check(CLI::IsMember({"2.1", "2.2", "2.3", "2.4", "2.5", "2.8", "2.9", "3.1", "3.2", "3.3", "3.4", "4.2",
                             "4.3", "4.4"}));
  check->add_option("--r", o.r, "Uniformity rank")->required();
  check->add_option("--k", o.k, "Connectivity level");
  check->add_option("--mode", o.mode, "Condition ranges")->check(CLI::IsMember({"sound", "paper-literal"}));
  add_sequence_input(check, true);
  add_format(check);

  auto* oracle = app.add_subcommand("oracle", "Decide a forcible property by exhaustive search");
  oracle->add_option("--property", o.property, "Property")
      ->required()
      ->check(CLI::IsMember({"k-edge", "super", "maximally"}));
  oracle->add_option("--r", o.r, "Uniformity rank")->required();
  oracle->add_option("--k", o.k, "Connectivity level for k-edge");
  oracle->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1, 256));
  oracle->add_option("--budget", o.budget, "Search node budget (overrides HYPERCONN_BUDGET)")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--out", o.out, "Write the counterexample hypergraph here");
  add_sequence_input(oracle, true);
  add_format(oracle);

  auto* lambda = app.add_subcommand("lambda", "Edge connectivity of a hypergraph file");
  lambda->add_option("--file", o.file, "Hypergraph file")->required();
  add_format(lambda);

  auto* superlambda = app.add_subcommand("superlambda", "Super edge-connectivity of a hypergraph file");
  superlambda->add_option("--file", o.file, "Hypergraph file")->required();
  add_format(superlambda);

  auto* construct = app.add_subcommand("construct", "Build the two-part extremal hypergraph");
  construct->add_option("--n", o.n, "Vertex count")->required();
  construct->add_option("--j", o.j, "Left part size")->required();
  construct->add_option("--r", o.r, "Uniformity rank")->required();
  construct->add_option("--c", o.c, "Crossing edge count")->required();
  construct->add_option("--t", o.t, "Left multiplicity counts t_1..t_c");
  construct->add_option("--s", o.s, "Right multiplicity counts s_1..s_c");
  construct->add_option("--out", o.out, "Output hypergraph file (default stdout)");
  add_format(construct);

  auto* witness = app.add_subcommand("witness", "Majorizing counterexample for a violated k-edge condition");
  witness->add_option("--r", o.r, "Uniformity rank")->required();
  witness->add_option("--k", o.k, "Connectivity level")->required();
  witness->add_option("--mode", o.mode, "Condition ranges")->check(CLI::IsMember({"sound", "paper-literal"}));
  witness->add_option("--out", o.out, "Output hypergraph file (default stdout)");
  add_sequence_input(witness, false);
  add_format(witness);

  auto* params = app.add_subcommand("params", "List crossing profiles");
  params->add_option("--n", o.n, "Vertex count")->required();
  params->add_option("--j", o.j, "Left part size")->required();
  params->add_option("--r", o.r, "Uniformity rank")->required();
  params->add_option("--c", o.c, "Crossing edge count")->required();
  add_format(params);

  auto* thresholds = app.add_subcommand("thresholds", "Print g, j* and the j0 table");
  thresholds->add_option("--n", o.n, "Vertex count")->required();
  thresholds->add_option("--r", o.r, "Uniformity rank")->required();
  thresholds->add_option("--k", o.k, "Connectivity level (default 2)");
  thresholds->add_option("--j", o.j, "Also print the gap at this side size");
  add_format(thresholds);

  auto* enumerate = app.add_subcommand("enumerate", "Decide whether a sequence has a realization");
  enumerate->add_option("--r", o.r, "Uniformity rank")->required();
  enumerate->add_option("--budget", o.budget, "Search node budget")->check(CLI::PositiveNumber);
  add_sequence_input(enumerate, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(o);
    if (*oracle) return cmd_oracle(o);
    if (*lambda) return cmd_lambda(o);
    if (*superlambda) return cmd_superlambda(o);
    if (*construct) return cmd_construct(o);
    if (*witness) return cmd_witness(o);
    if (*params) return cmd_params(o);
    if (*thresholds) return cmd_thresholds(o);
    if (*enumerate) return cmd_enumerate(o);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

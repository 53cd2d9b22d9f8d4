#include "hyperconn/hyperconn.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "hyperconn/conditions.hpp"
#include "hyperconn/error.hpp"
#include "hyperconn/extremal.hpp"
#include "hyperconn/report.hpp"

using namespace hyperconn;

struct hc_sequence {
  DegreeSequence value;
};

struct hc_hypergraph {
  Hypergraph value;
};

struct hc_verdict {
  Verdict value;
  std::string label;
};

struct hc_profile_list {
  std::vector<CrossingProfile> profiles;
};

namespace {

thread_local std::string last_error;

hc_status fail(hc_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs body and maps exceptions onto status codes.
template <typename Body>
hc_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return HC_OK;
  } catch (const Error& e) {
    return fail(static_cast<hc_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HC_ERR_INTERNAL, e.what());
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::InvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Mode to_mode(hc_mode mode) {
  switch (mode) {
    case HC_MODE_SOUND: return Mode::Sound;
    case HC_MODE_PAPER_LITERAL: return Mode::PaperLiteral;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown mode");
}

Verdict dispatch_check(const DegreeSequence& d, const std::string& theorem, int k, Mode mode) {
  if (theorem == "2.1") return check_theorem21(d, k);
  if (theorem == "2.2") return check_theorem22(d);
  if (theorem == "2.3") return check_theorem23(d, k, mode);
  if (theorem == "2.4") return check_theorem23(d, 1, mode);
  if (theorem == "2.5") return check_corollary25(d);
  if (theorem == "2.8") return check_maximally(d);
  if (theorem == "2.9") return check_corollary29(d, k);
  if (theorem == "3.1") return check_super_t31(d);
  if (theorem == "3.2") return check_super_t32(d, mode);
  if (theorem == "3.3") return check_super_cor33(d);
  if (theorem == "3.4") {
    if (d.rank() != 2) throw Error(ErrorCode::InvalidArgument, "theorem 3.4 is the graph case and needs r = 2");
    return check_super_cor33(d);
  }
  if (theorem == "4.2") return check_theorem42(d, k);
  if (theorem == "4.3") return check_corollary43(d);
  if (theorem == "4.4") return check_corollary44(d);
  throw Error(ErrorCode::InvalidArgument, "unknown theorem id '" + theorem + "'");
}

SearchOptions search_options(uint64_t budget, int workers) {
  SearchOptions options;
  if (budget != 0) options.budget = budget;
  options.workers = workers;
  return options;
}

CrossingProfile make_profile(int c, int j, int n, int r, const int* t, const int* s) {
  require(c >= 0, "crossing edge count must be non-negative");
  require(c == 0 || (t && s), "profile arrays must not be null");
  CrossingProfile p;
  p.c = c;
  p.j = j;
  p.n = n;
  p.r = r;
  if (c > 0) {
    p.t.assign(t, t + c);
    p.s.assign(s, s + c);
  }
  return p;
}

}  // namespace

extern "C" {

const char* hc_version(void) { return "0.1.0"; }

const char* hc_status_string(hc_status status) {
  if (status == HC_OK) return "Ok";
  if (status == HC_ERR_INTERNAL) return "Internal";
  return error_code_name(static_cast<ErrorCode>(status));
}

const char* hc_last_error_message(void) { return last_error.c_str(); }

void hc_string_free(char* s) { std::free(s); }

uint64_t hc_default_budget(void) { return kDefaultSearchBudget; }

hc_status hc_sequence_create(const int64_t* values, size_t n, int r, hc_sequence** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    require(values != nullptr || n == 0, "values must not be null");
    std::span<const std::int64_t> view(values, n);
    *out = new hc_sequence{DegreeSequence::make(view, r)};
  });
}

hc_status hc_sequence_parse(const char* text, int r, hc_sequence** out) {
  return guarded([&] {
    require(text && out, "arguments must not be null");
    const auto values = parse_sequence_line(text);
    if (!values) throw Error(ErrorCode::EmptySequence, "no values in sequence text");
    *out = new hc_sequence{DegreeSequence::make(std::span<const std::int64_t>(*values), r)};
  });
}

void hc_sequence_free(hc_sequence* d) { delete d; }

size_t hc_sequence_length(const hc_sequence* d) { return d ? d->value.values().size() : 0; }

int hc_sequence_rank(const hc_sequence* d) { return d ? d->value.rank() : 0; }

int hc_sequence_value(const hc_sequence* d, size_t i) {
  if (!d || i >= d->value.values().size()) return -1;
  return d->value.values()[i];
}

hc_status hc_sequence_to_text(const hc_sequence* d, char** out) {
  return guarded([&] {
    require(d && out, "arguments must not be null");
    std::string text;
    for (int v : d->value.values()) {
      if (!text.empty()) text += ',';
      text += std::to_string(v);
    }
    *out = copy_string(text);
  });
}

hc_status hc_sequence_majorizes(const hc_sequence* dprime, const hc_sequence* d, int* out) {
  return guarded([&] {
    require(dprime && d && out, "arguments must not be null");
    *out = majorizes(dprime->value, d->value) ? 1 : 0;
  });
}

hc_status hc_sequence_is_hypergraphic(const hc_sequence* d, uint64_t budget, int* out) {
  return guarded([&] {
    require(d && out, "arguments must not be null");
    *out = is_hypergraphic(d->value, search_options(budget, 1)) ? 1 : 0;
  });
}

hc_status hc_hypergraph_create(int n, int r, const int* vertices, size_t edge_count, hc_hypergraph** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    require(vertices != nullptr || edge_count == 0, "vertices must not be null");
    if (r < 2) throw Error(ErrorCode::RankTooSmall, "rank must be at least 2");
    std::vector<Edge> edges(edge_count);
    for (size_t e = 0; e < edge_count; ++e) edges[e].assign(vertices + e * r, vertices + (e + 1) * r);
    *out = new hc_hypergraph{Hypergraph::make(n, r, std::move(edges))};
  });
}

hc_status hc_hypergraph_parse(const char* text, hc_hypergraph** out) {
  return guarded([&] {
    require(text && out, "arguments must not be null");
    std::istringstream in(text);
    *out = new hc_hypergraph{read_hypergraph(in)};
  });
}

hc_status hc_hypergraph_read_file(const char* path, hc_hypergraph** out) {
  return guarded([&] {
    require(path && out, "arguments must not be null");
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, std::string("cannot open '") + path + "'");
    *out = new hc_hypergraph{read_hypergraph(in)};
  });
}

hc_status hc_hypergraph_write_file(const hc_hypergraph* h, const char* path) {
  return guarded([&] {
    require(h && path, "arguments must not be null");
    std::ofstream file(path);
    if (!file) throw Error(ErrorCode::IoError, std::string("cannot write '") + path + "'");
    write_hypergraph(file, h->value);
    file.flush();
    if (!file) throw Error(ErrorCode::IoError, std::string("write failed for '") + path + "'");
  });
}

hc_status hc_hypergraph_to_text(const hc_hypergraph* h, char** out) {
  return guarded([&] {
    require(h && out, "arguments must not be null");
    *out = copy_string(to_text(h->value));
  });
}

hc_status hc_hypergraph_to_json(const hc_hypergraph* h, char** out) {
  return guarded([&] {
    require(h && out, "arguments must not be null");
    *out = copy_string(to_json(h->value).dump());
  });
}

void hc_hypergraph_free(hc_hypergraph* h) { delete h; }

int hc_hypergraph_vertex_count(const hc_hypergraph* h) { return h ? h->value.vertex_count() : 0; }

int hc_hypergraph_rank(const hc_hypergraph* h) { return h ? h->value.rank() : 0; }

size_t hc_hypergraph_edge_count(const hc_hypergraph* h) { return h ? h->value.edges().size() : 0; }

hc_status hc_hypergraph_degree_sequence(const hc_hypergraph* h, hc_sequence** out) {
  return guarded([&] {
    require(h && out, "arguments must not be null");
    *out = new hc_sequence{degree_sequence_of(h->value)};
  });
}

hc_status hc_is_connected(const hc_hypergraph* h, int* out) {
  return guarded([&] {
    require(h && out, "arguments must not be null");
    *out = is_connected(h->value) ? 1 : 0;
  });
}

hc_status hc_edge_connectivity(const hc_hypergraph* h, int* out) {
  return guarded([&] {
    require(h && out, "arguments must not be null");
    *out = edge_connectivity(h->value);
  });
}

hc_status hc_edge_connectivity_bruteforce(const hc_hypergraph* h, int* out) {
  return guarded([&] {
    require(h && out, "arguments must not be null");
    *out = edge_connectivity_bruteforce(h->value);
  });
}

hc_status hc_is_super_edge_connected(const hc_hypergraph* h, int* out) {
  return guarded([&] {
    require(h && out, "arguments must not be null");
    *out = is_super_edge_connected(h->value) ? 1 : 0;
  });
}

hc_status hc_check(const hc_sequence* d, const char* theorem, int k, hc_mode mode, hc_verdict** out) {
  return guarded([&] {
    require(d && theorem && out, "arguments must not be null");
    auto* v = new hc_verdict{dispatch_check(d->value, theorem, k, to_mode(mode)), {}};
    if (v->value.violation) v->label = std::string(condition_label(v->value.violation->condition));
    *out = v;
  });
}

void hc_verdict_free(hc_verdict* v) { delete v; }

int hc_verdict_satisfied(const hc_verdict* v) { return v && v->value.satisfied() ? 1 : 0; }

const char* hc_verdict_condition(const hc_verdict* v) {
  if (!v || v->value.satisfied()) return nullptr;
  return v->label.c_str();
}

int hc_verdict_j(const hc_verdict* v) {
  if (!v || v->value.satisfied()) return 0;
  return v->value.violation->j;
}

hc_status hc_verdict_to_json(const hc_verdict* v, char** out) {
  return guarded([&] {
    require(v && out, "arguments must not be null");
    *out = copy_string(to_json(v->value).dump());
  });
}

hc_status hc_verdict_to_text(const hc_verdict* v, char** out) {
  return guarded([&] {
    require(v && out, "arguments must not be null");
    *out = copy_string(verdict_summary(v->value) + "\n" + verdict_details(v->value));
  });
}

hc_status hc_oracle(const hc_sequence* d, hc_property property, int k, uint64_t budget, int workers, int* holds,
                    hc_hypergraph** counterexample) {
  return guarded([&] {
    require(d && holds, "arguments must not be null");
    require(workers >= 1, "workers must be at least 1");
    const SearchOptions options = search_options(budget, workers);
    ForcibleResult result;
    switch (property) {
      case HC_PROPERTY_K_EDGE:
        require(k >= 1, "k must be at least 1");
        result = forcibly_k_edge_connected(d->value, k, options);
        break;
      case HC_PROPERTY_SUPER: result = forcibly_super(d->value, options); break;
      case HC_PROPERTY_MAXIMALLY: result = forcibly_maximally(d->value, options); break;
      default: throw Error(ErrorCode::InvalidArgument, "unknown property");
    }
    *holds = result.holds ? 1 : 0;
    if (counterexample) {
      *counterexample = result.counterexample ? new hc_hypergraph{std::move(*result.counterexample)} : nullptr;
    }
  });
}

hc_status hc_build_extremal(int n, int j, int r, int c, const int* t, const int* s, hc_hypergraph** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = new hc_hypergraph{build_extremal({n, j, r, make_profile(c, j, n, r, t, s)})};
  });
}

hc_status hc_strongest_witness(const hc_sequence* d, int k, const hc_verdict* v, hc_sequence** dprime,
                               hc_hypergraph** h) {
  return guarded([&] {
    require(d && v && dprime && h, "arguments must not be null");
    auto w = strongest_witness(d->value, k, v->value);
    *dprime = new hc_sequence{std::move(w.dprime)};
    *h = new hc_hypergraph{std::move(w.h)};
  });
}

hc_status hc_compute_g(int k, int r, int* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = compute_g(k, r);
  });
}

hc_status hc_compute_jstar(int n, int r, int c, int* found, int* out) {
  return guarded([&] {
    require(found && out, "arguments must not be null");
    const auto j = compute_jstar(n, r, c);
    *found = j ? 1 : 0;
    *out = j.value_or(0);
  });
}

hc_status hc_compute_j0(int n, int z, int r, int* found, int* out) {
  return guarded([&] {
    require(found && out, "arguments must not be null");
    const auto j = compute_j0(n, z, r);
    *found = j ? 1 : 0;
    *out = j.value_or(0);
  });
}

hc_status hc_delta_gap(int n, int j, int r, char** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = copy_string(delta_gap(n, j, r).str());
  });
}

hc_status hc_profiles_enumerate(int c, int r, int j, int n, hc_profile_list** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = new hc_profile_list{enumerate_profiles(c, r, j, n)};
  });
}

void hc_profile_list_free(hc_profile_list* list) { delete list; }

size_t hc_profile_list_size(const hc_profile_list* list) { return list ? list->profiles.size() : 0; }

hc_status hc_profile_list_get(const hc_profile_list* list, size_t i, int* t, int* s) {
  return guarded([&] {
    require(list != nullptr, "list must not be null");
    if (i >= list->profiles.size()) throw Error(ErrorCode::InvalidArgument, "profile index out of range");
    const auto& p = list->profiles[i];
    require(p.c == 0 || (t && s), "output arrays must not be null");
    std::copy(p.t.begin(), p.t.end(), t);
    std::copy(p.s.begin(), p.s.end(), s);
  });
}

hc_status hc_profile_list_to_json(const hc_profile_list* list, char** out) {
  return guarded([&] {
    require(list && out, "arguments must not be null");
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : list->profiles) arr.push_back({{"t", p.t}, {"s", p.s}});
    *out = copy_string(arr.dump());
  });
}

}  // extern "C"

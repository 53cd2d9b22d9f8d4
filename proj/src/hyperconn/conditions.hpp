#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hyperconn/combinatorics.hpp"
#include "hyperconn/degseq.hpp"

namespace hyperconn {

/// sound extends some j-ranges so that every Satisfied verdict is backed by
/// an actual forcible property; paper_literal evaluates the statements as
/// written.
enum class Mode { Sound, PaperLiteral };

enum class ConditionId {
  GenericA, GenericB, GenericC,
  T21_1, T21_2,
  T22_1, T22_2, T22_3,
  T23_1, T23_2, T23_3, T23_4,
  C25_1, C25_2, C25_3,
  C28_2, C28_3, C28_4,
  C29_1, C29_2,
  T31_1, T31_2,
  T32_1, T32_2, T32_3,
  C33_1,
  T42_1, T42_2, T42_3, T42_4, T42_5, T42_6_1, T42_6_2, T42_6_3,
  C43_1, C43_2, C43_3,
  C44_1, C44_2, C44_3, C44_4, C44_5,
};

/// Label such as "T23-4" or "T42-6.2"; the generic families are "A", "B", "C".
std::string_view condition_label(ConditionId id) noexcept;
std::optional<ConditionId> condition_from_label(std::string_view label) noexcept;

/// The (x, y, z) parameter point of a Theorem 4.2 style clause. q and R are
/// the residues of x and y normalised into [1, k-1]; fields a clause does not
/// use are left empty.
struct Theorem42Params {
  int x = 0;
  std::optional<int> y;
  std::optional<int> z;
  std::optional<int> q;
  std::optional<int> R;

  friend bool operator==(const Theorem42Params&, const Theorem42Params&) = default;
};

/// ((v - 1) mod (k - 1)) + 1, the representative of v in [1, k-1].
int residue_in_range(int v, int k);

/// One evaluated clause d_index <= bound (antecedent) or d_index >= bound
/// (consequent), 1-based index.
struct ClauseBound {
  int index = 0;
  BigInt bound;

  friend bool operator==(const ClauseBound&, const ClauseBound&) = default;
};

struct Violation {
  ConditionId condition;
  int j = 0;
  std::optional<CrossingProfile> profile;
  std::optional<Theorem42Params> params;
  /// Antecedent clauses that held (d_i <= b). Clauses on indices <= 0 are
  /// vacuous and not listed.
  std::vector<ClauseBound> antecedent;
  /// Consequent clauses that failed (d_i < b). Clauses on indices <= 0 are
  /// false by convention and not listed.
  std::vector<ClauseBound> failed_consequent;
};

struct Verdict {
  std::optional<Violation> violation;

  bool satisfied() const noexcept { return !violation.has_value(); }

  static Verdict ok() { return {}; }
  static Verdict violated(Violation v) { return Verdict{std::move(v)}; }
};

/// Generic partition-condition engine for c crossing edges.
///
/// Scans j = j_start .. n/2 and, for each j, every profile of
/// enumerate_profiles(c, r, j, n):
///   family A (C(j-1,r-1) + c <= C(n-j-1,r-1)):
///     all a in [0,c]: d_{j - T(a+1)} <= C(j-1,r-1) + a
///     implies some a in [0,c]: d_{n - S(a+1)} >= C(n-j-1,r-1) + a + 1
///   family B (otherwise, gap D = C(n-j-1,r-1) - C(j-1,r-1)):
///     same antecedent, consequent indices n - T(D+a+1) - S(a+1)
///   family C (even n >= even_n_start, j = n/2):
///     all a in [0,c-1]: d_{n - T(a+1) - S(a+1)} <= C(n/2-1,r-1) + a
///     implies d_n >= C(n/2-1,r-1) + c + 1
/// where T, S are the suffix sums of the profile. For c = 0 family A runs up
/// to j = floor(n/2) and B, C are vacuous. The first violation in
/// (j, profile) order is reported.
Verdict check_generic(const DegreeSequence& d, int c, int j_start, int even_n_start);

Verdict check_theorem21(const DegreeSequence& d, int k);
Verdict check_theorem22(const DegreeSequence& d);
Verdict check_theorem23(const DegreeSequence& d, int k, Mode mode = Mode::Sound);
/// The k = 2 corollary of the general condition, in its stated form.
Verdict check_corollary25(const DegreeSequence& d);
Verdict check_maximally(const DegreeSequence& d);
Verdict check_corollary29(const DegreeSequence& d, int k);

/// Requires r >= 4 (RankTooSmall) and d_1 = 3 (DeltaMismatch).
Verdict check_super_t31(const DegreeSequence& d);
Verdict check_super_t32(const DegreeSequence& d, Mode mode = Mode::Sound);
Verdict check_super_cor33(const DegreeSequence& d);

Verdict check_theorem42(const DegreeSequence& d, int k);
Verdict check_corollary43(const DegreeSequence& d);
Verdict check_corollary44(const DegreeSequence& d);

/// Re-evaluates one partition clause at a fixed (j, profile); the family is
/// chosen from j exactly as check_generic does. Returns the violation when
/// the clause fails on d.
std::optional<Violation> evaluate_partition(const DegreeSequence& d, int j, const CrossingProfile& profile);

/// True when every recorded bound re-evaluates as recorded against d.
bool witness_consistent(const DegreeSequence& d, const Violation& v);

}  // namespace hyperconn

#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace hyperconn {

/// A validated, non-decreasing degree sequence d_1 <= ... <= d_n together
/// with the uniformity rank r it is read against.
///
/// Condition formulas index the sequence from 1 (d_1 is the minimum); use
/// at() for that convention and values() for the raw 0-based storage.
class DegreeSequence {
 public:
  /// Sorts the input and validates it. Throws Error with RankTooSmall,
  /// EmptySequence or ValueOutOfRange (a value below 0 or above C(n-1, r-1)).
  static DegreeSequence make(std::span<const std::int64_t> values, int r);
  static DegreeSequence make(const std::vector<int>& values, int r);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  int rank() const noexcept { return r_; }
  const std::vector<int>& values() const noexcept { return values_; }

  /// d_i for 1 <= i <= n.
  int at(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }

  int min_degree() const noexcept { return values_.front(); }
  int max_degree() const noexcept { return values_.back(); }
  std::int64_t degree_sum() const noexcept;
  /// Sum / r when r divides the degree sum.
  std::optional<std::int64_t> edge_count() const noexcept;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  DegreeSequence(std::vector<int> values, int r) : values_(std::move(values)), r_(r) {}

  std::vector<int> values_;
  int r_ = 2;
};

/// d' >= d componentwise. Throws LengthMismatch on unequal lengths.
bool majorizes(const DegreeSequence& dprime, const DegreeSequence& d);

/// Parses one line of the sequence text format (comma- or whitespace-
/// separated decimal integers). Blank and '#' comment lines give nullopt.
/// Throws ParseError on malformed tokens.
std::optional<std::vector<std::int64_t>> parse_sequence_line(std::string_view line);

/// Reads every sequence in a sequence file.
std::vector<DegreeSequence> read_sequences(std::istream& in, int r);

}  // namespace hyperconn

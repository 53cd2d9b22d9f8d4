#include "hyperconn/degseq.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <string>

#include "hyperconn/combinatorics.hpp"
#include "hyperconn/error.hpp"

namespace hyperconn {

DegreeSequence DegreeSequence::make(std::span<const std::int64_t> values, int r) {
  if (r < 2) throw Error(ErrorCode::RankTooSmall, "rank must be at least 2");
  if (values.empty()) throw Error(ErrorCode::EmptySequence, "degree sequence is empty");
  const int n = static_cast<int>(values.size());
  const BigInt cap = binom(n - 1, r - 1);
  std::vector<int> stored;
  stored.reserve(values.size());
  for (const std::int64_t v : values) {
    if (v < 0 || BigInt(v) > cap || v > std::numeric_limits<int>::max()) {
      throw Error(ErrorCode::ValueOutOfRange,
                  "degree " + std::to_string(v) + " outside [0, C(" + std::to_string(n - 1) + "," +
                      std::to_string(r - 1) + ")]");
    }
    stored.push_back(static_cast<int>(v));
  }
  std::sort(stored.begin(), stored.end());
  return DegreeSequence(std::move(stored), r);
}

DegreeSequence DegreeSequence::make(const std::vector<int>& values, int r) {
  std::vector<std::int64_t> wide(values.begin(), values.end());
  return make(std::span<const std::int64_t>(wide), r);
}

std::int64_t DegreeSequence::degree_sum() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

std::optional<std::int64_t> DegreeSequence::edge_count() const noexcept {
  const auto sum = degree_sum();
  if (sum % r_ != 0) return std::nullopt;
  return sum / r_;
}

bool majorizes(const DegreeSequence& dprime, const DegreeSequence& d) {
  if (dprime.size() != d.size()) throw Error(ErrorCode::LengthMismatch, "sequences differ in length");
  for (int i = 1; i <= d.size(); ++i) {
    if (dprime.at(i) < d.at(i)) return false;
  }
  return true;
}

std::optional<std::vector<std::int64_t>> parse_sequence_line(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string_view::npos || line[first] == '#') return std::nullopt;
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == ',' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != ',' && line[end] != '\r') ++end;
    std::int64_t value = 0;
    const auto token = line.substr(pos, end - pos);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  if (out.empty()) return std::nullopt;
  return out;
}

std::vector<DegreeSequence> read_sequences(std::istream& in, int r) {
  std::vector<DegreeSequence> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto values = parse_sequence_line(line)) {
      out.push_back(DegreeSequence::make(std::span<const std::int64_t>(*values), r));
    }
  }
  return out;
}

}  // namespace hyperconn

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "orgsim/rng.hpp"

namespace orgsim {

// Interdependence patterns between decisions. The six block-structured
// patterns are deterministic; the two random ones add extra couplings on
// top of the small diagonal blocks and are re-drawn per run.
enum class PatternId {
  kSmallDiag,
  kBigDiag,
  kSmallReciprocal,
  kBigReciprocal,
  kSmallRing,
  kBigRing,
  kRandomK4,
  kRandomK6,
  kCustom,
};

const std::vector<PatternId>& all_builtin_patterns();
std::string pattern_name(PatternId id);
PatternId pattern_from_name(const std::string& name);  // throws ConfigError

// Number of off-diagonal influences per row for each built-in pattern.
int pattern_k(PatternId id);

// N x N boolean interdependence structure. cell(i, j) == true means
// decision j influences contribution i. The diagonal is always true.
struct InfluenceMatrix {
  int n = 0;
  PatternId pattern = PatternId::kCustom;
  std::vector<std::uint8_t> cells;  // row-major, n*n

  bool cell(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j] != 0; }
  void set(int i, int j, bool v) { cells[static_cast<std::size_t>(i) * n + j] = v ? 1 : 0; }

  // Count of true cells in row i excluding the diagonal.
  int row_k(int i) const;

  // Ascending column indices of the true cells in row i (includes i).
  std::vector<int> row_positions(int i) const;

  // Throws ConfigError naming the offending row if the matrix is not
  // square-consistent or the diagonal is not all true.
  void validate() const;
};

// Builds one of the eight built-in 15-decision patterns. The rng is only
// consumed for the random patterns (two/four extra cells per row drawn
// without replacement among columns outside the own block).
InfluenceMatrix build_pattern(PatternId id, Rng& rng);

// Plain-text exchange format: first line N, then N lines of N '0'/'1'
// characters.
InfluenceMatrix read_matrix_text(std::istream& in);
InfluenceMatrix load_matrix_file(const std::string& path);
std::string matrix_to_text(const InfluenceMatrix& m);

}  // namespace orgsim

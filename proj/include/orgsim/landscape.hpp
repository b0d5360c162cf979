#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orgsim/influence.hpp"
#include "orgsim/rng.hpp"

namespace orgsim {

// One binary decision per position, values 0/1.
using DecisionVector = std::vector<std::uint8_t>;

struct LandscapeOptions {
  bool compute_global_max = true;
  int enumeration_cap = 20;  // max N for exhaustive search
};

// Performance landscape over N binary decisions. Each decision n has a
// payoff table with one uniform(0,1) entry per combination of the decisions
// that influence contribution n.
struct Landscape {
  InfluenceMatrix matrix;
  std::vector<std::vector<double>> tables;     // [n][packed bits]
  std::vector<std::vector<int>> positions;     // influencing columns per row, ascending
  std::vector<std::vector<int>> column_rows;   // rows influenced by each column
  DecisionVector global_argmax;
  double global_max = 0.0;
  bool has_global_max = false;
  std::uint64_t seed = 0;

  int n() const { return matrix.n; }
};

// Table index for decision row: bits of d at the row's influencing
// positions, packed in ascending position order (lowest position = bit 0).
std::size_t table_index(const Landscape& land, const DecisionVector& d, int row);

// Draws one payoff table per decision (row order, index order) and caches
// the exhaustive global optimum unless disabled. Identical seed and matrix
// give bit-identical tables.
Landscape generate_landscape(const InfluenceMatrix& matrix, Rng& rng,
                             const LandscapeOptions& opts = {});
Landscape generate_landscape(const InfluenceMatrix& matrix, std::uint64_t seed,
                             const LandscapeOptions& opts = {});

// Payoff of decision `row` under d.
double contribution(const Landscape& land, const DecisionVector& d, int row);

// All N contributions of d.
std::vector<double> contributions(const Landscape& land, const DecisionVector& d);

// Mean contribution over `subset` (distinct indices, non-empty); summed in
// ascending subset order so results are reproducible bit-for-bit.
double performance(const Landscape& land, const DecisionVector& d,
                   const std::vector<int>& subset);

// Full-problem performance, mean over all N contributions.
double performance(const Landscape& land, const DecisionVector& d);

// Exhaustive argmax of the full-problem performance over all 2^N decision
// vectors. Ties are broken by the lowest packed value (decision 1 = bit 0).
std::pair<DecisionVector, double> global_maximum(const InfluenceMatrix& matrix,
                                                 const std::vector<std::vector<double>>& tables,
                                                 int enumeration_cap = 20);

}  // namespace orgsim

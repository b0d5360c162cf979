#include "orgsim/landscape.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "orgsim/errors.hpp"

namespace orgsim {

std::size_t table_index(const Landscape& land, const DecisionVector& d, int row) {
  const auto& pos = land.positions[row];
  std::size_t idx = 0;
  for (std::size_t s = 0; s < pos.size(); ++s)
    idx |= static_cast<std::size_t>(d[pos[s]] & 1) << s;
  return idx;
}

Landscape generate_landscape(const InfluenceMatrix& matrix, Rng& rng,
                             const LandscapeOptions& opts) {
  matrix.validate();
  Landscape land;
  land.matrix = matrix;
  const int n = matrix.n;
  land.positions.resize(n);
  land.tables.resize(n);
  land.column_rows.resize(n);
  for (int i = 0; i < n; ++i) {
    land.positions[i] = matrix.row_positions(i);
    if (land.positions[i].size() > 24)
      throw ConfigError("row " + std::to_string(i + 1) +
                        " has too many influences for a dense payoff table");
    land.tables[i].resize(std::size_t{1} << land.positions[i].size());
    for (double& v : land.tables[i]) v = rng.uniform01();
    for (int j : land.positions[i]) land.column_rows[j].push_back(i);
  }
  if (opts.compute_global_max) {
    auto [argmax, value] = global_maximum(matrix, land.tables, opts.enumeration_cap);
    land.global_argmax = std::move(argmax);
    land.global_max = value;
    land.has_global_max = true;
  }
  return land;
}

Landscape generate_landscape(const InfluenceMatrix& matrix, std::uint64_t seed,
                             const LandscapeOptions& opts) {
  Rng rng(seed);
  Landscape land = generate_landscape(matrix, rng, opts);
  land.seed = seed;
  return land;
}

double contribution(const Landscape& land, const DecisionVector& d, int row) {
  return land.tables[row][table_index(land, d, row)];
}

std::vector<double> contributions(const Landscape& land, const DecisionVector& d) {
  std::vector<double> c(land.n());
  for (int i = 0; i < land.n(); ++i) c[i] = contribution(land, d, i);
  return c;
}

double performance(const Landscape& land, const DecisionVector& d,
                   const std::vector<int>& subset) {
  if (subset.empty())
    throw std::invalid_argument("performance: subset must be non-empty");
  double sum = 0.0;
  for (int nidx : subset) sum += contribution(land, d, nidx);
  return sum / static_cast<double>(subset.size());
}

double performance(const Landscape& land, const DecisionVector& d) {
  double sum = 0.0;
  for (int i = 0; i < land.n(); ++i) sum += contribution(land, d, i);
  return sum / static_cast<double>(land.n());
}

std::pair<DecisionVector, double> global_maximum(
    const InfluenceMatrix& matrix, const std::vector<std::vector<double>>& tables,
    int enumeration_cap) {
  const int n = matrix.n;
  if (n > enumeration_cap)
    throw ConfigError("global_maximum: N=" + std::to_string(n) +
                      " exceeds the enumeration cap of " +
                      std::to_string(enumeration_cap) +
                      "; disable normalization to skip the exhaustive search");

  // Precompute, per column j, the (row, index-bit) pairs that a flip of
  // decision j touches. Table indices are then maintained exactly with XOR
  // while walking the 2^N space in Gray-code order; only the per-vector sum
  // is recomputed fresh, in ascending row order, so the summation matches a
  // direct evaluation bit-for-bit.
  std::vector<std::vector<std::pair<int, std::uint32_t>>> touch(n);
  for (int i = 0; i < n; ++i) {
    int slot = 0;
    for (int j = 0; j < n; ++j) {
      if (!matrix.cell(i, j)) continue;
      touch[j].emplace_back(i, std::uint32_t{1} << slot);
      ++slot;
    }
  }

  std::vector<std::uint32_t> idx(n, 0);
  const std::uint64_t total = std::uint64_t{1} << n;

  auto fresh_sum = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += tables[i][idx[i]];
    return s;
  };

  double best_sum = fresh_sum();
  std::uint32_t best_v = 0;
  std::uint32_t v = 0;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int j = std::countr_zero(step);
    v ^= std::uint32_t{1} << j;
    for (const auto& [row, bit] : touch[j]) idx[row] ^= bit;
    const double s = fresh_sum();
    if (s > best_sum || (s == best_sum && v < best_v)) {
      best_sum = s;
      best_v = v;
    }
  }

  DecisionVector argmax(n, 0);
  for (int j = 0; j < n; ++j) argmax[j] = (best_v >> j) & 1u;
  return {argmax, best_sum / static_cast<double>(n)};
}

}  // namespace orgsim

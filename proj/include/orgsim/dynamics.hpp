#pragma once

#include <optional>
#include <vector>

#include "orgsim/organization.hpp"

namespace orgsim {

// Result of one agent's search step: either the incumbent was kept
// (flipped empty) or exactly one owned decision was flipped.
struct SearchOutcome {
  int agent_id = 0;
  std::optional<int> flipped;
  std::vector<std::uint8_t> new_bits;  // one per portfolio slot, same order
};

// Uniformly flips one of the agent's own decisions in d_prev; the returned
// candidate is always at Hamming distance 1 from d_prev.
DecisionVector propose_candidate(const Agent& agent, const DecisionVector& d_prev,
                                 Rng& rng);

// Draws one candidate and keeps it only if it improves the agent's utility
// with everyone else's decisions frozen at the previous period (hidden
// action). Ties keep the incumbent.
SearchOutcome hill_climb_step(const Agent& agent, const DecisionVector& d_prev,
                              const Landscape& land, const IncentiveScheme& scheme,
                              Rng& rng);

// Overlays every agent's chosen bits onto d_prev. All choices were evaluated
// against d_prev, so the combination applies them simultaneously.
DecisionVector assemble_solution(const std::vector<SearchOutcome>& outcomes,
                                 const std::vector<Agent>& agents,
                                 const DecisionVector& d_prev);

inline double belief_mean(std::uint32_t alpha, std::uint32_t beta) {
  return static_cast<double>(alpha) / (static_cast<double>(alpha) + beta);
}

// After a flip of decision i, credits an interdependence observation (i, j)
// for every other owned decision j whose contribution moved between the two
// implemented solutions, and a non-observation otherwise. Contribution
// equality is bit-exact: contributions are table entries, so they differ
// iff the looked-up entry differs. No flip, no update.
void update_beliefs(Agent& agent, const SearchOutcome& outcome,
                    const std::vector<double>& contribs_t,
                    const std::vector<double>& contribs_prev);

}  // namespace orgsim

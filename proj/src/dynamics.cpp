#include "orgsim/dynamics.hpp"

#include <stdexcept>
#include <string>

namespace orgsim {

DecisionVector propose_candidate(const Agent& agent, const DecisionVector& d_prev,
                                 Rng& rng) {
  if (agent.portfolio.empty())
    throw std::logic_error("propose_candidate: empty portfolio");
  const int pick = static_cast<int>(rng.uniform_int(agent.portfolio.size()));
  DecisionVector candidate = d_prev;
  const int flip = agent.portfolio[pick];
  candidate[flip] ^= 1;
  return candidate;
}

SearchOutcome hill_climb_step(const Agent& agent, const DecisionVector& d_prev,
                              const Landscape& land, const IncentiveScheme& scheme,
                              Rng& rng) {
  const DecisionVector candidate = propose_candidate(agent, d_prev, rng);
  const std::vector<int> rest = residual(agent.portfolio, land.n());

  const double inc_utility = scheme.a * performance(land, d_prev, agent.portfolio) +
                             (1.0 - scheme.a) * performance(land, d_prev, rest);
  const double cand_utility = scheme.a * performance(land, candidate, agent.portfolio) +
                              (1.0 - scheme.a) * performance(land, candidate, rest);

  SearchOutcome out;
  out.agent_id = agent.id;
  out.new_bits.resize(agent.portfolio.size());
  const bool adopt = cand_utility > inc_utility;
  const DecisionVector& chosen = adopt ? candidate : d_prev;
  for (std::size_t s = 0; s < agent.portfolio.size(); ++s) {
    const int d = agent.portfolio[s];
    out.new_bits[s] = chosen[d];
    if (adopt && chosen[d] != d_prev[d]) out.flipped = d;
  }
  return out;
}

DecisionVector assemble_solution(const std::vector<SearchOutcome>& outcomes,
                                 const std::vector<Agent>& agents,
                                 const DecisionVector& d_prev) {
  if (outcomes.size() != agents.size())
    throw std::logic_error("assemble_solution: one outcome per agent required");
  DecisionVector d = d_prev;
  std::vector<std::uint8_t> written(d_prev.size(), 0);
  for (const SearchOutcome& out : outcomes) {
    const Agent& agent = agents[out.agent_id];
    if (out.new_bits.size() != agent.portfolio.size())
      throw std::logic_error("assemble_solution: outcome does not match portfolio");
    for (std::size_t s = 0; s < agent.portfolio.size(); ++s) {
      const int pos = agent.portfolio[s];
      if (written[pos])
        throw std::logic_error("assemble_solution: decision " +
                               std::to_string(pos + 1) + " written twice");
      written[pos] = 1;
      d[pos] = out.new_bits[s];
    }
  }
  return d;
}

void update_beliefs(Agent& agent, const SearchOutcome& outcome,
                    const std::vector<double>& contribs_t,
                    const std::vector<double>& contribs_prev) {
  if (!outcome.flipped) return;
  const int i = *outcome.flipped;
  if (!agent.owns(i))
    throw std::logic_error("update_beliefs: flipped decision not in portfolio");
  for (int j : agent.portfolio) {
    if (j == i) continue;
    if (contribs_t[j] != contribs_prev[j]) {
      agent.beliefs.bump_alpha(i, j);
    } else {
      agent.beliefs.bump_beta(i, j);
    }
  }
}

}  // namespace orgsim

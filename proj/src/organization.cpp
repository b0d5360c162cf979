#include "orgsim/organization.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "orgsim/errors.hpp"

namespace orgsim {

std::string strategy_name(Strategy s) {
  return s == Strategy::kPerformanceBased ? "performance_based"
                                          : "interdependence_based";
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "performance_based") return Strategy::kPerformanceBased;
  if (name == "interdependence_based") return Strategy::kInterdependenceBased;
  throw ConfigError("unknown strategy name: " + name);
}

bool Agent::owns(int decision) const {
  return std::binary_search(portfolio.begin(), portfolio.end(), decision);
}

void OrgState::check_partition(int n_decisions) const {
  std::vector<int> owner(n_decisions, -1);
  for (const Agent& ag : agents) {
    if (ag.portfolio.empty())
      throw std::logic_error("agent " + std::to_string(ag.id + 1) +
                             " has an empty portfolio");
    if (static_cast<int>(ag.portfolio.size()) > capacity)
      throw std::logic_error("agent " + std::to_string(ag.id + 1) +
                             " exceeds capacity");
    for (int d : ag.portfolio) {
      if (d < 0 || d >= n_decisions)
        throw std::logic_error("portfolio decision out of range");
      if (owner[d] != -1)
        throw std::logic_error("decision " + std::to_string(d + 1) +
                               " owned by two agents");
      owner[d] = ag.id;
    }
  }
  for (int d = 0; d < n_decisions; ++d)
    if (owner[d] == -1)
      throw std::logic_error("decision " + std::to_string(d + 1) + " unowned");
}

std::vector<std::vector<int>> initial_allocation(int n_decisions, int m_agents) {
  if (m_agents <= 0 || n_decisions <= 0)
    throw ConfigError("initial_allocation: N and M must be positive");
  if (n_decisions % m_agents != 0)
    throw ConfigError("initial_allocation: M=" + std::to_string(m_agents) +
                      " does not divide N=" + std::to_string(n_decisions));
  const int per_agent = n_decisions / m_agents;
  std::vector<std::vector<int>> portfolios(m_agents);
  for (int k = 0; k < m_agents; ++k) {
    portfolios[k].resize(per_agent);
    for (int s = 0; s < per_agent; ++s) portfolios[k][s] = k * per_agent + s;
  }
  return portfolios;
}

std::vector<int> residual(const std::vector<int>& portfolio, int n_decisions) {
  std::vector<std::uint8_t> owned(n_decisions, 0);
  for (int d : portfolio) owned[d] = 1;
  std::vector<int> rest;
  rest.reserve(n_decisions - portfolio.size());
  for (int d = 0; d < n_decisions; ++d)
    if (!owned[d]) rest.push_back(d);
  return rest;
}

double utility(const Agent& agent, const DecisionVector& d,
               const IncentiveScheme& scheme, const Landscape& land) {
  const double own = performance(land, d, agent.portfolio);
  const double rest = performance(land, d, residual(agent.portfolio, land.n()));
  return scheme.a * own + (1.0 - scheme.a) * rest;
}

}  // namespace orgsim

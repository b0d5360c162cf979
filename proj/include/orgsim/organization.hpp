#pragma once

#include <cstdint>
#include <vector>

#include "orgsim/landscape.hpp"

namespace orgsim {

// Basis an agent uses for offers and signals during task reallocation.
enum class Strategy { kPerformanceBased, kInterdependenceBased };

std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);  // throws ConfigError

// Per-agent observation counts over ordered decision pairs (i, j): alpha
// counts periods where flipping i coincided with a change in contribution j,
// beta counts periods where it did not. Both start at one, giving an initial
// interdependence belief of 0.5, and never decrease.
struct BeliefStore {
  int n = 0;
  std::vector<std::uint32_t> alpha;  // n*n, diagonal unused
  std::vector<std::uint32_t> beta;

  explicit BeliefStore(int n_decisions = 0) { reset(n_decisions); }
  void reset(int n_decisions) {
    n = n_decisions;
    alpha.assign(static_cast<std::size_t>(n) * n, 1);
    beta.assign(static_cast<std::size_t>(n) * n, 1);
  }
  std::uint32_t a(int i, int j) const { return alpha[static_cast<std::size_t>(i) * n + j]; }
  std::uint32_t b(int i, int j) const { return beta[static_cast<std::size_t>(i) * n + j]; }
  void bump_alpha(int i, int j) { ++alpha[static_cast<std::size_t>(i) * n + j]; }
  void bump_beta(int i, int j) { ++beta[static_cast<std::size_t>(i) * n + j]; }

  // Mean of the Beta(alpha, beta) belief that flipping i moves contribution j.
  double mean(int i, int j) const {
    const double av = a(i, j);
    return av / (av + b(i, j));
  }
};

struct IncentiveScheme {
  double a = 0.5;  // weight on own-portfolio performance, in [0, 1]
};

struct Agent {
  int id = 0;                  // 0-based
  std::vector<int> portfolio;  // owned decision indices, kept ascending
  BeliefStore beliefs;
  Strategy strategy = Strategy::kPerformanceBased;

  bool owns(int decision) const;
};

// Complete simulation state at one period.
struct OrgState {
  int period = 0;
  DecisionVector current;               // d_t
  DecisionVector previous;              // d_{t-1}
  std::vector<Agent> agents;
  IncentiveScheme scheme;
  int capacity = 0;                     // Q, max portfolio size
  std::vector<double> prev_contributions;  // contributions of d_{t-1}
  std::vector<double> ledger;           // cumulative compensation per agent

  // Partition and capacity invariants; throws std::logic_error on violation.
  void check_partition(int n_decisions) const;
};

// Sequential, symmetric initial split: agent k gets decisions
// {k*(n/m), ..., (k+1)*(n/m) - 1}. Requires m | n and n/m within capacity.
std::vector<std::vector<int>> initial_allocation(int n_decisions, int m_agents);

// Ascending complement of `portfolio` in {0, ..., n_decisions-1}.
std::vector<int> residual(const std::vector<int>& portfolio, int n_decisions);

// Linear incentive: a * own performance + (1-a) * residual performance.
double utility(const Agent& agent, const DecisionVector& d,
               const IncentiveScheme& scheme, const Landscape& land);

}  // namespace orgsim

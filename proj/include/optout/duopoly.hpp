#ifndef OPTOUT_DUOPOLY_HPP
#define OPTOUT_DUOPOLY_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "optout/decision.hpp"
#include "optout/population.hpp"

namespace optout {

struct ProviderParams {
  double revenue_rate = 1.0;
  double gamma = 0.0;
  double benefit = 0.0;
};

struct DuopolyParams {
  ProviderParams provider1;
  ProviderParams provider2;
  ValuationDistribution dist;

  void validate() const;
};

/// Discretized strategy space: opt-out cost levels, optionally followed by a
/// trailing "no opt-out" strategy.
struct CostGrid {
  std::vector<double> values;       // strictly increasing, all >= 0
  bool include_no_optout = false;

  std::size_t size() const { return values.size() + (include_no_optout ? 1 : 0); }
  // absent = the no-opt-out strategy
  std::optional<double> cost_at(std::size_t i) const {
    return i < values.size() ? std::optional<double>(values[i]) : std::nullopt;
  }
  void validate() const;

  static CostGrid regular(double lo, double hi, double step, bool include_no_optout = false);
};

using Cell = std::pair<std::size_t, std::size_t>;

struct PayoffMatrix {
  CostGrid grid;
  std::size_t n = 0;
  std::vector<double> u1, u2;  // row-major, (i, j) = (provider1 move, provider2 move)

  double payoff1(std::size_t i, std::size_t j) const { return u1[i * n + j]; }
  double payoff2(std::size_t i, std::size_t j) const { return u2[i * n + j]; }

  static PayoffMatrix from_payoffs(std::vector<double> u1, std::vector<double> u2, std::size_t n);
};

struct NashResult {
  std::vector<Cell> pure_cells;   // lexicographic order
  std::vector<double> regrets;    // parallel to pure_cells, all ~0
};

struct DynamicsResult {
  enum class Outcome { Converged, Cycle, MaxIter };
  Outcome outcome = Outcome::MaxIter;
  std::vector<Cell> path;         // starts at the start cell
  Cell converged_cell{0, 0};      // valid when outcome == Converged
  std::vector<Cell> cycle;        // valid when outcome == Cycle
};

// U_i = r_i * (targeted_i + gamma_i * optout_i) from shares_duopoly, per cell.
PayoffMatrix payoff_matrix(const DuopolyParams& params, const CostGrid& grid);

// Exhaustive scan for mutual best responses; payoff differences within
// 1e-12 (relative) count as ties.
NashResult pure_nash(const PayoffMatrix& matrix);

// argmax set of `player`'s payoff against a fixed opponent move, ascending.
std::vector<std::size_t> best_responses(const PayoffMatrix& matrix, int player,
                                        std::size_t opponent_move);

// Alternating myopic best responses, provider 1 first; a player moves only on
// strict improvement and breaks ties toward the smallest index.
DynamicsResult best_response_dynamics(const PayoffMatrix& matrix, Cell start,
                                      std::size_t max_iter);

// max unilateral deviation gain over both players; 0 certifies a grid Nash.
double regret(const PayoffMatrix& matrix, Cell cell);

}  // namespace optout

#endif

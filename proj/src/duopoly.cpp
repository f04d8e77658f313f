#include "optout/duopoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace optout {

namespace {

bool payoff_eq(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}

void check_provider(const ProviderParams& p) {
  if (!(p.revenue_rate > 0.0)) throw std::invalid_argument("revenue_rate must be > 0");
  if (!(p.gamma >= 0.0 && p.gamma <= 1.0)) throw std::invalid_argument("gamma must be in [0,1]");
  if (!(p.benefit >= 0.0)) throw std::invalid_argument("benefit must be >= 0");
}

}  // namespace

void DuopolyParams::validate() const {
  check_provider(provider1);
  check_provider(provider2);
}

void CostGrid::validate() const {
  if (size() == 0) throw std::invalid_argument("cost grid must be nonempty");
  double prev = -1.0;
  for (double v : values) {
    if (!(v >= 0.0)) throw std::invalid_argument("cost grid values must be >= 0");
    if (!(v > prev)) throw std::invalid_argument("cost grid values must be strictly increasing");
    prev = v;
  }
}

CostGrid CostGrid::regular(double lo, double hi, double step, bool include_no_optout) {
  if (!(step > 0.0) || !(hi >= lo) || !(lo >= 0.0))
    throw std::invalid_argument("cost grid: requires 0 <= lo <= hi and step > 0");
  CostGrid g;
  const auto count = static_cast<std::size_t>((hi - lo) / step + 1e-9);
  for (std::size_t i = 0; i <= count; ++i) g.values.push_back(lo + i * step);
  if (g.values.back() < hi - 1e-9 * step) g.values.push_back(hi);
  g.include_no_optout = include_no_optout;
  g.validate();
  return g;
}

PayoffMatrix PayoffMatrix::from_payoffs(std::vector<double> u1, std::vector<double> u2,
                                        std::size_t n) {
  if (u1.size() != n * n || u2.size() != n * n)
    throw std::invalid_argument("payoff matrix: size mismatch");
  PayoffMatrix m;
  m.n = n;
  m.u1 = std::move(u1);
  m.u2 = std::move(u2);
  for (std::size_t i = 0; i < n; ++i) m.grid.values.push_back(static_cast<double>(i));
  return m;
}

PayoffMatrix payoff_matrix(const DuopolyParams& params, const CostGrid& grid) {
  params.validate();
  grid.validate();
  const std::size_t n = grid.size();
  PayoffMatrix m;
  m.grid = grid;
  m.n = n;
  m.u1.resize(n * n);
  m.u2.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Offer o1{params.provider1.benefit, grid.cost_at(i)};
    for (std::size_t j = 0; j < n; ++j) {
      const Offer o2{params.provider2.benefit, grid.cost_at(j)};
      const Shares s = shares_duopoly(params.dist, o1, o2);
      m.u1[i * n + j] =
          params.provider1.revenue_rate * (s.targeted[0] + params.provider1.gamma * s.optout[0]);
      m.u2[i * n + j] =
          params.provider2.revenue_rate * (s.targeted[1] + params.provider2.gamma * s.optout[1]);
    }
  }
  return m;
}

NashResult pure_nash(const PayoffMatrix& matrix) {
  const std::size_t n = matrix.n;
  std::vector<double> colmax1(n, 0.0), rowmax2(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double best = matrix.payoff1(0, j);
    for (std::size_t i = 1; i < n; ++i) best = std::max(best, matrix.payoff1(i, j));
    colmax1[j] = best;
  }
  for (std::size_t i = 0; i < n; ++i) {
    double best = matrix.payoff2(i, 0);
    for (std::size_t j = 1; j < n; ++j) best = std::max(best, matrix.payoff2(i, j));
    rowmax2[i] = best;
  }
  NashResult result;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double p1 = matrix.payoff1(i, j), p2 = matrix.payoff2(i, j);
      if ((payoff_eq(p1, colmax1[j]) || p1 >= colmax1[j]) &&
          (payoff_eq(p2, rowmax2[i]) || p2 >= rowmax2[i])) {
        result.pure_cells.emplace_back(i, j);
        result.regrets.push_back(regret(matrix, {i, j}));
      }
    }
  }
  return result;
}

std::vector<std::size_t> best_responses(const PayoffMatrix& matrix, int player,
                                        std::size_t opponent_move) {
  if (player != 1 && player != 2) throw std::out_of_range("best_responses: player must be 1 or 2");
  if (opponent_move >= matrix.n) throw std::out_of_range("best_responses: move out of range");
  const std::size_t n = matrix.n;
  auto payoff = [&](std::size_t k) {
    return player == 1 ? matrix.payoff1(k, opponent_move) : matrix.payoff2(opponent_move, k);
  };
  double best = payoff(0);
  for (std::size_t k = 1; k < n; ++k) best = std::max(best, payoff(k));
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k)
    if (payoff_eq(payoff(k), best) || payoff(k) >= best) out.push_back(k);
  return out;
}

DynamicsResult best_response_dynamics(const PayoffMatrix& matrix, Cell start,
                                      std::size_t max_iter) {
  if (start.first >= matrix.n || start.second >= matrix.n)
    throw std::out_of_range("best_response_dynamics: start out of range");
  if (max_iter < 1) throw std::invalid_argument("best_response_dynamics: max_iter must be >= 1");

  DynamicsResult result;
  Cell cur = start;
  result.path.push_back(cur);
  // cycle detection on (cell, player-to-move)
  std::map<std::tuple<std::size_t, std::size_t, int>, std::size_t> seen;
  seen[{cur.first, cur.second, 1}] = 0;
  int player = 1;
  int stalls = 0;
  while (true) {
    const double here =
        player == 1 ? matrix.payoff1(cur.first, cur.second) : matrix.payoff2(cur.first, cur.second);
    const auto brs = best_responses(matrix, player, player == 1 ? cur.second : cur.first);
    const double best =
        player == 1 ? matrix.payoff1(brs.front(), cur.second) : matrix.payoff2(cur.first, brs.front());
    if (payoff_eq(here, best) || here >= best) {
      // already a best response; no move
      if (++stalls == 2) {
        result.outcome = DynamicsResult::Outcome::Converged;
        result.converged_cell = cur;
        return result;
      }
    } else {
      stalls = 0;
      if (player == 1)
        cur.first = brs.front();
      else
        cur.second = brs.front();
      if (result.path.size() >= max_iter) {
        result.outcome = DynamicsResult::Outcome::MaxIter;
        return result;
      }
      result.path.push_back(cur);
      const auto key = std::make_tuple(cur.first, cur.second, player == 1 ? 2 : 1);
      auto [it, inserted] = seen.emplace(key, result.path.size() - 1);
      if (!inserted) {
        result.outcome = DynamicsResult::Outcome::Cycle;
        result.cycle.assign(result.path.begin() + static_cast<std::ptrdiff_t>(it->second),
                            result.path.end());
        return result;
      }
    }
    player = player == 1 ? 2 : 1;
  }
}

double regret(const PayoffMatrix& matrix, Cell cell) {
  const auto [i, j] = cell;
  if (i >= matrix.n || j >= matrix.n) throw std::out_of_range("regret: cell out of range");
  double dev1 = 0.0, dev2 = 0.0;
  for (std::size_t k = 0; k < matrix.n; ++k) {
    dev1 = std::max(dev1, matrix.payoff1(k, j) - matrix.payoff1(i, j));
    dev2 = std::max(dev2, matrix.payoff2(i, k) - matrix.payoff2(i, j));
  }
  return std::max(dev1, dev2);
}

}  // namespace optout

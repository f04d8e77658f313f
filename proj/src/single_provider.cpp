#include "optout/single_provider.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace optout {

namespace {

// scale-free equality so argmax selection is invariant under r -> k*r
bool rev_eq(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}

struct Candidate {
  std::optional<double> c;
  double rev = 0.0;
};

// higher revenue wins; on ties, offering beats not offering, then smaller c
bool better(const Candidate& a, const Candidate& b) {
  if (!rev_eq(a.rev, b.rev)) return a.rev > b.rev;
  if (a.c.has_value() != b.c.has_value()) return a.c.has_value();
  if (a.c && b.c) return *a.c < *b.c;
  return false;
}

Candidate reduce(const MarketParams& params, const std::vector<std::optional<double>>& cs) {
  Candidate best{std::nullopt, revenue(params, std::nullopt)};
  for (const auto& c : cs) {
    Candidate cand{c, revenue(params, c)};
    if (better(cand, best)) best = cand;
  }
  return best;
}

SingleSolution finish(const MarketParams& params, const Candidate& best) {
  SingleSolution sol;
  sol.c_star = best.c;
  sol.revenue_star = best.rev;
  sol.baseline_no_optout = revenue_no_optout(params);
  sol.shares_at_opt = shares_single(params.dist, Offer{params.benefit, best.c});
  return sol;
}

}  // namespace

void MarketParams::validate() const {
  if (!(revenue_rate > 0.0)) throw std::invalid_argument("revenue_rate must be > 0");
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must be in [0,1]");
  if (!(benefit >= 0.0)) throw std::invalid_argument("benefit must be >= 0");
}

double revenue(const MarketParams& params, std::optional<double> c) {
  params.validate();
  if (c && *c < 0.0) throw std::invalid_argument("revenue: c must be >= 0");
  const Shares s = shares_single(params.dist, Offer{params.benefit, c});
  return params.revenue_rate * (s.targeted[0] + params.gamma * s.optout[0]);
}

double revenue_no_optout(const MarketParams& params) {
  return revenue(params, std::nullopt);
}

double default_c_max(const MarketParams& params) {
  return std::max(params.benefit, params.dist.support_upper());
}

SingleSolution optimal_cost(const MarketParams& params, double c_max, double step) {
  params.validate();
  if (!(c_max > 0.0)) throw std::invalid_argument("optimal_cost: c_max must be > 0");
  if (!(step > 0.0 && step <= c_max))
    throw std::invalid_argument("optimal_cost: step must satisfy 0 < step <= c_max");

  std::vector<std::optional<double>> coarse;
  const auto count = static_cast<std::size_t>(c_max / step + 1e-9);
  for (std::size_t i = 0; i <= count; ++i) coarse.emplace_back(std::min(i * step, c_max));
  coarse.emplace_back(c_max);
  if (params.benefit <= c_max) coarse.emplace_back(params.benefit);

  Candidate best = reduce(params, coarse);

  if (best.c) {
    // refine around the coarse argmax; keep the discontinuity at b in play
    const double lo = std::max(0.0, *best.c - step);
    const double hi = std::min(c_max, *best.c + step);
    const double h = step / 100.0;
    std::vector<std::optional<double>> fine;
    const auto fcount = static_cast<std::size_t>((hi - lo) / h + 1e-9);
    for (std::size_t i = 0; i <= fcount; ++i) fine.emplace_back(std::min(lo + i * h, hi));
    fine.emplace_back(hi);
    if (params.benefit >= lo && params.benefit <= hi) fine.emplace_back(params.benefit);
    Candidate refined = reduce(params, fine);
    if (better(refined, best)) best = refined;
  }
  return finish(params, best);
}

SingleSolution oracle_optimal_cost(const MarketParams& params, double c_max) {
  params.validate();
  if (!(c_max > 0.0)) throw std::invalid_argument("oracle_optimal_cost: c_max must be > 0");
  const double h = 1e-4;
  std::vector<std::optional<double>> grid;
  const auto count = static_cast<std::size_t>(c_max / h + 1e-9);
  for (std::size_t i = 0; i <= count; ++i) grid.emplace_back(std::min(i * h, c_max));
  grid.emplace_back(c_max);
  return finish(params, reduce(params, grid));
}

ToolChoice choose_tool(const MarketParams& params, double c_low, double c_high) {
  params.validate();
  if (!(c_low >= 0.0 && c_low < c_high))
    throw std::invalid_argument("choose_tool: requires 0 <= c_low < c_high");
  ToolChoice tc;
  tc.c_low = c_low;
  tc.c_high = c_high;
  tc.revenue_low = revenue(params, c_low);
  tc.revenue_high = revenue(params, c_high);
  tc.chose_high = !rev_eq(tc.revenue_high, tc.revenue_low) && tc.revenue_high > tc.revenue_low;
  return tc;
}

}  // namespace optout

#ifndef OPTOUT_SINGLE_PROVIDER_HPP
#define OPTOUT_SINGLE_PROVIDER_HPP

#include <optional>

#include "optout/decision.hpp"
#include "optout/population.hpp"

namespace optout {

struct MarketParams {
  double revenue_rate = 1.0;       // r > 0, revenue per unit of targeted mass
  double gamma = 0.0;              // fraction of r an opted-out user still yields
  ValuationDistribution dist;
  double benefit = 0.0;            // b >= 0

  void validate() const;
};

struct SingleSolution {
  std::optional<double> c_star;    // absent = offer no opt-out
  double revenue_star = 0.0;
  double baseline_no_optout = 0.0;
  Shares shares_at_opt;
};

struct ToolChoice {
  double c_low = 0.0;
  double c_high = 0.0;
  double revenue_low = 0.0;
  double revenue_high = 0.0;
  bool chose_high = false;         // tie goes to the cheaper (low-cost) tool
};

// r * (targeted + gamma * optout); absent c means no opt-out is offered.
double revenue(const MarketParams& params, std::optional<double> c);

double revenue_no_optout(const MarketParams& params);

// max(b, quantile(1 - 1e-9)); revenue is constant in c beyond both.
double default_c_max(const MarketParams& params);

// Two-stage grid search over {0, step, ..., c_max} plus the no-opt-out
// candidate, refined at spacing step/100 around the coarse argmax. Revenue
// can jump at atoms and at c = b, so b itself is always a candidate.
// Ties go to the smallest c, and to offering over not offering.
SingleSolution optimal_cost(const MarketParams& params, double c_max, double step);

// Brute-force reference: exhaustive grid at step 1e-4, no refinement.
SingleSolution oracle_optimal_cost(const MarketParams& params, double c_max);

ToolChoice choose_tool(const MarketParams& params, double c_low, double c_high);

}  // namespace optout

#endif

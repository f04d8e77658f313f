#include "optout/sweep.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace optout {

namespace {

void check_values(SweepAxis axis, const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("sweep: values must be nonempty");
  double prev = -std::numeric_limits<double>::infinity();
  for (double v : values) {
    if (!(v > prev)) throw std::invalid_argument("sweep: values must be strictly increasing");
    prev = v;
    switch (axis) {
      case SweepAxis::Gamma:
        if (!(v >= 0.0 && v <= 1.0))
          throw std::invalid_argument("sweep: gamma values must be in [0,1]");
        break;
      case SweepAxis::Benefit:
        if (!(v >= 0.0)) throw std::invalid_argument("sweep: benefit values must be >= 0");
        break;
      case SweepAxis::Rate:
        if (!(v > 0.0)) throw std::invalid_argument("sweep: rate values must be > 0");
        break;
    }
  }
}

ValuationDistribution with_rate(const ValuationDistribution& dist, double rate) {
  if (!std::holds_alternative<Exponential>(dist.variant()))
    throw std::invalid_argument("sweep: rate axis requires an exponential distribution");
  return ValuationDistribution::exponential(rate);
}

[[noreturn]] void rethrow_with_value(double value, const std::exception& e) {
  std::ostringstream os;
  os << "sweep: at axis value " << value << ": " << e.what();
  throw std::runtime_error(os.str());
}

}  // namespace

std::vector<SingleSweepRow> single_sweep(const SingleSweepSpec& spec) {
  check_values(spec.axis, spec.values);
  spec.base.validate();
  std::vector<SingleSweepRow> rows;
  rows.reserve(spec.values.size());
  for (double value : spec.values) {
    MarketParams params = spec.base;
    switch (spec.axis) {
      case SweepAxis::Gamma: params.gamma = value; break;
      case SweepAxis::Benefit: params.benefit = value; break;
      case SweepAxis::Rate: params.dist = with_rate(params.dist, value); break;
    }
    try {
      const double c_max = spec.c_max.value_or(default_c_max(params));
      const SingleSolution sol = optimal_cost(params, c_max, spec.step);
      rows.push_back({value, sol.c_star, sol.revenue_star, sol.baseline_no_optout,
                      sol.shares_at_opt.optout[0]});
    } catch (const std::exception& e) {
      rethrow_with_value(value, e);
    }
  }
  return rows;
}

std::vector<DuopolySweepRow> duopoly_sweep(const DuopolySweepSpec& spec) {
  check_values(spec.axis, spec.values);
  spec.base.validate();
  spec.grid.validate();
  std::vector<DuopolySweepRow> rows;
  rows.reserve(spec.values.size());
  for (double value : spec.values) {
    DuopolyParams params = spec.base;
    switch (spec.axis) {
      case SweepAxis::Gamma:
        params.provider1.gamma = params.provider2.gamma = value;
        break;
      case SweepAxis::Benefit:
        params.provider1.benefit = params.provider2.benefit = value;
        break;
      case SweepAxis::Rate:
        params.dist = with_rate(params.dist, value);
        break;
    }
    try {
      const PayoffMatrix m = payoff_matrix(params, spec.grid);
      const NashResult nash = pure_nash(m);
      DuopolySweepRow row;
      row.axis_value = value;
      for (const Cell& cell : nash.pure_cells) {
        row.nash.push_back({spec.grid.cost_at(cell.first), spec.grid.cost_at(cell.second),
                            m.payoff1(cell.first, cell.second),
                            m.payoff2(cell.first, cell.second)});
      }
      rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      rethrow_with_value(value, e);
    }
  }
  return rows;
}

}  // namespace optout

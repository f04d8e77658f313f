#ifndef OPTOUT_SWEEP_HPP
#define OPTOUT_SWEEP_HPP

#include <optional>
#include <vector>

#include "optout/duopoly.hpp"
#include "optout/single_provider.hpp"

namespace optout {

enum class SweepAxis { Gamma, Benefit, Rate };

struct SingleSweepSpec {
  SweepAxis axis = SweepAxis::Gamma;
  std::vector<double> values;        // strictly increasing, within the axis range
  MarketParams base;
  std::optional<double> c_max;       // default_c_max(base) when absent
  double step = 0.01;
};

struct SingleSweepRow {
  double axis_value = 0.0;
  std::optional<double> c_star;
  double revenue_star = 0.0;
  double revenue_no_optout = 0.0;
  double optout_share = 0.0;
};

struct DuopolySweepSpec {
  SweepAxis axis = SweepAxis::Gamma;
  std::vector<double> values;
  DuopolyParams base;                // axis value applies to both providers
  CostGrid grid;
};

struct DuopolyNashEntry {
  std::optional<double> c1, c2;      // absent = no opt-out strategy
  double u1 = 0.0, u2 = 0.0;
};

struct DuopolySweepRow {
  double axis_value = 0.0;
  std::vector<DuopolyNashEntry> nash;  // may be empty
};

// One optimal_cost solve per axis value; rows are independent and ordered as
// the spec lists the values. Solver errors are rethrown with the offending
// axis value attached.
std::vector<SingleSweepRow> single_sweep(const SingleSweepSpec& spec);

std::vector<DuopolySweepRow> duopoly_sweep(const DuopolySweepSpec& spec);

}  // namespace optout

#endif

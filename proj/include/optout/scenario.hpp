#ifndef OPTOUT_SCENARIO_HPP
#define OPTOUT_SCENARIO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "optout/duopoly.hpp"
#include "optout/single_provider.hpp"

namespace optout {

/// Invalid scenario file or flag value (CLI exit code 1, as opposed to
/// numeric failures which exit 2).
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DuopolyBlock {
  double benefit2 = 0.0;
  double revenue_rate2 = 1.0;
  double gamma2 = 0.0;
};

struct Scenario {
  ValuationDistribution dist;
  double benefit = 0.0;
  double revenue_rate = 1.0;
  double gamma = 0.0;
  std::optional<DuopolyBlock> duopoly;
};

// Parses and validates a scenario JSON document. Rejects malformed syntax,
// duplicated fields, unknown fields, and constraint violations, naming the
// first offending field in the diagnostic.
Scenario parse_scenario(const std::string& text);

// Canonical JSON echo; parse_scenario(dump_scenario(s)) reproduces s.
std::string dump_scenario(const Scenario& scenario);

MarketParams to_market_params(const Scenario& scenario);

// Provider 2 mirrors provider 1 when the duopoly block is absent.
DuopolyParams to_duopoly_params(const Scenario& scenario);

// "lo:hi:step", inclusive of hi when step divides the span within 1e-9.
std::vector<double> parse_range(const std::string& text);

// 9 significant digits, locale-independent
std::string format_value(double x);
std::string format_optional(const std::optional<double>& x);  // "none" when absent

}  // namespace optout

#endif

#ifndef OPTOUT_POPULATION_HPP
#define OPTOUT_POPULATION_HPP

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace optout {

struct Uniform {
  double lo;
  double hi;
};

struct Exponential {
  double rate;
};

struct PointMass {
  double at;
};

struct Empirical {
  // (value, weight), values strictly increasing, weights sum to 1
  std::vector<std::pair<double, double>> points;
};

/// Population law F of user privacy valuations v >= 0.
///
/// All queries are exact for the analytic variants. Sampling is
/// inverse-transform from a mt19937_64 stream (see sample()), so output is
/// reproducible from (seed, n) alone on any platform.
class ValuationDistribution {
 public:
  // degenerate all-mass-at-zero population
  ValuationDistribution() : v_(PointMass{0.0}) {}

  static ValuationDistribution uniform(double lo, double hi);
  static ValuationDistribution exponential(double rate);
  static ValuationDistribution point_mass(double at);
  static ValuationDistribution empirical(std::vector<std::pair<double, double>> points);

  // P[v <= x]
  double prob_le(double x) const;
  // P[v < x]; differs from prob_le only on atoms
  double prob_lt(double x) const;
  // generalized inverse CDF: inf{x : F(x) >= p}; rejects p outside [0,1]
  double quantile(double p) const;
  double mean() const;

  // n inverse-transform draws from mt19937_64(seed); u = (word >> 11) * 2^-53
  std::vector<double> sample(std::uint64_t seed, std::size_t n) const;

  // quantile(1 - tail); proxy for the upper end of the support
  double support_upper(double tail = 1e-9) const;

  const std::variant<Uniform, Exponential, PointMass, Empirical>& variant() const {
    return v_;
  }

 private:
  explicit ValuationDistribution(std::variant<Uniform, Exponential, PointMass, Empirical> v)
      : v_(std::move(v)) {}
  std::variant<Uniform, Exponential, PointMass, Empirical> v_;
};

}  // namespace optout

#endif

#include "optout/population.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace optout {

namespace {

void check(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

ValuationDistribution ValuationDistribution::uniform(double lo, double hi) {
  check(std::isfinite(lo) && std::isfinite(hi), "uniform: bounds must be finite");
  check(lo >= 0.0 && lo < hi, "uniform: requires 0 <= lo < hi");
  return ValuationDistribution(Uniform{lo, hi});
}

ValuationDistribution ValuationDistribution::exponential(double rate) {
  check(std::isfinite(rate) && rate > 0.0, "exponential: rate must be > 0");
  return ValuationDistribution(Exponential{rate});
}

ValuationDistribution ValuationDistribution::point_mass(double at) {
  check(std::isfinite(at) && at >= 0.0, "pointmass: at must be >= 0");
  return ValuationDistribution(PointMass{at});
}

ValuationDistribution ValuationDistribution::empirical(
    std::vector<std::pair<double, double>> points) {
  check(!points.empty(), "empirical: needs at least one point");
  double total = 0.0;
  double prev = -1.0;
  for (const auto& [value, weight] : points) {
    check(std::isfinite(value) && value >= 0.0, "empirical: values must be >= 0");
    check(value > prev, "empirical: values must be strictly increasing");
    check(weight > 0.0, "empirical: weights must be > 0");
    prev = value;
    total += weight;
  }
  check(std::abs(total - 1.0) <= 1e-12, "empirical: weights must sum to 1");
  return ValuationDistribution(Empirical{std::move(points)});
}

double ValuationDistribution::prob_le(double x) const {
  return std::visit(
      [x](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          if (x < d.lo) return 0.0;
          if (x >= d.hi) return 1.0;
          return (x - d.lo) / (d.hi - d.lo);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          if (x < 0.0) return 0.0;
          return -std::expm1(-d.rate * x);
        } else if constexpr (std::is_same_v<T, PointMass>) {
          return x >= d.at ? 1.0 : 0.0;
        } else {
          double acc = 0.0;
          for (const auto& [value, weight] : d.points) {
            if (value <= x) acc += weight;
          }
          return std::min(acc, 1.0);
        }
      },
      v_);
}

double ValuationDistribution::prob_lt(double x) const {
  return std::visit(
      [this, x](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, PointMass>) {
          return x > d.at ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, Empirical>) {
          double acc = 0.0;
          for (const auto& [value, weight] : d.points) {
            if (value < x) acc += weight;
          }
          return std::min(acc, 1.0);
        } else {
          return prob_le(x);  // continuous, no atoms
        }
      },
      v_);
}

double ValuationDistribution::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("quantile: p must be in [0,1]");
  return std::visit(
      [p](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          return d.lo + p * (d.hi - d.lo);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return -std::log1p(-p) / d.rate;
        } else if constexpr (std::is_same_v<T, PointMass>) {
          return d.at;
        } else {
          double acc = 0.0;
          for (const auto& [value, weight] : d.points) {
            acc += weight;
            if (acc >= p) return value;
          }
          return d.points.back().first;
        }
      },
      v_);
}

double ValuationDistribution::mean() const {
  return std::visit(
      [](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          return 0.5 * (d.lo + d.hi);
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return 1.0 / d.rate;
        } else if constexpr (std::is_same_v<T, PointMass>) {
          return d.at;
        } else {
          double acc = 0.0;
          for (const auto& [value, weight] : d.points) acc += value * weight;
          return acc;
        }
      },
      v_);
}

std::vector<double> ValuationDistribution::sample(std::uint64_t seed, std::size_t n) const {
  std::mt19937_64 eng(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // 53 random bits -> u in [0, 1); avoids the unspecified
    // std::uniform_real_distribution for cross-platform reproducibility
    double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    out.push_back(quantile(u));
  }
  return out;
}

double ValuationDistribution::support_upper(double tail) const {
  return quantile(1.0 - tail);
}

}  // namespace optout

#ifndef OPTOUT_DECISION_HPP
#define OPTOUT_DECISION_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "optout/population.hpp"

namespace optout {

/// One provider's posted terms. An absent opt_out_cost means the provider
/// offers no opt-out at all.
struct Offer {
  double benefit = 0.0;
  std::optional<double> opt_out_cost;
};

enum class ChoiceKind { Targeted, OptOut, Abstain };

struct Choice {
  ChoiceKind kind = ChoiceKind::Abstain;
  int provider = 0;  // 1-based; 0 for Abstain

  friend bool operator==(const Choice&, const Choice&) = default;
};

/// Market partition masses. Index 0/1 = provider 1/2; single-provider
/// computations leave index 1 at zero.
struct Shares {
  std::array<double, 2> targeted{0.0, 0.0};
  std::array<double, 2> optout{0.0, 0.0};
  double abstain = 0.0;

  double total() const {
    return targeted[0] + targeted[1] + optout[0] + optout[1] + abstain;
  }
};

// Pointwise choice rule. Utilities: targeted b_i - v, opted-out b_i - c_i,
// abstain 0. Ties: participation beats Abstain, Targeted beats OptOut,
// lower provider index wins.
Choice user_choice(double v, std::span<const Offer> offers);

// Exact masses for one provider; atoms land on the tie-break side.
Shares shares_single(const ValuationDistribution& dist, const Offer& offer);

// Exact masses for two providers. Mass indifferent between the providers at
// equal utility splits 50/50 (unlike the pointwise index rule).
Shares shares_duopoly(const ValuationDistribution& dist, const Offer& offer1,
                      const Offer& offer2);

// Monte Carlo frequencies over sample(dist, seed, n); exact provider ties
// alternate 1,2,1,2,... so the 50/50 split is reproduced deterministically.
Shares shares_monte_carlo(const ValuationDistribution& dist, std::span<const Offer> offers,
                          std::size_t n, std::uint64_t seed);

}  // namespace optout

#endif

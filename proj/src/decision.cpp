#include "optout/decision.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace optout {

namespace {

void validate_offers(std::span<const Offer> offers) {
  if (offers.empty() || offers.size() > 2)
    throw std::invalid_argument("offers: expected 1 or 2 providers");
  for (const Offer& o : offers) {
    if (o.benefit < 0.0) throw std::invalid_argument("offer: benefit must be >= 0");
    if (o.opt_out_cost && *o.opt_out_cost < 0.0)
      throw std::invalid_argument("offer: opt_out_cost must be >= 0");
  }
}

}  // namespace

Choice user_choice(double v, std::span<const Offer> offers) {
  validate_offers(offers);
  // candidates in tie-break order: Targeted(1), Targeted(2), OptOut(1),
  // OptOut(2), Abstain
  std::vector<std::pair<double, Choice>> cand;
  for (std::size_t i = 0; i < offers.size(); ++i)
    cand.emplace_back(offers[i].benefit - v, Choice{ChoiceKind::Targeted, static_cast<int>(i) + 1});
  for (std::size_t i = 0; i < offers.size(); ++i)
    if (offers[i].opt_out_cost)
      cand.emplace_back(offers[i].benefit - *offers[i].opt_out_cost,
                        Choice{ChoiceKind::OptOut, static_cast<int>(i) + 1});
  cand.emplace_back(0.0, Choice{ChoiceKind::Abstain, 0});

  double best = 0.0;
  for (const auto& [u, c] : cand) best = std::max(best, u);
  for (const auto& [u, c] : cand)
    if (u == best) return c;
  return {ChoiceKind::Abstain, 0};  // unreachable
}

Shares shares_single(const ValuationDistribution& dist, const Offer& offer) {
  validate_offers(std::span<const Offer>(&offer, 1));
  const double b = offer.benefit;
  Shares s;
  if (offer.opt_out_cost && *offer.opt_out_cost <= b) {
    const double c = *offer.opt_out_cost;
    s.targeted[0] = dist.prob_le(c);
    s.optout[0] = 1.0 - s.targeted[0];
  } else {
    s.targeted[0] = dist.prob_le(b);
    s.abstain = 1.0 - s.targeted[0];
  }
  return s;
}

Shares shares_duopoly(const ValuationDistribution& dist, const Offer& offer1,
                      const Offer& offer2) {
  const Offer offers[2] = {offer1, offer2};
  validate_offers(offers);

  // Both targeted utilities have slope -1 in v, so the higher-benefit
  // provider's targeted option dominates the other's everywhere (ties
  // everywhere when b1 == b2). The non-targeted options are constants.
  const double b1 = offer1.benefit, b2 = offer2.benefit;
  const double bt = std::max(b1, b2);

  // best constant option: opt-outs and abstention (utility 0)
  double k = 0.0;
  if (offer1.opt_out_cost) k = std::max(k, b1 - *offer1.opt_out_cost);
  if (offer2.opt_out_cost) k = std::max(k, b2 - *offer2.opt_out_cost);
  const bool optout1_wins = offer1.opt_out_cost && b1 - *offer1.opt_out_cost == k;
  const bool optout2_wins = offer2.opt_out_cost && b2 - *offer2.opt_out_cost == k;

  // v <= t: some targeted option is weakly best (ties resolve to Targeted,
  // abstention ties resolve to participation); v > t: best constant wins.
  const double t = bt - k;
  const double targeted_mass = t >= 0.0 ? dist.prob_le(t) : 0.0;
  const double rest = 1.0 - targeted_mass;

  Shares s;
  if (b1 == b2) {
    s.targeted[0] = s.targeted[1] = 0.5 * targeted_mass;
  } else {
    s.targeted[b1 > b2 ? 0 : 1] = targeted_mass;
  }
  if (optout1_wins && optout2_wins) {
    s.optout[0] = s.optout[1] = 0.5 * rest;
  } else if (optout1_wins) {
    s.optout[0] = rest;
  } else if (optout2_wins) {
    s.optout[1] = rest;
  } else {
    s.abstain = rest;
  }
  return s;
}

Shares shares_monte_carlo(const ValuationDistribution& dist, std::span<const Offer> offers,
                          std::size_t n, std::uint64_t seed) {
  validate_offers(offers);
  if (n < 1) throw std::invalid_argument("shares_monte_carlo: n must be >= 1");

  const std::vector<double> vs = dist.sample(seed, n);
  const std::size_t np = offers.size();
  Shares counts;
  int tie_next = 0;  // alternates on exact cross-provider ties
  for (double v : vs) {
    double ut[2], uo[2];
    bool has_o[2] = {false, false};
    for (std::size_t i = 0; i < np; ++i) {
      ut[i] = offers[i].benefit - v;
      if (offers[i].opt_out_cost) {
        has_o[i] = true;
        uo[i] = offers[i].benefit - *offers[i].opt_out_cost;
      }
    }
    double best = 0.0;  // abstain
    for (std::size_t i = 0; i < np; ++i) {
      best = std::max(best, ut[i]);
      if (has_o[i]) best = std::max(best, uo[i]);
    }
    const bool t1 = ut[0] == best, t2 = np > 1 && ut[1] == best;
    const bool o1 = has_o[0] && uo[0] == best, o2 = np > 1 && has_o[1] && uo[1] == best;
    if (t1 && t2) {
      counts.targeted[tie_next] += 1.0;
      tie_next ^= 1;
    } else if (t1 || t2) {
      counts.targeted[t1 ? 0 : 1] += 1.0;
    } else if (o1 && o2) {
      counts.optout[tie_next] += 1.0;
      tie_next ^= 1;
    } else if (o1 || o2) {
      counts.optout[o1 ? 0 : 1] += 1.0;
    } else {
      counts.abstain += 1.0;
    }
  }
  const double inv = 1.0 / static_cast<double>(n);
  Shares s;
  for (int i = 0; i < 2; ++i) {
    s.targeted[i] = counts.targeted[i] * inv;
    s.optout[i] = counts.optout[i] * inv;
  }
  s.abstain = counts.abstain * inv;
  return s;
}

}  // namespace optout

#include "optout/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include <json.hpp>

namespace optout {

namespace {

using json = nlohmann::ordered_json;

// SAX pass that only looks for duplicated object keys, which the DOM parser
// would silently collapse.
struct DupKeyChecker {
  std::vector<std::set<std::string>> stack;
  std::string duplicate;

  bool null() { return true; }
  bool boolean(bool) { return true; }
  bool number_integer(json::number_integer_t) { return true; }
  bool number_unsigned(json::number_unsigned_t) { return true; }
  bool number_float(json::number_float_t, const std::string&) { return true; }
  bool string(std::string&) { return true; }
  bool binary(json::binary_t&) { return true; }
  bool start_object(std::size_t) {
    stack.emplace_back();
    return true;
  }
  bool key(std::string& k) {
    if (!stack.back().insert(k).second) {
      duplicate = k;
      return false;
    }
    return true;
  }
  bool end_object() {
    stack.pop_back();
    return true;
  }
  bool start_array(std::size_t) { return true; }
  bool end_array() { return true; }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) {
    return false;
  }
};

void reject_unknown(const json& obj, const char* where, const std::set<std::string>& allowed) {
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k))
      throw ScenarioError(std::string(where) + ": unknown field \"" + k + "\"");
  }
}

double get_number(const json& obj, const char* where, const std::string& field) {
  if (!obj.contains(field))
    throw ScenarioError(std::string(where) + ": missing field \"" + field + "\"");
  const json& v = obj.at(field);
  if (!v.is_number())
    throw ScenarioError(std::string(where) + ": field \"" + field + "\" must be a number");
  return v.get<double>();
}

ValuationDistribution parse_distribution(const json& obj) {
  if (!obj.is_object()) throw ScenarioError("distribution: must be an object");
  if (!obj.contains("kind") || !obj.at("kind").is_string())
    throw ScenarioError("distribution: missing string field \"kind\"");
  const std::string kind = obj.at("kind").get<std::string>();
  try {
    if (kind == "uniform") {
      reject_unknown(obj, "distribution", {"kind", "lo", "hi"});
      return ValuationDistribution::uniform(get_number(obj, "distribution", "lo"),
                                            get_number(obj, "distribution", "hi"));
    }
    if (kind == "exponential") {
      reject_unknown(obj, "distribution", {"kind", "rate"});
      return ValuationDistribution::exponential(get_number(obj, "distribution", "rate"));
    }
    if (kind == "pointmass") {
      reject_unknown(obj, "distribution", {"kind", "at"});
      return ValuationDistribution::point_mass(get_number(obj, "distribution", "at"));
    }
    if (kind == "empirical") {
      reject_unknown(obj, "distribution", {"kind", "points"});
      if (!obj.contains("points") || !obj.at("points").is_array())
        throw ScenarioError("distribution: empirical requires an array field \"points\"");
      std::vector<std::pair<double, double>> points;
      for (const json& p : obj.at("points")) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
          throw ScenarioError("distribution: each point must be a [value, weight] pair");
        points.emplace_back(p[0].get<double>(), p[1].get<double>());
      }
      return ValuationDistribution::empirical(std::move(points));
    }
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(std::string("distribution: ") + e.what());
  }
  throw ScenarioError("distribution: unknown kind \"" + kind +
                      "\" (expected uniform, exponential, pointmass, or empirical)");
}

void check_gamma(const char* field, double g) {
  if (!(g >= 0.0 && g <= 1.0))
    throw ScenarioError(std::string(field) + ": must be in [0,1], got " + format_value(g));
}

void check_rate(const char* field, double r) {
  if (!(r > 0.0))
    throw ScenarioError(std::string(field) + ": must be > 0, got " + format_value(r));
}

void check_benefit(const char* field, double b) {
  if (!(b >= 0.0))
    throw ScenarioError(std::string(field) + ": must be >= 0, got " + format_value(b));
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("scenario: ") + e.what());
  }
  DupKeyChecker dup;
  if (!json::sax_parse(text, &dup) && !dup.duplicate.empty())
    throw ScenarioError("scenario: duplicated field \"" + dup.duplicate + "\"");
  if (!doc.is_object()) throw ScenarioError("scenario: top level must be an object");
  reject_unknown(doc, "scenario",
                 {"distribution", "benefit", "revenue_rate", "gamma", "duopoly"});
  if (!doc.contains("distribution"))
    throw ScenarioError("scenario: missing field \"distribution\"");

  Scenario s{parse_distribution(doc.at("distribution")),
             get_number(doc, "scenario", "benefit"),
             get_number(doc, "scenario", "revenue_rate"),
             get_number(doc, "scenario", "gamma"),
             std::nullopt};
  check_benefit("benefit", s.benefit);
  check_rate("revenue_rate", s.revenue_rate);
  check_gamma("gamma", s.gamma);

  if (doc.contains("duopoly")) {
    const json& d = doc.at("duopoly");
    if (!d.is_object()) throw ScenarioError("duopoly: must be an object");
    reject_unknown(d, "duopoly", {"benefit2", "revenue_rate2", "gamma2"});
    DuopolyBlock block{get_number(d, "duopoly", "benefit2"),
                       get_number(d, "duopoly", "revenue_rate2"),
                       get_number(d, "duopoly", "gamma2")};
    check_benefit("benefit2", block.benefit2);
    check_rate("revenue_rate2", block.revenue_rate2);
    check_gamma("gamma2", block.gamma2);
    s.duopoly = block;
  }
  return s;
}

std::string dump_scenario(const Scenario& scenario) {
  json dist;
  std::visit(
      [&dist](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          dist = {{"kind", "uniform"}, {"lo", d.lo}, {"hi", d.hi}};
        } else if constexpr (std::is_same_v<T, Exponential>) {
          dist = {{"kind", "exponential"}, {"rate", d.rate}};
        } else if constexpr (std::is_same_v<T, PointMass>) {
          dist = {{"kind", "pointmass"}, {"at", d.at}};
        } else {
          json points = json::array();
          for (const auto& [value, weight] : d.points)
            points.push_back(json::array({value, weight}));
          dist = {{"kind", "empirical"}, {"points", points}};
        }
      },
      scenario.dist.variant());
  json doc = {{"distribution", dist},
              {"benefit", scenario.benefit},
              {"revenue_rate", scenario.revenue_rate},
              {"gamma", scenario.gamma}};
  if (scenario.duopoly) {
    doc["duopoly"] = {{"benefit2", scenario.duopoly->benefit2},
                      {"revenue_rate2", scenario.duopoly->revenue_rate2},
                      {"gamma2", scenario.duopoly->gamma2}};
  }
  return doc.dump();
}

MarketParams to_market_params(const Scenario& scenario) {
  return {scenario.revenue_rate, scenario.gamma, scenario.dist, scenario.benefit};
}

DuopolyParams to_duopoly_params(const Scenario& scenario) {
  ProviderParams p1{scenario.revenue_rate, scenario.gamma, scenario.benefit};
  ProviderParams p2 = p1;
  if (scenario.duopoly)
    p2 = {scenario.duopoly->revenue_rate2, scenario.duopoly->gamma2, scenario.duopoly->benefit2};
  return {p1, p2, scenario.dist};
}

std::vector<double> parse_range(const std::string& text) {
  double lo = 0.0, hi = 0.0, step = 0.0;
  char trailing = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &trailing) != 3)
    throw ScenarioError("range: expected lo:hi:step, got \"" + text + "\"");
  if (!(step > 0.0)) throw ScenarioError("range: step must be > 0");
  if (!(hi >= lo)) throw ScenarioError("range: requires hi >= lo");
  std::vector<double> out;
  const auto count = static_cast<std::size_t>((hi - lo) / step + 1e-9);
  for (std::size_t i = 0; i <= count; ++i) out.push_back(lo + static_cast<double>(i) * step);
  // both ends inclusive when step divides the span within 1e-9
  if (std::abs(out.back() - hi) <= 1e-9 * std::max(1.0, std::abs(hi))) out.back() = hi;
  return out;
}

std::string format_value(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

std::string format_optional(const std::optional<double>& x) {
  return x ? format_value(*x) : "none";
}

}  // namespace optout

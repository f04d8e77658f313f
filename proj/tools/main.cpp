// optout: revenue-optimal pricing of privacy opt-out options.
//
// Subcommands: solve-single, solve-duopoly, sweep, simulate. Scenario files
// are JSON; all numeric output uses 9 significant digits so repeated runs
// are byte-identical.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "optout/duopoly.hpp"
#include "optout/scenario.hpp"
#include "optout/single_provider.hpp"
#include "optout/sweep.hpp"

namespace {

using namespace optout;

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

SweepAxis axis_from_name(const std::string& name) {
  if (name == "gamma") return SweepAxis::Gamma;
  if (name == "benefit") return SweepAxis::Benefit;
  if (name == "rate") return SweepAxis::Rate;
  throw ScenarioError("--param: expected gamma, benefit, or rate, got \"" + name + "\"");
}

Cell parse_cell(const std::string& text) {
  std::size_t i = 0, j = 0;
  char trailing = 0;
  if (std::sscanf(text.c_str(), "%zu,%zu%c", &i, &j, &trailing) != 2)
    throw ScenarioError("--start: expected i,j, got \"" + text + "\"");
  return {i, j};
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ScenarioError("cannot open output file: " + path);
  out << contents;
}

void print_shares_line(std::ostream& os, const char* label, const Shares& s, bool duopoly) {
  os << label << ": targeted1=" << format_value(s.targeted[0])
     << " optout1=" << format_value(s.optout[0]);
  if (duopoly)
    os << " targeted2=" << format_value(s.targeted[1])
       << " optout2=" << format_value(s.optout[1]);
  os << " abstain=" << format_value(s.abstain) << "\n";
}

int cmd_solve_single(const std::string& scenario_path, std::optional<double> c_max_flag,
                     double step, bool dump) {
  const Scenario sc = load_scenario(scenario_path);
  if (dump) {
    std::cout << dump_scenario(sc) << "\n";
    return 0;
  }
  const MarketParams params = to_market_params(sc);
  const double c_max = c_max_flag.value_or(std::max(default_c_max(params), 10.0 * step));
  const SingleSolution sol = optimal_cost(params, c_max, step);
  std::cout << "c_star=" << format_optional(sol.c_star)
            << " revenue_star=" << format_value(sol.revenue_star)
            << " revenue_no_optout=" << format_value(sol.baseline_no_optout) << "\n";
  print_shares_line(std::cout, "shares", sol.shares_at_opt, false);
  return 0;
}

int cmd_solve_duopoly(const std::string& scenario_path, const std::string& grid_spec,
                      bool no_optout_candidate, bool dynamics, const std::string& start_spec,
                      std::size_t max_iter, const std::string& out_path, bool dump) {
  const Scenario sc = load_scenario(scenario_path);
  if (dump) {
    std::cout << dump_scenario(sc) << "\n";
    return 0;
  }
  CostGrid grid;
  grid.values = parse_range(grid_spec);
  grid.include_no_optout = no_optout_candidate;
  const DuopolyParams params = to_duopoly_params(sc);
  const PayoffMatrix matrix = payoff_matrix(params, grid);
  const NashResult nash = pure_nash(matrix);

  std::ostringstream csv;
  csv << "c1,c2,u1,u2,is_nash\n";
  std::set<Cell> nash_set(nash.pure_cells.begin(), nash.pure_cells.end());
  for (std::size_t i = 0; i < matrix.n; ++i) {
    for (std::size_t j = 0; j < matrix.n; ++j) {
      csv << format_optional(grid.cost_at(i)) << ',' << format_optional(grid.cost_at(j)) << ','
          << format_value(matrix.payoff1(i, j)) << ',' << format_value(matrix.payoff2(i, j))
          << ',' << (nash_set.count({i, j}) ? 1 : 0) << "\n";
    }
  }
  if (out_path.empty())
    std::cout << csv.str();
  else
    write_file(out_path, csv.str());

  std::cout << "pure_nash_cells=" << nash.pure_cells.size() << "\n";
  for (std::size_t k = 0; k < nash.pure_cells.size(); ++k) {
    const Cell cell = nash.pure_cells[k];
    std::cout << "nash: c1=" << format_optional(grid.cost_at(cell.first))
              << " c2=" << format_optional(grid.cost_at(cell.second))
              << " u1=" << format_value(matrix.payoff1(cell.first, cell.second))
              << " u2=" << format_value(matrix.payoff2(cell.first, cell.second))
              << " regret=" << format_value(nash.regrets[k]) << "\n";
  }
  if (dynamics) {
    const Cell start = start_spec.empty() ? Cell{0, 0} : parse_cell(start_spec);
    const DynamicsResult dr = best_response_dynamics(matrix, start, max_iter);
    std::cout << "dynamics: ";
    switch (dr.outcome) {
      case DynamicsResult::Outcome::Converged:
        std::cout << "converged at c1=" << format_optional(grid.cost_at(dr.converged_cell.first))
                  << " c2=" << format_optional(grid.cost_at(dr.converged_cell.second));
        break;
      case DynamicsResult::Outcome::Cycle:
        std::cout << "cycle of length " << dr.cycle.size();
        break;
      case DynamicsResult::Outcome::MaxIter:
        std::cout << "no convergence within " << max_iter << " steps";
        break;
    }
    std::cout << " (path length " << dr.path.size() << ")\n";
  }
  return 0;
}

int cmd_sweep(const std::string& scenario_path, const std::string& param,
              const std::string& values_spec, const std::string& out_path,
              std::optional<double> c_max_flag, double step, bool dump) {
  const Scenario sc = load_scenario(scenario_path);
  if (dump) {
    std::cout << dump_scenario(sc) << "\n";
    return 0;
  }
  SingleSweepSpec spec;
  spec.axis = axis_from_name(param);
  spec.values = parse_range(values_spec);
  spec.base = to_market_params(sc);
  spec.c_max = c_max_flag;
  spec.step = step;
  const auto rows = single_sweep(spec);

  std::ostringstream csv;
  csv << param << ",c_star,revenue_star,revenue_no_optout,optout_share\n";
  for (const auto& row : rows) {
    csv << format_value(row.axis_value) << ',' << format_optional(row.c_star) << ','
        << format_value(row.revenue_star) << ',' << format_value(row.revenue_no_optout) << ','
        << format_value(row.optout_share) << "\n";
  }
  if (out_path.empty())
    std::cout << csv.str();
  else
    write_file(out_path, csv.str());
  return 0;
}

int cmd_simulate(const std::string& scenario_path, std::size_t n, std::uint64_t seed,
                 std::optional<double> c1, std::optional<double> c2, bool dump) {
  const Scenario sc = load_scenario(scenario_path);
  if (dump) {
    std::cout << dump_scenario(sc) << "\n";
    return 0;
  }
  std::vector<Offer> offers;
  offers.push_back({sc.benefit, c1});
  const bool duopoly = sc.duopoly.has_value();
  if (duopoly) offers.push_back({sc.duopoly->benefit2, c2});

  const Shares analytic = duopoly ? shares_duopoly(sc.dist, offers[0], offers[1])
                                  : shares_single(sc.dist, offers[0]);
  const Shares mc = shares_monte_carlo(sc.dist, offers, n, seed);
  print_shares_line(std::cout, "analytic", analytic, duopoly);
  print_shares_line(std::cout, "monte_carlo", mc, duopoly);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Revenue-optimal pricing of privacy opt-out options"};
  app.require_subcommand(1);

  std::string scenario_path, grid_spec, start_spec = "0,0", out_path, param, values_spec;
  std::optional<double> c_max_flag, c1_flag, c2_flag;
  double step = 0.01;
  std::size_t n = 100000, max_iter = 1000;
  std::uint64_t seed = 0;
  bool dump = false, dynamics = false, no_optout_candidate = false;

  auto* solve_single = app.add_subcommand("solve-single", "Optimal opt-out cost, one provider");
  solve_single->add_option("--scenario", scenario_path)->required();
  solve_single->add_option("--c-max", c_max_flag);
  solve_single->add_option("--step", step);
  solve_single->add_flag("--dump-scenario", dump);

  auto* solve_duopoly = app.add_subcommand("solve-duopoly", "Pure Nash cells on a cost grid");
  solve_duopoly->add_option("--scenario", scenario_path)->required();
  solve_duopoly->add_option("--grid", grid_spec, "cost grid as lo:hi:step")->required();
  solve_duopoly->add_flag("--no-optout-candidate", no_optout_candidate,
                          "append a no-opt-out strategy to the grid");
  solve_duopoly->add_flag("--dynamics", dynamics, "run best-response dynamics");
  solve_duopoly->add_option("--start", start_spec, "dynamics start cell i,j");
  solve_duopoly->add_option("--max-iter", max_iter);
  solve_duopoly->add_option("--out", out_path, "write the payoff CSV here instead of stdout");
  solve_duopoly->add_flag("--dump-scenario", dump);

  auto* sweep = app.add_subcommand("sweep", "Comparative statics over gamma, benefit, or rate");
  sweep->add_option("--scenario", scenario_path)->required();
  sweep->add_option("--param", param)->required();
  sweep->add_option("--values", values_spec, "axis values as lo:hi:step")->required();
  sweep->add_option("--out", out_path);
  sweep->add_option("--c-max", c_max_flag);
  sweep->add_option("--step", step);
  sweep->add_flag("--dump-scenario", dump);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo shares vs analytic shares");
  simulate->add_option("--scenario", scenario_path)->required();
  simulate->add_option("--n", n)->required();
  simulate->add_option("--seed", seed)->required();
  simulate->add_option("--c1", c1_flag, "provider 1 opt-out cost (absent = no opt-out)");
  simulate->add_option("--c2", c2_flag, "provider 2 opt-out cost (absent = no opt-out)");
  simulate->add_flag("--dump-scenario", dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve_single->parsed()) return cmd_solve_single(scenario_path, c_max_flag, step, dump);
    if (solve_duopoly->parsed())
      return cmd_solve_duopoly(scenario_path, grid_spec, no_optout_candidate, dynamics,
                               start_spec, max_iter, out_path, dump);
    if (sweep->parsed())
      return cmd_sweep(scenario_path, param, values_spec, out_path, c_max_flag, step, dump);
    if (simulate->parsed()) return cmd_simulate(scenario_path, n, seed, c1_flag, c2_flag, dump);
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

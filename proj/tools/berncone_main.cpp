// berncone - exact engine for desirable polynomial gambles on the
// probability simplex.
//
// Subcommands:
//   check          consistency of a gamble set at a cone degree
//   prevision      lower prevision of a gamble
//   upper          upper prevision of a gamble
//   hierarchy      lower previsions over a degree range (CSV output)
//   update         posterior lower prevision against a partition likelihood
//   state-validate Bernstein-state check of a moment file
//   state-expect   expectation of a gamble under a moment state
//   oracle         brute-force classical prevision on a simplex grid
//   demo-bell      the negative gamble with positive prevision, end to end
//   demo-socks     the two-coin entanglement experiment, end to end
//
// Rationals cross the command line as "num" or "num/den" strings. All files
// are JSON (see json_io.hpp for the schemas); hierarchy emits CSV. Exit
// codes: 0 success, 2 inconsistent assessments (check), 64 parse errors,
// 65 degree errors, 70 LP anomalies.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "berncone/errors.hpp"
#include "berncone/json_io.hpp"

namespace {

using namespace berncone;
using nlohmann::json;

constexpr int kExitInconsistent = 2;
constexpr int kExitParse = 64;
constexpr int kExitDegree = 65;
constexpr int kExitLp = 70;

struct RunConfig {
  std::string gamble_path;
  std::string gambles_path;
  std::string state_path;
  std::string pi_indices;
  std::string pi_path;
  bool allow_any_pi = false;
  int degree = 1;
  int d_min = 1;
  int d_max = 1;
  std::string epsilon = "1/100";
  std::string grid_step = "1/50";
  std::string out_path;
  bool machine_json = false;
  bool strict = false;
};

std::string fraction_and_float(const Rational& value) {
  return to_fraction_string(value) + " (~" + to_float_string(value) + ")";
}

void emit(const RunConfig& config, const json& machine, const std::string& human) {
  std::cout << human;
  if (!config.machine_json) return;
  if (!config.out_path.empty()) {
    write_json_file(config.out_path, machine);
  } else {
    std::cout << json_text(machine);
  }
}

int parse_grid_k(const std::string& text) {
  const Rational step = parse_rational(text);
  if (numerator(step) != 1 || denominator(step) < 2) {
    throw std::invalid_argument("grid step must be 1/k with integer k >= 2");
  }
  return denominator(step).convert_to<int>();
}

AssessmentSet load_assessments(const RunConfig& config, int fallback_n_vars) {
  if (!config.gambles_path.empty()) {
    return gambles_from_json(parse_json_file(config.gambles_path));
  }
  return AssessmentSet::empty(fallback_n_vars);
}

Polynomial load_gamble(const RunConfig& config) {
  return polynomial_from_json(parse_json_file(config.gamble_path));
}

Polynomial parse_pi(const RunConfig& config, int n_vars) {
  if (!config.pi_path.empty()) {
    const Polynomial pi = polynomial_from_json(parse_json_file(config.pi_path));
    if (pi.n_vars() != n_vars) {
      throw std::invalid_argument("likelihood and gamble variable counts differ");
    }
    // caller-supplied likelihoods are contracted to be nonnegative on the
    // simplex; refute at grid points before solving
    for (const MultiIndex& ticks : exponents_up_to_total(n_vars, 16)) {
      std::vector<Rational> point(n_vars);
      for (int i = 0; i < n_vars; ++i) point[i] = Rational(ticks[i], 16);
      if (pi.eval(point) < 0) {
        std::string where = "(";
        for (int i = 0; i < n_vars; ++i) {
          where += (i ? ", " : "") + to_fraction_string(point[i]);
        }
        throw std::invalid_argument("likelihood is negative on the simplex at theta = " +
                                    where + "), not a valid pi");
      }
    }
    return pi;
  }
  if (config.pi_indices.empty()) {
    throw std::invalid_argument("update needs --pi indices or --pi-file");
  }
  Polynomial pi(n_vars);
  std::stringstream stream(config.pi_indices);
  std::string item;
  Polynomial complement = Polynomial::constant(n_vars, 1);
  for (int i = 0; i < n_vars; ++i) complement -= Polynomial::variable(n_vars, i);
  while (std::getline(stream, item, ',')) {
    int index = 0;
    try {
      index = std::stoi(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad --pi index '" + item + "'");
    }
    if (index < 1 || index > n_vars + 1) {
      throw std::invalid_argument("--pi index out of range 1..n_vars+1");
    }
    pi += index <= n_vars ? Polynomial::variable(n_vars, index - 1) : complement;
  }
  return pi;
}

int run_check(const RunConfig& config) {
  const AssessmentSet assessments = gambles_from_json(parse_json_file(config.gambles_path));
  const CoherenceVerdict verdict = check_consistency(assessments, config.degree);
  std::ostringstream human;
  if (verdict.consistent) {
    human << "consistent at degree " << config.degree << ": -1 is not derivable\n";
  } else {
    human << "INCONSISTENT at degree " << config.degree << ": -1 is derivable\n";
    for (std::size_t i = 0; i < verdict.witness_lambda.size(); ++i) {
      human << "  lambda[" << i << "] = " << fraction_and_float(verdict.witness_lambda[i])
            << "\n";
    }
    human << "  certificate weights: " << verdict.witness_certificate->weights.size()
          << "\n";
  }
  emit(config, verdict_to_json(verdict), human.str());
  return verdict.consistent ? 0 : kExitInconsistent;
}

std::string prevision_summary(const char* label, const PrevisionResult& result) {
  std::ostringstream human;
  if (result.vacuous) {
    human << label << ": vacuous (no price is defensible) at degree "
          << result.degree_used << "\n";
    return human.str();
  }
  human << label << " = " << fraction_and_float(result.value) << " at degree "
        << result.degree_used << "\n";
  for (std::size_t i = 0; i < result.lambda_weights.size(); ++i) {
    if (result.lambda_weights[i] != 0) {
      human << "  lambda[" << i << "] = " << fraction_and_float(result.lambda_weights[i])
            << "\n";
    }
  }
  human << "  certificate weights: " << result.certificate.weights.size() << "\n";
  return human.str();
}

int run_prevision(const RunConfig& config, bool upper) {
  const Polynomial q = load_gamble(config);
  const AssessmentSet assessments = load_assessments(config, q.n_vars());
  const PrevisionResult result = upper ? upper_prevision(q, assessments, config.degree)
                                       : lower_prevision(q, assessments, config.degree);
  emit(config, prevision_to_json(result),
       prevision_summary(upper ? "upper prevision" : "lower prevision", result));
  return 0;
}

int run_hierarchy(const RunConfig& config) {
  const Polynomial q = load_gamble(config);
  const AssessmentSet assessments = load_assessments(config, q.n_vars());
  const auto rows = hierarchy(q, assessments, config.d_min, config.d_max);

  std::ostringstream human;
  for (const auto& [d, value] : rows) {
    human << "d = " << d << ": " << fraction_and_float(value) << "\n";
  }
  if (!config.out_path.empty()) {
    std::ofstream out(config.out_path);
    if (!out) throw ParseError("cannot write " + config.out_path);
    write_hierarchy_csv(out, rows);
    human << "wrote " << config.out_path << "\n";
  } else if (!config.machine_json) {
    write_hierarchy_csv(std::cout, rows);
  }

  json machine;
  machine["rows"] = json::array();
  for (const auto& [d, value] : rows) {
    machine["rows"].push_back(json{{"d", d},
                                   {"num", numerator_string(value)},
                                   {"den", denominator_string(value)},
                                   {"value_float", to_double(value)}});
  }
  if (config.machine_json) {
    std::cout << human.str() << json_text(machine);
    return 0;
  }
  std::cout << human.str();
  return 0;
}

int run_update(const RunConfig& config) {
  const Polynomial q = load_gamble(config);
  AssessmentSet assessments = AssessmentSet::empty(q.n_vars());
  if (!config.state_path.empty()) {
    assessments = to_assessments(state_from_json(parse_json_file(config.state_path)));
  } else if (!config.gambles_path.empty()) {
    assessments = gambles_from_json(parse_json_file(config.gambles_path));
  }
  const Polynomial pi = parse_pi(config, q.n_vars());
  const PrevisionResult result = updated_lower_prevision(q, pi, assessments, config.degree,
                                                         config.allow_any_pi);
  emit(config, prevision_to_json(result), prevision_summary("updated lower prevision", result));
  return 0;
}

int run_state_validate(const RunConfig& config) {
  const MomentState state = state_from_json(parse_json_file(config.state_path));
  const StateValidity validity = is_valid_state(state);
  std::ostringstream human;
  json machine;
  machine["valid"] = validity.valid;
  if (validity.valid) {
    human << "valid Bernstein state (degree " << state.degree() << ")\n";
  } else {
    human << "INVALID state; violated generators:\n";
    machine["violations"] = json::array();
    for (const MultiIndex& alpha : validity.violations) {
      human << "  alpha = [";
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        human << (i ? "," : "") << alpha[i];
      }
      human << "]\n";
      machine["violations"].push_back(alpha);
    }
  }
  if (config.strict) {
    const bool extendable = validity.valid && is_extendable_state(state);
    machine["extendable_two_degrees"] = extendable;
    human << "strict (extendable two degrees up): " << (extendable ? "yes" : "no") << "\n";
  }
  emit(config, machine, human.str());
  return 0;
}

int run_state_expect(const RunConfig& config) {
  const MomentState state = state_from_json(parse_json_file(config.state_path));
  const Polynomial q = load_gamble(config);
  const Rational value = expectation(state, q);
  json machine{{"value", json{{"num", numerator_string(value)},
                              {"den", denominator_string(value)}}},
               {"value_float", to_double(value)}};
  emit(config, machine, "expectation = " + fraction_and_float(value) + "\n");
  return 0;
}

int run_oracle(const RunConfig& config) {
  const Polynomial q = load_gamble(config);
  const AssessmentSet assessments = load_assessments(config, q.n_vars());
  const int grid_k = parse_grid_k(config.grid_step);
  const OracleResult result = classical_oracle_prevision(q, assessments, grid_k);
  std::ostringstream human;
  human << "classical grid prevision (step 1/" << grid_k
        << ") = " << fraction_and_float(result.value) << "\n  at theta = (";
  json machine{{"value", json{{"num", numerator_string(result.value)},
                              {"den", denominator_string(result.value)}}},
               {"value_float", to_double(result.value)},
               {"argmin", json::array()}};
  for (std::size_t i = 0; i < result.argmin.size(); ++i) {
    human << (i ? ", " : "") << to_fraction_string(result.argmin[i]);
    machine["argmin"].push_back(to_fraction_string(result.argmin[i]));
  }
  human << ")\n";
  emit(config, machine, human.str());
  return 0;
}

Rational parse_demo_epsilon(const RunConfig& config) {
  const Rational epsilon = parse_rational(config.epsilon);
  if (epsilon <= 0 || epsilon >= Rational(1, 6)) {
    throw std::invalid_argument("epsilon must lie strictly between 0 and 1/6");
  }
  return epsilon;
}

int run_demo_bell(const RunConfig& config) {
  const Rational epsilon = parse_demo_epsilon(config);
  const int grid_k = parse_grid_k(config.grid_step);
  const Polynomial q = bell_gamble(epsilon);
  const MomentState state = bell_state();

  Rational grid_max = q.eval(std::vector<Rational>(3, Rational(0)));
  for (const MultiIndex& ticks : exponents_up_to_total(3, grid_k)) {
    std::vector<Rational> point(3);
    for (int i = 0; i < 3; ++i) point[i] = Rational(ticks[i], grid_k);
    grid_max = std::max(grid_max, q.eval(point));
  }
  const bool pointwise_negative = grid_max <= -epsilon;

  const StateValidity validity = is_valid_state(state);
  const Rational bell_value = expectation(state, q);
  const OracleResult oracle =
      classical_oracle_prevision(q, AssessmentSet::empty(3), grid_k);

  std::ostringstream human;
  human << "bell gamble with epsilon = " << to_fraction_string(epsilon) << "\n"
        << "  grid max over step-1/" << grid_k
        << " simplex grid: " << fraction_and_float(grid_max)
        << (pointwise_negative ? " <= -epsilon\n" : "  [FAIL] > -epsilon\n")
        << "  state is a valid Bernstein state: " << (validity.valid ? "yes" : "NO") << "\n"
        << "  state expectation of the gamble: " << fraction_and_float(bell_value)
        << (bell_value > 0 ? " > 0\n" : "  [FAIL] <= 0\n")
        << "  classical grid prevision: " << fraction_and_float(oracle.value)
        << (oracle.value <= -epsilon ? " <= -epsilon\n" : "  [FAIL] > -epsilon\n")
        << "a negative gamble carries a positive prevision: the inequality of"
           " classical probability is violated\n";

  json machine{{"epsilon", to_fraction_string(epsilon)},
               {"grid_max", to_fraction_string(grid_max)},
               {"state_valid", validity.valid},
               {"expectation", to_fraction_string(bell_value)},
               {"classical_prevision", to_fraction_string(oracle.value)}};
  emit(config, machine, human.str());

  const bool all_good =
      pointwise_negative && validity.valid && bell_value > 0 && oracle.value <= -epsilon;
  return all_good ? 0 : kExitLp;
}

int run_demo_socks(const RunConfig& config) {
  const Rational epsilon = parse_demo_epsilon(config);
  const MomentState state = bell_state();
  const AssessmentSet bridge = to_assessments(state);

  const Polynomial heads_right =
      Polynomial::variable(3, 0) + Polynomial::variable(3, 1);
  const Polynomial tails_right =
      Polynomial::constant(3, 1) - heads_right;
  const Polynomial heads_left =
      Polynomial::variable(3, 0) + Polynomial::variable(3, 2);
  const Polynomial tails_left = Polynomial::constant(3, 1) - heads_left;

  struct Case {
    const char* q_name;
    const char* pi_name;
    const Polynomial* q;
    const Polynomial* pi;
  };
  const Case cases[] = {{"Heads(right)", "Heads(left)", &heads_right, &heads_left},
                        {"Tails(right)", "Heads(left)", &tails_right, &heads_left},
                        {"Heads(right)", "Tails(left)", &heads_right, &tails_left},
                        {"Tails(right)", "Tails(left)", &tails_right, &tails_left}};

  std::ostringstream human;
  human << "two-coin experiment, epsilon = " << to_fraction_string(epsilon) << "\n"
        << "posterior prices after the left coin is observed (dual | primal):\n";
  json machine;
  machine["epsilon"] = to_fraction_string(epsilon);
  machine["updates"] = json::array();
  bool agree = true;
  for (const Case& c : cases) {
    const Rational dual = conditional_value(state, *c.q, *c.pi);
    const PrevisionResult primal = updated_lower_prevision(*c.q, *c.pi, bridge, 2);
    agree = agree && !primal.vacuous && primal.value == dual;
    human << "  q = " << c.q_name << ", pi = " << c.pi_name << " : "
          << to_fraction_string(dual) << " | "
          << (primal.vacuous ? std::string("vacuous") : to_fraction_string(primal.value))
          << "\n";
    machine["updates"].push_back(json{{"q", c.q_name},
                                      {"pi", c.pi_name},
                                      {"dual", to_fraction_string(dual)},
                                      {"primal", primal.vacuous
                                                     ? std::string("vacuous")
                                                     : to_fraction_string(primal.value)}});
  }
  human << (agree ? "dual and primal routes agree exactly\n"
                  : "[FAIL] dual and primal routes disagree\n");

  const Rational bell_value = expectation(state, bell_gamble(epsilon));
  human << "state expectation of the bell gamble: " << fraction_and_float(bell_value)
        << "\n";
  machine["bell_expectation"] = to_fraction_string(bell_value);

  const auto marginals = marginal_moments(state);
  human << "marginal moments E[Hr], E[Hl], E[Hr^2], E[Hl^2]: ";
  machine["marginals"] = json::array();
  for (std::size_t i = 0; i < marginals.size(); ++i) {
    human << (i ? ", " : "") << to_fraction_string(marginals[i]);
    machine["marginals"].push_back(to_fraction_string(marginals[i]));
  }
  human << "\n";

  const MomentState mixture = mixture_moments(classical_socks_mixture(), 2);
  const auto mixture_marginals = marginal_moments(mixture);
  human << "classical mixture marginals:                ";
  machine["mixture_marginals"] = json::array();
  for (std::size_t i = 0; i < mixture_marginals.size(); ++i) {
    human << (i ? ", " : "") << to_fraction_string(mixture_marginals[i]);
    machine["mixture_marginals"].push_back(to_fraction_string(mixture_marginals[i]));
  }
  const Rational mixture_cross = mixture.moment({0, 1, 1});
  const Rational state_cross = state.moment({0, 1, 1});
  human << "\nmixture z011 = " << to_fraction_string(mixture_cross) << " vs state z011 = "
        << to_fraction_string(state_cross)
        << ": no classical mixture reproduces the state\n";
  machine["mixture_z011"] = to_fraction_string(mixture_cross);
  machine["state_z011"] = to_fraction_string(state_cross);

  emit(config, machine, human.str());
  return agree ? 0 : kExitLp;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact desirable-gamble engine on the probability simplex"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", config.machine_json, "also emit machine JSON");
    sub->add_option("--out", config.out_path, "output file path");
  };

  CLI::App* check = app.add_subcommand("check", "consistency of a gamble set");
  check->add_option("--gambles", config.gambles_path, "gamble set JSON")->required();
  check->add_option("--degree", config.degree, "cone degree")->required();
  add_common(check);

  CLI::App* prevision = app.add_subcommand("prevision", "lower prevision of a gamble");
  prevision->add_option("--gamble", config.gamble_path, "gamble JSON")->required();
  prevision->add_option("--gambles", config.gambles_path, "gamble set JSON");
  prevision->add_option("--degree", config.degree, "cone degree")->required();
  add_common(prevision);

  CLI::App* upper = app.add_subcommand("upper", "upper prevision of a gamble");
  upper->add_option("--gamble", config.gamble_path, "gamble JSON")->required();
  upper->add_option("--gambles", config.gambles_path, "gamble set JSON");
  upper->add_option("--degree", config.degree, "cone degree")->required();
  add_common(upper);

  CLI::App* hier = app.add_subcommand("hierarchy", "lower previsions over a degree range");
  hier->add_option("--gamble", config.gamble_path, "gamble JSON")->required();
  hier->add_option("--gambles", config.gambles_path, "gamble set JSON");
  hier->add_option("--dmin", config.d_min, "first degree")->required();
  hier->add_option("--dmax", config.d_max, "last degree")->required();
  add_common(hier);

  CLI::App* update = app.add_subcommand("update", "posterior lower prevision");
  update->add_option("--gamble", config.gamble_path, "gamble JSON")->required();
  update->add_option("--gambles", config.gambles_path, "gamble set JSON");
  update->add_option("--state", config.state_path,
                     "moment state JSON (encoded as assessments)");
  update->add_option("--pi", config.pi_indices,
                     "subset-sum likelihood: comma-separated indices, 1..n for "
                     "theta_i, n+1 for the complement");
  update->add_option("--pi-file", config.pi_path, "likelihood polynomial JSON");
  update->add_flag("--allow-any-pi", config.allow_any_pi,
                   "accept likelihoods beyond the degree-1 subset sums");
  update->add_option("--degree", config.degree, "cone degree")->required();
  add_common(update);

  CLI::App* validate = app.add_subcommand("state-validate", "Bernstein-state check");
  validate->add_option("--state", config.state_path, "moment state JSON")->required();
  validate->add_flag("--strict", config.strict, "also test two-degree extendability");
  add_common(validate);

  CLI::App* expect = app.add_subcommand("state-expect", "expectation under a state");
  expect->add_option("--state", config.state_path, "moment state JSON")->required();
  expect->add_option("--gamble", config.gamble_path, "gamble JSON")->required();
  add_common(expect);

  CLI::App* oracle = app.add_subcommand("oracle", "classical grid prevision");
  oracle->add_option("--gamble", config.gamble_path, "gamble JSON")->required();
  oracle->add_option("--gambles", config.gambles_path, "gamble set JSON");
  oracle->add_option("--grid-step", config.grid_step, "grid step 1/k")->required();
  add_common(oracle);

  CLI::App* bell = app.add_subcommand("demo-bell", "negative gamble, positive prevision");
  bell->add_option("--epsilon", config.epsilon, "rational in (0, 1/6)");
  bell->add_option("--grid-step", config.grid_step, "grid step 1/k");
  add_common(bell);

  CLI::App* socks = app.add_subcommand("demo-socks", "two-coin entanglement experiment");
  socks->add_option("--epsilon", config.epsilon, "rational in (0, 1/6)");
  add_common(socks);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (app.got_subcommand(check)) return run_check(config);
    if (app.got_subcommand(prevision)) return run_prevision(config, false);
    if (app.got_subcommand(upper)) return run_prevision(config, true);
    if (app.got_subcommand(hier)) return run_hierarchy(config);
    if (app.got_subcommand(update)) return run_update(config);
    if (app.got_subcommand(validate)) return run_state_validate(config);
    if (app.got_subcommand(expect)) return run_state_expect(config);
    if (app.got_subcommand(oracle)) return run_oracle(config);
    if (app.got_subcommand(bell)) return run_demo_bell(config);
    if (app.got_subcommand(socks)) return run_demo_socks(config);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DegreeError& e) {
    std::cerr << "degree error: " << e.what() << "\n";
    return kExitDegree;
  } catch (const LpError& e) {
    std::cerr << "lp error: " << e.what() << "\n";
    return kExitLp;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLp;
  }
  return 0;
}

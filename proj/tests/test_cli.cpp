#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "berncone/json_io.hpp"
#include "berncone/moments.hpp"

using namespace berncone;

namespace {

#ifndef BERNCONE_CLI_PATH
#error "BERNCONE_CLI_PATH must point at the built binary"
#endif

struct RunOutcome {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunOutcome run_cli(const std::string& args) {
  const std::string command = std::string(BERNCONE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunOutcome outcome;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    outcome.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  outcome.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return outcome;
}

std::string temp_path(const std::string& name) {
  return std::string("cli_tmp_") + name;
}

std::string write_temp(const std::string& name, const nlohmann::json& j) {
  const std::string path = temp_path(name);
  write_json_file(path, j);
  return path;
}

Polynomial counterexample_gamble() {
  Polynomial q(2);
  q.add_term({2, 0}, 1);
  q.add_term({1, 1}, -1);
  q.add_term({0, 2}, 1);
  return q;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("check: consistent set exits 0, sure loss exits 2 with a witness") {
  const std::string good = write_temp(
      "good_gambles.json",
      gambles_to_json(AssessmentSet::of(2, {Polynomial::variable(2, 0)})));
  CHECK(run_cli("check --gambles " + good + " --degree 2").exit_code == 0);

  const std::string bad = write_temp(
      "bad_gambles.json",
      gambles_to_json(AssessmentSet::of(2, {Polynomial::constant(2, Rational(-1, 2))})));
  const RunOutcome outcome = run_cli("check --gambles " + bad + " --degree 2");
  CHECK(outcome.exit_code == 2);
  CHECK(outcome.output.find("lambda[0] = 2") != std::string::npos);
}

TEST_CASE("error exit codes: parse 64, degree 65, lp 70") {
  std::ofstream("cli_tmp_garbage.json") << "{ not json";
  CHECK(run_cli("check --gambles cli_tmp_garbage.json --degree 2").exit_code == 64);
  CHECK(run_cli("check --gambles cli_tmp_missing.json --degree 2").exit_code == 64);
  CHECK(run_cli("check").exit_code == 64);  // missing required flags

  const std::string q = write_temp("quad.json", polynomial_to_json(counterexample_gamble()));
  CHECK(run_cli("prevision --gamble " + q + " --degree 1").exit_code == 65);

  const std::string bad = write_temp(
      "bad_gambles2.json",
      gambles_to_json(AssessmentSet::of(2, {Polynomial::constant(2, Rational(-1, 2))})));
  CHECK(run_cli("prevision --gamble " + q + " --gambles " + bad + " --degree 2").exit_code ==
        70);
}

TEST_CASE("hierarchy writes the expected csv") {
  const std::string q = write_temp("hier_q.json", polynomial_to_json(counterexample_gamble()));
  const std::string csv = temp_path("conv.csv");
  const RunOutcome outcome =
      run_cli("hierarchy --gamble " + q + " --dmin 2 --dmax 4 --out " + csv);
  CHECK(outcome.exit_code == 0);
  const std::string content = read_file(csv);
  CHECK(content.rfind("d,value_num,value_den,value_float\n2,-1,2,-0.5\n", 0) == 0);
}

TEST_CASE("prevision json output re-parses and matches the library") {
  const std::string q = write_temp("prev_q.json", polynomial_to_json(counterexample_gamble()));
  const std::string out = temp_path("prev_out.json");
  const RunOutcome outcome =
      run_cli("prevision --gamble " + q + " --degree 2 --json --out " + out);
  CHECK(outcome.exit_code == 0);

  const nlohmann::json machine = parse_json_file(out);
  CHECK(machine.at("value").at("num") == "-1");
  CHECK(machine.at("value").at("den") == "2");
  const Certificate certificate = certificate_from_json(machine.at("certificate"));
  const Polynomial residual =
      counterexample_gamble() - Polynomial::constant(2, Rational(-1, 2));
  CHECK(expand_certificate_simplex(certificate, 2) == residual);
}

TEST_CASE("byte-identical reruns") {
  const std::string q = write_temp("rerun_q.json", polynomial_to_json(counterexample_gamble()));
  const std::string first = run_cli("hierarchy --gamble " + q + " --dmin 2 --dmax 5").output;
  const std::string second = run_cli("hierarchy --gamble " + q + " --dmin 2 --dmax 5").output;
  CHECK(first == second);
  CHECK(!first.empty());

  const std::string socks1 = run_cli("demo-socks --epsilon 1/100 --json").output;
  const std::string socks2 = run_cli("demo-socks --epsilon 1/100 --json").output;
  CHECK(socks1 == socks2);
}

TEST_CASE("demo-socks prints the entanglement table and the mismatch") {
  const RunOutcome outcome = run_cli("demo-socks --epsilon 1/100");
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.output.find("Heads(right), pi = Heads(left) : 1 | 1") != std::string::npos);
  CHECK(outcome.output.find("Tails(right), pi = Tails(left) : 1 | 1") != std::string::npos);
  CHECK(outcome.output.find("1/2, 1/2, 1/3, 1/3") != std::string::npos);
  CHECK(outcome.output.find("mixture z011 = 0 vs state z011 = 1/6") != std::string::npos);
  CHECK(outcome.output.find("47/300") != std::string::npos);
}

TEST_CASE("demo-bell epsilon validation and report") {
  CHECK(run_cli("demo-bell --epsilon 1/6").exit_code == 64);
  CHECK(run_cli("demo-bell --epsilon 0").exit_code == 64);

  const RunOutcome outcome = run_cli("demo-bell --epsilon 1/12 --grid-step 1/20");
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.output.find("1/12") != std::string::npos);
  CHECK(outcome.output.find("[FAIL]") == std::string::npos);
}

TEST_CASE("state commands round trip through files") {
  const std::string state = write_temp("bell.json", state_to_json(bell_state()));
  CHECK(run_cli("state-validate --state " + state).exit_code == 0);

  const std::string q =
      write_temp("bell_gamble.json", polynomial_to_json(bell_gamble(Rational(1, 12))));
  const RunOutcome outcome =
      run_cli("state-expect --state " + state + " --gamble " + q);
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.output.find("1/12") != std::string::npos);  // 1/6 - 1/12

  // emitted state files re-parse to the same value
  const MomentState reparsed = state_from_json(parse_json_file(state));
  CHECK(reparsed.moments() == bell_state().moments());
}

TEST_CASE("update subcommand accepts subset-sum indices") {
  const Polynomial heads_r = Polynomial::variable(3, 0) + Polynomial::variable(3, 1);
  const std::string q = write_temp("update_q.json", polynomial_to_json(heads_r));
  const std::string state = write_temp("bell2.json", state_to_json(bell_state()));
  const RunOutcome outcome =
      run_cli("update --gamble " + q + " --pi 1,3 --state " + state + " --degree 2");
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.output.find("updated lower prevision = 1 ") != std::string::npos);

  // index n+1 selects the complement 1 - sum(theta); conditioning on both
  // coins landing tails makes heads-on-the-right worthless
  const RunOutcome tails =
      run_cli("update --gamble " + q + " --pi 4 --state " + state + " --degree 2");
  CHECK(tails.exit_code == 0);
  CHECK(tails.output.find("updated lower prevision = 0 ") != std::string::npos);
}

TEST_CASE("upper subcommand") {
  const std::string q = write_temp("upper_q.json", polynomial_to_json(counterexample_gamble()));
  const RunOutcome outcome = run_cli("upper --gamble " + q + " --degree 2");
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.output.find("upper prevision = 1 ") != std::string::npos);
}

TEST_CASE("update accepts polynomial likelihood files behind the explicit flag") {
  const Polynomial heads_r = Polynomial::variable(3, 0) + Polynomial::variable(3, 1);
  const std::string q = write_temp("pif_q.json", polynomial_to_json(heads_r));
  // pi = t1 + t3 written out as a polynomial file instead of indices
  const Polynomial pi = Polynomial::variable(3, 0) + Polynomial::variable(3, 2);
  const std::string pi_file = write_temp("pif_pi.json", polynomial_to_json(pi));
  const std::string state = write_temp("pif_bell.json", state_to_json(bell_state()));

  // a subset sum passes even without the flag
  CHECK(run_cli("update --gamble " + q + " --pi-file " + pi_file + " --state " + state +
                " --degree 2")
            .exit_code == 0);

  // a non-subset-sum likelihood is rejected without the flag, accepted with it
  const Polynomial scaled = Rational(1, 2) * pi;
  const std::string scaled_file = write_temp("pif_scaled.json", polynomial_to_json(scaled));
  CHECK(run_cli("update --gamble " + q + " --pi-file " + scaled_file + " --state " + state +
                " --degree 2")
            .exit_code == 64);
  const RunOutcome allowed =
      run_cli("update --gamble " + q + " --pi-file " + scaled_file + " --state " + state +
              " --degree 2 --allow-any-pi");
  CHECK(allowed.exit_code == 0);
  CHECK(allowed.output.find("updated lower prevision = 1 ") != std::string::npos);

  // likelihoods that go negative on the simplex are refuted at grid points
  const std::string negative_file =
      write_temp("pif_negative.json", polynomial_to_json(Rational(-1) * pi));
  CHECK(run_cli("update --gamble " + q + " --pi-file " + negative_file + " --state " + state +
                " --degree 2 --allow-any-pi")
            .exit_code == 64);
}

TEST_CASE("oracle subcommand") {
  const std::string q = write_temp("oracle_q.json", polynomial_to_json(counterexample_gamble()));
  const RunOutcome outcome = run_cli("oracle --gamble " + q + " --grid-step 1/16");
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.output.find("= 0 ") != std::string::npos);
  CHECK(run_cli("oracle --gamble " + q + " --grid-step 2/3").exit_code == 64);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "berncone/errors.hpp"
#include "berncone/json_io.hpp"
#include "berncone/moments.hpp"
#include "test_support.hpp"

using namespace berncone;

namespace {

MomentState dirac_at_vertex() {
  std::vector<DiracMixture::Atom> atoms{{Rational(1), {Rational(1), Rational(0), Rational(0)}}};
  return mixture_moments(DiracMixture(std::move(atoms)), 2);
}

}  // namespace

TEST_CASE("expectations under the bell state") {
  const MomentState state = bell_state();
  CHECK(expectation(state, bell_gamble(Rational(1, 100))) ==
        Rational(1, 6) - Rational(1, 100));
  CHECK(expectation(state, Polynomial::constant(3, 1)) == 1);

  const Polynomial heads_r = Polynomial::variable(3, 0) + Polynomial::variable(3, 1);
  CHECK(expectation(state, heads_r * heads_r) == Rational(1, 3));

  Polynomial cubic(3);
  cubic.add_term({3, 0, 0}, 1);
  CHECK_THROWS_AS(expectation(state, cubic), DegreeError);
}

TEST_CASE("expectation is linear") {
  const MomentState state = bell_state();
  testing::Rng rng(503);
  for (int trial = 0; trial < 25; ++trial) {
    const Polynomial p = testing::random_polynomial(rng, 3, 2);
    const Polynomial q = testing::random_polynomial(rng, 3, 2);
    const Rational a = testing::random_rational(rng);
    const Rational b = testing::random_rational(rng);
    CHECK(expectation(state, a * p + b * q) ==
          a * expectation(state, p) + b * expectation(state, q));
  }
}

TEST_CASE("state validity") {
  CHECK(is_valid_state(bell_state()).valid);
  CHECK(is_valid_state(dirac_at_vertex()).valid);

  // flip z011 to -1/6: the generator t2 t3 (alpha = (0,1,1,0)) goes negative
  auto moments = bell_state().moments();
  moments[{0, 1, 1}] = Rational(-1, 6);
  const MomentState corrupted(3, 2, std::move(moments));
  const StateValidity verdict = is_valid_state(corrupted);
  CHECK(!verdict.valid);
  const MultiIndex bad_alpha{0, 1, 1, 0};
  CHECK(std::count(verdict.violations.begin(), verdict.violations.end(), bad_alpha) == 1);
}

TEST_CASE("moment table construction guards") {
  auto moments = bell_state().moments();
  moments.erase({2, 0, 0});
  CHECK_THROWS_AS(MomentState(3, 2, moments), std::invalid_argument);

  auto wrong_unit = bell_state().moments();
  wrong_unit[{0, 0, 0}] = Rational(1, 2);
  CHECK_THROWS_AS(MomentState(3, 2, wrong_unit), std::invalid_argument);
}

TEST_CASE("credal membership") {
  const MomentState state = bell_state();
  CHECK(credal_membership(state, AssessmentSet::empty(3)));
  CHECK(credal_membership(state,
                          AssessmentSet::of(3, {bell_gamble(Rational(1, 100))})));
  CHECK(!credal_membership(dirac_at_vertex(),
                           AssessmentSet::of(3, {bell_gamble(Rational(1, 100))})));
}

TEST_CASE("conditional values reproduce the entanglement table") {
  const MomentState state = bell_state();
  const Polynomial heads_r = Polynomial::variable(3, 0) + Polynomial::variable(3, 1);
  const Polynomial heads_l = Polynomial::variable(3, 0) + Polynomial::variable(3, 2);
  const Polynomial tails_r = Polynomial::constant(3, 1) - heads_r;
  const Polynomial tails_l = Polynomial::constant(3, 1) - heads_l;

  CHECK(conditional_value(state, heads_r, heads_l) == 1);
  CHECK(conditional_value(state, tails_r, heads_l) == 0);
  CHECK(conditional_value(state, heads_r, tails_l) == 0);
  CHECK(conditional_value(state, tails_r, tails_l) == 1);

  CHECK(conditional_value(state, Polynomial::constant(3, Rational(5, 9)), heads_l) ==
        Rational(5, 9));

  // conditioning on a prevision-zero likelihood is rejected; t2^2 has
  // expectation zero under the bell state
  Polynomial null_pi(3);
  null_pi.add_term({0, 2, 0}, 1);
  CHECK_THROWS_AS(conditional_value(state, heads_r, null_pi), LpError);
}

TEST_CASE("defining identity of the conditional value") {
  const MomentState state = bell_state();
  testing::Rng rng(509);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial q = testing::random_polynomial(rng, 3, 1);
    const Polynomial pi = Polynomial::variable(3, 0) + Polynomial::variable(3, 2);
    const Rational lambda0 = conditional_value(state, q, pi);
    CHECK(expectation(state, (q - Polynomial::constant(3, lambda0)) * pi) == 0);
  }
}

TEST_CASE("primal and dual updates agree on the bell state") {
  const MomentState state = bell_state();
  const AssessmentSet bridge = to_assessments(state);
  const Polynomial heads_r = Polynomial::variable(3, 0) + Polynomial::variable(3, 1);
  const Polynomial heads_l = Polynomial::variable(3, 0) + Polynomial::variable(3, 2);
  const Polynomial tails_r = Polynomial::constant(3, 1) - heads_r;
  const Polynomial tails_l = Polynomial::constant(3, 1) - heads_l;
  for (const Polynomial* q : {&heads_r, &tails_r}) {
    for (const Polynomial* pi : {&heads_l, &tails_l}) {
      const PrevisionResult primal = updated_lower_prevision(*q, *pi, bridge, 2);
      REQUIRE(!primal.vacuous);
      CHECK(primal.value == conditional_value(state, *q, *pi));
    }
  }
}

TEST_CASE("mixture moments") {
  const MomentState socks = mixture_moments(classical_socks_mixture(), 2);
  CHECK(socks.moment({1, 0, 0}) == Rational(1, 2));
  const Rational second = socks.moment({2, 0, 0});
  const Rational drift = second - Rational(1, 3);
  CHECK(drift < Rational(1, 100000));
  CHECK(drift > Rational(-1, 100000));
  CHECK(socks.moment({0, 1, 1}) == 0);
  CHECK(bell_state().moment({0, 1, 1}) == Rational(1, 6));
  CHECK(is_valid_state(socks).valid);

  const MomentState vertex = dirac_at_vertex();
  CHECK(vertex.moment({2, 0, 0}) == 1);
  CHECK(vertex.moment({0, 1, 0}) == 0);

  std::vector<DiracMixture::Atom> pair{
      {Rational(1, 2), {Rational(0), Rational(0), Rational(0)}},
      {Rational(1, 2), {Rational(1), Rational(0), Rational(0)}}};
  const MomentState two = mixture_moments(DiracMixture(std::move(pair)), 1);
  CHECK(two.moment({1, 0, 0}) == Rational(1, 2));
  CHECK(two.moment({0, 1, 0}) == 0);
  CHECK(two.moment({0, 0, 1}) == 0);
}

TEST_CASE("mixture construction guards") {
  CHECK_THROWS_AS(DiracMixture({}), std::invalid_argument);
  CHECK_THROWS_AS(
      DiracMixture({{Rational(1, 2), {Rational(0), Rational(0), Rational(0)}}}),
      std::invalid_argument);  // weights must sum to 1
  CHECK_THROWS_AS(
      DiracMixture({{Rational(1), {Rational(2, 3), Rational(2, 3), Rational(0)}}}),
      std::invalid_argument);  // outside the simplex
}

TEST_CASE("random dirac mixtures are valid states") {
  testing::Rng rng(521);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> n_pick(1, 3);
    std::uniform_int_distribution<int> atoms_pick(1, 4);
    std::uniform_int_distribution<int> d_pick(0, 4);
    const int n = n_pick(rng);
    const int atom_count = atoms_pick(rng);
    std::vector<DiracMixture::Atom> atoms;
    for (int a = 0; a < atom_count; ++a) {
      atoms.push_back({Rational(1, atom_count), testing::random_simplex_point(rng, n)});
    }
    const MomentState state = mixture_moments(DiracMixture(std::move(atoms)), d_pick(rng));
    CHECK(is_valid_state(state).valid);
  }
}

TEST_CASE("weak duality between certified polynomials and mixture states") {
  testing::Rng rng(523);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> n_pick(1, 3);
    std::uniform_int_distribution<int> d_pick(1, 4);
    const int n = n_pick(rng);
    const int d = d_pick(rng);
    const Polynomial member = testing::random_cone_member(rng, n, d);
    REQUIRE(simplex_membership(member, d).has_value());

    std::uniform_int_distribution<int> atoms_pick(1, 4);
    const int atom_count = atoms_pick(rng);
    std::vector<DiracMixture::Atom> atoms;
    for (int a = 0; a < atom_count; ++a) {
      atoms.push_back({Rational(1, atom_count), testing::random_simplex_point(rng, n)});
    }
    const MomentState state = mixture_moments(DiracMixture(std::move(atoms)), d);
    CHECK(expectation(state, member) >= 0);
  }
}

TEST_CASE("marginal moments") {
  const auto bell = marginal_moments(bell_state());
  CHECK(bell[0] == Rational(1, 2));
  CHECK(bell[1] == Rational(1, 2));
  CHECK(bell[2] == Rational(1, 3));
  CHECK(bell[3] == Rational(1, 3));

  const auto vertex = marginal_moments(dirac_at_vertex());
  for (const Rational& value : vertex) CHECK(value == 1);

  const auto socks = marginal_moments(mixture_moments(classical_socks_mixture(), 2));
  CHECK(socks[0] == Rational(1, 2));
  CHECK(socks[1] == Rational(1, 2));
  for (int i = 2; i < 4; ++i) {
    const Rational drift = socks[i] - Rational(1, 3);
    CHECK(drift < Rational(1, 100000));
    CHECK(drift > Rational(-1, 100000));
  }

  CHECK_THROWS_AS(marginal_moments(mixture_moments(classical_socks_mixture(), 1)),
                  DegreeError);
}

TEST_CASE("extendability: dirac states extend, the bell state does not") {
  CHECK(is_extendable_state(dirac_at_vertex()));
  CHECK(is_extendable_state(mixture_moments(classical_socks_mixture(), 2)));
  // valid at degree 2, yet no degree-4 extension exists: the two coins are
  // entangled in a way no classical-looking moment sequence can continue
  CHECK(!is_extendable_state(bell_state()));
  // extending by zero degrees reduces to plain validity
  CHECK(is_extendable_state(bell_state(), 0));
}

TEST_CASE("state json round trip") {
  const MomentState state = bell_state();
  const MomentState back = state_from_json(state_to_json(state));
  CHECK(back.n_vars() == state.n_vars());
  CHECK(back.degree() == state.degree());
  CHECK(back.moments() == state.moments());
}

#include "berncone/moments.hpp"

#include <algorithm>

#include "berncone/errors.hpp"
#include "berncone/simplex_lp.hpp"

namespace berncone {

MomentState::MomentState(int n_vars, int degree, std::map<MultiIndex, Rational> moments)
    : n_vars_(n_vars), degree_(degree), moments_(std::move(moments)) {
  if (n_vars < 1) throw std::invalid_argument("state needs at least one variable");
  if (degree < 0) throw std::invalid_argument("negative state degree");
  for (const MultiIndex& gamma : exponents_up_to_total(n_vars, degree)) {
    if (!moments_.count(gamma)) {
      throw std::invalid_argument("moment table incomplete: missing an exponent entry");
    }
  }
  for (const auto& [gamma, value] : moments_) {
    if (static_cast<int>(gamma.size()) != n_vars || total_degree(gamma) > degree) {
      throw std::invalid_argument("moment exponent outside the declared degree");
    }
  }
  if (moments_.at(MultiIndex(n_vars, 0)) != 1) {
    throw std::invalid_argument("a state must preserve the unit: L(1) = 1");
  }
}

const Rational& MomentState::moment(const MultiIndex& gamma) const {
  auto it = moments_.find(gamma);
  if (it == moments_.end()) throw DegreeError("moment beyond the stored degree");
  return it->second;
}

DiracMixture::DiracMixture(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("mixture needs at least one atom");
  n_vars_ = static_cast<int>(atoms_.front().second.size());
  Rational total = 0;
  for (const auto& [weight, point] : atoms_) {
    if (static_cast<int>(point.size()) != n_vars_) {
      throw std::invalid_argument("mixture atoms live in different variable counts");
    }
    if (weight < 0) throw std::invalid_argument("negative mixture weight");
    total += weight;
    Rational coordinate_sum = 0;
    for (const Rational& x : point) {
      if (x < 0) throw std::invalid_argument("mixture atom outside the simplex");
      coordinate_sum += x;
    }
    if (coordinate_sum > 1) throw std::invalid_argument("mixture atom outside the simplex");
  }
  if (total != 1) throw std::invalid_argument("mixture weights must sum to 1 exactly");
}

Rational expectation(const MomentState& state, const Polynomial& p) {
  if (p.n_vars() != state.n_vars()) {
    throw std::invalid_argument("gamble and state variable counts differ");
  }
  Rational value = 0;
  for (const auto& [gamma, coefficient] : p.terms()) {
    value += coefficient * state.moment(gamma);
  }
  return value;
}

StateValidity is_valid_state(const MomentState& state) {
  StateValidity report;
  for (const MultiIndex& alpha : exponents_up_to_total(state.n_vars() + 1, state.degree())) {
    const Polynomial generator =
        bernstein_generator(alpha, state.n_vars(), total_degree(alpha));
    if (expectation(state, generator) < 0) {
      report.valid = false;
      report.violations.push_back(alpha);
    }
  }
  return report;
}

bool is_extendable_state(const MomentState& state, int extra_degree) {
  if (extra_degree < 0) throw std::invalid_argument("negative degree extension");
  const int n = state.n_vars();
  const int elevated = state.degree() + extra_degree;

  // Unknown moments |gamma| > degree become free variables (split into +-);
  // each generator constraint L(gen_alpha) >= 0, |alpha| <= elevated, gets a
  // slack: known + sum(unknown coefficients) - s = 0.
  std::vector<MultiIndex> unknowns;
  for (const MultiIndex& gamma : exponents_up_to_total(n, elevated)) {
    if (total_degree(gamma) > state.degree()) unknowns.push_back(gamma);
  }
  const auto alphas = exponents_up_to_total(n + 1, elevated);
  const int rows = static_cast<int>(alphas.size());
  const int split = static_cast<int>(unknowns.size());
  using Matrix = RationalSimplex::Matrix;
  using Vector = RationalSimplex::Vector;
  Matrix A = Matrix::Zero(rows, 2 * split + rows);
  Vector b = Vector::Zero(rows);

  for (int r = 0; r < rows; ++r) {
    const Polynomial generator = bernstein_generator(alphas[r], n, total_degree(alphas[r]));
    Rational known = 0;
    for (const auto& [gamma, coefficient] : generator.terms()) {
      if (total_degree(gamma) <= state.degree()) {
        known += coefficient * state.moment(gamma);
      } else {
        const int j = static_cast<int>(
            std::lower_bound(unknowns.begin(), unknowns.end(), gamma) - unknowns.begin());
        A(r, 2 * j) += coefficient;
        A(r, 2 * j + 1) -= coefficient;
      }
    }
    A(r, 2 * split + r) = -1;
    b(r) = -known;
  }
  return RationalSimplex::find_feasible(std::move(A), std::move(b)).status ==
         LpStatus::optimal;
}

bool credal_membership(const MomentState& state, const AssessmentSet& assessments) {
  if (state.n_vars() != assessments.n_vars) {
    throw std::invalid_argument("state and assessment variable counts differ");
  }
  const StateValidity validity = is_valid_state(state);
  if (!validity.valid) throw std::invalid_argument("not a valid Bernstein state");
  for (const Polynomial& g : assessments.gambles) {
    if (expectation(state, g) < 0) return false;
  }
  return true;
}

Rational conditional_value(const MomentState& state, const Polynomial& q,
                           const Polynomial& pi) {
  const Rational likelihood = expectation(state, pi);
  if (likelihood == 0) {
    throw LpError("conditioning on a prevision-zero likelihood");
  }
  return expectation(state, q * pi) / likelihood;
}

MomentState mixture_moments(const DiracMixture& mixture, int degree) {
  std::map<MultiIndex, Rational> moments;
  for (const MultiIndex& gamma : exponents_up_to_total(mixture.n_vars(), degree)) {
    Rational z = 0;
    for (const auto& [weight, point] : mixture.atoms()) {
      Rational monomial = weight;
      for (std::size_t i = 0; i < point.size(); ++i) {
        for (int k = 0; k < gamma[i]; ++k) monomial *= point[i];
      }
      z += monomial;
    }
    moments.emplace(gamma, z);
  }
  return MomentState(mixture.n_vars(), degree, std::move(moments));
}

std::array<Rational, 4> marginal_moments(const MomentState& state) {
  if (state.n_vars() != 3) throw std::invalid_argument("marginals need the two-coin space");
  if (state.degree() < 2) throw DegreeError("marginals need degree >= 2 moments");
  const Polynomial right = Polynomial::variable(3, 0) + Polynomial::variable(3, 1);
  const Polynomial left = Polynomial::variable(3, 0) + Polynomial::variable(3, 2);
  return {expectation(state, right), expectation(state, left),
          expectation(state, right * right), expectation(state, left * left)};
}

AssessmentSet to_assessments(const MomentState& state) {
  std::vector<Polynomial> gambles;
  for (const MultiIndex& gamma : exponents_up_to_total(state.n_vars(), state.degree())) {
    if (total_degree(gamma) == 0) continue;
    Polynomial monomial(state.n_vars());
    monomial.add_term(gamma, 1);
    const Polynomial pinned = monomial - Polynomial::constant(state.n_vars(),
                                                              state.moment(gamma));
    gambles.push_back(pinned);
    gambles.push_back(-pinned);
  }
  return AssessmentSet::of(state.n_vars(), std::move(gambles));
}

MomentState bell_state() {
  std::map<MultiIndex, Rational> z;
  for (const MultiIndex& gamma : exponents_up_to_total(3, 2)) z.emplace(gamma, 0);
  z[{0, 0, 0}] = 1;
  z[{1, 0, 0}] = Rational(1, 3);
  z[{0, 1, 0}] = Rational(1, 6);
  z[{0, 0, 1}] = Rational(1, 6);
  z[{2, 0, 0}] = Rational(1, 3);
  z[{0, 1, 1}] = Rational(1, 6);
  return MomentState(3, 2, std::move(z));
}

Polynomial bell_gamble(const Rational& epsilon) {
  const Polynomial t1 = Polynomial::variable(3, 0);
  const Polynomial t2 = Polynomial::variable(3, 1);
  const Polynomial t3 = Polynomial::variable(3, 2);
  const Polynomial right = t1 + t2;
  const Polynomial swing =
      Rational(-2) * t1 + Rational(-2) * t2 + Polynomial::constant(3, 1);
  return -(right * right) - (t1 + t3) * swing - Polynomial::constant(3, epsilon);
}

DiracMixture classical_socks_mixture() {
  // (3 -+ sqrt(3))/6 rounded to the nearest rational with denominator 10^6.
  const Rational low(211325, 1000000);
  const Rational high(788675, 1000000);
  std::vector<DiracMixture::Atom> atoms;
  atoms.push_back({Rational(1, 2), {low, Rational(0), Rational(0)}});
  atoms.push_back({Rational(1, 2), {high, Rational(0), Rational(0)}});
  return DiracMixture(std::move(atoms));
}

}  // namespace berncone

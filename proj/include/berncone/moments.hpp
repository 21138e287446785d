#pragma once

#include <array>

#include "berncone/coherence.hpp"

namespace berncone {

/// Unit-preserving linear functional on polynomials of degree <= degree,
/// given by its moments z_gamma = L(theta^gamma) on every monomial. The
/// moment table is complete: each |gamma| <= degree has an entry, and the
/// zero index carries 1.
class MomentState {
 public:
  MomentState(int n_vars, int degree, std::map<MultiIndex, Rational> moments);

  int n_vars() const { return n_vars_; }
  int degree() const { return degree_; }
  const std::map<MultiIndex, Rational>& moments() const { return moments_; }
  const Rational& moment(const MultiIndex& gamma) const;

 private:
  int n_vars_;
  int degree_;
  std::map<MultiIndex, Rational> moments_;
};

/// Finitely supported classical probability model on the simplex: atoms are
/// (weight, point) with weights >= 0 summing to 1 and points inside the
/// closed simplex (exact rational checks).
class DiracMixture {
 public:
  using Atom = std::pair<Rational, std::vector<Rational>>;

  explicit DiracMixture(std::vector<Atom> atoms);

  int n_vars() const { return n_vars_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

 private:
  int n_vars_;
  std::vector<Atom> atoms_;
};

/// L(p) = sum coeff_gamma(p) * z_gamma, exact. Rejects monomials beyond the
/// stored degree.
Rational expectation(const MomentState& state, const Polynomial& p);

struct StateValidity {
  bool valid = true;
  std::vector<MultiIndex> violations;  // generator indices alpha with L(gen) < 0
};

/// Bernstein state check: L(1) = 1 and L(generator_alpha) >= 0 for every
/// alpha of length n_vars+1 with |alpha| <= degree. Lists every violating
/// generator index on failure.
StateValidity is_valid_state(const MomentState& state);

/// Strict variant: does the moment table extend to degree+extra_degree while
/// satisfying the generator constraints up to that elevated degree? Decided
/// by an exact feasibility LP over the unknown higher moments. Stronger than
/// is_valid_state; no equivalence claimed.
bool is_extendable_state(const MomentState& state, int extra_degree = 2);

/// L(g) >= 0 for every assessed gamble; requires a valid state.
bool credal_membership(const MomentState& state, const AssessmentSet& assessments);

/// The unique lambda_0 with L((q - lambda_0) pi) = 0, i.e.
/// L(q pi) / L(pi). Throws LpError when L(pi) = 0 (conditioning on a
/// prevision-zero likelihood).
Rational conditional_value(const MomentState& state, const Polynomial& q,
                           const Polynomial& pi);

/// Moments of a Dirac mixture: z_gamma = sum(weight_k point_k^gamma).
MomentState mixture_moments(const DiracMixture& mixture, int degree);

/// For two-coin states (n_vars = 3, degree >= 2): expectations of the
/// heads-marginals theta_1+theta_2 and theta_1+theta_3 and of their squares,
/// in that order.
std::array<Rational, 4> marginal_moments(const MomentState& state);

/// Encodes a precisely specified state as desirability constraints: for each
/// nonconstant monomial b with |gamma| <= degree, both b - L(b) and L(b) - b
/// are assessed. Updated previsions over this set reproduce the dual
/// conditional values.
AssessmentSet to_assessments(const MomentState& state);

// --- Built-in fixtures for the two-coin experiment ---

/// The degree-2 two-coin state with moments
/// z_100 = z_200 = 1/3, z_010 = z_001 = z_011 = 1/6, all other seconds 0.
MomentState bell_state();

/// -(t1+t2)^2 - (t1+t3)(-2 t1 - 2 t2 + 1) - epsilon; at most -epsilon
/// everywhere on the simplex, yet the bell_state assigns it 1/6 - epsilon.
Polynomial bell_gamble(const Rational& epsilon);

/// Two-atom mixture matching the four heads-marginal moments of bell_state
/// to within 1e-5. The exact atoms carry sqrt(3); they are rationalised at
/// denominator 10^6, which leaves z_011 = 0 exactly (both atoms put zero
/// mass on the mixed outcomes) against the state's 1/6.
DiracMixture classical_socks_mixture();

}  // namespace berncone

#pragma once

#include <iosfwd>
#include <optional>

#include "berncone/cone.hpp"

namespace berncone {

/// A finite set of gambles the agent accepts, over the probability simplex,
/// with the working degree for the hierarchy.
struct AssessmentSet {
  int n_vars = 1;
  std::vector<Polynomial> gambles;
  int base_degree = 0;  // >= max total degree over the gambles

  static AssessmentSet of(int n_vars, std::vector<Polynomial> gambles);
  static AssessmentSet empty(int n_vars) { return of(n_vars, {}); }
};

struct CoherenceVerdict {
  bool consistent = true;
  // Present iff inconsistent: weights with sum(lambda_i g_i) + expansion of
  // the certificate equal to exactly -1.
  std::vector<Rational> witness_lambda;
  std::optional<Certificate> witness_certificate;
};

struct PrevisionResult {
  Rational value;
  std::vector<Rational> lambda_weights;
  Certificate certificate;
  int degree_used = 0;
  // Vacuous updates: no price is defensible at all. value is meaningless
  // when set (only updated_lower_prevision produces it).
  bool vacuous = false;
};

/// Consistency at degree d: the set is inconsistent iff weights lambda >= 0
/// and u >= 0 exist with -1 - sum(lambda_i g_i) in the degree-d cone, an
/// exact LP feasibility question.
CoherenceVerdict check_consistency(const AssessmentSet& assessments, int degree);

/// sup lambda_0 with q - lambda_0 - sum(lambda_i g_i) in the degree-d cone.
/// Exact optimum; throws LpError when unbounded (inconsistent assessments).
PrevisionResult lower_prevision(const Polynomial& q, const AssessmentSet& assessments,
                                int degree);

/// Conjugate -lower_prevision(-q, ...); the witness fields certify the
/// conjugate program on -q.
PrevisionResult upper_prevision(const Polynomial& q, const AssessmentSet& assessments,
                                int degree);

/// Lower previsions for each degree in [d_min, d_max]; nondecreasing in d.
std::vector<std::pair<int, Rational>> hierarchy(const Polynomial& q,
                                                const AssessmentSet& assessments,
                                                int d_min, int d_max);

/// CSV with header "d,value_num,value_den,value_float", one row per degree.
void write_hierarchy_csv(std::ostream& out,
                         const std::vector<std::pair<int, Rational>>& rows);

/// The 2^(n+1)-2 nonempty proper subset sums of the degree-1 partition of
/// unity {theta_1, ..., theta_n, 1 - sum theta}, ordered by subset bitmask
/// (bit i = theta_{i+1}, bit n = the complement).
std::vector<Polynomial> subset_sum_partitions(int n_vars);

/// Updated prevision against likelihood pi:
/// sup lambda_0 with (q - lambda_0) pi - sum(lambda_j g_j) in the degree-d
/// cone. The degree is auto-raised to fit q*pi and the gambles; the degree
/// actually used is reported. Vacuous (no feasible lambda_0) is flagged, not
/// a number. By default pi must be a subset-sum partition element;
/// allow_general_pi lifts that for caller-supplied likelihoods.
PrevisionResult updated_lower_prevision(const Polynomial& q, const Polynomial& pi,
                                        const AssessmentSet& assessments, int degree,
                                        bool allow_general_pi = false);

struct OracleResult {
  Rational value;
  std::vector<Rational> argmin;
};

/// Brute-force classical prevision on the step-1/grid_k simplex grid:
/// minimise sum(w_theta q(theta)) over grid weights w >= 0 summing to 1 with
/// sum(w g_i(theta)) >= 0. For empty assessments this is the grid minimum of
/// q. Independent of the cone machinery.
OracleResult classical_oracle_prevision(const Polynomial& q,
                                        const AssessmentSet& assessments, int grid_k);

}  // namespace berncone

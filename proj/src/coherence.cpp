#include "berncone/coherence.hpp"

#include <algorithm>
#include <ostream>

#include "berncone/errors.hpp"
#include "berncone/simplex_lp.hpp"

namespace berncone {

namespace {

using Matrix = RationalSimplex::Matrix;
using Vector = RationalSimplex::Vector;

int row_of(const std::vector<MultiIndex>& monomials, const MultiIndex& gamma) {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), gamma);
  return static_cast<int>(it - monomials.begin());
}

/// Coefficient-matching program over the equal-degree simplex cone. Columns
/// are laid out as [lambda_0+, lambda_0-] (optional), then lambda_i in gamble
/// order, then u_alpha lexicographically; Bland's rule then makes witnesses
/// deterministic.
struct ConeProgram {
  std::vector<MultiIndex> monomials;  // all |gamma| <= degree, lexicographic
  std::vector<MultiIndex> alphas;     // all |alpha| = degree, lexicographic
  std::vector<Polynomial> generators;
  int n_vars;
  int degree;

  ConeProgram(int n_vars_in, int degree_in) : n_vars(n_vars_in), degree(degree_in) {
    monomials = exponents_up_to_total(n_vars, degree);
    alphas = exponents_with_total(n_vars + 1, degree);
    generators.reserve(alphas.size());
    for (const MultiIndex& alpha : alphas) {
      generators.push_back(bernstein_generator(alpha, n_vars, degree));
    }
  }

  int rows() const { return static_cast<int>(monomials.size()); }

  void fill_column(Matrix& A, int column, const Polynomial& p) const {
    for (const auto& [gamma, value] : p.terms()) {
      A(row_of(monomials, gamma), column) = value;
    }
  }

  Certificate certificate_from(const Vector& x, int first_weight_column) const {
    Certificate certificate{degree, {}};
    for (std::size_t k = 0; k < alphas.size(); ++k) {
      const Rational& weight = x(first_weight_column + static_cast<int>(k));
      if (weight != 0) certificate.weights.emplace(alphas[k], weight);
    }
    return certificate;
  }
};

void check_degrees(const AssessmentSet& assessments, int degree) {
  if (degree < assessments.base_degree) {
    throw DegreeError("degree too low for the assessment set");
  }
  for (const Polynomial& g : assessments.gambles) {
    if (g.total_degree() > degree) {
      throw DegreeError("degree too low to express an assessed gamble");
    }
  }
}

void check_dimension(const Polynomial& q, const AssessmentSet& assessments) {
  if (q.n_vars() != assessments.n_vars) {
    throw std::invalid_argument("gamble and assessment variable counts differ");
  }
}

}  // namespace

AssessmentSet AssessmentSet::of(int n_vars, std::vector<Polynomial> gambles) {
  AssessmentSet set;
  set.n_vars = n_vars;
  set.base_degree = 0;
  for (const Polynomial& g : gambles) {
    if (g.n_vars() != n_vars) {
      throw std::invalid_argument("assessment gambles live in different variable counts");
    }
    set.base_degree = std::max(set.base_degree, g.total_degree());
  }
  set.gambles = std::move(gambles);
  return set;
}

CoherenceVerdict check_consistency(const AssessmentSet& assessments, int degree) {
  check_degrees(assessments, degree);
  const ConeProgram program(assessments.n_vars, degree);
  const int k = static_cast<int>(assessments.gambles.size());
  const int cols = k + static_cast<int>(program.alphas.size());

  // sum(lambda_i g_i) + sum(u_alpha generator_alpha) = -1
  Matrix A = Matrix::Zero(program.rows(), cols);
  Vector b = Vector::Zero(program.rows());
  for (int i = 0; i < k; ++i) program.fill_column(A, i, assessments.gambles[i]);
  for (std::size_t j = 0; j < program.generators.size(); ++j) {
    program.fill_column(A, k + static_cast<int>(j), program.generators[j]);
  }
  b(row_of(program.monomials, MultiIndex(assessments.n_vars, 0))) = -1;

  const auto solution = RationalSimplex::find_feasible(std::move(A), std::move(b));
  if (solution.status != LpStatus::optimal) return CoherenceVerdict{};

  CoherenceVerdict verdict;
  verdict.consistent = false;
  verdict.witness_lambda.reserve(k);
  for (int i = 0; i < k; ++i) verdict.witness_lambda.push_back(solution.x(i));
  verdict.witness_certificate = program.certificate_from(solution.x, k);

  Polynomial expansion = expand_certificate_simplex(*verdict.witness_certificate,
                                                    assessments.n_vars);
  for (int i = 0; i < k; ++i) expansion += verdict.witness_lambda[i] * assessments.gambles[i];
  if (!(expansion == Polynomial::constant(assessments.n_vars, -1))) {
    throw LpError("inconsistency witness failed exact re-expansion");
  }
  return verdict;
}

namespace {

/// Shared builder for the plain and the updated prevision programs:
/// maximize lambda_0 subject to
///   lambda_0 * price + sum(lambda_i g_i) + sum(u_alpha generator) = target.
PrevisionResult solve_prevision_program(const Polynomial& target, const Polynomial& price,
                                        const AssessmentSet& assessments, int degree,
                                        bool vacuous_on_infeasible) {
  const ConeProgram program(assessments.n_vars, degree);
  const int k = static_cast<int>(assessments.gambles.size());
  const int weight_base = 2 + k;
  const int cols = weight_base + static_cast<int>(program.alphas.size());

  Matrix A = Matrix::Zero(program.rows(), cols);
  Vector b = Vector::Zero(program.rows());
  Vector c = Vector::Zero(cols);
  c(0) = 1;   // lambda_0 = lambda_0+ - lambda_0-
  c(1) = -1;
  for (const auto& [gamma, value] : price.terms()) {
    const int row = row_of(program.monomials, gamma);
    A(row, 0) = value;
    A(row, 1) = -value;
  }
  for (int i = 0; i < k; ++i) program.fill_column(A, 2 + i, assessments.gambles[i]);
  for (std::size_t j = 0; j < program.generators.size(); ++j) {
    program.fill_column(A, weight_base + static_cast<int>(j), program.generators[j]);
  }
  for (const auto& [gamma, value] : target.terms()) b(row_of(program.monomials, gamma)) = value;

  const auto solution = RationalSimplex::maximize(std::move(A), std::move(b), std::move(c));
  if (solution.status == LpStatus::unbounded) {
    throw LpError("prevision program unbounded: the assessments are inconsistent");
  }
  if (solution.status == LpStatus::infeasible) {
    if (vacuous_on_infeasible) {
      PrevisionResult vacuous;
      vacuous.vacuous = true;
      vacuous.degree_used = degree;
      return vacuous;
    }
    throw LpError("prevision program infeasible");
  }

  PrevisionResult result;
  result.value = solution.objective;
  result.degree_used = degree;
  result.lambda_weights.reserve(k);
  for (int i = 0; i < k; ++i) result.lambda_weights.push_back(solution.x(2 + i));
  result.certificate = program.certificate_from(solution.x, weight_base);

  // target - value*price - sum(lambda_i g_i) must re-expand exactly.
  Polynomial residual = target - result.value * price;
  for (int i = 0; i < k; ++i) residual -= result.lambda_weights[i] * assessments.gambles[i];
  if (!(expand_certificate_simplex(result.certificate, assessments.n_vars) == residual)) {
    throw LpError("prevision witness failed exact re-expansion");
  }
  return result;
}

}  // namespace

PrevisionResult lower_prevision(const Polynomial& q, const AssessmentSet& assessments,
                                int degree) {
  check_dimension(q, assessments);
  check_degrees(assessments, degree);
  if (q.total_degree() > degree) throw DegreeError("degree too low for the gamble");
  return solve_prevision_program(q, Polynomial::constant(q.n_vars(), 1), assessments,
                                 degree, /*vacuous_on_infeasible=*/false);
}

PrevisionResult upper_prevision(const Polynomial& q, const AssessmentSet& assessments,
                                int degree) {
  PrevisionResult conjugate = lower_prevision(-q, assessments, degree);
  conjugate.value = -conjugate.value;
  return conjugate;
}

std::vector<std::pair<int, Rational>> hierarchy(const Polynomial& q,
                                                const AssessmentSet& assessments,
                                                int d_min, int d_max) {
  if (d_min > d_max) throw std::invalid_argument("empty degree range");
  std::vector<std::pair<int, Rational>> rows;
  rows.reserve(d_max - d_min + 1);
  for (int d = d_min; d <= d_max; ++d) {
    rows.emplace_back(d, lower_prevision(q, assessments, d).value);
  }
  return rows;
}

void write_hierarchy_csv(std::ostream& out,
                         const std::vector<std::pair<int, Rational>>& rows) {
  out << "d,value_num,value_den,value_float\n";
  for (const auto& [d, value] : rows) {
    out << d << "," << numerator_string(value) << "," << denominator_string(value) << ","
        << to_float_string(value) << "\n";
  }
}

std::vector<Polynomial> subset_sum_partitions(int n_vars) {
  if (n_vars < 1) throw std::invalid_argument("need at least one variable");
  std::vector<Polynomial> elements;
  Polynomial complement = Polynomial::constant(n_vars, 1);
  for (int i = 0; i < n_vars; ++i) {
    elements.push_back(Polynomial::variable(n_vars, i));
    complement -= Polynomial::variable(n_vars, i);
  }
  elements.push_back(complement);

  std::vector<Polynomial> sums;
  const unsigned full = 1u << (n_vars + 1);
  for (unsigned mask = 1; mask + 1 < full; ++mask) {
    Polynomial sum(n_vars);
    for (int i = 0; i <= n_vars; ++i) {
      if (mask & (1u << i)) sum += elements[i];
    }
    sums.push_back(std::move(sum));
  }
  return sums;
}

PrevisionResult updated_lower_prevision(const Polynomial& q, const Polynomial& pi,
                                        const AssessmentSet& assessments, int degree,
                                        bool allow_general_pi) {
  check_dimension(q, assessments);
  check_dimension(pi, assessments);
  if (pi.is_zero()) throw std::invalid_argument("likelihood pi must be nonzero");
  if (!allow_general_pi) {
    const auto partitions = subset_sum_partitions(assessments.n_vars);
    if (std::find(partitions.begin(), partitions.end(), pi) == partitions.end()) {
      throw std::invalid_argument(
          "pi is not a subset sum of the degree-1 partition of unity "
          "(pass allow_general_pi for caller-supplied likelihoods)");
    }
  }

  const Polynomial scaled = q * pi;
  const int needed = std::max({degree, scaled.total_degree(), pi.total_degree(),
                               assessments.base_degree});
  return solve_prevision_program(scaled, pi, assessments, needed,
                                 /*vacuous_on_infeasible=*/true);
}

OracleResult classical_oracle_prevision(const Polynomial& q,
                                        const AssessmentSet& assessments, int grid_k) {
  check_dimension(q, assessments);
  if (grid_k < 2) throw std::invalid_argument("grid step must be 1/k with k >= 2");

  const int n = q.n_vars();
  const std::vector<MultiIndex> ticks = exponents_up_to_total(n, grid_k);
  std::vector<std::vector<Rational>> points;
  points.reserve(ticks.size());
  for (const MultiIndex& t : ticks) {
    std::vector<Rational> point(n);
    for (int i = 0; i < n; ++i) point[i] = Rational(t[i], grid_k);
    points.push_back(std::move(point));
  }

  if (assessments.gambles.empty()) {
    OracleResult best{q.eval(points.front()), points.front()};
    for (const auto& point : points) {
      const Rational value = q.eval(point);
      if (value < best.value) best = {value, point};
    }
    return best;
  }

  // minimise sum(w q) s.t. sum(w) = 1, sum(w g_i) - s_i = 0, w, s >= 0
  const int k = static_cast<int>(assessments.gambles.size());
  const int atoms = static_cast<int>(points.size());
  Matrix A = Matrix::Zero(1 + k, atoms + k);
  Vector b = Vector::Zero(1 + k);
  Vector c = Vector::Zero(atoms + k);
  b(0) = 1;
  for (int j = 0; j < atoms; ++j) {
    A(0, j) = 1;
    c(j) = -q.eval(points[j]);
    for (int i = 0; i < k; ++i) A(1 + i, j) = assessments.gambles[i].eval(points[j]);
  }
  for (int i = 0; i < k; ++i) A(1 + i, atoms + i) = -1;

  const auto solution = RationalSimplex::maximize(std::move(A), std::move(b), std::move(c));
  if (solution.status == LpStatus::infeasible) {
    throw LpError("assessments admit no grid model at this resolution");
  }
  if (solution.status != LpStatus::optimal) {
    throw LpError("grid oracle program did not reach an optimum");
  }

  OracleResult result;
  result.value = -solution.objective;
  int heaviest = 0;
  for (int j = 1; j < atoms; ++j) {
    if (solution.x(j) > solution.x(heaviest)) heaviest = j;
  }
  result.argmin = points[heaviest];
  return result;
}

}  // namespace berncone

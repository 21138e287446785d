#include "berncone/cone.hpp"

#include <algorithm>

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

/// One coefficient-matching column per polynomial, one row per monomial.
void fill_column(Matrix& A, const std::vector<MultiIndex>& monomials, int column,
                 const Polynomial& p) {
  for (const auto& [gamma, value] : p.terms()) {
    A(row_of(monomials, gamma), column) = value;
  }
}

}  // namespace

Polynomial expand_certificate_simplex(const Certificate& certificate, int n_vars) {
  Polynomial total(n_vars);
  for (const auto& [alpha, weight] : certificate.weights) {
    total += weight * bernstein_generator(alpha, n_vars, certificate.degree);
  }
  return total;
}

Polynomial expand_certificate(const Certificate& certificate,
                              const SemiAlgebraicDomain& domain) {
  const int m = domain.constraint_count();
  Polynomial total(domain.n_vars());
  Polynomial one = Polynomial::constant(domain.n_vars(), 1);
  for (const auto& [joined, weight] : certificate.weights) {
    if (static_cast<int>(joined.size()) != 2 * m) {
      throw std::invalid_argument("certificate index length does not match the domain");
    }
    Polynomial product = one;
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < joined[j]; ++k) product = product * domain.normalized_constraint(j);
      for (int k = 0; k < joined[m + j]; ++k) {
        product = product * (one - domain.normalized_constraint(j));
      }
    }
    total += weight * product;
  }
  return total;
}

std::optional<Certificate> cone_membership(const Polynomial& g,
                                           const SemiAlgebraicDomain& domain,
                                           int degree) {
  if (g.n_vars() != domain.n_vars()) {
    throw std::invalid_argument("gamble and domain variable counts differ");
  }
  const auto generators = kv_generators(domain, degree);
  int max_degree = 0;
  for (const auto& [index, poly] : generators) {
    max_degree = std::max(max_degree, poly.total_degree());
  }
  if (g.total_degree() > max_degree) {
    throw DegreeError("cone degree too low to express the polynomial");
  }

  const std::vector<MultiIndex> monomials = exponents_up_to_total(g.n_vars(), max_degree);
  const int rows = static_cast<int>(monomials.size());
  const int cols = static_cast<int>(generators.size());
  Matrix A = Matrix::Zero(rows, cols);
  Vector b = Vector::Zero(rows);
  for (int j = 0; j < cols; ++j) fill_column(A, monomials, j, generators[j].second);
  for (const auto& [gamma, value] : g.terms()) b(row_of(monomials, gamma)) = value;

  const auto solution = RationalSimplex::find_feasible(std::move(A), std::move(b));
  if (solution.status != LpStatus::optimal) return std::nullopt;

  Certificate certificate{degree, {}};
  for (int j = 0; j < cols; ++j) {
    if (solution.x(j) != 0) {
      certificate.weights.emplace(generators[j].first.concatenated(), solution.x(j));
    }
  }
  if (!(expand_certificate(certificate, domain) == g)) {
    throw LpError("certificate failed exact re-expansion");
  }
  return certificate;
}

std::optional<Certificate> simplex_membership(const Polynomial& g, int degree) {
  const BernsteinForm form = to_bernstein_form(g, degree);
  Certificate certificate{degree, {}};
  for (const auto& [alpha, value] : form.coeffs) {
    if (value < 0) return std::nullopt;
    if (value > 0) certificate.weights.emplace(alpha, value);
  }
  return certificate;
}

Rational pullup_epsilon(const Polynomial& f, int degree) {
  const BernsteinForm form = to_bernstein_form(f, degree);
  Rational epsilon = 0;
  for (const auto& [alpha, value] : form.coeffs) {
    if (value < 0) epsilon = std::max(epsilon, -value / Rational(multinomial(alpha)));
  }
  return epsilon;
}

std::optional<Rational> pullup_epsilon_on_domain(const Polynomial& f,
                                                 const SemiAlgebraicDomain& domain,
                                                 int degree) {
  const auto generators = kv_generators(domain, degree);
  int max_degree = 0;
  for (const auto& [index, poly] : generators) {
    max_degree = std::max(max_degree, poly.total_degree());
  }
  if (f.total_degree() > max_degree) {
    throw DegreeError("cone degree too low to express the polynomial");
  }

  // f + epsilon = sum u * generator, u >= 0, epsilon >= 0; minimise epsilon.
  const std::vector<MultiIndex> monomials = exponents_up_to_total(f.n_vars(), max_degree);
  const int rows = static_cast<int>(monomials.size());
  const int cols = static_cast<int>(generators.size());
  Matrix A = Matrix::Zero(rows, cols + 1);
  Vector b = Vector::Zero(rows);
  Vector c = Vector::Zero(cols + 1);
  c(0) = -1;  // maximize -epsilon
  A(row_of(monomials, MultiIndex(f.n_vars(), 0)), 0) = -1;
  for (int j = 0; j < cols; ++j) fill_column(A, monomials, j + 1, generators[j].second);
  for (const auto& [gamma, value] : f.terms()) b(row_of(monomials, gamma)) += value;

  const auto solution = RationalSimplex::maximize(std::move(A), std::move(b), std::move(c));
  if (solution.status == LpStatus::infeasible) return std::nullopt;
  if (solution.status != LpStatus::optimal) {
    throw LpError("pullup epsilon program did not reach an optimum");
  }
  return -solution.objective;
}

PullupReport verify_pullup(const SemiAlgebraicDomain& domain, int degree) {
  PullupReport report;
  const auto generators = kv_generators(domain, degree);
  for (const auto& [index, poly] : generators) {
    report.max_generator_degree = std::max(report.max_generator_degree, poly.total_degree());
  }
  report.holds = true;
  for (const MultiIndex& gamma :
       exponents_up_to_total(domain.n_vars(), report.max_generator_degree)) {
    Polynomial monomial(domain.n_vars());
    monomial.add_term(gamma, 1);
    for (const Polynomial& signed_monomial : {monomial, -monomial}) {
      if (!pullup_epsilon_on_domain(signed_monomial, domain, degree).has_value()) {
        report.holds = false;
        report.failures.push_back(signed_monomial);
      }
    }
  }
  return report;
}

}  // namespace berncone

#include "berncone/bernstein.hpp"

#include "berncone/errors.hpp"

namespace berncone {

Polynomial bernstein_generator(const MultiIndex& alpha, int n_vars, int degree) {
  if (static_cast<int>(alpha.size()) != n_vars + 1) {
    throw std::invalid_argument("generator index must have length n_vars+1");
  }
  if (total_degree(alpha) != degree) {
    throw DegreeError("generator index degree mismatch: |alpha| != d");
  }
  Polynomial monomial(n_vars);
  MultiIndex head(alpha.begin(), alpha.end() - 1);
  monomial.add_term(head, 1);

  // (1 - sum theta)^{alpha_{n+1}} by repeated multiplication; exponents stay small.
  Polynomial complement = Polynomial::constant(n_vars, 1);
  for (int i = 0; i < n_vars; ++i) complement -= Polynomial::variable(n_vars, i);
  Polynomial result = monomial;
  for (int k = 0; k < alpha.back(); ++k) result = result * complement;
  return result;
}

Polynomial bernstein_generator(const MultiIndex& alpha, int n_vars) {
  return bernstein_generator(alpha, n_vars, total_degree(alpha));
}

BernsteinForm to_bernstein_form(const Polynomial& p, int degree) {
  if (p.total_degree() > degree) {
    throw DegreeError("polynomial degree exceeds requested basis degree");
  }
  const int n = p.n_vars();
  BernsteinForm form{n, degree, {}};
  for (const auto& [gamma, value] : p.terms()) {
    const int deficit = degree - total_degree(gamma);
    for (const MultiIndex& beta : exponents_with_total(n + 1, deficit)) {
      MultiIndex alpha(n + 1);
      for (int i = 0; i < n; ++i) alpha[i] = gamma[i] + beta[i];
      alpha[n] = beta[n];
      Rational& slot = form.coeffs[alpha];
      slot += value * Rational(multinomial(beta));
      if (slot == 0) form.coeffs.erase(alpha);
    }
  }
  return form;
}

Polynomial expand(const BernsteinForm& form) {
  Polynomial result(form.n_vars);
  for (const auto& [alpha, value] : form.coeffs) {
    result += value * bernstein_generator(alpha, form.n_vars, form.degree);
  }
  return result;
}

}  // namespace berncone

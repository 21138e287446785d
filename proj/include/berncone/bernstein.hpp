#pragma once

#include <map>

#include "berncone/polynomial.hpp"

namespace berncone {

/// A polynomial's unique coefficients in the degree-d simplex product basis
/// { theta_1^{a_1} ... theta_n^{a_n} (1 - theta_1 - ... - theta_n)^{a_{n+1}},
///   |a| = d }. Plain products, no binomial factors. Coefficients are stored
/// sparsely; missing keys are zero.
struct BernsteinForm {
  int n_vars = 0;
  int degree = 0;
  std::map<MultiIndex, Rational> coeffs;  // keys have length n_vars+1, |key| = degree

  Rational coefficient(const MultiIndex& alpha) const {
    auto it = coeffs.find(alpha);
    return it == coeffs.end() ? Rational(0) : it->second;
  }
};

/// The plain product theta^{alpha_1..alpha_n} (1 - sum theta)^{alpha_{n+1}}.
/// alpha must have length n_vars+1 and total degree `degree`; nonnegative on
/// every point of the simplex.
Polynomial bernstein_generator(const MultiIndex& alpha, int n_vars, int degree);
Polynomial bernstein_generator(const MultiIndex& alpha, int n_vars);

/// Degree elevation into the product basis: each monomial of degree l is
/// multiplied by the multinomial expansion of
/// (theta_1 + ... + theta_n + (1 - sum theta))^{d-l}. Exact; requires
/// total_degree(p) <= d.
BernsteinForm to_bernstein_form(const Polynomial& p, int degree);

/// Inverse of to_bernstein_form: sum of coefficient * generator.
Polynomial expand(const BernsteinForm& form);

}  // namespace berncone

#pragma once

#include <map>
#include <span>
#include <vector>

#include "berncone/multi_index.hpp"
#include "berncone/rational.hpp"

namespace berncone {

/// Sparse multivariate polynomial with exact rational coefficients, the
/// gamble representation. Terms are keyed by exponent vectors of fixed
/// length n_vars; zero coefficients are never stored, so the term map is a
/// canonical form and operator== is semantic equality. Values are immutable
/// in spirit: every operation returns a fresh polynomial.
class Polynomial {
 public:
  explicit Polynomial(int n_vars);

  static Polynomial zero(int n_vars) { return Polynomial(n_vars); }
  static Polynomial constant(int n_vars, const Rational& value);
  /// theta_{index+1}, zero-based index.
  static Polynomial variable(int n_vars, int index);

  int n_vars() const { return n_vars_; }
  bool is_zero() const { return terms_.empty(); }
  /// 0 for the zero polynomial.
  int total_degree() const;

  const std::map<MultiIndex, Rational>& terms() const { return terms_; }
  Rational coefficient(const MultiIndex& exponents) const;

  /// Adds `value * theta^exponents`, pruning the term if it cancels.
  void add_term(const MultiIndex& exponents, const Rational& value);

  Rational eval(std::span<const Rational> point) const;
  Rational eval(const std::vector<Rational>& point) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator-(const Polynomial& p);
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Rational& scalar, Polynomial p) { return p *= scalar; }
  friend Polynomial operator*(Polynomial p, const Rational& scalar) { return p *= scalar; }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.n_vars_ == rhs.n_vars_ && lhs.terms_ == rhs.terms_;
  }

  /// Human-readable form like "1/2*t1^2 - t1*t2 + 1"; deterministic.
  std::string to_string() const;

 private:
  void check_same_dimension(const Polynomial& other) const;

  int n_vars_;
  std::map<MultiIndex, Rational> terms_;
};

}  // namespace berncone

#include "berncone/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace berncone {

Polynomial::Polynomial(int n_vars) : n_vars_(n_vars) {
  if (n_vars < 1) throw std::invalid_argument("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(int n_vars, const Rational& value) {
  Polynomial p(n_vars);
  p.add_term(MultiIndex(n_vars, 0), value);
  return p;
}

Polynomial Polynomial::variable(int n_vars, int index) {
  if (index < 0 || index >= n_vars) throw std::invalid_argument("variable index out of range");
  Polynomial p(n_vars);
  MultiIndex exponents(n_vars, 0);
  exponents[index] = 1;
  p.add_term(exponents, 1);
  return p;
}

int Polynomial::total_degree() const {
  int degree = 0;
  for (const auto& [exponents, value] : terms_) {
    degree = std::max(degree, berncone::total_degree(exponents));
  }
  return degree;
}

Rational Polynomial::coefficient(const MultiIndex& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& exponents, const Rational& value) {
  if (static_cast<int>(exponents.size()) != n_vars_) {
    throw std::invalid_argument("exponent vector length does not match n_vars");
  }
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
  if (value == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != n_vars_) {
    throw std::invalid_argument("evaluation point length does not match n_vars");
  }
  Rational result = 0;
  for (const auto& [exponents, value] : terms_) {
    Rational term = value;
    for (int i = 0; i < n_vars_; ++i) {
      for (int k = 0; k < exponents[i]; ++k) term *= point[i];
    }
    result += term;
  }
  return result;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  return eval(std::span<const Rational>(point.data(), point.size()));
}

void Polynomial::check_same_dimension(const Polynomial& other) const {
  if (n_vars_ != other.n_vars_) {
    throw std::invalid_argument("polynomials live in different variable counts");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_dimension(other);
  for (const auto& [exponents, value] : other.terms_) add_term(exponents, value);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_dimension(other);
  for (const auto& [exponents, value] : other.terms_) add_term(exponents, -value);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exponents, value] : terms_) value *= scalar;
  return *this;
}

Polynomial operator-(const Polynomial& p) {
  Polynomial out(p.n_vars_);
  for (const auto& [exponents, value] : p.terms_) out.terms_.emplace(exponents, -value);
  return out;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.check_same_dimension(rhs);
  Polynomial out(lhs.n_vars_);
  for (const auto& [le, lv] : lhs.terms_) {
    for (const auto& [re, rv] : rhs.terms_) {
      MultiIndex exponents(lhs.n_vars_);
      for (int i = 0; i < lhs.n_vars_; ++i) exponents[i] = le[i] + re[i];
      out.add_term(exponents, lv * rv);
    }
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exponents, value] : terms_) {
    const bool negative = value < 0;
    const Rational magnitude = negative ? Rational(-value) : value;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const bool has_vars = berncone::total_degree(exponents) > 0;
    if (!has_vars || magnitude != 1) {
      out << to_fraction_string(magnitude);
      if (has_vars) out << "*";
    }
    bool first_var = true;
    for (int i = 0; i < n_vars_; ++i) {
      if (exponents[i] == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << "t" << (i + 1);
      if (exponents[i] > 1) out << "^" << exponents[i];
    }
  }
  return out.str();
}

}  // namespace berncone

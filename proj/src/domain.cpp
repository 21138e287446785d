#include "berncone/domain.hpp"

#include <stdexcept>

namespace berncone {

SemiAlgebraicDomain::SemiAlgebraicDomain(std::vector<Polynomial> constraints,
                                         std::vector<Rational> sups)
    : raw_(std::move(constraints)), sups_(std::move(sups)) {
  if (raw_.empty()) throw std::invalid_argument("domain needs at least one constraint");
  if (raw_.size() != sups_.size()) {
    throw std::invalid_argument("one sup value per constraint required");
  }
  n_vars_ = raw_.front().n_vars();
  for (const Polynomial& c : raw_) {
    if (c.n_vars() != n_vars_) {
      throw std::invalid_argument("constraints live in different variable counts");
    }
  }
  normalized_.reserve(raw_.size());
  for (std::size_t j = 0; j < raw_.size(); ++j) {
    if (sups_[j] < 0) throw std::invalid_argument("negative sup value");
    if (sups_[j] > 0) {
      normalized_.push_back(raw_[j] * (Rational(1) / sups_[j]));
    } else {
      normalized_.push_back(raw_[j]);
    }
  }
}

SemiAlgebraicDomain normalize_domain(std::vector<Polynomial> constraints,
                                     std::vector<Rational> sups) {
  return SemiAlgebraicDomain(std::move(constraints), std::move(sups));
}

SemiAlgebraicDomain SemiAlgebraicDomain::simplex(int n_vars) {
  std::vector<Polynomial> constraints;
  Polynomial complement = Polynomial::constant(n_vars, 1);
  for (int i = 0; i < n_vars; ++i) {
    constraints.push_back(Polynomial::variable(n_vars, i));
    complement -= Polynomial::variable(n_vars, i);
  }
  constraints.push_back(complement);
  return SemiAlgebraicDomain(std::move(constraints),
                             std::vector<Rational>(n_vars + 1, Rational(1)));
}

bool SemiAlgebraicDomain::is_simplex() const {
  if (constraint_count() != n_vars_ + 1) return false;
  const SemiAlgebraicDomain canonical = simplex(n_vars_);
  for (int j = 0; j <= n_vars_; ++j) {
    if (!(raw_[j] == canonical.raw_[j]) || sups_[j] != 1) return false;
  }
  return true;
}

namespace {

/// Unit-box grid points with all raw constraints >= 0 (the sampled Omega).
template <typename Visit>
void for_each_domain_grid_point(const SemiAlgebraicDomain& domain, int grid_k, Visit&& visit) {
  if (grid_k < 1) throw std::invalid_argument("grid resolution must be >= 1");
  const int n = domain.n_vars();
  std::vector<int> ticks(n, 0);
  std::vector<Rational> point(n);
  for (;;) {
    for (int i = 0; i < n; ++i) point[i] = Rational(ticks[i], grid_k);
    bool inside = true;
    for (int j = 0; j < domain.constraint_count() && inside; ++j) {
      inside = domain.raw_constraint(j).eval(point) >= 0;
    }
    if (inside) visit(point);
    int i = n - 1;
    while (i >= 0 && ticks[i] == grid_k) {
      ticks[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++ticks[i];
    for (int r = i + 1; r < n; ++r) ticks[r] = 0;
  }
}

}  // namespace

std::vector<Rational> SemiAlgebraicDomain::grid_sup_estimates(int grid_k) const {
  std::vector<Rational> best(raw_.size(), Rational(0));
  for_each_domain_grid_point(*this, grid_k, [&](const std::vector<Rational>& point) {
    for (std::size_t j = 0; j < raw_.size(); ++j) {
      best[j] = std::max(best[j], raw_[j].eval(point));
    }
  });
  return best;
}

std::vector<std::vector<Rational>> SemiAlgebraicDomain::normalization_violations(
    int grid_k) const {
  std::vector<std::vector<Rational>> violations;
  for_each_domain_grid_point(*this, grid_k, [&](const std::vector<Rational>& point) {
    for (const Polynomial& c : normalized_) {
      const Rational value = c.eval(point);
      if (value < 0 || value > 1) {
        violations.push_back(point);
        return;
      }
    }
  });
  return violations;
}

std::vector<std::pair<GeneratorIndex, Polynomial>> kv_generators(
    const SemiAlgebraicDomain& domain, int degree) {
  if (degree < 0) throw std::invalid_argument("negative cone degree");
  const int m = domain.constraint_count();
  const int n = domain.n_vars();

  std::vector<Polynomial> one_minus;
  one_minus.reserve(m);
  for (int j = 0; j < m; ++j) {
    one_minus.push_back(Polynomial::constant(n, 1) - domain.normalized_constraint(j));
  }

  std::vector<std::pair<GeneratorIndex, Polynomial>> generators;
  for (const MultiIndex& joined : exponents_up_to_total(2 * m, degree)) {
    GeneratorIndex index{MultiIndex(joined.begin(), joined.begin() + m),
                         MultiIndex(joined.begin() + m, joined.end())};
    Polynomial product = Polynomial::constant(n, 1);
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < index.alpha[j]; ++k) product = product * domain.normalized_constraint(j);
      for (int k = 0; k < index.beta[j]; ++k) product = product * one_minus[j];
    }
    generators.emplace_back(std::move(index), std::move(product));
  }
  return generators;
}

}  // namespace berncone

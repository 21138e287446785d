#pragma once

#include <optional>

#include "berncone/bernstein.hpp"
#include "berncone/domain.hpp"

namespace berncone {

/// Nonnegative generator weights witnessing cone membership. Keys are the
/// (n_vars+1)-long simplex basis index, or the concatenated (alpha, beta)
/// index of length 2m on general domains. Only strictly positive weights are
/// stored; re-expanding sum(u * generator) reproduces the certified
/// polynomial exactly.
struct Certificate {
  int degree = 0;
  std::map<MultiIndex, Rational> weights;
};

Polynomial expand_certificate_simplex(const Certificate& certificate, int n_vars);
Polynomial expand_certificate(const Certificate& certificate,
                              const SemiAlgebraicDomain& domain);

/// Membership of g in the degree-d Krivine-Vasilescu cone of the domain,
/// decided by an exact feasibility LP (one coefficient-matching equality per
/// monomial, weight variables u >= 0). Returned certificates are verified by
/// re-expansion before being handed back. An absent result means "not
/// certified at this degree", never "negative".
std::optional<Certificate> cone_membership(const Polynomial& g,
                                           const SemiAlgebraicDomain& domain,
                                           int degree);

/// Simplex fast path: the equal-degree products form a basis of the
/// polynomials of degree <= d, so membership is a sign check on the unique
/// product-basis coefficients. No LP involved.
std::optional<Certificate> simplex_membership(const Polynomial& g, int degree);

/// Least epsilon >= 0 with f + epsilon in the degree-d simplex cone:
/// max(0, max_alpha(-b_alpha / multinomial(alpha))) over the product-basis
/// coefficients b of f.
Rational pullup_epsilon(const Polynomial& f, int degree);

/// Least epsilon >= 0 with f + epsilon in the degree-d cone of a general
/// domain, via LP; absent when no epsilon works at this degree (the domain
/// then fails the pullup property at f).
std::optional<Rational> pullup_epsilon_on_domain(const Polynomial& f,
                                                 const SemiAlgebraicDomain& domain,
                                                 int degree);

struct PullupReport {
  bool holds = false;                 // every +-monomial admits an epsilon
  std::vector<Polynomial> failures;   // basis elements without one
  int max_generator_degree = 0;
};

/// Empirical pullup check for a general domain: for every monomial m of
/// degree up to the cone's maximum generator degree, both m and -m must
/// admit some epsilon with f + epsilon in the cone. Pullup for arbitrary f
/// follows by expanding f over the signed monomials.
PullupReport verify_pullup(const SemiAlgebraicDomain& domain, int degree);

}  // namespace berncone

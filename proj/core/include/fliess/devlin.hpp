#pragma once

#include <utility>

#include "fliess/antipode.hpp"
#include "fliess/series.hpp"

namespace fliess {

/// Devlin's canonical polynomial of grade n: a homogeneous exact polynomial
/// (every word has degree n) with positive integer coefficients.
struct DevlinPolynomial {
  int n = 0;
  Series poly;

  bool operator==(const DevlinPolynomial&) const = default;
};

/// a_1 = e, a_2 = x1, a_n = (n-1) a_{n-1} x1 + (n-2) a_{n-2} x0.
DevlinPolynomial devlin_recursive(int n);

/// Closed-form coefficient of eta in a_n: zero on degree mismatch, one for
/// words of length <= 1, otherwise the product of the degrees of the proper
/// prefixes of eta.
Int devlin_coeff_closed(const Word& eta, int n);

/// a_n = sum over words eta of degree n of (S a_eta)(-c) eta, c the Ferfera
/// series truncated to degree n_context.
DevlinPolynomial devlin_antipode(int n, int n_context);

/// Lie-derivative oracle: with g0(z) = z^3, g1(z) = z^2, h(z) = z, z0 = 1,
/// the value L_{g_eta} h(1). Exact integer polynomial arithmetic only; shares
/// no code with the shuffle or Hopf machinery.
Int lie_coeff(const Word& eta);

/// Returns ((S a_{eta x})(-c), deg(a_eta) * (S a_eta)(-c)); the two
/// components agree for both letters x.
std::pair<Rat, Rat> check_degree_scaling(const Word& eta, Letter x);

/// The hatted operator chain applied to a_e: hat_1 = tilde_theta_1 and
/// hat_0 = kappa_e o tilde_theta_1, applied along the letters of eta.
/// The result only involves coordinate functions a_{x1^m} and a_e, and
/// (-1)^(|eta|-1+|eta|_x1) * (theta_hat(eta))(-c) = (S a_eta)(-c).
/// Rejects the empty word.
HElement theta_hat(const Word& eta);

}  // namespace fliess

#pragma once

#include "fliess/hopf.hpp"
#include "fliess/series.hpp"

namespace fliess {

// -- antipode ------------------------------------------------------------

/// S a_eta = -a_eta - sum' (S a_(1)) a_(2), via the reduced coproduct.
HElement antipode_left(const Word& eta);

/// S a_eta = -a_eta - sum' a_(1) (S a_(2)).
HElement antipode_right(const Word& eta);

/// S a_eta = (-1)^(|eta|-1) theta'_{i_l} o ... o theta'_{i_1} (a_e) with
/// theta'_1(h) = -tilde_theta_1(h) and
/// theta'_0(h) = -tilde_theta_0(h) + kappa_e(tilde_theta_1(h)).
/// Rejects the empty word (use the recursive routes for S a_e = -a_e).
HElement antipode_direct(const Word& eta);

/// S extended to products of generators (H is commutative, so the
/// antihomomorphic extension is just the product of factor antipodes).
HElement antipode(const CoordMonomial& m);
HElement antipode(const HElement& h);

// -- characters ----------------------------------------------------------

/// Evaluation of an H element against the character c_delta = delta + c:
/// linear in h, and on a monomial the product of the coefficients <c, eta_i>.
Rat evaluate(const HElement& h, const Series& c);

/// A series viewed as the Hopf algebra character it induces.
struct Character {
  Series series;
  Rat operator()(const HElement& h) const { return evaluate(h, series); }
};

// -- composition and feedback products -----------------------------------

/// Composition product c o d truncated to degree N.
Series compose(const Series& c, const Series& d, int n);

/// Modified composition product c otilde d truncated to degree N.
Series mod_compose(const Series& c, const Series& d, int n);

/// The non-delta part of c_delta^{o-1}: sum over deg(eta) <= N of
/// (S a_eta)(c) eta.
Series group_inverse(const Series& c, int n);

/// Independent route to the same inverse: iterate d <- -(c otilde d) from
/// d = 0; the grading makes the iteration stabilize after N steps.
Series group_inverse_fixpoint(const Series& c, int n);

/// Feedback product c @ d = c otilde ((-d) o c)^{o-1}, truncated to degree N.
Series feedback(const Series& c, const Series& d, int n);

/// Unity feedback c @ delta = (-c)^{o-1}.
Series unity_feedback(const Series& c, int n);

}  // namespace fliess

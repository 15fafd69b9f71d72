#pragma once

#include <stdexcept>
#include <vector>

#include "fliess/rational.hpp"
#include "fliess/series.hpp"

namespace fliess {

/// A univariate polynomial in t with exact rational coefficients,
/// c0 + c1 t + c2 t^2 + ... Trailing zeros are pruned.
class PolyFunction {
 public:
  PolyFunction() = default;
  explicit PolyFunction(std::vector<Rat> coeffs);
  static PolyFunction constant(const Rat& c);

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? 0 : int(coeffs_.size()) - 1; }

  Rat eval(const Rat& t) const;
  double eval(double t) const;

  PolyFunction derivative() const;
  PolyFunction antiderivative() const;  // vanishing at 0

  friend PolyFunction operator+(const PolyFunction& a, const PolyFunction& b);
  friend PolyFunction operator*(const PolyFunction& a, const PolyFunction& b);
  bool operator==(const PolyFunction&) const = default;

 private:
  std::vector<Rat> coeffs_;
};

/// The input signals: u0 = alpha, u1 = beta.
struct InputPair {
  PolyFunction u0;
  PolyFunction u1;
};

/// E_e = 1, E_{x_i eta}[u](t) = int_0^t u_i(s) E_eta[u](s) ds, exact.
PolyFunction iterated_integral(const Word& eta, const InputPair& u);

/// Sum over words of c with degree <= N of <c, eta> E_eta[u](t), exact.
Rat fliess_eval(const Series& c, const InputPair& u, const Rat& t, int n);

/// Thrown when the Abel integrator detects finite-time escape.
class BlowupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Classical fixed-step RK4 for dz/dt = alpha(t) z^3 + beta(t) z^2.
/// Throws BlowupError once |z| exceeds blowup_bound and std::invalid_argument
/// for a nonpositive step.
double abel_numeric(const InputPair& u, double z0, double t_end, double step,
                    double blowup_bound = 1e6);

/// [a_1(omega), ..., a_N(omega)] where a_n(t) is the Fliess-operator value of
/// Devlin's grade-n polynomial; a_1(omega) = 1 always.
std::vector<Rat> return_map_coeffs(const InputPair& u, const Rat& omega, int n);

}  // namespace fliess

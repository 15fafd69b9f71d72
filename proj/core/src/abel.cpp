#include "fliess/abel.hpp"

#include <cmath>

#include "fliess/devlin.hpp"

namespace fliess {

PolyFunction::PolyFunction(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyFunction PolyFunction::constant(const Rat& c) { return PolyFunction({c}); }

Rat PolyFunction::eval(const Rat& t) const {
  Rat s(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * t + *it;
  return s;
}

double PolyFunction::eval(double t) const {
  double s = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    s = s * t + to_double(*it);
  return s;
}

PolyFunction PolyFunction::derivative() const {
  std::vector<Rat> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    out.push_back(Rat(k) * coeffs_[k]);
  return PolyFunction(std::move(out));
}

PolyFunction PolyFunction::antiderivative() const {
  std::vector<Rat> out(coeffs_.size() + 1, Rat(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    out[k + 1] = coeffs_[k] / Rat(k + 1);
  return PolyFunction(std::move(out));
}

PolyFunction operator+(const PolyFunction& a, const PolyFunction& b) {
  std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return PolyFunction(std::move(out));
}

PolyFunction operator*(const PolyFunction& a, const PolyFunction& b) {
  if (a.is_zero() || b.is_zero()) return PolyFunction();
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolyFunction(std::move(out));
}

PolyFunction iterated_integral(const Word& eta, const InputPair& u) {
  if (eta.is_empty()) return PolyFunction::constant(Rat(1));
  const PolyFunction inner = iterated_integral(eta.suffix_from(1), u);
  const PolyFunction& ui = eta.at(0) == Letter::x0 ? u.u0 : u.u1;
  return (ui * inner).antiderivative();
}

Rat fliess_eval(const Series& c, const InputPair& u, const Rat& t, int n) {
  Rat out(0);
  for (const auto& [eta, coeff] : c.terms()) {
    if (eta.degree() > n) continue;
    out += coeff * iterated_integral(eta, u).eval(t);
  }
  return out;
}

double abel_numeric(const InputPair& u, double z0, double t_end, double step,
                    double blowup_bound) {
  if (step <= 0) throw std::invalid_argument("abel_numeric: step must be > 0");
  if (t_end < 0) throw std::invalid_argument("abel_numeric: t_end must be >= 0");
  const auto rhs = [&u](double t, double z) {
    return u.u0.eval(t) * z * z * z + u.u1.eval(t) * z * z;
  };
  double z = z0;
  double t = 0.0;
  while (t < t_end - 1e-15) {
    const double h = std::min(step, t_end - t);
    const double k1 = rhs(t, z);
    const double k2 = rhs(t + h / 2, z + h / 2 * k1);
    const double k3 = rhs(t + h / 2, z + h / 2 * k2);
    const double k4 = rhs(t + h, z + h * k3);
    z += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    t += h;
    if (!std::isfinite(z) || std::fabs(z) > blowup_bound)
      throw BlowupError("abel_numeric: |z| exceeded " +
                        std::to_string(blowup_bound) + " near t = " +
                        std::to_string(t));
  }
  return z;
}

std::vector<Rat> return_map_coeffs(const InputPair& u, const Rat& omega, int n) {
  std::vector<Rat> out;
  out.reserve(n);
  for (int k = 1; k <= n; ++k) {
    const DevlinPolynomial a = devlin_recursive(k);
    out.push_back(fliess_eval(a.poly, u, omega, k));
  }
  return out;
}

}  // namespace fliess

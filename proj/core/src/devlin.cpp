#include "fliess/devlin.hpp"

#include <stdexcept>

namespace fliess {

DevlinPolynomial devlin_recursive(int n) {
  if (n < 1) throw std::invalid_argument("devlin_recursive: n must be >= 1");
  // a_1 = e and a_2 = x1 are seeds; the recursion never touches a_0.
  Series prev = Series::monomial(Word());                 // a_1
  if (n == 1) return {1, prev};
  Series cur = Series::monomial(Word::single(Letter::x1));  // a_2
  for (int k = 3; k <= n; ++k) {
    Series next =
        Rat(k - 1) * cat(cur, Series::monomial(Word::single(Letter::x1))) +
        Rat(k - 2) * cat(prev, Series::monomial(Word::single(Letter::x0)));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {n, cur};
}

Int devlin_coeff_closed(const Word& eta, int n) {
  if (eta.degree() != n) return 0;
  if (eta.length() <= 1) return 1;
  Int prod = 1;
  for (std::size_t j = 1; j < eta.length(); ++j) prod *= eta.prefix(j).degree();
  return prod;
}

DevlinPolynomial devlin_antipode(int n, int n_context) {
  if (n < 1 || n > n_context)
    throw std::invalid_argument("devlin_antipode: need 1 <= n <= n_context");
  const Series neg_c = -ferfera(n_context);
  Series poly;
  for (const Word& eta : words_of_degree(n))
    poly.add_term(eta, evaluate(antipode_left(eta), neg_c));
  return {n, poly};
}

namespace {

// Tiny dense integer polynomials in z, independent of every other module.
using ZPoly = std::vector<Int>;

ZPoly zderiv(const ZPoly& p) {
  ZPoly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(Int(k) * p[k]);
  return out;
}

ZPoly zmul(const ZPoly& p, const ZPoly& q) {
  if (p.empty() || q.empty()) return {};
  ZPoly out(p.size() + q.size() - 1, Int(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

Int zeval_at_one(const ZPoly& p) {
  Int s = 0;
  for (const Int& c : p) s += c;
  return s;
}

}  // namespace

Int lie_coeff(const Word& eta) {
  const ZPoly g0 = {0, 0, 0, 1};  // z^3
  const ZPoly g1 = {0, 0, 1};     // z^2
  // eta = x_{j_k} ... x_{j_1} maps to L_{g_{j_1}} ... L_{g_{j_k}} h, so the
  // first letter of eta acts innermost: p <- p' * g_i along the word.
  ZPoly p = {0, 1};  // h(z) = z
  for (Letter l : eta.letters())
    p = zmul(zderiv(p), l == Letter::x0 ? g0 : g1);
  return zeval_at_one(p);
}

std::pair<Rat, Rat> check_degree_scaling(const Word& eta, Letter x) {
  const Word extended = eta.append(x);
  const Series neg_c = -ferfera(extended.degree());
  const Rat lhs = evaluate(antipode_left(extended), neg_c);
  const Rat rhs = Rat(eta.degree()) * evaluate(antipode_left(eta), neg_c);
  return {lhs, rhs};
}

HElement theta_hat(const Word& eta) {
  if (eta.is_empty()) throw std::invalid_argument("theta_hat: empty word");
  HElement h = HElement::generator(Word());
  for (Letter i : eta.letters()) {
    h = i == Letter::x1 ? tilde_theta(Letter::x1, h)
                        : kappa(Word(), tilde_theta(Letter::x1, h));
  }
  return h;
}

}  // namespace fliess

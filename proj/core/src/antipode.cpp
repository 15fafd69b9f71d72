#include "fliess/antipode.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace fliess {

namespace {

// Both standard recursions share this shape; `on_factor` resolves S on the
// lower-degree words that appear in the reduced coproduct.
template <typename Recurse>
HElement antipode_step(const Word& eta, bool s_on_left, Recurse&& recurse) {
  HElement out = -HElement::generator(eta);
  for (const auto& [k, c] : reduced_coproduct(eta).terms()) {
    // left slot of the tilde coproduct is always a single generator
    const Word& left_word = k.first.factors().front();
    HElement summand;
    if (s_on_left) {
      summand = h_mul(recurse(left_word), HElement::term(k.second));
    } else {
      HElement s_right = HElement::one();
      for (const Word& w : k.second.factors())
        s_right = h_mul(s_right, recurse(w));
      summand = h_mul(HElement::generator(left_word), s_right);
    }
    out += (-c) * summand;
  }
  return out;
}

template <typename Compute>
HElement memoized(const Word& eta, std::map<Word, HElement>& cache,
                  std::mutex& mutex, Compute&& compute) {
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(eta); it != cache.end()) return it->second;
  }
  HElement result = compute();
  std::lock_guard lock(mutex);
  return cache.emplace(eta, std::move(result)).first->second;
}

}  // namespace

HElement antipode_left(const Word& eta) {
  static std::map<Word, HElement> cache;
  static std::mutex mutex;
  return memoized(eta, cache, mutex, [&] {
    return antipode_step(eta, /*s_on_left=*/true, antipode_left);
  });
}

HElement antipode_right(const Word& eta) {
  static std::map<Word, HElement> cache;
  static std::mutex mutex;
  return memoized(eta, cache, mutex, [&] {
    return antipode_step(eta, /*s_on_left=*/false, antipode_right);
  });
}

HElement antipode_direct(const Word& eta) {
  if (eta.is_empty())
    throw std::invalid_argument("antipode_direct: empty word");
  HElement h = HElement::generator(Word());
  for (Letter i : eta.letters()) {
    if (i == Letter::x1) {
      h = -tilde_theta(Letter::x1, h);
    } else {
      h = -tilde_theta(Letter::x0, h) + kappa(Word(), tilde_theta(Letter::x1, h));
    }
  }
  return (eta.length() % 2 == 1 ? Rat(1) : Rat(-1)) * h;
}

HElement antipode(const CoordMonomial& m) {
  HElement out = HElement::one();
  for (const Word& w : m.factors()) out = h_mul(out, antipode_left(w));
  return out;
}

HElement antipode(const HElement& h) {
  HElement out;
  for (const auto& [m, c] : h.terms()) out += c * antipode(m);
  return out;
}

Rat evaluate(const HElement& h, const Series& c) {
  Rat out(0);
  for (const auto& [m, coeff] : h.terms()) {
    Rat v = coeff;
    for (const Word& w : m.factors()) {
      v *= c.coeff(w);
      if (v == 0) break;
    }
    out += v;
  }
  return out;
}

namespace {

Series prepend_letter(Letter i, const Series& s, const Truncation& trunc) {
  Series out(trunc);
  for (const auto& [w, c] : s.terms()) out.add_term(w.prepend(i), c);
  return out;
}

// psi_d / phi_d applied to a single word, acting on the unit.
Series apply_homomorphism(const Word& eta, const Series& d, int n,
                          bool modified) {
  Series e = Series::unit(n);
  for (std::size_t k = eta.length(); k-- > 0;) {
    const Letter i = eta.at(k);
    if (i == Letter::x0) {
      e = prepend_letter(Letter::x0, e, n);
    } else {
      Series next = prepend_letter(Letter::x0, shuffle_series(d, e), n);
      if (modified) next += prepend_letter(Letter::x1, e, n);
      e = std::move(next);
    }
  }
  return e;
}

Series composition_product(const Series& c, const Series& d, int n,
                           bool modified) {
  const Truncation trunc =
      min_truncation(n, min_truncation(c.truncation(), d.truncation()));
  const Series dt = d.truncated(n);
  Series out(trunc);
  for (const auto& [eta, coeff] : c.terms()) {
    // psi and phi never lower the degree, so words beyond the cutoff
    // cannot contribute
    if (eta.degree() > n) continue;
    out += coeff * apply_homomorphism(eta, dt, n, modified);
  }
  return out;
}

}  // namespace

Series compose(const Series& c, const Series& d, int n) {
  return composition_product(c, d, n, /*modified=*/false);
}

Series mod_compose(const Series& c, const Series& d, int n) {
  return composition_product(c, d, n, /*modified=*/true);
}

Series group_inverse(const Series& c, int n) {
  Series out{Truncation(n)};
  for (int k = 1; k <= n; ++k) {
    for (const Word& eta : words_of_degree(k)) {
      out.add_term(eta, evaluate(antipode_left(eta), c));
    }
  }
  return out;
}

Series group_inverse_fixpoint(const Series& c, int n) {
  Series d = Series::zero(Truncation(n));
  for (int i = 0; i < n; ++i) d = -mod_compose(c, d, n);
  d.set_truncation(Truncation(n));
  return d;
}

Series feedback(const Series& c, const Series& d, int n) {
  const Series inner = compose(-d, c, n);
  return mod_compose(c, group_inverse(inner, n), n);
}

Series unity_feedback(const Series& c, int n) { return group_inverse(-c, n); }

}  // namespace fliess

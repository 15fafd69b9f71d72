#include "fliess/hopf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fliess {

CoordMonomial::CoordMonomial(std::vector<Word> factors)
    : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(), std::greater<>());
}

int CoordMonomial::degree() const {
  int d = 0;
  for (const Word& w : factors_) d += w.degree();
  return d;
}

CoordMonomial CoordMonomial::times(const CoordMonomial& other) const {
  std::vector<Word> fs;
  fs.reserve(factors_.size() + other.factors_.size());
  std::merge(factors_.begin(), factors_.end(), other.factors_.begin(),
             other.factors_.end(), std::back_inserter(fs), std::greater<>());
  CoordMonomial m;
  m.factors_ = std::move(fs);
  return m;
}

CoordMonomial CoordMonomial::times(const Word& w) const {
  return times(CoordMonomial::generator(w));
}

std::strong_ordering CoordMonomial::operator<=>(const CoordMonomial& other) const {
  if (auto c = factors_.size() <=> other.factors_.size(); c != 0) return c;
  return factors_ <=> other.factors_;
}

HElement HElement::one() { return term(CoordMonomial::one()); }

HElement HElement::generator(const Word& w) {
  return term(CoordMonomial::generator(w));
}

HElement HElement::term(const CoordMonomial& m, const Rat& c) {
  HElement h;
  h.add_term(m, c);
  return h;
}

Rat HElement::coeff(const CoordMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void HElement::add_term(const CoordMonomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HElement& HElement::operator+=(const HElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

HElement HElement::operator-() const {
  HElement out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

HElement operator+(HElement lhs, const HElement& rhs) {
  lhs += rhs;
  return lhs;
}

HElement operator-(HElement lhs, const HElement& rhs) {
  lhs += -rhs;
  return lhs;
}

HElement operator*(const Rat& c, HElement h) {
  if (c == 0) return HElement();
  HElement out;
  for (const auto& [m, v] : h.terms()) out.add_term(m, c * v);
  return out;
}

TensorElement TensorElement::term(const CoordMonomial& l, const CoordMonomial& r,
                                  const Rat& c) {
  TensorElement t;
  t.add_term(l, r, c);
  return t;
}

void TensorElement::add_term(const CoordMonomial& l, const CoordMonomial& r,
                             const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Key{l, r}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorElement TensorElement::operator-() const {
  TensorElement out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

TensorElement operator+(TensorElement lhs, const TensorElement& rhs) {
  lhs += rhs;
  return lhs;
}

TensorElement operator-(TensorElement lhs, const TensorElement& rhs) {
  lhs += -rhs;
  return lhs;
}

TensorElement operator*(const Rat& c, TensorElement t) {
  TensorElement out;
  if (c == 0) return out;
  for (const auto& [k, v] : t.terms()) out.add_term(k.first, k.second, c * v);
  return out;
}

HElement h_mul(const HElement& a, const HElement& b) {
  HElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma.times(mb), ca * cb);
  return out;
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      out.add_term(ka.first.times(kb.first), ka.second.times(kb.second), ca * cb);
  return out;
}

Rat counit(const HElement& h) { return h.coeff(CoordMonomial::one()); }

namespace {

// Derivation over the factors of a monomial; `edit` maps one factor word to
// its replacement.
template <typename Edit>
HElement derivation(const CoordMonomial& m, Edit&& edit) {
  HElement out;
  const auto& fs = m.factors();
  for (std::size_t k = 0; k < fs.size(); ++k) {
    std::vector<Word> rest;
    rest.reserve(fs.size());
    for (std::size_t j = 0; j < fs.size(); ++j)
      if (j != k) rest.push_back(fs[j]);
    rest.push_back(edit(fs[k]));
    out.add_term(CoordMonomial(std::move(rest)), Rat(1));
  }
  return out;
}

template <typename Gen>
HElement lift(const HElement& h, Gen&& on_monomial) {
  HElement out;
  for (const auto& [m, c] : h.terms()) out += c * on_monomial(m);
  return out;
}

}  // namespace

HElement theta(Letter i, const CoordMonomial& m) {
  return derivation(m, [i](const Word& w) { return w.prepend(i); });
}

HElement theta(Letter i, const HElement& h) {
  return lift(h, [i](const CoordMonomial& m) { return theta(i, m); });
}

HElement tilde_theta(Letter i, const CoordMonomial& m) {
  return derivation(m, [i](const Word& w) { return w.append(i); });
}

HElement tilde_theta(Letter i, const HElement& h) {
  return lift(h, [i](const CoordMonomial& m) { return tilde_theta(i, m); });
}

HElement kappa(const Word& eta, const HElement& h) {
  HElement out;
  for (const auto& [m, c] : h.terms()) out.add_term(m.times(eta), c);
  return out;
}

TensorElement map_left(const TensorElement& t,
                       const std::function<HElement(const CoordMonomial&)>& f) {
  TensorElement out;
  for (const auto& [k, c] : t.terms())
    for (const auto& [m, cm] : f(k.first).terms())
      out.add_term(m, k.second, c * cm);
  return out;
}

TensorElement map_right(const TensorElement& t,
                        const std::function<HElement(const CoordMonomial&)>& f) {
  TensorElement out;
  for (const auto& [k, c] : t.terms())
    for (const auto& [m, cm] : f(k.second).terms())
      out.add_term(k.first, m, c * cm);
  return out;
}

namespace {

TensorElement slot_derivations(const TensorElement& t, Letter i) {
  // (tilde_theta_i (x) id + id (x) tilde_theta_i)
  auto op = [i](const CoordMonomial& m) { return tilde_theta(i, m); };
  return map_left(t, op) + map_right(t, op);
}

}  // namespace

TensorElement deshuffle(const Word& eta) {
  static std::map<Word, TensorElement> cache;
  static std::mutex mutex;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(eta); it != cache.end()) return it->second;
  }
  TensorElement result;
  if (eta.is_empty()) {
    const auto ae = CoordMonomial::generator(Word());
    result = TensorElement::term(ae, ae);
  } else {
    const Letter last = eta.at(eta.length() - 1);
    result = slot_derivations(deshuffle(eta.prefix(eta.length() - 1)), last);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(eta, std::move(result)).first->second;
}

TensorElement tilde_coproduct(const Word& eta) {
  static std::map<Word, TensorElement> cache;
  static std::mutex mutex;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(eta); it != cache.end()) return it->second;
  }
  TensorElement result;
  if (eta.is_empty()) {
    result = TensorElement::term(CoordMonomial::generator(Word()),
                                 CoordMonomial::one());
  } else {
    const Letter first = eta.at(0);
    const Word tail = eta.suffix_from(1);
    result = map_left(tilde_coproduct(tail), [first](const CoordMonomial& m) {
      return theta(first, m);
    });
    if (first == Letter::x0) {
      // (theta_1 (x) mu) o (tilde_coproduct (x) id) o deshuffle
      for (const auto& [k, c] : deshuffle(tail).terms()) {
        // both deshuffle slots are single generators
        const Word left_word = k.first.factors().front();
        for (const auto& [tk, tc] : tilde_coproduct(left_word).terms()) {
          for (const auto& [m, mc] :
               theta(Letter::x1, HElement::term(tk.first)).terms()) {
            result.add_term(m, tk.second.times(k.second), c * tc * mc);
          }
        }
      }
    }
  }
  std::lock_guard lock(mutex);
  return cache.emplace(eta, std::move(result)).first->second;
}

TensorElement full_coproduct(const Word& eta) {
  return tilde_coproduct(eta) +
         TensorElement::term(CoordMonomial::one(),
                             CoordMonomial::generator(eta));
}

TensorElement reduced_coproduct(const Word& eta) {
  return tilde_coproduct(eta) -
         TensorElement::term(CoordMonomial::generator(eta),
                             CoordMonomial::one());
}

TensorElement full_coproduct(const CoordMonomial& m) {
  TensorElement out =
      TensorElement::term(CoordMonomial::one(), CoordMonomial::one());
  for (const Word& w : m.factors()) out = tensor_mul(out, full_coproduct(w));
  return out;
}

TensorElement full_coproduct(const HElement& h) {
  TensorElement out;
  for (const auto& [m, c] : h.terms()) out += c * full_coproduct(m);
  return out;
}

TensorElement big_theta_coproduct(const Word& eta) {
  if (eta.is_empty())
    throw std::invalid_argument("big_theta_coproduct: empty word");
  // Delta a_e = a_e (x) 1 + 1 (x) a_e
  TensorElement t =
      TensorElement::term(CoordMonomial::generator(Word()), CoordMonomial::one()) +
      TensorElement::term(CoordMonomial::one(), CoordMonomial::generator(Word()));
  for (Letter i : eta.letters()) {
    TensorElement next = slot_derivations(t, i);
    if (i == Letter::x0) {
      // + tilde_theta_1 (x) kappa_e
      next += map_right(
          map_left(t, [](const CoordMonomial& m) {
            return tilde_theta(Letter::x1, m);
          }),
          [](const CoordMonomial& m) {
            return HElement::term(m.times(Word()));
          });
    }
    t = std::move(next);
  }
  return t;
}

}  // namespace fliess

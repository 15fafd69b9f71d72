#include "fliess/series.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace fliess {

Truncation min_truncation(const Truncation& a, const Truncation& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

bool within(const Truncation& t, int degree) { return !t || degree <= *t; }

Series Series::unit(Truncation trunc) { return monomial(Word(), Rat(1), trunc); }

Series Series::monomial(const Word& w, const Rat& coeff, Truncation trunc) {
  Series s(trunc);
  s.add_term(w, coeff);
  return s;
}

Rat Series::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

int Series::max_term_degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
  return d;
}

void Series::set_truncation(Truncation t) {
  trunc_ = t;
  if (!trunc_) return;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.degree() > *trunc_) it = terms_.erase(it);
    else ++it;
  }
}

void Series::add_term(const Word& w, const Rat& c) {
  if (c == 0 || !within(trunc_, w.degree())) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Series Series::truncated(int n) const {
  Series out = *this;
  out.set_truncation(min_truncation(trunc_, n));
  return out;
}

Series Series::graded_part(int n) const {
  Series out;
  for (const auto& [w, c] : terms_)
    if (w.degree() == n) out.add_term(w, c);
  return out;
}

Series& Series::operator+=(const Series& rhs) {
  set_truncation(min_truncation(trunc_, rhs.trunc_));
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

Series Series::operator-() const {
  Series out(trunc_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

Series operator+(Series lhs, const Series& rhs) {
  lhs += rhs;
  return lhs;
}

Series operator-(Series lhs, const Series& rhs) {
  lhs += -rhs;
  return lhs;
}

Series operator*(const Rat& c, Series s) {
  if (c == 0) return Series::zero(s.truncation());
  for (auto& [w, v] : s.terms_) v *= c;
  return s;
}

namespace {

Series shuffle_uncached(const Word& u, const Word& v) {
  if (u.is_empty()) return Series::monomial(v);
  if (v.is_empty()) return Series::monomial(u);
  Series out;
  for (const auto& [w, c] : shuffle(u.suffix_from(1), v).terms())
    out.add_term(w.prepend(u.at(0)), c);
  for (const auto& [w, c] : shuffle(u, v.suffix_from(1)).terms())
    out.add_term(w.prepend(v.at(0)), c);
  return out;
}

}  // namespace

Series shuffle(const Word& u, const Word& v) {
  static std::map<std::pair<Word, Word>, Series> cache;
  static std::mutex mutex;
  // shuffle is commutative; normalize the key
  const auto key = u <= v ? std::make_pair(u, v) : std::make_pair(v, u);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Series result = shuffle_uncached(key.first, key.second);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(result)).first->second;
}

Series shuffle_right_recursion(const Word& u, const Word& v) {
  if (u.is_empty()) return Series::monomial(v);
  if (v.is_empty()) return Series::monomial(u);
  Series out;
  const Letter ulast = u.at(u.length() - 1);
  const Letter vlast = v.at(v.length() - 1);
  for (const auto& [w, c] : shuffle_right_recursion(u.prefix(u.length() - 1), v).terms())
    out.add_term(w.append(ulast), c);
  for (const auto& [w, c] : shuffle_right_recursion(u, v.prefix(v.length() - 1)).terms())
    out.add_term(w.append(vlast), c);
  return out;
}

Series shuffle_series(const Series& c, const Series& d) {
  Series out(min_truncation(c.truncation(), d.truncation()));
  for (const auto& [u, cu] : c.terms()) {
    for (const auto& [v, dv] : d.terms()) {
      if (!within(out.truncation(), u.degree() + v.degree() - 1)) continue;
      const Rat f = cu * dv;
      for (const auto& [w, m] : shuffle(u, v).terms()) out.add_term(w, f * m);
    }
  }
  return out;
}

Series shuffle_power(const Series& c, int k) {
  Series out = Series::unit(c.truncation());
  for (int i = 0; i < k; ++i) out = shuffle_series(out, c);
  return out;
}

Series cat(const Series& c, const Series& d) {
  Series out(min_truncation(c.truncation(), d.truncation()));
  for (const auto& [u, cu] : c.terms())
    for (const auto& [v, dv] : d.terms()) out.add_term(concat(u, v), cu * dv);
  return out;
}

Series ferfera(int n) {
  Series out{Truncation(n)};
  Rat factorial(1);
  Word w;
  for (int k = 0; k + 1 <= n; ++k) {  // x1^k has degree k + 1
    out.add_term(w, factorial);
    w = w.append(Letter::x1);
    factorial *= (k + 1);
  }
  return out;
}

}  // namespace fliess

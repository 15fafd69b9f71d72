#pragma once

#include <map>
#include <optional>

#include "fliess/rational.hpp"
#include "fliess/word.hpp"

namespace fliess {

/// Degree bound carried by a Series; nullopt means the value is an exact
/// polynomial rather than a truncation of something longer.
using Truncation = std::optional<int>;

Truncation min_truncation(const Truncation& a, const Truncation& b);
bool within(const Truncation& t, int degree);

/// A finite linear combination of words with exact rational coefficients.
///
/// Invariants: no zero coefficient is ever stored, and when a truncation
/// degree N is set every stored word has degree <= N. Binary operations
/// propagate the minimum of the operands' truncations.
class Series {
 public:
  Series() = default;
  explicit Series(Truncation trunc) : trunc_(trunc) {}

  static Series zero(Truncation trunc = std::nullopt) { return Series(trunc); }
  static Series unit(Truncation trunc = std::nullopt);
  static Series monomial(const Word& w, const Rat& coeff = Rat(1),
                         Truncation trunc = std::nullopt);

  const std::map<Word, Rat>& terms() const& { return terms_; }
  // value overload so iterating the terms of a temporary stays valid
  std::map<Word, Rat> terms() && { return std::move(terms_); }
  Truncation truncation() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Word& w) const;
  int max_term_degree() const;  // 0 for the zero series

  void set_truncation(Truncation t);
  void add_term(const Word& w, const Rat& c);
  Series truncated(int n) const;
  Series graded_part(int n) const;  // terms of degree exactly n, exact result

  Series& operator+=(const Series& rhs);
  Series operator-() const;
  friend Series operator+(Series lhs, const Series& rhs);
  friend Series operator-(Series lhs, const Series& rhs);
  friend Series operator*(const Rat& c, Series s);

  bool operator==(const Series& other) const = default;

 private:
  std::map<Word, Rat> terms_;
  Truncation trunc_;
};

/// Shuffle product of two words via the left recursion
/// u1 u' sh v = u1 (u' sh v) + v1 (u sh v'). Exact.
Series shuffle(const Word& u, const Word& v);

/// Same product via the right recursion; kept as an independent route.
Series shuffle_right_recursion(const Word& u, const Word& v);

Series shuffle_series(const Series& c, const Series& d);
Series shuffle_power(const Series& c, int k);

/// Bilinear extension of word concatenation.
Series cat(const Series& c, const Series& d);

/// sum_k k! x1^k truncated to words of degree <= N.
Series ferfera(int n);

}  // namespace fliess

#pragma once

#include <compare>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "fliess/rational.hpp"
#include "fliess/series.hpp"
#include "fliess/word.hpp"

namespace fliess {

/// A commutative monomial in coordinate functions a_eta: a multiset of words.
/// The empty multiset is the algebra unit 1 (degree 0); the monomial {empty
/// word} is the generator a_e of degree 1. The two are distinct on purpose.
///
/// Factors are kept sorted in descending canonical word order, which is also
/// the rendering order (a[x1x1]a[e], matching the usual way these products
/// are written).
class CoordMonomial {
 public:
  CoordMonomial() = default;  // the unit
  static CoordMonomial one() { return CoordMonomial(); }
  static CoordMonomial generator(const Word& w) { return CoordMonomial({w}); }
  explicit CoordMonomial(std::vector<Word> factors);

  bool is_unit() const { return factors_.empty(); }
  const std::vector<Word>& factors() const& { return factors_; }
  std::vector<Word> factors() && { return std::move(factors_); }
  std::size_t num_factors() const { return factors_.size(); }
  int degree() const;

  CoordMonomial times(const CoordMonomial& other) const;
  CoordMonomial times(const Word& w) const;

  /// Fewer factors first, then lexicographic on the (descending) factor list.
  std::strong_ordering operator<=>(const CoordMonomial& other) const;
  bool operator==(const CoordMonomial& other) const {
    return factors_ == other.factors_;
  }

 private:
  std::vector<Word> factors_;
};

/// A rational linear combination of coordinate-function monomials.
class HElement {
 public:
  HElement() = default;
  static HElement zero() { return HElement(); }
  static HElement one();                        // 1 * unit monomial
  static HElement generator(const Word& w);     // a_eta
  static HElement term(const CoordMonomial& m, const Rat& c = Rat(1));

  const std::map<CoordMonomial, Rat>& terms() const& { return terms_; }
  std::map<CoordMonomial, Rat> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const CoordMonomial& m) const;
  void add_term(const CoordMonomial& m, const Rat& c);

  HElement& operator+=(const HElement& rhs);
  HElement operator-() const;
  friend HElement operator+(HElement lhs, const HElement& rhs);
  friend HElement operator-(HElement lhs, const HElement& rhs);
  friend HElement operator*(const Rat& c, HElement h);

  bool operator==(const HElement& other) const = default;

 private:
  std::map<CoordMonomial, Rat> terms_;
};

/// Elements of H (x) H, used by all coproducts.
class TensorElement {
 public:
  using Key = std::pair<CoordMonomial, CoordMonomial>;

  TensorElement() = default;
  static TensorElement term(const CoordMonomial& l, const CoordMonomial& r,
                            const Rat& c = Rat(1));

  const std::map<Key, Rat>& terms() const& { return terms_; }
  std::map<Key, Rat> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const CoordMonomial& l, const CoordMonomial& r, const Rat& c);

  TensorElement& operator+=(const TensorElement& rhs);
  TensorElement operator-() const;
  friend TensorElement operator+(TensorElement lhs, const TensorElement& rhs);
  friend TensorElement operator-(TensorElement lhs, const TensorElement& rhs);
  friend TensorElement operator*(const Rat& c, TensorElement t);

  bool operator==(const TensorElement& other) const = default;

 private:
  std::map<Key, Rat> terms_;
};

// -- algebra structure --------------------------------------------------

HElement h_mul(const HElement& a, const HElement& b);
TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);

/// Counit: kills every non-unit monomial.
Rat counit(const HElement& h);

// -- augmentation operators ---------------------------------------------

/// Left augmentation theta_i: a_eta -> a_{x_i eta}, extended as a derivation;
/// theta_i(1) = 0.
HElement theta(Letter i, const CoordMonomial& m);
HElement theta(Letter i, const HElement& h);

/// Right augmentation: a_eta -> a_{eta x_i}, same derivation extension.
HElement tilde_theta(Letter i, const CoordMonomial& m);
HElement tilde_theta(Letter i, const HElement& h);

/// Multiplication map kappa_eta(h) = h * a_eta.
HElement kappa(const Word& eta, const HElement& h);

/// Apply an H -> H map to the left (resp. right) tensor slot.
TensorElement map_left(const TensorElement& t,
                       const std::function<HElement(const CoordMonomial&)>& f);
TensorElement map_right(const TensorElement& t,
                        const std::function<HElement(const CoordMonomial&)>& f);

// -- coproducts ----------------------------------------------------------

/// Deshuffle coproduct of a generator, by the right-augmentation recursion.
/// Both slots are single coordinate functions.
TensorElement deshuffle(const Word& eta);

/// The coproduct dual to the modified composition product, computed by the
/// strip-first-letter induction. Left slot of every term is a single
/// coordinate function.
TensorElement tilde_coproduct(const Word& eta);

/// Full coproduct Delta a_eta = tilde Delta a_eta + 1 (x) a_eta.
TensorElement full_coproduct(const Word& eta);

/// Reduced coproduct Delta' a_eta = Delta a_eta - 1 (x) a_eta - a_eta (x) 1.
TensorElement reduced_coproduct(const Word& eta);

/// Multiplicative extension of the full coproduct to all of H.
TensorElement full_coproduct(const CoordMonomial& m);
TensorElement full_coproduct(const HElement& h);

/// Delta a_eta via the right-augmentation operator formula
/// Delta a_eta = Theta_{i_l} o ... o Theta_{i_1} (Delta a_e), eta nonempty.
TensorElement big_theta_coproduct(const Word& eta);

}  // namespace fliess

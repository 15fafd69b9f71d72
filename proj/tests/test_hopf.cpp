#include <doctest.h>

#include <vector>

#include "fliess/hopf.hpp"
#include "fliess/io.hpp"

using namespace fliess;

namespace {

CoordMonomial mono(std::initializer_list<const char*> words) {
  std::vector<Word> fs;
  for (const char* w : words) fs.push_back(parse_word(w));
  return CoordMonomial(std::move(fs));
}

}  // namespace

TEST_CASE("unit monomial vs empty-word generator") {
  CHECK(CoordMonomial::one() != CoordMonomial::generator(Word()));
  CHECK(CoordMonomial::one().degree() == 0);
  CHECK(CoordMonomial::generator(Word()).degree() == 1);
  CHECK(mono({"x0x1"}).degree() == 4);
  CHECK(mono({"x1x1", "e"}).degree() == 4);
}

TEST_CASE("monomial multiplication is a sorted merge") {
  CHECK(mono({"x1"}).times(mono({"x1x1", "e"})) == mono({"x1", "x1x1", "e"}));
  CHECK(mono({}).times(mono({"x0"})) == mono({"x0"}));
}

TEST_CASE("augmentation operators on generators") {
  const HElement a = HElement::generator(parse_word("x1"));
  CHECK(theta(Letter::x0, a) == HElement::generator(parse_word("x0x1")));
  CHECK(tilde_theta(Letter::x0, a) == HElement::generator(parse_word("x1x0")));
  // derivation over a product
  const HElement prod = HElement::term(mono({"x1", "e"}));
  HElement expect;
  expect.add_term(mono({"x1x1", "e"}), Rat(1));
  expect.add_term(mono({"x1", "x1"}), Rat(1));
  CHECK(tilde_theta(Letter::x1, prod) == expect);
  // operators vanish on the unit
  CHECK(theta(Letter::x1, HElement::one()).is_zero());
  CHECK(tilde_theta(Letter::x1, HElement::one()).is_zero());
}

TEST_CASE("left and right augmentations commute") {
  const HElement a = HElement::generator(parse_word("x0x1"));
  for (Letter i : {Letter::x0, Letter::x1})
    for (Letter j : {Letter::x0, Letter::x1})
      CHECK(theta(j, tilde_theta(i, a)) == tilde_theta(i, theta(j, a)));
}

TEST_CASE("deshuffle base cases") {
  const auto ae = CoordMonomial::generator(Word());
  CHECK(deshuffle(Word()) == TensorElement::term(ae, ae));

  TensorElement dx1;
  dx1.add_term(mono({"x1"}), ae, Rat(1));
  dx1.add_term(ae, mono({"x1"}), Rat(1));
  CHECK(deshuffle(parse_word("x1")) == dx1);

  TensorElement dx0x1;
  dx0x1.add_term(mono({"x0x1"}), ae, Rat(1));
  dx0x1.add_term(mono({"x0"}), mono({"x1"}), Rat(1));
  dx0x1.add_term(mono({"x1"}), mono({"x0"}), Rat(1));
  dx0x1.add_term(ae, mono({"x0x1"}), Rat(1));
  CHECK(deshuffle(parse_word("x0x1")) == dx0x1);
}

TEST_CASE("strip-first-letter coproduct") {
  CHECK(tilde_coproduct(Word()) ==
        TensorElement::term(CoordMonomial::generator(Word()),
                            CoordMonomial::one()));
  CHECK(tilde_coproduct(parse_word("x1")) ==
        TensorElement::term(mono({"x1"}), CoordMonomial::one()));

  TensorElement dx0;
  dx0.add_term(mono({"x0"}), CoordMonomial::one(), Rat(1));
  dx0.add_term(mono({"x1"}), mono({"e"}), Rat(1));
  CHECK(tilde_coproduct(parse_word("x0")) == dx0);
}

TEST_CASE("full coproduct of x0x1") {
  TensorElement expect;
  expect.add_term(mono({"x0x1"}), CoordMonomial::one(), Rat(1));
  expect.add_term(CoordMonomial::one(), mono({"x0x1"}), Rat(1));
  expect.add_term(mono({"x1x1"}), mono({"e"}), Rat(1));
  expect.add_term(mono({"x1"}), mono({"x1"}), Rat(1));
  CHECK(full_coproduct(parse_word("x0x1")) == expect);
}

TEST_CASE("coproduct grading and counit up to degree 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Word& eta : words_of_degree(n)) {
      HElement left_strip, right_strip;
      for (const auto& [k, c] : full_coproduct(eta).terms()) {
        CHECK(k.first.degree() + k.second.degree() == n);
        if (k.first.is_unit()) left_strip.add_term(k.second, c);
        if (k.second.is_unit()) right_strip.add_term(k.first, c);
      }
      CHECK(left_strip == HElement::generator(eta));
      CHECK(right_strip == HElement::generator(eta));
    }
  }
}

TEST_CASE("operator route to the coproduct") {
  for (int n = 2; n <= 6; ++n)
    for (const Word& eta : words_of_degree(n))
      if (!eta.is_empty())
        CHECK(big_theta_coproduct(eta) == full_coproduct(eta));
}

TEST_CASE("multiplicative extension") {
  // Delta(a_e^2) = (Delta a_e)^2
  const TensorElement d = full_coproduct(mono({"e", "e"}));
  const TensorElement de = full_coproduct(Word());
  CHECK(d == tensor_mul(de, de));
}

#include <doctest.h>

#include <cmath>

#include "fliess/abel.hpp"
#include "fliess/antipode.hpp"
#include "fliess/io.hpp"

using namespace fliess;

TEST_CASE("polynomial arithmetic") {
  const PolyFunction p = parse_poly("1 + 2*t - 1/3*t^2");
  CHECK(p.eval(Rat(3)) == Rat(4));
  CHECK(p.derivative() == parse_poly("2 - 2/3*t"));
  CHECK(parse_poly("2*t").antiderivative() == parse_poly("t^2"));
  CHECK(parse_poly("t").antiderivative().eval(Rat(0)) == 0);
  CHECK((parse_poly("1 + t") * parse_poly("1 - t")) == parse_poly("1 - t^2"));
}

TEST_CASE("iterated integrals") {
  const InputPair u{parse_poly("1"), parse_poly("1")};  // alpha = beta = 1
  CHECK(iterated_integral(Word(), u) == parse_poly("1"));
  CHECK(iterated_integral(parse_word("x1"), u) == parse_poly("t"));
  CHECK(iterated_integral(parse_word("x1x1"), u) == parse_poly("1/2*t^2"));
  CHECK(iterated_integral(parse_word("x0x1"), u) == parse_poly("1/2*t^2"));

  // non-constant input: E_{x1}(t) = t^2/2 for u1 = t
  const InputPair v{parse_poly("0"), parse_poly("t")};
  CHECK(iterated_integral(parse_word("x1"), v) == parse_poly("1/2*t^2"));
}

TEST_CASE("iterated integrals satisfy the shuffle product rule") {
  const InputPair u{parse_poly("1 - t"), parse_poly("2*t")};
  const Word eta = parse_word("x1x0");
  const Word xi = parse_word("x1");
  const PolyFunction lhs =
      iterated_integral(eta, u) * iterated_integral(xi, u);
  PolyFunction rhs;
  for (const auto& [w, c] : shuffle(eta, xi).terms())
    rhs = rhs + PolyFunction::constant(c) * iterated_integral(w, u);
  CHECK(lhs == rhs);
}

TEST_CASE("series evaluation respects truncation") {
  const InputPair u{parse_poly("1"), parse_poly("1")};
  const Series c = parse_series("x1 + x1x1x1");
  CHECK(fliess_eval(c, u, Rat(1, 2), 2) == Rat(1, 2));
  CHECK(fliess_eval(c, u, Rat(1, 2), 4) == Rat(1, 2) + Rat(1, 48));
}

TEST_CASE("integrator reproduces closed-form solutions") {
  // beta = 1, alpha = 0: dz = z^2, z(t) = 1/(1-t)
  const InputPair riccati{parse_poly("0"), parse_poly("1")};
  for (double t : {0.02, 0.05, 0.1, 0.5}) {
    const double z = abel_numeric(riccati, 1.0, t, 1e-4);
    CHECK(std::fabs(z - 1.0 / (1.0 - t)) < 1e-8);
  }
  // alpha = 1, beta = 0: dz = z^3, z(t) = (1-2t)^{-1/2}
  const InputPair cubic{parse_poly("1"), parse_poly("0")};
  for (double t : {0.02, 0.05, 0.1}) {
    const double z = abel_numeric(cubic, 1.0, t, 1e-4);
    CHECK(std::fabs(z - 1.0 / std::sqrt(1.0 - 2.0 * t)) < 1e-6);
  }
}

TEST_CASE("integrator is fourth order") {
  const InputPair riccati{parse_poly("0"), parse_poly("1")};
  const double exact = 1.0 / (1.0 - 0.5);
  const double e1 = std::fabs(abel_numeric(riccati, 1.0, 0.5, 1e-2) - exact);
  const double e2 = std::fabs(abel_numeric(riccati, 1.0, 0.5, 5e-3) - exact);
  CHECK(e1 / e2 >= 12.0);
}

TEST_CASE("finite-time escape is detected") {
  // dz = z^2 from z0 = 1 blows up at t = 1
  const InputPair riccati{parse_poly("0"), parse_poly("1")};
  CHECK_THROWS_AS(abel_numeric(riccati, 1.0, 1.5, 1e-4), BlowupError);
  CHECK_THROWS_AS(abel_numeric(riccati, 1.0, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("return map coefficients") {
  const InputPair u{parse_poly("1"), parse_poly("1")};
  const auto coeffs = return_map_coeffs(u, Rat(1, 10), 4);
  REQUIRE(coeffs.size() == 4);
  CHECK(coeffs[0] == 1);           // a_1 = <a_1, e> E_e = 1
  CHECK(coeffs[1] == Rat(1, 10));  // a_2 = E_{x1}(1/10)

  // partial sums match the unity-feedback series of the factorial plant
  const int n = 5;
  const Series e = unity_feedback(ferfera(n), n);
  Rat sum(0);
  for (const Rat& a : return_map_coeffs(u, Rat(1, 10), n)) sum += a;
  CHECK(sum == fliess_eval(e, u, Rat(1, 10), n));
}

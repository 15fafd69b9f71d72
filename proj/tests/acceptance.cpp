// Acceptance gate: one pass/fail line per criterion, nonzero exit if any fail.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fliess/abel.hpp"
#include "fliess/antipode.hpp"
#include "fliess/devlin.hpp"
#include "fliess/io.hpp"

using namespace fliess;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& note = "") {
  std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
              note.empty() ? "" : "  -- ", note.c_str());
  if (!ok) ++failures;
}

CoordMonomial mono(std::initializer_list<const char*> words) {
  std::vector<Word> fs;
  for (const char* w : words) fs.push_back(parse_word(w));
  return CoordMonomial(std::move(fs));
}

HElement he(std::initializer_list<std::pair<int, std::initializer_list<const char*>>>
                terms) {
  HElement out;
  for (const auto& [c, m] : terms) out.add_term(mono(m), Rat(c));
  return out;
}

Series sparse_random_series(std::mt19937& rng, int n, int num_terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> len(0, n - 1);
  std::uniform_int_distribution<int> bit(0, 1);
  Series out{Truncation(n)};
  for (int i = 0; i < num_terms; ++i) {
    std::vector<Letter> letters(len(rng));
    for (auto& l : letters) l = bit(rng) ? Letter::x1 : Letter::x0;
    Word w(std::move(letters));
    if (w.degree() > n) continue;
    int c = coeff(rng);
    if (c == 0) c = 1;
    out.add_term(w, Rat(c));
  }
  return out;
}

void criterion_devlin_table() {
  bool ok = devlin_recursive(3).poly == parse_series("2*x1x1 + x0") &&
            devlin_recursive(4).poly ==
                parse_series("6*x1x1x1 + 3*x0x1 + 2*x1x0") &&
            devlin_recursive(5).poly ==
                parse_series("24*x1x1x1x1 + 12*x0x1x1 + 8*x1x0x1 + "
                             "6*x1x1x0 + 3*x0x0") &&
            devlin_recursive(6).poly ==
                parse_series("120*x1x1x1x1x1 + 60*x0x1x1x1 + 40*x1x0x1x1 + "
                             "30*x1x1x0x1 + 15*x0x0x1 + 24*x1x1x1x0 + "
                             "12*x0x1x0 + 8*x1x0x0");
  report("01 canonical polynomial table (grades 3-6)", ok);
}

void criterion_antipode_table() {
  bool ok = antipode(CoordMonomial::one()) == HElement::one() &&
            antipode_left(Word()) == he({{-1, {"e"}}}) &&
            antipode_left(parse_word("x1")) == he({{-1, {"x1"}}}) &&
            antipode_left(parse_word("x0")) ==
                he({{-1, {"x0"}}, {1, {"x1", "e"}}}) &&
            antipode_left(parse_word("x1x1")) == he({{-1, {"x1x1"}}}) &&
            antipode_left(parse_word("x0x1")) ==
                he({{-1, {"x0x1"}}, {1, {"x1", "x1"}}, {1, {"x1x1", "e"}}}) &&
            antipode_left(parse_word("x1x0")) ==
                he({{-1, {"x1x0"}}, {1, {"x1x1", "e"}}}) &&
            antipode_left(parse_word("x1x1x1")) == he({{-1, {"x1x1x1"}}}) &&
            antipode_left(parse_word("x0x0")) ==
                he({{-1, {"x0x0"}},
                    {1, {"x1", "x0"}},
                    {1, {"x1x0", "e"}},
                    {1, {"x0x1", "e"}},
                    {-1, {"x1", "x1", "e"}},
                    {-1, {"x1x1", "e", "e"}}});
  report("02 antipode table (grades 0-5)", ok);
}

void criterion_worked_example() {
  const Series neg_c = -ferfera(4);
  bool ok = evaluate(antipode_left(parse_word("x0x1")), neg_c) == 3 &&
            evaluate(antipode_left(parse_word("x1x0")), neg_c) == 2 &&
            evaluate(antipode_left(parse_word("x1x1x1")), neg_c) == 6;
  report("03 worked antipode evaluations (3, 2, 6)", ok);
}

void criterion_closed_form() {
  bool ok = devlin_coeff_closed(parse_word("x1x0x1"), 5) == 8;
  for (int n = 1; n <= 10 && ok; ++n) {
    Series closed;
    for (const Word& eta : words_of_degree(n))
      closed.add_term(eta, Rat(devlin_coeff_closed(eta, n)));
    ok = closed == devlin_recursive(n).poly;
  }
  report("04 closed-form coefficients match the recursion (grades 1-10)", ok);
}

void criterion_three_antipodes() {
  bool ok = true;
  for (int n = 1; n <= 8 && ok; ++n) {
    for (const Word& eta : words_of_degree(n)) {
      const HElement s = antipode_left(eta);
      if (s != antipode_right(eta) ||
          (!eta.is_empty() && s != antipode_direct(eta))) {
        ok = false;
        break;
      }
    }
  }
  report("05 three antipode routes agree (degree <= 8)", ok);
}

void criterion_hopf_axioms() {
  using Triple = std::array<CoordMonomial, 3>;
  bool ok = true;
  for (int n = 1; n <= 8 && ok; ++n) {
    for (const Word& eta : words_of_degree(n)) {
      const TensorElement d = full_coproduct(eta);
      std::map<Triple, Rat> left, right;
      HElement strip_left, strip_right, conv;
      for (const auto& [k, c] : d.terms()) {
        if (k.first.degree() + k.second.degree() != n) ok = false;
        if (k.first.is_unit()) strip_left.add_term(k.second, c);
        if (k.second.is_unit()) strip_right.add_term(k.first, c);
        conv += c * h_mul(antipode(k.first), HElement::term(k.second));
        for (const auto& [k2, c2] : full_coproduct(k.first).terms()) {
          auto& v = left[{k2.first, k2.second, k.second}];
          v += c * c2;
          if (v == 0) left.erase({k2.first, k2.second, k.second});
        }
        for (const auto& [k2, c2] : full_coproduct(k.second).terms()) {
          auto& v = right[{k.first, k2.first, k2.second}];
          v += c * c2;
          if (v == 0) right.erase({k.first, k2.first, k2.second});
        }
      }
      const HElement gen = HElement::generator(eta);
      if (left != right || strip_left != gen || strip_right != gen ||
          !conv.is_zero()) {
        ok = false;
        break;
      }
    }
  }
  report("06 coassociativity, counit, grading, antipode identity (degree <= 8)",
         ok);
}

void criterion_operator_coproduct() {
  bool ok = true;
  for (int n = 1; n <= 8 && ok; ++n)
    for (const Word& eta : words_of_degree(n))
      if (!eta.is_empty() && big_theta_coproduct(eta) != full_coproduct(eta)) {
        ok = false;
        break;
      }
  report("07 operator route equals the full coproduct (degree <= 8)", ok);
}

void criterion_degree_scaling() {
  bool ok = true;
  for (int n = 1; n <= 8 && ok; ++n) {
    for (const Word& eta : words_of_degree(n)) {
      for (Letter x : {Letter::x0, Letter::x1}) {
        if (eta.append(x).degree() > 9) continue;
        const auto [lhs, rhs] = check_degree_scaling(eta, x);
        if (lhs != rhs) {
          ok = false;
          break;
        }
      }
    }
  }
  // hatted operator table, including the coefficient-4 term
  HElement x0x0x1;
  x0x0x1.add_term(mono({"x1x1x1", "e", "e"}), Rat(1));
  x0x0x1.add_term(mono({"x1x1", "x1", "e"}), Rat(4));
  x0x0x1.add_term(mono({"x1", "x1", "x1"}), Rat(1));
  ok = ok && theta_hat(parse_word("x1x0")) == HElement::term(mono({"x1x1", "e"})) &&
       theta_hat(parse_word("x1x1")) == HElement::term(mono({"x1x1"})) &&
       theta_hat(parse_word("x0x1")) ==
           HElement::term(mono({"x1x1", "e"})) + HElement::term(mono({"x1", "x1"})) &&
       theta_hat(parse_word("x0x0")) ==
           HElement::term(mono({"x1x1", "e", "e"})) +
               HElement::term(mono({"x1", "x1", "e"})) &&
       theta_hat(parse_word("x0x0x1")) == x0x0x1;
  report("08 degree scaling and hatted operator table", ok);
}

void criterion_coefficient_sums() {
  bool ok = true;
  for (int n = 1; n <= 7 && ok; ++n) {
    for (const Word& eta : words_of_degree(n)) {
      Rat sum(0);
      for (const auto& [m, c] : antipode_left(eta.append(Letter::x0)).terms())
        sum += c;
      if (sum != 0) {
        ok = false;
        break;
      }
    }
  }
  report("09 antipode coefficient sums vanish after appending x0 (degree <= 7)",
         ok);
}

void criterion_oracles() {
  std::mt19937 rng(2026);
  bool ok = true;
  for (int trial = 0; trial < 50 && ok; ++trial) {
    const Series c = sparse_random_series(rng, 8, 6);
    ok = group_inverse(c, 8) == group_inverse_fixpoint(c, 8);
  }
  for (int n = 1; n <= 9 && ok; ++n)
    for (const Word& eta : words_of_degree(n))
      if (lie_coeff(eta) != devlin_coeff_closed(eta, n)) {
        ok = false;
        break;
      }
  report("10 inverse fixpoint oracle (50 series) and Lie oracle (degree <= 9)",
         ok);
}

void criterion_group_laws() {
  std::mt19937 rng(2027);
  const int n = 6;
  auto prod = [&](const Series& c, const Series& d) {
    return d.truncated(n) + mod_compose(c, d, n);
  };
  bool ok = true;
  for (int trial = 0; trial < 5 && ok; ++trial) {
    const Series c = sparse_random_series(rng, n, 4);
    const Series d = sparse_random_series(rng, n, 4);
    const Series e = sparse_random_series(rng, n, 4);
    const Series zero = Series::zero(Truncation(n));
    const Series inv = group_inverse(c, n);
    ok = prod(prod(c, d), e) == prod(c, prod(d, e)) &&
         prod(c, zero) == c.truncated(n) && prod(zero, c) == c.truncated(n) &&
         prod(c, inv).is_zero() && prod(inv, c).is_zero();
  }
  report("11 composition group laws at truncation 6", ok);
}

void criterion_numerical_bridge() {
  const int n = 10;
  const Series e = unity_feedback(ferfera(n), n);
  std::mt19937 rng(2028);
  std::uniform_int_distribution<long> grid(-1000000, 1000000);
  auto rand_poly = [&] {
    return PolyFunction({Rat(grid(rng), 1000000), Rat(grid(rng), 1000000),
                         Rat(grid(rng), 1000000)});
  };
  const std::array<Rat, 3> times = {Rat(1, 50), Rat(1, 20), Rat(1, 10)};

  bool ok = true;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const InputPair u{rand_poly(), rand_poly()};
    for (const Rat& t : times) {
      const double series_val = to_double(fliess_eval(e, u, t, n));
      const double ode_val = abel_numeric(u, 1.0, to_double(t), 1e-4);
      const double err = std::fabs(series_val - ode_val);
      worst = std::max(worst, err);
      if (err > 1e-6) ok = false;
    }
  }

  const InputPair riccati{PolyFunction(), PolyFunction({Rat(1)})};
  const InputPair cubic{PolyFunction({Rat(1)}), PolyFunction()};
  for (const Rat& t : times) {
    const double td = to_double(t);
    if (std::fabs(abel_numeric(riccati, 1.0, td, 1e-4) - 1.0 / (1.0 - td)) >
        1e-8)
      ok = false;
    if (std::fabs(abel_numeric(cubic, 1.0, td, 1e-4) -
                  1.0 / std::sqrt(1.0 - 2.0 * td)) > 1e-6)
      ok = false;
  }
  char note[96];
  std::snprintf(note, sizeof note,
                "worst series-vs-ODE gap %.3e (tolerance 1e-6)", worst);
  report("12 numerical bridge at t in {0.02, 0.05, 0.1}", ok, note);
}

}  // namespace

int main() {
  criterion_devlin_table();
  criterion_antipode_table();
  criterion_worked_example();
  criterion_closed_form();
  criterion_three_antipodes();
  criterion_hopf_axioms();
  criterion_operator_coproduct();
  criterion_degree_scaling();
  criterion_coefficient_sums();
  criterion_oracles();
  criterion_group_laws();
  criterion_numerical_bridge();
  std::printf("%d of 12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}

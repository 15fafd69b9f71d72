#include "fliess/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>

#include "fliess/abel.hpp"
#include "fliess/antipode.hpp"
#include "fliess/devlin.hpp"
#include "fliess/hopf.hpp"
#include "fliess/io.hpp"
#include "fliess/series.hpp"
#include "fliess/word.hpp"

namespace fliess {

namespace {

std::vector<Word> all_words_of_length(std::size_t len) {
  std::vector<Word> out;
  out.reserve(std::size_t(1) << len);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << len); ++mask) {
    std::vector<Letter> letters(len);
    for (std::size_t i = 0; i < len; ++i)
      letters[i] = (mask >> i) & 1 ? Letter::x1 : Letter::x0;
    out.emplace_back(std::move(letters));
  }
  return out;
}

Word random_word(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> bit(0, 1);
  const int len = len_dist(rng);
  std::vector<Letter> letters(len);
  for (auto& l : letters) l = bit(rng) ? Letter::x1 : Letter::x0;
  return Word(std::move(letters));
}

// A sparse series with small integer coefficients, truncated to degree n.
Series random_series(std::mt19937& rng, int n, int num_terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  Series out{Truncation(n)};
  for (int i = 0; i < num_terms; ++i) {
    Word w = random_word(rng, n - 1);
    if (w.degree() > n) continue;
    int c = coeff(rng);
    if (c == 0) c = 1;
    out.add_term(w, Rat(c));
  }
  return out;
}

Int binomial(int n, int k) {
  Int out = 1;
  for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

Rat coefficient_sum(const HElement& h) {
  Rat s(0);
  for (const auto& [m, c] : h.terms()) s += c;
  return s;
}

// group law on the non-delta parts: c_delta o d_delta = delta + (d + c otilde d)
Series group_prod(const Series& c, const Series& d, int n) {
  return d.truncated(n) + mod_compose(c, d, n);
}

using Check = std::function<bool(std::string&)>;

struct Suite {
  std::vector<CheckResult> results;

  void run(const std::string& name, const Check& body) {
    CheckResult r;
    r.name = name;
    try {
      r.passed = body(r.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
};

}  // namespace

std::vector<CheckResult> run_verification(int max_degree, unsigned seed) {
  Suite suite;
  std::mt19937 rng(seed);
  const int md = max_degree;

  suite.run("word-grading", [&](std::string& detail) {
    for (int trial = 0; trial < 200; ++trial) {
      const Word u = random_word(rng, 6);
      const Word v = random_word(rng, 6);
      const Word uv = concat(u, v);
      if (uv.degree() != u.degree() + v.degree() - 1) {
        detail = "degree not additive for " + to_string(u) + ", " + to_string(v);
        return false;
      }
      for (Letter l : {Letter::x0, Letter::x1}) {
        if (uv.count(l) != u.count(l) + v.count(l)) {
          detail = "letter counts not additive";
          return false;
        }
      }
    }
    return true;
  });

  suite.run("word-enumeration", [&](std::string& detail) {
    std::vector<std::size_t> counts;
    for (int n = 1; n <= std::max(md, 12); ++n) {
      const auto words = words_of_degree(n);
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].degree() != n) {
          detail = "degree mismatch at n=" + std::to_string(n);
          return false;
        }
        if (i > 0 && !(words[i - 1] < words[i])) {
          detail = "not strictly increasing at n=" + std::to_string(n);
          return false;
        }
      }
      counts.push_back(words.size());
      // Fibonacci recurrence from the append-x1 / append-x0 construction
      if (n >= 3 && counts[n - 1] != counts[n - 2] + counts[n - 3]) {
        detail = "count recurrence fails at n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  suite.run("shift-adjointness", [&](std::string& detail) {
    for (int trial = 0; trial < 200; ++trial) {
      const Word v = random_word(rng, 6);
      for (Letter x : {Letter::x0, Letter::x1}) {
        const auto r = right_shift(x, v.append(x));
        const auto l = left_shift(x, v.prepend(x));
        if (!r || *r != v || !l || *l != v) {
          detail = "shift does not invert concatenation on " + to_string(v);
          return false;
        }
      }
    }
    return true;
  });

  suite.run("shuffle-recursions-agree", [&](std::string& detail) {
    const int max_total = std::min(8, md);
    for (int lu = 0; lu <= max_total; ++lu) {
      for (int lv = 0; lv + lu <= max_total; ++lv) {
        for (const Word& u : all_words_of_length(lu)) {
          for (const Word& v : all_words_of_length(lv)) {
            if (shuffle(u, v) != shuffle_right_recursion(u, v)) {
              detail = "mismatch for " + to_string(u) + ", " + to_string(v);
              return false;
            }
          }
        }
      }
    }
    return true;
  });

  suite.run("shuffle-grading-and-count", [&](std::string& detail) {
    for (int trial = 0; trial < 100; ++trial) {
      const Word u = random_word(rng, 4);
      const Word v = random_word(rng, 4);
      const Series s = shuffle(u, v);
      Rat total(0);
      for (const auto& [w, c] : s.terms()) {
        if (w.degree() != u.degree() + v.degree() - 1 ||
            w.length() != u.length() + v.length()) {
          detail = "grading broken for " + to_string(u) + ", " + to_string(v);
          return false;
        }
        total += c;
      }
      if (total != Rat(binomial(int(u.length() + v.length()), int(u.length())))) {
        detail = "multiplicity count is not binomial(|u|+|v|, |u|)";
        return false;
      }
    }
    return true;
  });

  suite.run("shuffle-commutative-associative", [&](std::string& detail) {
    const int n = std::min(6, md);
    for (int trial = 0; trial < 10; ++trial) {
      const Series a = random_series(rng, n, 4);
      const Series b = random_series(rng, n, 4);
      const Series c = random_series(rng, n, 4);
      if (shuffle_series(a, b) != shuffle_series(b, a)) {
        detail = "commutativity fails";
        return false;
      }
      if (shuffle_series(shuffle_series(a, b), c) !=
          shuffle_series(a, shuffle_series(b, c))) {
        detail = "associativity fails";
        return false;
      }
    }
    return true;
  });

  suite.run("x1-shuffle-powers", [&](std::string&) {
    // k! x1^k = x1 shuffled with itself k times
    const Series x1 = Series::monomial(Word::single(Letter::x1));
    Int fact = 1;
    for (int k = 1; k + 1 <= md; ++k) {
      fact *= k;
      std::vector<Letter> rep(k, Letter::x1);
      if (shuffle_power(x1, k) != Series::monomial(Word(std::move(rep)), Rat(fact)))
        return false;
    }
    return true;
  });

  suite.run("deshuffle-dual-of-shuffle", [&](std::string& detail) {
    const int max_len = std::min(7, md);
    for (int total = 0; total <= max_len; ++total) {
      // expected[eta] accumulated from <xi sh nu, eta> over all splittings
      std::map<Word, TensorElement> expected;
      for (int lx = 0; lx <= total; ++lx) {
        for (const Word& xi : all_words_of_length(lx)) {
          for (const Word& nu : all_words_of_length(total - lx)) {
            for (const auto& [eta, c] : shuffle(xi, nu).terms()) {
              expected[eta].add_term(CoordMonomial::generator(xi),
                                     CoordMonomial::generator(nu), c);
            }
          }
        }
      }
      for (const Word& eta : all_words_of_length(total)) {
        if (deshuffle(eta) != expected[eta]) {
          detail = "mismatch for " + to_string(eta);
          return false;
        }
      }
    }
    return true;
  });

  suite.run("coproduct-coassociativity", [&](std::string& detail) {
    using Triple = std::array<CoordMonomial, 3>;
    for (int n = 1; n <= md; ++n) {
      for (const Word& eta : words_of_degree(n)) {
        std::map<Triple, Rat> left, right;
        for (const auto& [k, c] : full_coproduct(eta).terms()) {
          for (const auto& [k2, c2] : full_coproduct(k.first).terms()) {
            const Rat v = c * c2;
            auto& slot = left[{k2.first, k2.second, k.second}];
            slot += v;
            if (slot == 0) left.erase({k2.first, k2.second, k.second});
          }
          for (const auto& [k2, c2] : full_coproduct(k.second).terms()) {
            const Rat v = c * c2;
            auto& slot = right[{k.first, k2.first, k2.second}];
            slot += v;
            if (slot == 0) right.erase({k.first, k2.first, k2.second});
          }
        }
        if (left != right) {
          detail = "fails for " + to_string(eta);
          return false;
        }
      }
    }
    return true;
  });

  suite.run("coproduct-counit", [&](std::string& detail) {
    for (int n = 1; n <= md; ++n) {
      for (const Word& eta : words_of_degree(n)) {
        HElement strip_left, strip_right;
        for (const auto& [k, c] : full_coproduct(eta).terms()) {
          if (k.first.is_unit()) strip_left.add_term(k.second, c);
          if (k.second.is_unit()) strip_right.add_term(k.first, c);
        }
        const HElement expect = HElement::generator(eta);
        if (strip_left != expect || strip_right != expect) {
          detail = "fails for " + to_string(eta);
          return false;
        }
      }
    }
    return true;
  });

  suite.run("coproduct-grading", [&](std::string& detail) {
    for (int n = 1; n <= md; ++n) {
      for (const Word& eta : words_of_degree(n)) {
        for (const auto& [k, c] : full_coproduct(eta).terms()) {
          if (k.first.degree() + k.second.degree() != n) {
            detail = "ungraded term in coproduct of " + to_string(eta);
            return false;
          }
        }
      }
    }
    return true;
  });

  suite.run("augmentation-route-coproduct", [&](std::string& detail) {
    for (int n = 1; n <= md; ++n) {
      for (const Word& eta : words_of_degree(n)) {
        if (eta.is_empty()) continue;
        if (big_theta_coproduct(eta) != full_coproduct(eta)) {
          detail = "fails for " + to_string(eta);
          return false;
        }
      }
    }
    return true;
  });

  suite.run("augmentations-commute", [&](std::string& detail) {
    for (int trial = 0; trial < 100; ++trial) {
      const HElement a = HElement::generator(random_word(rng, 5));
      for (Letter i : {Letter::x0, Letter::x1}) {
        for (Letter j : {Letter::x0, Letter::x1}) {
          if (theta(j, tilde_theta(i, a)) != tilde_theta(i, theta(j, a))) {
            detail = "theta and tilde_theta do not commute";
            return false;
          }
        }
      }
    }
    return true;
  });

  suite.run("antipode-three-routes", [&](std::string& detail) {
    for (int n = 1; n <= md; ++n) {
      for (const Word& eta : words_of_degree(n)) {
        const HElement s = antipode_left(eta);
        if (s != antipode_right(eta) ||
            (!eta.is_empty() && s != antipode_direct(eta))) {
          detail = "routes disagree for " + to_string(eta);
          return false;
        }
      }
    }
    return true;
  });

  suite.run("antipode-axiom", [&](std::string& detail) {
    for (int n = 1; n <= md; ++n) {
      for (const Word& eta : words_of_degree(n)) {
        HElement conv_left, conv_right;
        for (const auto& [k, c] : full_coproduct(eta).terms()) {
          conv_left += c * h_mul(antipode(k.first), HElement::term(k.second));
          conv_right += c * h_mul(HElement::term(k.first), antipode(k.second));
        }
        if (!conv_left.is_zero() || !conv_right.is_zero()) {
          detail = "convolution with S is not counit for " + to_string(eta);
          return false;
        }
      }
    }
    return true;
  });

  suite.run("antipode-x0-coefficient-sum", [&](std::string& detail) {
    // coefficients of S a_{eta x0} always sum to zero
    for (int n = 1; n <= std::min(7, md); ++n) {
      for (const Word& eta : words_of_degree(n)) {
        if (coefficient_sum(antipode_left(eta.append(Letter::x0))) != 0) {
          detail = "nonzero sum for " + to_string(eta.append(Letter::x0));
          return false;
        }
      }
    }
    return true;
  });

  suite.run("composition-group-laws", [&](std::string& detail) {
    const int n = std::min(6, md);
    for (int trial = 0; trial < 5; ++trial) {
      const Series c = random_series(rng, n, 4);
      const Series d = random_series(rng, n, 4);
      const Series e = random_series(rng, n, 4);
      if (group_prod(group_prod(c, d, n), e, n) !=
          group_prod(c, group_prod(d, e, n), n)) {
        detail = "associativity fails";
        return false;
      }
      const Series zero = Series::zero(Truncation(n));
      if (group_prod(c, zero, n) != c.truncated(n) ||
          group_prod(zero, c, n) != c.truncated(n)) {
        detail = "delta is not a two-sided unit";
        return false;
      }
      const Series inv = group_inverse(c, n);
      if (!group_prod(c, inv, n).is_zero() || !group_prod(inv, c, n).is_zero()) {
        detail = "group_inverse is not a two-sided inverse";
        return false;
      }
    }
    return true;
  });

  suite.run("inverse-fixpoint-oracle", [&](std::string& detail) {
    const int n = std::min(8, md);
    for (int trial = 0; trial < 5; ++trial) {
      const Series c = random_series(rng, n, 5);
      if (group_inverse(c, n) != group_inverse_fixpoint(c, n)) {
        detail = "antipode route and fixpoint route disagree";
        return false;
      }
    }
    return true;
  });

  suite.run("character-multiplicative", [&](std::string& detail) {
    for (int trial = 0; trial < 50; ++trial) {
      const Series c = random_series(rng, 6, 5);
      const HElement g = antipode_left(random_word(rng, 4));
      const HElement h = antipode_left(random_word(rng, 4));
      if (evaluate(h_mul(g, h), c) != evaluate(g, c) * evaluate(h, c)) {
        detail = "evaluation is not an algebra morphism";
        return false;
      }
    }
    return true;
  });

  suite.run("unity-feedback-fixpoint", [&](std::string& detail) {
    const int n = std::min(8, md);
    for (int trial = 0; trial < 5; ++trial) {
      const Series c = random_series(rng, n, 4);
      const Series e = unity_feedback(c, n);
      if (e != mod_compose(c, e, n)) {
        detail = "e != c otilde e";
        return false;
      }
    }
    return true;
  });

  suite.run("devlin-three-routes", [&](std::string& detail) {
    const int top = std::min(10, std::max(md, 2));
    for (int n = 1; n <= top; ++n) {
      const DevlinPolynomial rec = devlin_recursive(n);
      if (devlin_antipode(n, top).poly != rec.poly) {
        detail = "antipode route differs at n=" + std::to_string(n);
        return false;
      }
      Series closed;
      for (const Word& eta : words_of_degree(n))
        closed.add_term(eta, Rat(devlin_coeff_closed(eta, n)));
      if (closed != rec.poly) {
        detail = "closed form differs at n=" + std::to_string(n);
        return false;
      }
      for (const auto& [w, c] : rec.poly.terms()) {
        if (c <= 0 || denominator(c) != 1) {
          detail = "non-positive-integer coefficient at n=" + std::to_string(n);
          return false;
        }
      }
    }
    return true;
  });

  suite.run("devlin-lie-oracle", [&](std::string& detail) {
    const int top = std::min(9, std::max(md, 2));
    for (int n = 1; n <= top; ++n) {
      for (const Word& eta : words_of_degree(n)) {
        if (lie_coeff(eta) != devlin_coeff_closed(eta, n)) {
          detail = "mismatch for " + to_string(eta);
          return false;
        }
      }
    }
    return true;
  });

  suite.run("devlin-antipode-recursion", [&](std::string& detail) {
    const int top = std::min(10, std::max(md, 3));
    const Series neg_c = -ferfera(top);
    for (int n = 3; n <= top; ++n) {
      Series rhs;
      for (const Word& eta : words_of_degree(n - 1))
        rhs.add_term(eta.append(Letter::x1),
                     Rat(n - 1) * evaluate(antipode_left(eta), neg_c));
      for (const Word& eta : words_of_degree(n - 2))
        rhs.add_term(eta.append(Letter::x0),
                     Rat(n - 2) * evaluate(antipode_left(eta), neg_c));
      if (rhs != devlin_recursive(n).poly) {
        detail = "recursion fails at n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  suite.run("antipode-degree-scaling", [&](std::string& detail) {
    const int top = std::min(9, md + 1);
    for (int n = 1; n + 1 <= top; ++n) {
      for (const Word& eta : words_of_degree(n)) {
        for (Letter x : {Letter::x0, Letter::x1}) {
          if (eta.append(x).degree() > top) continue;
          const auto [lhs, rhs] = check_degree_scaling(eta, x);
          if (lhs != rhs) {
            detail = "scaling fails for " + to_string(eta) + " + " + to_string(x);
            return false;
          }
        }
      }
    }
    return true;
  });

  suite.run("theta-hat-support", [&](std::string& detail) {
    for (int n = 2; n <= md; ++n) {
      for (const Word& eta : words_of_degree(n)) {
        if (eta.is_empty()) continue;
        for (const auto& [m, c] : theta_hat(eta).terms()) {
          for (const Word& w : m.factors()) {
            if (w.count(Letter::x0) > 0) {
              detail = "x0 appears in theta_hat of " + to_string(eta);
              return false;
            }
          }
        }
      }
    }
    return true;
  });

  suite.run("iterated-integral-product-rule", [&](std::string& detail) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
      const InputPair u{PolyFunction({Rat(coeff(rng)), Rat(coeff(rng))}),
                        PolyFunction({Rat(coeff(rng)), Rat(coeff(rng))})};
      const Word eta = random_word(rng, 3);
      const Word xi = random_word(rng, 2);
      const PolyFunction lhs = iterated_integral(eta, u) * iterated_integral(xi, u);
      PolyFunction rhs;
      for (const auto& [w, c] : shuffle(eta, xi).terms())
        rhs = rhs + PolyFunction::constant(c) * iterated_integral(w, u);
      if (lhs != rhs) {
        detail = "product rule fails for " + to_string(eta) + ", " + to_string(xi);
        return false;
      }
    }
    return true;
  });

  suite.run("return-map-partial-sums", [&](std::string& detail) {
    const int n = std::min(6, md);
    std::uniform_int_distribution<int> coeff(-1, 1);
    for (int trial = 0; trial < 3; ++trial) {
      const InputPair u{PolyFunction({Rat(coeff(rng)), Rat(coeff(rng))}),
                        PolyFunction({Rat(coeff(rng)), Rat(coeff(rng))})};
      const Rat t(1, 10);
      const auto coeffs = return_map_coeffs(u, t, n);
      Rat sum(0);
      for (const Rat& a : coeffs) sum += a;
      const Series e = unity_feedback(ferfera(n), n);
      if (sum != fliess_eval(e, u, t, n)) {
        detail = "partial sums disagree with the unity-feedback series";
        return false;
      }
    }
    return true;
  });

  suite.run("render-parse-round-trip", [&](std::string& detail) {
    for (int trial = 0; trial < 50; ++trial) {
      const Word w = random_word(rng, 8);
      if (parse_word(to_string(w)) != w) {
        detail = "word round trip fails for " + to_string(w);
        return false;
      }
      Series s = random_series(rng, 8, 5);
      s.set_truncation(std::nullopt);
      if (parse_series(to_string(s)) != s) {
        detail = "series round trip fails for " + to_string(s);
        return false;
      }
    }
    return true;
  });

  return suite.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace fliess

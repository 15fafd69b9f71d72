#include "fliess/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <vector>

namespace fliess {

std::string to_string(const Rat& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// -- parsing --------------------------------------------------------------

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
  bool consume(char c) {
    if (!done() && peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Int integer() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected digit", pos);
    std::string digits;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
      digits += s[pos++];
    return Int(digits);
  }

  // "3", "3/2"; the sign is handled by the caller
  Rat rational() {
    const Int num = integer();
    if (consume('/')) {
      const std::size_t den_pos = pos;
      const Int den = integer();
      if (den == 0) throw ParseError("zero denominator", den_pos);
      return Rat(num, den);
    }
    return Rat(num);
  }

  // maximal run of word characters, e.g. "x1x0" or "e"
  Word word() {
    const std::size_t start = pos;
    while (!done() && (peek() == 'x' || peek() == '0' || peek() == '1' ||
                       peek() == 'e'))
      ++pos;
    if (pos == start) throw ParseError("expected word", start);
    std::string_view tok = s.substr(start, pos - start);
    if (tok == "e") return Word();
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < tok.size();) {
      if (tok[i] != 'x' || i + 1 >= tok.size())
        throw ParseError("expected letter x0 or x1", start + i);
      if (tok[i + 1] == '0') letters.push_back(Letter::x0);
      else if (tok[i + 1] == '1') letters.push_back(Letter::x1);
      else throw ParseError("expected letter x0 or x1", start + i);
      i += 2;
    }
    return Word(std::move(letters));
  }
};

}  // namespace

Rat parse_rational(std::string_view s) {
  Cursor c{s};
  c.skip_ws();
  bool negative = c.consume('-');
  if (!negative) c.consume('+');
  Rat r = c.rational();
  c.skip_ws();
  if (!c.done()) throw ParseError("unexpected trailing input", c.pos);
  return negative ? -r : r;
}

Word parse_word(std::string_view s) {
  Cursor c{s};
  Word w = c.word();
  if (!c.done()) throw ParseError("unexpected trailing input", c.pos);
  return w;
}

Series parse_series(std::string_view s) {
  Cursor c{s};
  Series out;
  bool first = true;
  for (;;) {
    c.skip_ws();
    if (c.done()) {
      if (first) throw ParseError("empty series expression", c.pos);
      break;
    }
    Rat sign(1);
    if (c.consume('-')) sign = -1;
    else if (c.consume('+')) {
      if (first) throw ParseError("unexpected '+'", c.pos - 1);
    } else if (!first) {
      throw ParseError("expected '+' or '-'", c.pos);
    }
    c.skip_ws();
    Rat coeff(1);
    Word w;
    if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = c.rational();
      if (c.consume('*')) w = c.word();
      // bare number: coefficient of the empty word
    } else {
      w = c.word();
    }
    out.add_term(w, sign * coeff);
    first = false;
  }
  return out;
}

PolyFunction parse_poly(std::string_view s) {
  Cursor c{s};
  std::vector<std::pair<int, Rat>> terms;
  bool first = true;
  for (;;) {
    c.skip_ws();
    if (c.done()) {
      if (first) throw ParseError("empty polynomial expression", c.pos);
      break;
    }
    Rat sign(1);
    if (c.consume('-')) sign = -1;
    else if (c.consume('+')) {
      if (first) throw ParseError("unexpected '+'", c.pos - 1);
    } else if (!first) {
      throw ParseError("expected '+' or '-'", c.pos);
    }
    c.skip_ws();
    Rat coeff(1);
    bool have_coeff = false;
    if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = c.rational();
      have_coeff = true;
    }
    int power = 0;
    if (c.consume('*') || (!have_coeff && !c.done() && c.peek() == 't')) {
      if (!c.consume('t')) throw ParseError("expected 't'", c.pos);
      power = 1;
      if (c.consume('^')) power = c.integer().convert_to<int>();
    } else if (!have_coeff) {
      throw ParseError("expected coefficient or 't'", c.pos);
    }
    terms.emplace_back(power, sign * coeff);
    first = false;
  }
  int max_power = 0;
  for (const auto& [p, _] : terms) max_power = std::max(max_power, p);
  std::vector<Rat> coeffs(max_power + 1, Rat(0));
  for (const auto& [p, v] : terms) coeffs[p] += v;
  return PolyFunction(std::move(coeffs));
}

// -- rendering ------------------------------------------------------------

namespace {

// display order for series terms: longer words first, ties lexicographic
bool display_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  return a.letters() < b.letters();
}

std::string join_signed(const std::vector<std::pair<Rat, std::string>>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [coeff, body] : parts) {
    const bool negative = coeff < 0;
    const Rat mag = negative ? Rat(-coeff) : coeff;
    std::string term;
    if (body.empty()) term = to_string(mag);
    else if (mag == 1) term = body;
    else term = to_string(mag) + "*" + body;
    if (first) out += (negative ? "-" : "") + term;
    else out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

}  // namespace

std::string to_string(const Series& s) {
  std::vector<std::pair<Word, Rat>> terms(s.terms().begin(), s.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return display_less(a.first, b.first); });
  std::vector<std::pair<Rat, std::string>> parts;
  for (const auto& [w, c] : terms) parts.emplace_back(c, to_string(w));
  return join_signed(parts);
}

std::string to_string(const CoordMonomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const Word& w : m.factors()) out += "a[" + to_string(w) + "]";
  return out;
}

std::string to_string(const HElement& h) {
  std::vector<std::pair<Rat, std::string>> parts;
  for (const auto& [m, c] : h.terms())
    parts.emplace_back(c, m.is_unit() ? "" : to_string(m));
  return join_signed(parts);
}

std::string to_string(const TensorElement& t) {
  std::vector<std::pair<Rat, std::string>> parts;
  for (const auto& [k, c] : t.terms())
    parts.emplace_back(c, to_string(k.first) + " (x) " + to_string(k.second));
  return join_signed(parts);
}

std::string to_string(const PolyFunction& p) {
  std::vector<std::pair<Rat, std::string>> parts;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k] == 0) continue;
    std::string body;
    if (k == 1) body = "t";
    else if (k > 1) body = "t^" + std::to_string(k);
    parts.emplace_back(p.coeffs()[k], body);
  }
  return join_signed(parts);
}

// -- JSON -----------------------------------------------------------------

nlohmann::json to_json(const Rat& r) {
  return {{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

nlohmann::json to_json(const Series& s) {
  nlohmann::json terms = nlohmann::json::array();
  std::vector<std::pair<Word, Rat>> sorted(s.terms().begin(), s.terms().end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return display_less(a.first, b.first); });
  for (const auto& [w, c] : sorted) {
    nlohmann::json t = to_json(c);
    t["word"] = to_string(w);
    terms.push_back(std::move(t));
  }
  nlohmann::json out;
  out["truncation"] =
      s.truncation() ? nlohmann::json(*s.truncation()) : nlohmann::json("exact");
  out["terms"] = std::move(terms);
  return out;
}

nlohmann::json to_json(const HElement& h) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : h.terms()) {
    nlohmann::json t = to_json(c);
    nlohmann::json factors = nlohmann::json::array();
    for (const Word& w : m.factors()) factors.push_back(to_string(w));
    t["monomial"] = std::move(factors);
    terms.push_back(std::move(t));
  }
  return {{"terms", std::move(terms)}};
}

nlohmann::json to_json(const PolyFunction& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rat& c : p.coeffs()) coeffs.push_back(to_json(c));
  return {{"coeffs", std::move(coeffs)}};
}

}  // namespace fliess

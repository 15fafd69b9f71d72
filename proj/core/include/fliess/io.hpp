#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fliess/abel.hpp"
#include "fliess/hopf.hpp"
#include "fliess/series.hpp"

namespace fliess {

/// Parse failure with the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar: juxtaposed letters "x1x0x1"; the empty word is spelled "e".
Word parse_word(std::string_view s);

// Signed sums of terms "coeff*word" with rational coefficients, e.g.
// "2*x1x1 + x0" or "-3/2*x1 + e". An omitted coefficient is 1.
Series parse_series(std::string_view s);

// "1 + 2*t - 1/3*t^2"
PolyFunction parse_poly(std::string_view s);

Rat parse_rational(std::string_view s);

// -- deterministic text rendering ----------------------------------------

std::string to_string(const Series& s);         // "6*x1x1x1 + 3*x0x1 + 2*x1x0"
std::string to_string(const CoordMonomial& m);  // "a[x1x1]a[e]", unit -> "1"
std::string to_string(const HElement& h);       // "-a[x0x1] + a[x1]a[x1]"
std::string to_string(const TensorElement& t);  // "a[x1] (x) 1 + ..."
std::string to_string(const PolyFunction& p);   // "1 + 2*t - 1/3*t^2"

std::string format_double(double x);  // 17 significant digits

// -- JSON ----------------------------------------------------------------
// Rationals are {"num": "...", "den": "..."} decimal strings throughout.

nlohmann::json to_json(const Rat& r);
nlohmann::json to_json(const Series& s);
nlohmann::json to_json(const HElement& h);
nlohmann::json to_json(const PolyFunction& p);

}  // namespace fliess

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fliess {

enum class Letter : std::uint8_t { x0 = 0, x1 = 1 };

// deg(x0) = 2, deg(x1) = 1
constexpr int letter_degree(Letter l) { return l == Letter::x0 ? 2 : 1; }

/// A word over the alphabet {x0, x1}. Immutable after construction.
///
/// The grading used throughout is deg(w) = 2*|w|_x0 + |w|_x1 + 1, so the
/// empty word has degree 1 and deg(uv) = deg(u) + deg(v) - 1.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static Word single(Letter l) { return Word({l}); }

  std::size_t length() const { return letters_.size(); }
  bool is_empty() const { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  int count(Letter l) const;
  int degree() const;
  Word prefix(std::size_t len) const;
  Word suffix_from(std::size_t pos) const;

  Word append(Letter l) const;
  Word prepend(Letter l) const;

  /// Canonical order: shorter words first, then lexicographic with x0 < x1.
  std::strong_ordering operator<=>(const Word& other) const;
  bool operator==(const Word& other) const { return letters_ == other.letters_; }

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& u, const Word& v);

/// All words of degree exactly n, in canonical order. n <= 0 gives the empty list.
std::vector<Word> words_of_degree(int n);

/// v if w = x v, otherwise nullopt (the zero of the linearized shift map).
std::optional<Word> left_shift(Letter x, const Word& w);

/// v if w = v x, otherwise nullopt.
std::optional<Word> right_shift(Letter x, const Word& w);

std::string to_string(Letter l);
std::string to_string(const Word& w);  // "x1x0x1"; the empty word prints as "e"

}  // namespace fliess

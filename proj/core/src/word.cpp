#include "fliess/word.hpp"

#include <algorithm>

namespace fliess {

int Word::count(Letter l) const {
  return int(std::count(letters_.begin(), letters_.end(), l));
}

int Word::degree() const {
  int d = 1;
  for (Letter l : letters_) d += letter_degree(l);
  return d;
}

Word Word::prefix(std::size_t len) const {
  return Word({letters_.begin(), letters_.begin() + len});
}

Word Word::suffix_from(std::size_t pos) const {
  return Word({letters_.begin() + pos, letters_.end()});
}

Word Word::append(Letter l) const {
  std::vector<Letter> ls = letters_;
  ls.push_back(l);
  return Word(std::move(ls));
}

Word Word::prepend(Letter l) const {
  std::vector<Letter> ls;
  ls.reserve(letters_.size() + 1);
  ls.push_back(l);
  ls.insert(ls.end(), letters_.begin(), letters_.end());
  return Word(std::move(ls));
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
  return letters_ <=> other.letters_;
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> ls;
  ls.reserve(u.length() + v.length());
  ls.insert(ls.end(), u.letters().begin(), u.letters().end());
  ls.insert(ls.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(ls));
}

std::vector<Word> words_of_degree(int n) {
  // Appending x1 raises the degree by one, appending x0 by two; this mirrors
  // the index arithmetic of the Devlin recursion.
  if (n < 1) return {};
  if (n == 1) return {Word()};
  std::vector<Word> out;
  for (const Word& w : words_of_degree(n - 1)) out.push_back(w.append(Letter::x1));
  if (n >= 3) {
    for (const Word& w : words_of_degree(n - 2)) out.push_back(w.append(Letter::x0));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Word> left_shift(Letter x, const Word& w) {
  if (w.is_empty() || w.at(0) != x) return std::nullopt;
  return w.suffix_from(1);
}

std::optional<Word> right_shift(Letter x, const Word& w) {
  if (w.is_empty() || w.at(w.length() - 1) != x) return std::nullopt;
  return w.prefix(w.length() - 1);
}

std::string to_string(Letter l) { return l == Letter::x0 ? "x0" : "x1"; }

std::string to_string(const Word& w) {
  if (w.is_empty()) return "e";
  std::string s;
  for (Letter l : w.letters()) s += to_string(l);
  return s;
}

}  // namespace fliess

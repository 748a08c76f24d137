#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parshift {

/// Index into the alphabet of a system instance.
using Symbol = int;

/// A finite word of alphabet symbols (an element of the positive cone).
using Word = std::vector<Symbol>;

/// A single generator or its inverse.
struct Letter {
  Symbol symbol = 0;
  int sign = +1;  // +1 for a, -1 for a^{-1}

  Letter inverse() const { return Letter{symbol, -sign}; }
  bool cancels(const Letter& other) const {
    return symbol == other.symbol && sign == -other.sign;
  }
  friend bool operator==(const Letter& a, const Letter& b) {
    return a.symbol == b.symbol && a.sign == b.sign;
  }
  friend auto operator<=>(const Letter& a, const Letter& b) = default;
};

/// An element of the free group over the alphabet, kept in reduced form:
/// no adjacent pair of mutually inverse letters.  The empty sequence is
/// the neutral element.
class ReducedWord {
 public:
  ReducedWord() = default;

  /// Freely reduces an arbitrary letter sequence.  `n_symbols`, when
  /// non-negative, bounds the valid symbol range and out-of-range input
  /// throws std::invalid_argument.
  static ReducedWord reduce(const std::vector<Letter>& raw, int n_symbols = -1);

  static ReducedWord from_positive(const Word& w);
  static ReducedWord generator(Symbol a) { return from_letters({Letter{a, +1}}); }
  static ReducedWord inverse_generator(Symbol a) { return from_letters({Letter{a, -1}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  bool is_positive() const;
  /// The underlying positive word.  Pre: is_positive().
  Word positive_word() const;

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
    return a.letters_ == b.letters_;
  }
  friend auto operator<=>(const ReducedWord& a, const ReducedWord& b) = default;

 private:
  static ReducedWord from_letters(std::vector<Letter> letters);
  std::vector<Letter> letters_;  // invariant: freely reduced
};

ReducedWord multiply(const ReducedWord& g, const ReducedWord& h);
ReducedWord invert(const ReducedWord& g);

/// The canonical homomorphism to the integers sending every generator to 1.
int degree(const ReducedWord& g);

/// Decomposition g = mu nu^{-1} with mu, nu positive words whose last
/// letters differ (or one of them empty).  Absent when the reduced form of
/// g is not a positive block followed by an inverse block; in that case
/// D_g is empty in every one-sided system.
std::optional<std::pair<Word, Word>> one_sided_normal_form(const ReducedWord& g);

/// All reduced words of length <= radius over an alphabet of the given size.
std::vector<ReducedWord> reduced_ball(int n_symbols, int radius);

/// Rendering with single-letter alphabet names, e.g. "ab'a" for a b^{-1} a.
std::string to_string(const ReducedWord& g, const std::vector<std::string>& names);
std::string to_string(const Word& w, const std::vector<std::string>& names);

}  // namespace parshift

#include "parshift/free_group.hpp"

#include <stdexcept>

namespace parshift {

ReducedWord ReducedWord::from_letters(std::vector<Letter> letters) {
  ReducedWord w;
  w.letters_ = std::move(letters);
  return w;
}

ReducedWord ReducedWord::reduce(const std::vector<Letter>& raw, int n_symbols) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const Letter& b : raw) {
    if (b.symbol < 0 || (n_symbols >= 0 && b.symbol >= n_symbols))
      throw std::invalid_argument("letter symbol outside the alphabet");
    if (b.sign != +1 && b.sign != -1)
      throw std::invalid_argument("letter sign must be +1 or -1");
    if (!out.empty() && out.back().cancels(b))
      out.pop_back();
    else
      out.push_back(b);
  }
  return from_letters(std::move(out));
}

ReducedWord ReducedWord::from_positive(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (Symbol s : w) letters.push_back(Letter{s, +1});
  return from_letters(std::move(letters));  // positive words are reduced
}

bool ReducedWord::is_positive() const {
  for (const Letter& b : letters_)
    if (b.sign != +1) return false;
  return true;
}

Word ReducedWord::positive_word() const {
  Word w;
  w.reserve(letters_.size());
  for (const Letter& b : letters_) {
    if (b.sign != +1) throw std::logic_error("positive_word on a non-positive element");
    w.push_back(b.symbol);
  }
  return w;
}

ReducedWord multiply(const ReducedWord& g, const ReducedWord& h) {
  std::vector<Letter> cat = g.letters();
  cat.insert(cat.end(), h.letters().begin(), h.letters().end());
  // Cancellation can only happen at the junction; full reduction handles it.
  return ReducedWord::reduce(cat);
}

ReducedWord invert(const ReducedWord& g) {
  std::vector<Letter> rev;
  rev.reserve(g.length());
  for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it)
    rev.push_back(it->inverse());
  return ReducedWord::reduce(rev);
}

int degree(const ReducedWord& g) {
  int d = 0;
  for (const Letter& b : g.letters()) d += b.sign;
  return d;
}

std::optional<std::pair<Word, Word>> one_sided_normal_form(const ReducedWord& g) {
  // g = mu nu^{-1} exists iff the reduced form is a (possibly empty) block
  // of positive letters followed by a (possibly empty) block of inverses.
  const auto& ls = g.letters();
  std::size_t split = 0;
  while (split < ls.size() && ls[split].sign == +1) ++split;
  for (std::size_t i = split; i < ls.size(); ++i)
    if (ls[i].sign == +1) return std::nullopt;

  Word mu, nu;
  for (std::size_t i = 0; i < split; ++i) mu.push_back(ls[i].symbol);
  // The inverse block reads nu backwards: nu^{-1} = nu_q^{-1} ... nu_1^{-1}.
  for (std::size_t i = ls.size(); i > split; --i) nu.push_back(ls[i - 1].symbol);
  return std::make_pair(std::move(mu), std::move(nu));
}

std::vector<ReducedWord> reduced_ball(int n_symbols, int radius) {
  std::vector<ReducedWord> ball{ReducedWord{}};
  std::vector<std::vector<Letter>> frontier{{}};
  for (int r = 0; r < radius; ++r) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : frontier) {
      for (Symbol s = 0; s < n_symbols; ++s) {
        for (int sign : {+1, -1}) {
          Letter b{s, sign};
          if (!w.empty() && w.back().cancels(b)) continue;
          auto ext = w;
          ext.push_back(b);
          ball.push_back(ReducedWord::reduce(ext));
          next.push_back(std::move(ext));
        }
      }
    }
    frontier = std::move(next);
  }
  return ball;
}

std::string to_string(const ReducedWord& g, const std::vector<std::string>& names) {
  if (g.is_identity()) return "e";
  std::string out;
  for (const Letter& b : g.letters()) {
    out += names.at(static_cast<std::size_t>(b.symbol));
    if (b.sign < 0) out += '\'';
  }
  return out;
}

std::string to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "eps";
  std::string out;
  for (Symbol s : w) out += names.at(static_cast<std::size_t>(s));
  return out;
}

}  // namespace parshift

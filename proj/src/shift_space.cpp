#include "parshift/shift_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace parshift {

int Alphabet::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

Alphabet Alphabet::letters(const std::string& chars) {
  Alphabet a;
  for (char c : chars) a.names.push_back(std::string(1, c));
  return a;
}

std::string to_string(Side side) {
  return side == Side::OneSided ? "one-sided" : "two-sided";
}

// ---------------------------------------------------------------------------
// EvPeriodicSpec

namespace {

Word primitive_root(const Word& v) {
  const std::size_t p = v.size();
  for (std::size_t d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = (v[i] == v[i - d]);
    if (ok) return Word(v.begin(), v.begin() + static_cast<long>(d));
  }
  return v;
}

}  // namespace

EvPeriodicSpec EvPeriodicSpec::canonical() const {
  EvPeriodicSpec c{preperiod, primitive_root(period)};
  // Absorb preperiod symbols that already agree with the cycle.
  while (!c.preperiod.empty() && c.preperiod.back() == c.period.back()) {
    c.preperiod.pop_back();
    std::rotate(c.period.rbegin(), c.period.rbegin() + 1, c.period.rend());
  }
  return c;
}

EvPeriodicSpec EvPeriodicSpec::shifted() const {
  EvPeriodicSpec s = *this;
  if (!s.preperiod.empty()) {
    s.preperiod.erase(s.preperiod.begin());
  } else {
    std::rotate(s.period.begin(), s.period.begin() + 1, s.period.end());
  }
  return s;
}

Symbol EvPeriodicSpec::at(long i) const {
  const long q = static_cast<long>(preperiod.size());
  if (i < q) return preperiod[static_cast<std::size_t>(i)];
  const long p = static_cast<long>(period.size());
  return period[static_cast<std::size_t>((i - q) % p)];
}

// ---------------------------------------------------------------------------
// Construction and validation

ShiftPresentation::ShiftPresentation(Alphabet alphabet, Side side, PresentationKind kind,
                                     int substitution_scan_depth)
    : alphabet_(std::move(alphabet)),
      side_(side),
      kind_(std::move(kind)),
      sub_scan_depth_(substitution_scan_depth) {
  validate();
}

namespace {

// Largest subset of symbols every member of which has a predecessor inside
// the subset; exactly the symbols admitting arbitrarily long left extensions.
std::vector<char> matrix_left_live(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<char> live(static_cast<std::size_t>(n), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < n; ++s) {
      if (!live[static_cast<std::size_t>(s)]) continue;
      bool has_pred = false;
      for (int t = 0; t < n && !has_pred; ++t)
        has_pred = live[static_cast<std::size_t>(t)] &&
                   rows[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] == 1;
      if (!has_pred) {
        live[static_cast<std::size_t>(s)] = 0;
        changed = true;
      }
    }
  }
  return live;
}

bool word_avoids(const Word& w, const std::vector<Word>& forbidden) {
  for (const Word& f : forbidden) {
    if (f.size() > w.size()) continue;
    for (std::size_t i = 0; i + f.size() <= w.size(); ++i)
      if (std::equal(f.begin(), f.end(), w.begin() + static_cast<long>(i))) return false;
  }
  return true;
}

}  // namespace

void ShiftPresentation::validate() {
  if (alphabet_.size() == 0) throw std::invalid_argument("empty alphabet");

  if (const auto* m = std::get_if<MatrixSftKind>(&kind_)) {
    const std::size_t n = static_cast<std::size_t>(alphabet_.size());
    if (m->rows.size() != n) throw std::invalid_argument("matrix size != alphabet size");
    for (const auto& row : m->rows) {
      if (row.size() != n) throw std::invalid_argument("matrix is not square");
      bool nonzero = false;
      for (int e : row) {
        if (e != 0 && e != 1) throw std::invalid_argument("matrix entries must be 0/1");
        nonzero |= (e == 1);
      }
      if (!nonzero) throw std::invalid_argument("matrix has a zero row");
    }
    matrix_left_live_ = matrix_left_live(m->rows);
    if (side_ == Side::TwoSided &&
        std::none_of(matrix_left_live_.begin(), matrix_left_live_.end(),
                     [](char c) { return c != 0; }))
      throw std::invalid_argument("two-sided matrix shift is empty");
  }

  if (auto* f = std::get_if<ForbiddenWordsKind>(&kind_)) {
    for (const Word& w : f->forbidden) {
      if (w.empty()) throw std::invalid_argument("forbidden word must be nonempty");
      for (Symbol s : w)
        if (s < 0 || s >= alphabet_.size())
          throw std::invalid_argument("forbidden word symbol outside alphabet");
    }
    int m = 2;
    for (const Word& w : f->forbidden) m = std::max(m, static_cast<int>(w.size()));
    auto g = std::make_shared<AvoidGraph>();
    g->m = m;
    // States: avoid-words of length m-1.
    Word cur;
    auto gen = [&](auto&& self) -> void {
      if (static_cast<int>(cur.size()) == m - 1) {
        if (word_avoids(cur, f->forbidden)) {
          g->state_index[cur] = static_cast<int>(g->states.size());
          g->states.push_back(cur);
        }
        return;
      }
      for (Symbol s = 0; s < alphabet_.size(); ++s) {
        cur.push_back(s);
        self(self);
        cur.pop_back();
      }
    };
    gen(gen);
    g->succ.resize(g->states.size());
    for (std::size_t i = 0; i < g->states.size(); ++i) {
      for (Symbol s = 0; s < alphabet_.size(); ++s) {
        Word window = g->states[i];
        window.push_back(s);
        if (!word_avoids(window, f->forbidden)) continue;
        Word next(window.begin() + 1, window.end());
        auto it = g->state_index.find(next);
        if (it != g->state_index.end()) g->succ[i].push_back(it->second);
      }
    }
    // Right-live: states with an infinite forward path; left-live dually.
    const std::size_t ns = g->states.size();
    g->right_live.assign(ns, 1);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < ns; ++i) {
        if (!g->right_live[i]) continue;
        bool ok = false;
        for (int j : g->succ[i]) ok |= (g->right_live[static_cast<std::size_t>(j)] != 0);
        if (!ok) { g->right_live[i] = 0; changed = true; }
      }
    }
    g->left_live.assign(ns, 1);
    std::vector<std::vector<int>> pred(ns);
    for (std::size_t i = 0; i < ns; ++i)
      for (int j : g->succ[i]) pred[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
    changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < ns; ++i) {
        if (!g->left_live[i]) continue;
        bool ok = false;
        for (int j : pred[i]) ok |= (g->left_live[static_cast<std::size_t>(j)] != 0);
        if (!ok) { g->left_live[i] = 0; changed = true; }
      }
    }
    avoid_ = std::move(g);
  }

  if (auto* s = std::get_if<SubstitutionKind>(&kind_)) {
    if (s->images.size() != static_cast<std::size_t>(alphabet_.size()))
      throw std::invalid_argument("substitution must map every symbol");
    for (const Word& img : s->images) {
      if (img.empty()) throw std::invalid_argument("substitution image must be nonempty");
      for (Symbol t : img)
        if (t < 0 || t >= alphabet_.size())
          throw std::invalid_argument("substitution image symbol outside alphabet");
    }
    if (s->seed < 0) {
      for (Symbol a = 0; a < alphabet_.size(); ++a) {
        const Word& img = s->images[static_cast<std::size_t>(a)];
        if (img.size() >= 2 && img[0] == a) { s->seed = a; break; }
      }
    }
    if (s->seed < 0 || s->seed >= alphabet_.size())
      throw std::invalid_argument("substitution has no expanding fixed-point seed");
    const Word& img = s->images[static_cast<std::size_t>(s->seed)];
    if (img.size() < 2 || img[0] != s->seed)
      throw std::invalid_argument("substitution seed is not a fixed-point seed");
  }

  if (auto* fp = std::get_if<FinitePointsKind>(&kind_)) {
    if (fp->points.empty()) throw std::invalid_argument("finite point set is empty");
    std::set<EvPeriodicSpec> closed;
    for (const EvPeriodicSpec& p : fp->points) {
      if (p.period.empty()) throw std::invalid_argument("periodic spec needs a period");
      if (side_ == Side::TwoSided && !p.preperiod.empty())
        throw std::invalid_argument("two-sided finite point sets consist of periodic orbits");
      for (Symbol s : p.preperiod)
        if (s < 0 || s >= alphabet_.size()) throw std::invalid_argument("point symbol outside alphabet");
      for (Symbol s : p.period)
        if (s < 0 || s >= alphabet_.size()) throw std::invalid_argument("point symbol outside alphabet");
      // Close under the shift: finitely many distinct shifts of an
      // eventually periodic point.
      EvPeriodicSpec cur = p.canonical();
      while (closed.insert(cur).second) cur = cur.shifted().canonical();
    }
    fp->points.assign(closed.begin(), closed.end());
  }

  if (factors(1).words.empty()) throw std::invalid_argument("shift space is empty");
}

// ---------------------------------------------------------------------------
// Language oracle

Tri ShiftPresentation::word_in_language(const Word& w) const {
  for (Symbol s : w)
    if (s < 0 || s >= alphabet_.size()) return Tri::No;

  if (std::holds_alternative<FullShiftKind>(kind_)) return Tri::Yes;

  if (const auto* m = std::get_if<MatrixSftKind>(&kind_)) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (m->rows[static_cast<std::size_t>(w[i])][static_cast<std::size_t>(w[i + 1])] != 1)
        return Tri::No;
    if (side_ == Side::TwoSided && !w.empty() &&
        !matrix_left_live_[static_cast<std::size_t>(w[0])])
      return Tri::No;
    return Tri::Yes;
  }

  if (const auto* f = std::get_if<ForbiddenWordsKind>(&kind_)) {
    if (!word_avoids(w, f->forbidden)) return Tri::No;
    const auto& g = *avoid_;
    const int sl = g.m - 1;
    if (static_cast<int>(w.size()) < sl) {
      // Some live state must contain w.
      for (std::size_t i = 0; i < g.states.size(); ++i) {
        if (!g.right_live[i]) continue;
        if (side_ == Side::TwoSided && !g.left_live[i]) continue;
        const Word& st = g.states[i];
        for (std::size_t off = 0; off + w.size() <= st.size(); ++off)
          if (std::equal(w.begin(), w.end(), st.begin() + static_cast<long>(off)))
            return Tri::Yes;
      }
      return Tri::No;
    }
    Word first(w.begin(), w.begin() + sl);
    Word last(w.end() - sl, w.end());
    auto fi = g.state_index.find(first);
    auto li = g.state_index.find(last);
    if (fi == g.state_index.end() || li == g.state_index.end()) return Tri::No;
    if (!g.right_live[static_cast<std::size_t>(li->second)]) return Tri::No;
    if (side_ == Side::TwoSided && !g.left_live[static_cast<std::size_t>(fi->second)])
      return Tri::No;
    return Tri::Yes;
  }

  if (const auto* fp = std::get_if<FinitePointsKind>(&kind_)) {
    if (w.empty()) return Tri::Yes;
    for (const EvPeriodicSpec& p : fp->points) {
      const long limit = static_cast<long>(p.preperiod.size() + p.period.size());
      for (long pos = 0; pos < limit; ++pos) {
        bool match = true;
        for (std::size_t i = 0; i < w.size() && match; ++i)
          match = (p.at(pos + static_cast<long>(i)) == w[i]);
        if (match) return Tri::Yes;
      }
    }
    return Tri::No;
  }

  throw std::logic_error("word_in_language: unhandled presentation kind");
}

FactorSet ShiftPresentation::compute_factors(int n) const {
  FactorSet out;
  out.exact = true;
  if (n == 0) {
    out.words.insert(Word{});
    return out;
  }

  if (const auto* sub = std::get_if<SubstitutionKind>(&kind_)) {
    // Scan factors of sigma^m(seed) until two consecutive depths agree.
    constexpr std::size_t kLengthCap = 1u << 20;
    Word cur{sub->seed};
    std::set<Word> prev;
    bool saturated = false;
    int depth = 0;
    for (int m = 1; m <= sub_scan_depth_; ++m) {
      Word next;
      for (Symbol s : cur) {
        const Word& img = sub->images[static_cast<std::size_t>(s)];
        next.insert(next.end(), img.begin(), img.end());
        if (next.size() > kLengthCap) break;
      }
      cur = std::move(next);
      std::set<Word> fac;
      if (cur.size() >= static_cast<std::size_t>(n))
        for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= cur.size(); ++i)
          fac.insert(Word(cur.begin() + static_cast<long>(i),
                          cur.begin() + static_cast<long>(i) + n));
      depth = m;
      if (m > 1 && !fac.empty() && fac == prev) {
        saturated = true;
        prev = std::move(fac);
        break;
      }
      prev = std::move(fac);
      if (cur.size() > kLengthCap) break;
    }
    out.words = std::move(prev);
    out.exact = saturated;
    out.scan_depth = depth;
    return out;
  }

  // For the remaining kinds membership is exact; extend factors letterwise.
  const FactorSet& below = factors(n - 1);
  out.exact = below.exact;
  for (const Word& w : below.words) {
    for (Symbol s = 0; s < alphabet_.size(); ++s) {
      Word ext = w;
      ext.push_back(s);
      if (word_in_language(ext) == Tri::Yes) out.words.insert(std::move(ext));
    }
  }
  return out;
}

const FactorSet& ShiftPresentation::factors(int n) const {
  if (n < 0) throw std::invalid_argument("factors: negative length");
  {
    std::lock_guard<std::mutex> lk(caches_->mutex);
    auto it = caches_->factors.find(n);
    if (it != caches_->factors.end()) return it->second;
  }
  // Fill below the lock for the recursive case, then publish.
  FactorSet fs = compute_factors(n);
  std::lock_guard<std::mutex> lk(caches_->mutex);
  return caches_->factors.emplace(n, std::move(fs)).first->second;
}

Tri ShiftPresentation::is_factor(const Word& w) const {
  if (std::holds_alternative<SubstitutionKind>(kind_)) {
    const FactorSet& fs = factors(static_cast<int>(w.size()));
    if (fs.words.count(w)) return Tri::Yes;
    return fs.exact ? Tri::No : Tri::Undecided;
  }
  return word_in_language(w);
}

std::set<Word> ShiftPresentation::word_predecessors(int l, const Word& w, bool* exact) const {
  if (l < 0) throw std::invalid_argument("word_predecessors: negative length");
  bool ok = true;
  std::set<Word> preds;
  const FactorSet& candidates = factors(l);
  ok &= candidates.exact;
  // Memory-1 fast path: mu w admissible iff mu is and the junction is.
  if (const auto* m = std::get_if<MatrixSftKind>(&kind_); m && !w.empty() && l > 0) {
    for (const Word& mu : candidates.words)
      if (m->rows[static_cast<std::size_t>(mu.back())][static_cast<std::size_t>(w[0])] == 1)
        preds.insert(mu);
    if (exact) *exact = ok;
    return preds;
  }
  for (const Word& mu : candidates.words) {
    Word glued = mu;
    glued.insert(glued.end(), w.begin(), w.end());
    switch (is_factor(glued)) {
      case Tri::Yes: preds.insert(mu); break;
      case Tri::No: break;
      case Tri::Undecided: ok = false; break;
    }
  }
  if (exact) *exact = ok;
  return preds;
}

Word ShiftPresentation::fixed_point_prefix(long n) const {
  const auto* sub = substitution();
  if (!sub) throw std::logic_error("fixed_point_prefix needs a substitution presentation");
  std::lock_guard<std::mutex> lk(caches_->mutex);
  Word& fixed_point_cache_ = caches_->fixed_point;
  while (static_cast<long>(fixed_point_cache_.size()) < n) {
    Word cur = fixed_point_cache_.empty() ? Word{sub->seed} : fixed_point_cache_;
    Word next;
    for (Symbol s : cur) {
      const Word& img = sub->images[static_cast<std::size_t>(s)];
      next.insert(next.end(), img.begin(), img.end());
      if (static_cast<long>(next.size()) >= 2 * n) break;
    }
    if (next.size() <= fixed_point_cache_.size())
      throw std::logic_error("substitution fixed point does not expand");
    fixed_point_cache_ = std::move(next);
  }
  return Word(fixed_point_cache_.begin(), fixed_point_cache_.begin() + n);
}

bool ShiftPresentation::substitution_is_primitive() const {
  const auto* sub = substitution();
  if (!sub) return false;
  const int n = alphabet_.size();
  // Boolean incidence matrix; primitive iff some power is all-ones.
  std::vector<std::vector<char>> m(static_cast<std::size_t>(n),
                                   std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int a = 0; a < n; ++a)
    for (Symbol t : sub->images[static_cast<std::size_t>(a)])
      m[static_cast<std::size_t>(a)][static_cast<std::size_t>(t)] = 1;
  auto mul = [n](const auto& x, const auto& y) {
    std::vector<std::vector<char>> z(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (x[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
          for (int j = 0; j < n; ++j)
            if (y[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
              z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    return z;
  };
  auto all_ones = [n](const auto& x) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) return false;
    return true;
  };
  auto acc = m;
  const int bound = (n - 1) * (n - 1) + 1;
  for (int k = 1; k <= bound; ++k) {
    if (all_ones(acc)) return true;
    acc = mul(acc, m);
  }
  return all_ones(acc);
}

}  // namespace parshift

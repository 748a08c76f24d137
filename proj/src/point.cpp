#include "parshift/point.hpp"

#include <algorithm>
#include <stdexcept>

namespace parshift {

namespace {

TailSpec shift_tail(const TailSpec& t) {
  TailSpec s = t;
  if (!s.prefix.empty()) {
    s.prefix.erase(s.prefix.begin());
    return s;
  }
  if (auto* per = std::get_if<PeriodicCore>(&s.core)) {
    std::rotate(per->period.begin(), per->period.begin() + 1, per->period.end());
  } else {
    std::get<SubOrbitCore>(s.core).offset += 1;
  }
  return s;
}

TailSpec push_front_tail(TailSpec t, Symbol s) {
  t.prefix.insert(t.prefix.begin(), s);
  return t;
}

Symbol tail_at(const TailSpec& t, const ShiftPresentation* pres, long i) {
  const long q = static_cast<long>(t.prefix.size());
  if (i < q) return t.prefix[static_cast<std::size_t>(i)];
  if (const auto* per = std::get_if<PeriodicCore>(&t.core)) {
    const long p = static_cast<long>(per->period.size());
    return per->period[static_cast<std::size_t>((i - q) % p)];
  }
  const auto& so = std::get<SubOrbitCore>(t.core);
  const long pos = so.offset + (i - q);
  return pres->fixed_point_prefix(pos + 1)[static_cast<std::size_t>(pos)];
}

void normalize_tail(TailSpec& t, const ShiftPresentation* pres) {
  if (auto* per = std::get_if<PeriodicCore>(&t.core)) {
    EvPeriodicSpec c = EvPeriodicSpec{t.prefix, per->period}.canonical();
    t.prefix = std::move(c.preperiod);
    per->period = std::move(c.period);
    return;
  }
  auto& so = std::get<SubOrbitCore>(t.core);
  while (!t.prefix.empty() && so.offset > 0 &&
         pres->fixed_point_prefix(so.offset)[static_cast<std::size_t>(so.offset - 1)] ==
             t.prefix.back()) {
    t.prefix.pop_back();
    so.offset -= 1;
  }
}

}  // namespace

void Point::normalize() {
  normalize_tail(right_, pres_);
  if (side_ == Side::TwoSided) normalize_tail(left_, pres_);
}

Point Point::one_sided(const ShiftPresentation* pres, TailSpec right) {
  Point p;
  p.side_ = Side::OneSided;
  p.pres_ = pres;
  p.right_ = std::move(right);
  p.normalize();
  return p;
}

Point Point::ev_periodic(const ShiftPresentation* pres, Word preperiod, Word period) {
  if (period.empty()) throw std::invalid_argument("ev_periodic: empty period");
  return one_sided(pres, TailSpec{std::move(preperiod), PeriodicCore{std::move(period)}});
}

Point Point::substitution_orbit(const ShiftPresentation* pres, long offset) {
  const auto* sub = pres->substitution();
  if (!sub) throw std::invalid_argument("substitution_orbit needs a substitution presentation");
  if (offset < 0) throw std::invalid_argument("substitution_orbit: negative offset");
  return one_sided(pres, TailSpec{{}, SubOrbitCore{sub->seed, offset}});
}

Point Point::two_sided(const ShiftPresentation* pres, TailSpec left, TailSpec right) {
  Point p;
  p.side_ = Side::TwoSided;
  p.pres_ = pres;
  p.left_ = std::move(left);
  p.right_ = std::move(right);
  p.normalize();
  return p;
}

Point Point::two_sided_periodic(const ShiftPresentation* pres, const Word& period,
                                long phase) {
  if (period.empty()) throw std::invalid_argument("two_sided_periodic: empty period");
  const long p = static_cast<long>(period.size());
  auto sym = [&](long n) {
    long r = (n + phase) % p;
    if (r < 0) r += p;
    return period[static_cast<std::size_t>(r)];
  };
  Word right_per, left_per;
  for (long i = 0; i < p; ++i) right_per.push_back(sym(i));
  for (long i = -1; i >= -p; --i) left_per.push_back(sym(i));
  return two_sided(pres, TailSpec{{}, PeriodicCore{std::move(left_per)}},
                   TailSpec{{}, PeriodicCore{std::move(right_per)}});
}

Symbol Point::at(long i) const {
  if (i >= 0) return tail_at(right_, pres_, i);
  if (side_ == Side::OneSided)
    throw std::out_of_range("one-sided point read at a negative index");
  return tail_at(left_, pres_, -i - 1);
}

Word Point::window(long from, long to) const {
  if (to < from) throw std::invalid_argument("window: to < from");
  Word w;
  w.reserve(static_cast<std::size_t>(to - from));
  for (long i = from; i < to; ++i) w.push_back(at(i));
  return w;
}

Point Point::shifted() const {
  Point p = *this;
  if (side_ == Side::OneSided) {
    p.right_ = shift_tail(right_);
  } else {
    p.left_ = push_front_tail(left_, at(0));
    p.right_ = shift_tail(right_);
  }
  p.normalize();
  return p;
}

Point Point::shifted_back() const {
  if (side_ != Side::TwoSided)
    throw std::logic_error("one-sided shift has no inverse");
  Point p = *this;
  p.right_ = push_front_tail(right_, at(-1));
  p.left_ = shift_tail(left_);
  p.normalize();
  return p;
}

Point Point::prepended(const Word& w) const {
  if (side_ != Side::OneSided)
    throw std::logic_error("prepended applies to one-sided points");
  Point p = *this;
  p.right_.prefix.insert(p.right_.prefix.begin(), w.begin(), w.end());
  p.normalize();
  return p;
}

PointEq Point::equal(const Point& a, const Point& b, int depth) {
  if (a.side_ != b.side_) return PointEq::Distinct;
  if (a.right_ == b.right_ && (a.side_ == Side::OneSided || a.left_ == b.left_))
    return PointEq::Equal;

  const bool a_per = std::holds_alternative<PeriodicCore>(a.right_.core) &&
                     (a.side_ == Side::OneSided ||
                      std::holds_alternative<PeriodicCore>(a.left_.core));
  const bool b_per = std::holds_alternative<PeriodicCore>(b.right_.core) &&
                     (b.side_ == Side::OneSided ||
                      std::holds_alternative<PeriodicCore>(b.left_.core));
  if (a_per && b_per) return PointEq::Distinct;  // canonical forms are unique

  const long lo = a.side_ == Side::OneSided ? 0 : -static_cast<long>(depth);
  for (long i = lo; i < static_cast<long>(depth); ++i)
    if (a.at(i) != b.at(i)) return PointEq::Distinct;
  return PointEq::Undecided;
}

Tri Point::valid(int depth) const {
  // Finite point sets admit an exact structural membership test.
  if (const auto* fp = pres_->finite_points()) {
    if (side_ == Side::OneSided) {
      if (const auto* per = std::get_if<PeriodicCore>(&right_.core)) {
        EvPeriodicSpec spec{right_.prefix, per->period};
        spec = spec.canonical();
        for (const EvPeriodicSpec& q : fp->points)
          if (q == spec) return Tri::Yes;
        return Tri::No;
      }
      return Tri::No;  // substitution orbits are never in a finite point set
    }
    // Two-sided: both tails must trace one periodic orbit.
    const auto* lp = std::get_if<PeriodicCore>(&left_.core);
    const auto* rp = std::get_if<PeriodicCore>(&right_.core);
    if (!lp || !rp) return Tri::No;
    const long span = static_cast<long>(left_.prefix.size() + lp->period.size() +
                                        right_.prefix.size() + rp->period.size());
    for (const EvPeriodicSpec& q : fp->points) {
      const long p = static_cast<long>(q.period.size());
      for (long phase = 0; phase < p; ++phase) {
        bool match = true;
        for (long i = -span; i <= span && match; ++i) {
          long r = (i + phase) % p;
          if (r < 0) r += p;
          match = (at(i) == q.period[static_cast<std::size_t>(r)]);
        }
        if (match) return Tri::Yes;
      }
    }
    return Tri::No;
  }

  long hi = static_cast<long>(right_.prefix.size()) + depth;
  if (const auto* per = std::get_if<PeriodicCore>(&right_.core))
    hi += 2 * static_cast<long>(per->period.size());
  long lo = 0;
  if (side_ == Side::TwoSided) {
    lo = -(static_cast<long>(left_.prefix.size()) + depth);
    if (const auto* per = std::get_if<PeriodicCore>(&left_.core))
      lo -= 2 * static_cast<long>(per->period.size());
  }
  return pres_->is_factor(window(lo, hi));
}

std::string Point::to_string() const {
  const auto& names = pres_->alphabet().names;
  auto tail_str = [&](const TailSpec& t) {
    std::string s = parshift::to_string(t.prefix, names);
    if (t.prefix.empty()) s.clear();
    if (const auto* per = std::get_if<PeriodicCore>(&t.core)) {
      s += "(" + parshift::to_string(per->period, names) + ")*";
    } else {
      const auto& so = std::get<SubOrbitCore>(t.core);
      s += "sub[" + names.at(static_cast<std::size_t>(so.seed)) + "]+" +
           std::to_string(so.offset);
    }
    return s;
  };
  if (side_ == Side::OneSided) return tail_str(right_);
  return "<" + tail_str(left_) + " . " + tail_str(right_) + ">";
}

// ---------------------------------------------------------------------------

Tri prependable(const ShiftPresentation& pres, const Word& mu, const Point& x, int depth) {
  if (mu.empty()) return Tri::Yes;

  if (pres.is_full_shift()) return Tri::Yes;

  if (const auto* m = pres.matrix()) {
    for (std::size_t i = 0; i + 1 < mu.size(); ++i)
      if (m->rows[static_cast<std::size_t>(mu[i])][static_cast<std::size_t>(mu[i + 1])] != 1)
        return Tri::No;
    return tri_of(m->rows[static_cast<std::size_t>(mu.back())]
                         [static_cast<std::size_t>(x.at(0))] == 1);
  }

  if (pres.finite_points()) return x.prepended(mu).valid();

  int win = depth;
  if (const auto* f = std::get_if<ForbiddenWordsKind>(&pres.kind())) {
    int m = 2;
    for (const Word& w : f->forbidden) m = std::max(m, static_cast<int>(w.size()));
    win = m - 1;  // junction windows never reach further into x
  }
  Word glued = mu;
  Word tail = x.window(0, win);
  glued.insert(glued.end(), tail.begin(), tail.end());
  return pres.is_factor(glued);
}

std::set<Word> point_predecessors(const ShiftPresentation& pres, int l, const Point& x,
                                  int depth, bool* exact) {
  bool ok = true;
  std::set<Word> out;
  if (l == 0) {
    out.insert(Word{});
    if (exact) *exact = true;
    return out;
  }

  if (pres.substitution()) {
    bool e1 = true, e2 = true;
    std::set<Word> a = pres.word_predecessors(l, x.window(0, depth), &e1);
    std::set<Word> b = pres.word_predecessors(l, x.window(0, depth + l + 4), &e2);
    ok = e1 && e2 && (a == b);
    if (exact) *exact = ok;
    return b;
  }

  const FactorSet& cands = pres.factors(l);
  ok &= cands.exact;
  for (const Word& mu : cands.words) {
    switch (prependable(pres, mu, x, depth)) {
      case Tri::Yes: out.insert(mu); break;
      case Tri::No: break;
      case Tri::Undecided: ok = false; break;
    }
  }
  if (exact) *exact = ok;
  return out;
}

std::vector<Point> enumerate_ev_periodic(const ShiftPresentation& pres, int q, int p) {
  std::set<Point> seen;
  for (int plen = 1; plen <= p; ++plen) {
    for (const Word& v : pres.factors(plen).words) {
      for (int ulen = 0; ulen <= q; ++ulen) {
        for (const Word& u : pres.factors(ulen).words) {
          Point pt = Point::ev_periodic(&pres, u, v);
          if (pt.valid() == Tri::Yes) seen.insert(pt);
        }
      }
    }
  }
  return std::vector<Point>(seen.begin(), seen.end());
}

std::vector<Point> enumerate_two_sided_periodic(const ShiftPresentation& pres, int p) {
  std::set<Point> seen;
  for (int plen = 1; plen <= p; ++plen) {
    for (const Word& v : pres.factors(plen).words) {
      for (long phase = 0; phase < plen; ++phase) {
        Point pt = Point::two_sided_periodic(&pres, v, phase);
        if (pt.valid() == Tri::Yes) seen.insert(pt);
      }
    }
  }
  return std::vector<Point>(seen.begin(), seen.end());
}

}  // namespace parshift

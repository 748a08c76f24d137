#include "parshift/boolean_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace parshift {

bool preceq(Resolution a, Resolution b) {
  return a.k <= b.k && a.l - a.k <= b.l - b.k;
}

Resolution common_refinement(Resolution a, Resolution b) {
  const int k = std::max(a.k, b.k);
  const int slack = std::max(a.l - a.k, b.l - b.k);
  return Resolution{k, k + slack};
}

std::string to_string(Resolution r) {
  return "(" + std::to_string(r.k) + "," + std::to_string(r.l) + ")";
}

int AtomTable::find(const Word& prefix, const std::vector<Word>& preds) const {
  auto it = index.find({prefix, preds});
  return it == index.end() ? -1 : it->second;
}

// ---------------------------------------------------------------------------

BooleanEngine::BooleanEngine(const PartialActionHandle* handle) : handle_(handle) {}

int BooleanEngine::margin_for(Resolution r) const {
  // Witness tails always have exactly this length, so label keys are
  // reproducible from any long enough word.
  int margin = std::max(r.l + 2, 8);
  if (const auto* f = std::get_if<ForbiddenWordsKind>(&presentation().kind())) {
    int m = 2;
    for (const Word& w : f->forbidden) m = std::max(m, static_cast<int>(w.size()));
    margin = std::max(margin, m - 1);
  }
  return margin;
}

AtomTable BooleanEngine::enumerate_one_sided(Resolution r, int margin) const {
  const ShiftPresentation& pres = presentation();
  AtomTable t;
  t.r = r;
  t.margin = margin;

  auto insert = [&t](Word prefix, std::vector<Word> preds, bool exact) -> Atom& {
    int idx = t.find(prefix, preds);
    if (idx < 0) {
      idx = static_cast<int>(t.atoms.size());
      t.index[{prefix, preds}] = idx;
      t.atoms.push_back(Atom{std::move(prefix), std::move(preds), exact, {}, {}});
    }
    Atom& a = t.atoms[static_cast<std::size_t>(idx)];
    a.exact = a.exact && exact;
    return a;
  };

  // Samples whose predecessor windows have not stabilized are dropped:
  // their classes are reached again through cleaner visits of the orbit.
  auto insert_point = [&](const Point& x) {
    Word prefix = x.window(0, r.k);
    Point tail = x;
    for (int s = 0; s < r.k; ++s) tail = tail.shifted();
    bool ex = true;
    auto preds = point_predecessors(pres, r.l, tail, sample_depth_, &ex);
    if (!ex && pres.substitution()) return;
    Atom& a = insert(std::move(prefix),
                     std::vector<Word>(preds.begin(), preds.end()), ex);
    if (a.point_witnesses.size() < 4) a.point_witnesses.push_back(x);
    t.exact = t.exact && ex;
  };

  if (const auto* fp = pres.finite_points()) {
    for (const EvPeriodicSpec& spec : fp->points)
      insert_point(Point::ev_periodic(&pres, spec.preperiod, spec.period));
    return t;
  }

  if (pres.substitution()) {
    // Atoms are sampled from points: the shift orbit of the fixed point is
    // dense, so it meets every class once it exhibits every window of the
    // needed length; the finitely many classes with richer predecessor
    // data live on the backward tree of the left special element and are
    // reached by admissible prepends.
    const int window = r.k + r.l + 6;
    const std::set<Word>& need = pres.factors(window).words;
    t.exact = t.exact && pres.factors(window).exact;
    long orbit_len = 64;
    std::set<Word> seen;
    Word fp;
    while (true) {
      fp = pres.fixed_point_prefix(orbit_len + window);
      seen.clear();
      for (long i = 0; i + window <= static_cast<long>(fp.size()); ++i)
        seen.insert(Word(fp.begin() + i, fp.begin() + i + window));
      if (std::includes(seen.begin(), seen.end(), need.begin(), need.end())) break;
      if (orbit_len > (1l << 18))
        throw std::logic_error("substitution orbit does not exhibit all factors");
      orbit_len *= 2;
    }
    for (long i = 0; i < orbit_len; ++i)
      insert_point(Point::substitution_orbit(&pres, i));
    for (int j = 1; j <= r.l + 2; ++j) {
      for (const Word& v : pres.factors(j).words) {
        for (long i = 0; i <= static_cast<long>(r.k + r.l + 4); ++i) {
          Point pt = Point::substitution_orbit(&pres, i).prepended(v);
          if (pt.valid(sample_depth_) == Tri::Yes) insert_point(pt);
        }
      }
    }
    return t;
  }

  const FactorSet& fs = pres.factors(r.k + margin);
  t.exact = fs.exact;
  for (const Word& u : fs.words) {
    Word prefix(u.begin(), u.begin() + r.k);
    bool ex = true;
    auto preds =
        pres.word_predecessors(r.l, Word(u.begin() + r.k, u.end()), &ex);
    Atom& a = insert(std::move(prefix),
                     std::vector<Word>(preds.begin(), preds.end()), ex);
    if (a.word_witnesses.size() < 4) a.word_witnesses.push_back(u);
    t.exact = t.exact && ex;
  }
  return t;
}

AtomTable BooleanEngine::enumerate_two_sided(Resolution r) const {
  const ShiftPresentation& pres = presentation();
  AtomTable t;
  t.r = r;
  const FactorSet& fs = pres.factors(r.k + r.l);
  t.exact = fs.exact;
  for (const Word& w : fs.words) {
    int idx = static_cast<int>(t.atoms.size());
    t.index[{w, {}}] = idx;
    Atom a;
    a.prefix = w;
    a.exact = fs.exact;
    a.word_witnesses.push_back(w);
    t.atoms.push_back(std::move(a));
  }
  return t;
}

AtomTable BooleanEngine::enumerate(Resolution r) const {
  if (r.k < 0 || r.l < 0) throw std::invalid_argument("negative resolution");
  if (side() == Side::TwoSided) return enumerate_two_sided(r);
  return enumerate_one_sided(r, margin_for(r));
}

const AtomTable& BooleanEngine::table(Resolution r) const {
  {
    std::lock_guard<std::mutex> lk(cache_mutex_);
    auto it = cache_.find({r.k, r.l});
    if (it != cache_.end()) return it->second;
  }
  AtomTable t = enumerate(r);
  std::lock_guard<std::mutex> lk(cache_mutex_);
  return cache_.emplace(std::make_pair(r.k, r.l), std::move(t)).first->second;
}

SymbolicSet BooleanEngine::full(Resolution r) const {
  const AtomTable& t = table(r);
  SymbolicSet s;
  s.r = r;
  s.exact = t.exact;
  for (int i = 0; i < static_cast<int>(t.atoms.size()); ++i) s.atoms.insert(i);
  return s;
}

SymbolicSet BooleanEngine::empty(Resolution r) const {
  return SymbolicSet{r, {}, table(r).exact};
}

SymbolicSet BooleanEngine::from_atoms(Resolution r, std::set<int> atoms) const {
  const AtomTable& t = table(r);
  for (int i : atoms)
    if (i < 0 || i >= static_cast<int>(t.atoms.size()))
      throw std::invalid_argument("atom index out of range");
  return SymbolicSet{r, std::move(atoms), t.exact};
}

SymbolicSet BooleanEngine::single(Resolution r, int atom) const {
  return from_atoms(r, {atom});
}

SymbolicSet BooleanEngine::meet(const SymbolicSet& a, const SymbolicSet& b) const {
  const Resolution r = common_refinement(a.r, b.r);
  SymbolicSet fa = refine(a, r), fb = refine(b, r);
  SymbolicSet out;
  out.r = r;
  out.exact = fa.exact && fb.exact;
  std::set_intersection(fa.atoms.begin(), fa.atoms.end(), fb.atoms.begin(), fb.atoms.end(),
                        std::inserter(out.atoms, out.atoms.begin()));
  return out;
}

SymbolicSet BooleanEngine::join(const SymbolicSet& a, const SymbolicSet& b) const {
  const Resolution r = common_refinement(a.r, b.r);
  SymbolicSet fa = refine(a, r), fb = refine(b, r);
  SymbolicSet out;
  out.r = r;
  out.exact = fa.exact && fb.exact;
  std::set_union(fa.atoms.begin(), fa.atoms.end(), fb.atoms.begin(), fb.atoms.end(),
                 std::inserter(out.atoms, out.atoms.begin()));
  return out;
}

SymbolicSet BooleanEngine::complement(const SymbolicSet& a) const {
  SymbolicSet out;
  out.r = a.r;
  out.exact = a.exact && table(a.r).exact;
  const int n = static_cast<int>(table(a.r).atoms.size());
  for (int i = 0; i < n; ++i)
    if (!a.atoms.count(i)) out.atoms.insert(i);
  return out;
}

SymbolicSet BooleanEngine::difference(const SymbolicSet& a, const SymbolicSet& b) const {
  return meet(a, complement(b));
}

bool BooleanEngine::is_full(const SymbolicSet& a) const {
  return a.atoms.size() == table(a.r).atoms.size();
}

bool BooleanEngine::equal(const SymbolicSet& a, const SymbolicSet& b) const {
  const Resolution r = common_refinement(a.r, b.r);
  return refine(a, r).atoms == refine(b, r).atoms;
}

bool BooleanEngine::subset(const SymbolicSet& a, const SymbolicSet& b) const {
  const Resolution r = common_refinement(a.r, b.r);
  SymbolicSet fa = refine(a, r), fb = refine(b, r);
  return std::includes(fb.atoms.begin(), fb.atoms.end(), fa.atoms.begin(), fa.atoms.end());
}

int BooleanEngine::coarse_atom(Resolution from, int atom, Resolution to) const {
  const AtomTable& tf = table(from);
  const AtomTable& tt = table(to);
  const Atom& a = tf.atoms[static_cast<std::size_t>(atom)];

  if (side() == Side::TwoSided) {
    // Window truncation: [-(to.l), to.k) inside [-(from.l), from.k).
    const std::size_t off = static_cast<std::size_t>(from.l - to.l);
    Word sub(a.prefix.begin() + static_cast<long>(off),
             a.prefix.begin() + static_cast<long>(off) + to.l + to.k);
    int idx = tt.find(sub, {});
    if (idx < 0) throw std::logic_error("two-sided coarse atom missing");
    return idx;
  }

  const ShiftPresentation& pres = presentation();
  int result = -1;
  auto consider = [&](const Word& prefix, const std::vector<Word>& preds) {
    int idx = tt.find(prefix, preds);
    if (idx < 0)
      throw std::logic_error("coarse label not in table at " + to_string(to));
    if (result < 0) result = idx;
    else if (result != idx)
      throw std::logic_error("witnesses disagree on coarse label; "
                             "presentation violates refinement monotonicity");
  };
  for (const Word& u : a.word_witnesses) {
    Word prefix(u.begin(), u.begin() + to.k);
    // Labels are keyed by predecessor sets of margin-length tails; align
    // the query with the target table's margin.
    Word tail(u.begin() + to.k, u.end());
    if (static_cast<int>(tail.size()) > tt.margin)
      tail.resize(static_cast<std::size_t>(tt.margin));
    auto preds = pres.word_predecessors(to.l, tail);
    consider(prefix, std::vector<Word>(preds.begin(), preds.end()));
  }
  for (const Point& x : a.point_witnesses) {
    Word prefix = x.window(0, to.k);
    Point tail = x;
    for (int s = 0; s < to.k; ++s) tail = tail.shifted();
    bool ex = true;
    auto preds = point_predecessors(pres, to.l, tail, sample_depth_, &ex);
    if (!ex) continue;
    consider(prefix, std::vector<Word>(preds.begin(), preds.end()));
  }
  if (result < 0) throw std::logic_error("atom has no witnesses");
  return result;
}

SymbolicSet BooleanEngine::refine(const SymbolicSet& a, Resolution r) const {
  if (a.r == r) return a;
  // Componentwise growth is accepted besides the guaranteed order; the
  // witness consistency check in coarse_atom rejects presentations where
  // the partition fails to refine.
  const bool componentwise = r.k >= a.r.k && r.l >= a.r.l;
  if (!preceq(a.r, r) && !componentwise)
    throw std::invalid_argument("refine: target resolution is not finer");
  const AtomTable& tt = table(r);
  SymbolicSet out;
  out.r = r;
  out.exact = a.exact && tt.exact;
  // Outside the guaranteed order, substitution labels fall back to finite
  // witnesses; flag the result.
  if (!preceq(a.r, r) && presentation().substitution()) out.exact = false;
  for (int i = 0; i < static_cast<int>(tt.atoms.size()); ++i)
    if (a.atoms.count(coarse_atom(r, i, a.r))) out.atoms.insert(i);
  return out;
}

SymbolicSet BooleanEngine::act_letter(const Letter& b, const SymbolicSet& a) const {
  const Resolution r = a.r;
  const ShiftPresentation& pres = presentation();

  if (side() == Side::TwoSided) {
    const Resolution r2 = b.sign > 0 ? Resolution{r.k + 1, r.l} : Resolution{r.k, r.l + 1};
    const AtomTable& t2 = table(r2);
    const AtomTable& t1 = table(r);
    SymbolicSet out;
    out.r = r2;
    out.exact = a.exact && t1.exact && t2.exact;
    for (int i = 0; i < static_cast<int>(t2.atoms.size()); ++i) {
      const Word& w = t2.atoms[static_cast<std::size_t>(i)].prefix;
      // Position 0 sits at index l for a positive letter (window [-l, k+1))
      // and position -1 at index l for an inverse letter (window [-(l+1), k)).
      const std::size_t origin = static_cast<std::size_t>(r.l);
      if (w[origin] != b.symbol) continue;
      Word prior = b.sign > 0 ? Word(w.begin() + 1, w.end())
                              : Word(w.begin(), w.end() - 1);
      int j = t1.find(prior, {});
      if (j < 0) throw std::logic_error("two-sided act: shifted window missing");
      if (a.atoms.count(j)) out.atoms.insert(i);
    }
    return out;
  }

  if (b.sign > 0) {
    // theta_a(A): prefix grows by the letter, the tail data is unchanged.
    const Resolution r2{r.k + 1, r.l};
    const AtomTable& t2 = table(r2);
    const AtomTable& t1 = table(r);
    SymbolicSet out;
    out.r = r2;
    out.exact = a.exact && t1.exact && t2.exact;
    for (int i = 0; i < static_cast<int>(t2.atoms.size()); ++i) {
      const Atom& at = t2.atoms[static_cast<std::size_t>(i)];
      if (at.prefix.empty() || at.prefix[0] != b.symbol) continue;
      Word suffix(at.prefix.begin() + 1, at.prefix.end());
      int j = t1.find(suffix, at.preds);
      if (j < 0) throw std::logic_error("act: sigma-image atom missing");
      if (a.atoms.count(j)) out.atoms.insert(i);
    }
    return out;
  }

  // theta_{a^{-1}}(A) = sigma(A /\ D_a): x belongs iff a.x in X and a.x in A.
  const Resolution r2{r.k, r.l + 1};
  const AtomTable& t2 = table(r2);
  const AtomTable& t1 = table(r);
  SymbolicSet out;
  out.r = r2;
  out.exact = a.exact && t1.exact && t2.exact;
  for (int i = 0; i < static_cast<int>(t2.atoms.size()); ++i) {
    const Atom& at = t2.atoms[static_cast<std::size_t>(i)];
    int verdict = -2;  // -2 unset, -1 out, >=0 the coarse atom of a.x
    auto consider = [&](int v) {
      if (verdict == -2) verdict = v;
      else if (verdict != v)
        throw std::logic_error("act: witnesses disagree on inverse letter");
    };
    for (const Word& u : at.word_witnesses) {
      Word au{b.symbol};
      au.insert(au.end(), u.begin(), u.end());
      Tri in_lang = pres.is_factor(au);
      if (in_lang == Tri::Undecided) {
        out.exact = false;
        in_lang = Tri::No;
      }
      if (in_lang == Tri::No) {
        consider(-1);
        continue;
      }
      Word prefix(au.begin(), au.begin() + r.k);
      Word tail(au.begin() + r.k, au.end());
      if (static_cast<int>(tail.size()) > t1.margin)
        tail.resize(static_cast<std::size_t>(t1.margin));
      auto preds = pres.word_predecessors(r.l, tail);
      int j = t1.find(prefix, std::vector<Word>(preds.begin(), preds.end()));
      if (j < 0) throw std::logic_error("act: prepended atom missing");
      consider(j);
    }
    for (const Point& x : at.point_witnesses) {
      bool ex = true;
      auto p1 = point_predecessors(pres, 1, x, sample_depth_, &ex);
      if (!ex) continue;  // unstable witness; another one decides
      if (!p1.count(Word{b.symbol})) {
        consider(-1);
        continue;
      }
      Point ax = x.prepended({b.symbol});
      bool ex2 = true;
      int j = atom_of(r, ax, &ex2);
      if (!ex2) continue;
      if (j < 0) throw std::logic_error("act: prepended point atom missing");
      consider(j);
    }
    if (verdict == -2 && !at.point_witnesses.empty()) out.exact = false;
    if (verdict >= 0 && a.atoms.count(verdict)) out.atoms.insert(i);
  }
  return out;
}

SymbolicSet BooleanEngine::act(const ReducedWord& g, const SymbolicSet& a) const {
  SymbolicSet cur = a;
  for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it)
    cur = act_letter(*it, cur);
  return cur;
}

SymbolicSet BooleanEngine::domain_set(const ReducedWord& g, Resolution at_least) const {
  SymbolicSet d = act(g, full(Resolution{0, 0}));
  const Resolution target = common_refinement(d.r, at_least);
  if (!(target == d.r)) d = refine(d, target);
  return d;
}

SymbolicSet BooleanEngine::cylinder(const Word& mu, const Word& nu,
                                    Resolution at_least) const {
  if (side() != Side::OneSided)
    throw std::invalid_argument("cylinder: one-sided handles only");
  const ReducedWord rmu = ReducedWord::from_positive(mu);
  const ReducedWord rnu = ReducedWord::from_positive(nu);
  SymbolicSet via_action = act(rnu, domain_set(invert(rmu)));
  SymbolicSet via_domains =
      meet(domain_set(rnu), domain_set(multiply(rnu, invert(rmu))));
  if (!equal(via_action, via_domains))
    throw std::logic_error("cylinder: the two defining formulas disagree");
  const Resolution target = common_refinement(via_action.r, at_least);
  if (!(target == via_action.r)) via_action = refine(via_action, target);
  return via_action;
}

int BooleanEngine::atom_of(Resolution r, const Point& p, bool* exact) const {
  const AtomTable& t = table(r);
  if (side() == Side::TwoSided) {
    if (exact) *exact = t.exact;
    return t.find(p.window(-r.l, r.k), {});
  }
  Word prefix = p.window(0, r.k);
  Point tail = p;
  for (int s = 0; s < r.k; ++s) tail = tail.shifted();
  bool ex = true;
  auto preds = point_predecessors(presentation(), r.l, tail, sample_depth_, &ex);
  if (exact) *exact = ex && t.exact;
  return t.find(prefix, std::vector<Word>(preds.begin(), preds.end()));
}

Tri BooleanEngine::contains(const SymbolicSet& a, const Point& p) const {
  bool ex = true;
  int idx = atom_of(a.r, p, &ex);
  if (!ex || !a.exact) return Tri::Undecided;
  if (idx < 0) return Tri::No;
  return tri_of(a.atoms.count(idx) != 0);
}

std::string BooleanEngine::atom_name(Resolution r, int atom) const {
  const auto& names = presentation().alphabet().names;
  const Atom& a = table(r).atoms[static_cast<std::size_t>(atom)];
  if (side() == Side::TwoSided) return "[" + to_string(a.prefix, names) + "]";
  std::string s = "[" + to_string(a.prefix, names) + "|{";
  bool first = true;
  for (const Word& w : a.preds) {
    if (!first) s += ",";
    s += to_string(w, names);
    first = false;
  }
  return s + "}]";
}

// ---------------------------------------------------------------------------
// Finite Stone duality

BooleanEngine::StoneDualView BooleanEngine::stone_dual(Resolution r) const {
  StoneDualView view;
  view.r = r;
  view.n_points = static_cast<int>(table(r).atoms.size());

  // Generators nu mu^{-1} whose domain shape (|nu|, |mu|) precedes r, so
  // that every D_g in the family is exactly r-representable.
  const ShiftPresentation& pres = presentation();
  std::set<ReducedWord> family;
  for (int j = std::max(0, r.k - r.l); j <= r.k; ++j) {
    for (const Word& nu : pres.factors(j).words) {
      const int max_mu = r.l - r.k + j;
      for (int i = 0; i <= max_mu; ++i) {
        for (const Word& mu : pres.factors(i).words) {
          if (!nu.empty() && !mu.empty() && nu.back() == mu.back()) continue;
          family.insert(multiply(ReducedWord::from_positive(nu),
                                 invert(ReducedWord::from_positive(mu))));
        }
      }
    }
  }
  view.generating_family.assign(family.begin(), family.end());

  view.evaluation.assign(static_cast<std::size_t>(view.n_points),
                         std::vector<char>(view.generating_family.size(), 0));
  for (std::size_t gi = 0; gi < view.generating_family.size(); ++gi) {
    SymbolicSet d = refine(domain_set(view.generating_family[gi]), r);
    for (int atom : d.atoms)
      view.evaluation[static_cast<std::size_t>(atom)][gi] = 1;
  }
  return view;
}

Report BooleanEngine::check_separation(Resolution r) const {
  Report rep;
  rep.suite = "stone-separation";
  rep.params["resolution"] = to_string(r);
  StoneDualView view = stone_dual(r);
  rep.params["dual_points"] = std::to_string(view.n_points);
  rep.params["generators"] = std::to_string(view.generating_family.size());
  for (int i = 0; i < view.n_points; ++i)
    for (int j = i + 1; j < view.n_points; ++j)
      if (view.evaluation[static_cast<std::size_t>(i)] ==
          view.evaluation[static_cast<std::size_t>(j)])
        rep.fail("dual points " + atom_name(r, i) + " and " + atom_name(r, j) +
                 " agree on every generator");
  if (!table(r).exact) rep.undecided();
  return rep;
}

Report BooleanEngine::check_iso(Resolution r, std::mt19937_64& rng, int samples) const {
  Report rep;
  rep.suite = "stone-iso";
  rep.params["resolution"] = to_string(r);
  const int n = static_cast<int>(table(r).atoms.size());
  std::uniform_int_distribution<int> coin(0, 1);

  auto random_set = [&]() {
    std::set<int> s;
    for (int i = 0; i < n; ++i)
      if (coin(rng)) s.insert(i);
    return from_atoms(r, std::move(s));
  };
  // The dual of A is its set of atoms; evaluation must be a Boolean
  // isomorphism onto the subsets of dual points.
  auto hat = [](const SymbolicSet& s) -> const std::set<int>& { return s.atoms; };

  for (int t = 0; t < samples; ++t) {
    SymbolicSet a = random_set(), b = random_set();
    std::set<int> cap, cup;
    std::set_intersection(hat(a).begin(), hat(a).end(), hat(b).begin(), hat(b).end(),
                          std::inserter(cap, cap.begin()));
    std::set_union(hat(a).begin(), hat(a).end(), hat(b).begin(), hat(b).end(),
                   std::inserter(cup, cup.begin()));
    if (hat(meet(a, b)) != cap) rep.fail("evaluation does not respect meet");
    if (hat(join(a, b)) != cup) rep.fail("evaluation does not respect join");
    std::set<int> co;
    for (int i = 0; i < n; ++i)
      if (!hat(a).count(i)) co.insert(i);
    if (hat(complement(a)) != co) rep.fail("evaluation does not respect complement");
    if (hat(a) == hat(b) && !equal(a, b)) rep.fail("evaluation is not injective");
    // Surjectivity: the subset hat(a) of dual points is hit by a itself.
    if (!equal(from_atoms(r, hat(a)), a)) rep.fail("evaluation is not surjective");
  }
  rep.params["samples"] = std::to_string(samples);
  if (!table(r).exact) rep.undecided();
  return rep;
}

// ---------------------------------------------------------------------------

Report check_modsat(const BooleanEngine* engine, Resolution r, int max_n,
                    int instances, int matrix_size, unsigned seed) {
  Report rep;
  rep.suite = "modsat";
  rep.params["max_n"] = std::to_string(max_n);
  rep.params["instances"] = std::to_string(instances);
  rep.params["seed"] = std::to_string(seed);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);

  for (int n = 1; n <= max_n; ++n) {
    // Boolean-set instantiation: sums are joins of pairwise disjoint terms.
    if (engine) {
      const int atoms = static_cast<int>(engine->table(r).atoms.size());
      for (int t = 0; t < std::max(1, instances / 10); ++t) {
        std::vector<SymbolicSet> xs;
        for (int i = 0; i < n; ++i) {
          std::set<int> s;
          for (int a = 0; a < atoms; ++a)
            if (coin(rng)) s.insert(a);
          xs.push_back(engine->from_atoms(r, std::move(s)));
        }
        SymbolicSet prod = engine->full(r);
        for (const auto& x : xs) prod = engine->meet(prod, x);
        SymbolicSet lhs = engine->complement(prod);

        SymbolicSet acc = engine->empty(r);
        bool disjoint = true;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
          SymbolicSet term = engine->full(r);
          for (int i = 0; i < n; ++i)
            term = engine->meet(term, (mask >> i) & 1u
                                          ? engine->complement(xs[static_cast<std::size_t>(i)])
                                          : xs[static_cast<std::size_t>(i)]);
          if (!engine->is_empty(engine->meet(acc, term))) disjoint = false;
          acc = engine->join(acc, term);
        }
        if (!disjoint) rep.fail("modsat terms overlap at n=" + std::to_string(n));
        if (!engine->equal(acc, lhs))
          rep.fail("modsat set identity fails at n=" + std::to_string(n));
      }
    }

    // 0/1 diagonal integer matrices with genuine ring arithmetic.
    for (int t = 0; t < instances; ++t) {
      std::vector<std::vector<long>> xs(static_cast<std::size_t>(n),
                                        std::vector<long>(static_cast<std::size_t>(matrix_size)));
      for (auto& v : xs)
        for (auto& e : v) e = coin(rng);
      for (int d = 0; d < matrix_size; ++d) {
        long prod = 1;
        for (int i = 0; i < n; ++i) prod *= xs[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)];
        const long lhs = 1 - prod;
        long rhs = 0;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
          long term = 1;
          for (int i = 0; i < n; ++i) {
            const long xi = xs[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)];
            term *= ((mask >> i) & 1u) ? (1 - xi) : xi;
          }
          rhs += term;
        }
        if (lhs != rhs) {
          rep.fail("modsat matrix identity fails at n=" + std::to_string(n));
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace parshift

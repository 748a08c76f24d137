#include "parshift/representation.hpp"

#include <algorithm>
#include <stdexcept>

namespace parshift {

int FiniteBasis::index_of(const Point& x) const {
  // Points normalize at construction, so structural lookup is exact for
  // the eventually periodic points a basis contains.
  auto it = index.find(x);
  return it == index.end() ? -1 : it->second;
}

long FiniteBasis::core_size() const {
  long n = 0;
  for (char c : core) n += (c != 0);
  return n;
}

FiniteBasis build_basis(const PartialActionHandle& handle, int q, int p, int d) {
  const ShiftPresentation& pres = handle.presentation();
  if (pres.substitution())
    throw std::invalid_argument(
        "substitution shifts have no eventually periodic points; "
        "use the symbolic suites instead");
  FiniteBasis b;
  b.handle = &handle;
  b.q = q;
  b.p = p;
  b.d = d;
  b.points = pres.side() == Side::OneSided ? enumerate_ev_periodic(pres, q + d, p)
                                           : enumerate_two_sided_periodic(pres, p);
  for (const Point& x : b.points)
    b.core.push_back(pres.side() == Side::TwoSided ||
                     static_cast<int>(x.right().prefix.size()) <= q);
  for (int i = 0; i < b.size(); ++i) b.index[b.points[static_cast<std::size_t>(i)]] = i;
  return b;
}

PartialIsometryOp PartialIsometryOp::identity(int n) {
  PartialIsometryOp op(n);
  for (int i = 0; i < n; ++i) op.at(i) = Entry{State::To, i};
  return op;
}

PartialIsometryOp PartialIsometryOp::zero(int n) { return PartialIsometryOp(n); }

PartialIsometryOp PartialIsometryOp::projection(int n, const std::set<int>& support) {
  PartialIsometryOp op(n);
  for (int i : support) op.at(i) = Entry{State::To, i};
  return op;
}

bool PartialIsometryOp::is_partial_injection() const {
  std::set<int> seen;
  for (int i = 0; i < size(); ++i)
    if (at(i).state == State::To && !seen.insert(at(i).to).second) return false;
  return true;
}

std::set<int> PartialIsometryOp::range_support() const {
  std::set<int> out;
  for (int i = 0; i < size(); ++i)
    if (at(i).state == State::To) out.insert(at(i).to);
  return out;
}

PartialIsometryOp compose(const PartialIsometryOp& f, const PartialIsometryOp& g) {
  PartialIsometryOp out(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const auto& e = g.at(i);
    switch (e.state) {
      case PartialIsometryOp::State::Zero:
        break;
      case PartialIsometryOp::State::Escaped:
        out.at(i) = e;
        break;
      case PartialIsometryOp::State::To:
        out.at(i) = f.at(e.to);
        break;
    }
  }
  return out;
}

PartialIsometryOp operator_of(const FiniteBasis& basis, const ReducedWord& g) {
  const PartialActionHandle& h = *basis.handle;
  PartialIsometryOp op(basis.size());
  for (int i = 0; i < basis.size(); ++i) {
    const Point& y = basis.points[static_cast<std::size_t>(i)];
    auto r = h.apply(g, y);
    if (r.in_domain == Tri::No) continue;  // genuine zero
    if (r.in_domain == Tri::Undecided) {
      op.at(i) = {PartialIsometryOp::State::Escaped, -1};
      continue;
    }
    int j = basis.index_of(*r.point);
    op.at(i) = j >= 0 ? PartialIsometryOp::Entry{PartialIsometryOp::State::To, j}
                      : PartialIsometryOp::Entry{PartialIsometryOp::State::Escaped, -1};
  }
  return op;
}

PartialIsometryOp adjoint_by_inversion(const FiniteBasis& basis, const ReducedWord& g,
                                       const PartialIsometryOp& op) {
  const PartialActionHandle& h = *basis.handle;
  PartialIsometryOp out(op.size());
  for (int i = 0; i < op.size(); ++i)
    if (op.at(i).state == PartialIsometryOp::State::To)
      out.at(op.at(i).to) = {PartialIsometryOp::State::To, i};
  // Sources inside D_g with no recorded preimage: the preimage escaped the
  // truncation, which is not a genuine zero.
  for (int x = 0; x < op.size(); ++x) {
    if (out.at(x).state != PartialIsometryOp::State::Zero) continue;
    Tri in = h.in_domain(g, basis.points[static_cast<std::size_t>(x)]);
    if (in != Tri::No) out.at(x) = {PartialIsometryOp::State::Escaped, -1};
  }
  return out;
}

void GuardedCheck::compare(const PartialIsometryOp& lhs, const PartialIsometryOp& rhs,
                           const std::vector<char>& core) {
  for (int i = 0; i < lhs.size(); ++i) {
    const bool in_core = core[static_cast<std::size_t>(i)] != 0;
    if (in_core) ++total;
    const auto& a = lhs.at(i);
    const auto& b = rhs.at(i);
    if (a.state == PartialIsometryOp::State::Escaped ||
        b.state == PartialIsometryOp::State::Escaped)
      continue;
    if (in_core) ++decisive;
    if (!(a == b)) mismatches.push_back(i);
  }
}

namespace {

std::string gname(const FiniteBasis& b, const ReducedWord& g) {
  return to_string(g, b.handle->presentation().alphabet().names);
}

/// Exact support of D_g on the basis (membership queries, no truncation).
std::set<int> domain_support(const FiniteBasis& basis, const ReducedWord& g) {
  std::set<int> s;
  for (int i = 0; i < basis.size(); ++i) {
    Tri in = basis.handle->in_domain(g, basis.points[static_cast<std::size_t>(i)]);
    if (in == Tri::Undecided)
      throw std::logic_error("domain membership undecided on basis point");
    if (in == Tri::Yes) s.insert(i);
  }
  return s;
}

void record(Report& rep, const std::string& identity, const FiniteBasis& basis,
            GuardedCheck& chk, double floor) {
  rep.coverage[identity] = chk.coverage();
  for (int i : chk.mismatches)
    rep.fail(identity + " fails on basis vector " +
             basis.points[static_cast<std::size_t>(i)].to_string());
  if (chk.coverage() < floor) {
    rep.notes.push_back(identity + " coverage " + std::to_string(chk.coverage()) +
                        " below floor");
    rep.undecided();
  }
}

}  // namespace

Report verify_definition_relations(const FiniteBasis& basis, int radius,
                                   double coverage_floor) {
  Report rep;
  rep.suite = "definition-relations";
  rep.params["radius"] = std::to_string(radius);
  rep.params["basis"] = std::to_string(basis.size());
  const int n = basis.size();
  const auto ball = reduced_ball(basis.handle->presentation().n_symbols(), radius);

  std::map<ReducedWord, PartialIsometryOp> ops;
  auto op = [&](const ReducedWord& g) -> const PartialIsometryOp& {
    auto it = ops.find(g);
    if (it == ops.end()) it = ops.emplace(g, operator_of(basis, g)).first;
    return it->second;
  };

  // s_e = 1 exactly.
  {
    GuardedCheck chk;
    chk.compare(op(ReducedWord{}), PartialIsometryOp::identity(n), basis.core);
    record(rep, "unit", basis, chk, 1.0);
  }

  GuardedCheck iso, adj, prod, oxd;
  for (const auto& g : ball) {
    // Partial isometry: s_g s_g* s_g = s_g.
    iso.compare(compose(op(g), compose(op(invert(g)), op(g))), op(g), basis.core);
    if (!op(g).is_partial_injection())
      rep.fail("s_" + gname(basis, g) + " is not a partial injection");
    // s_{g^{-1}} = s_g^* via map inversion.
    adj.compare(op(invert(g)), adjoint_by_inversion(basis, g, op(g)), basis.core);
    // (eq:oxd) diagonal identification: range projection vs D_g membership.
    oxd.compare(compose(op(g), op(invert(g))),
                PartialIsometryOp::projection(n, domain_support(basis, g)), basis.core);
  }
  for (const auto& h : ball)
    for (const auto& i : ball)
      prod.compare(compose(op(h), op(i)),
                   compose(op(h), compose(op(invert(h)), op(multiply(h, i)))), basis.core);

  record(rep, "partial-isometry", basis, iso, coverage_floor);
  record(rep, "adjoint", basis, adj, coverage_floor);
  record(rep, "product-relation", basis, prod, coverage_floor);
  record(rep, "diagonal-identification", basis, oxd, coverage_floor);

  // Commuting range projections as a subset-algebra identity.
  for (const auto& h : ball) {
    for (const auto& i : ball) {
      std::set<int> dh = domain_support(basis, h), di = domain_support(basis, i);
      std::set<int> hi, ih;
      std::set_intersection(dh.begin(), dh.end(), di.begin(), di.end(),
                            std::inserter(hi, hi.begin()));
      std::set_intersection(di.begin(), di.end(), dh.begin(), dh.end(),
                            std::inserter(ih, ih.begin()));
      if (hi != ih)
        rep.fail("range projections do not commute at " + gname(basis, h) + ", " +
                 gname(basis, i));
    }
  }
  rep.coverage["commuting-ranges"] = 1.0;
  return rep;
}

Report verify_appendix_axiom_sets(const FiniteBasis& basis, int radius,
                                  double coverage_floor) {
  Report rep;
  rep.suite = "appendix-axiom-sets";
  rep.params["radius"] = std::to_string(radius);
  const int n = basis.size();
  const auto ball = reduced_ball(basis.handle->presentation().n_symbols(), radius);

  std::map<ReducedWord, PartialIsometryOp> ops;
  auto u = [&](const ReducedWord& g) -> const PartialIsometryOp& {
    auto it = ops.find(g);
    if (it == ops.end()) it = ops.emplace(g, operator_of(basis, g)).first;
    return it->second;
  };
  auto ustar = [&](const ReducedWord& g) { return adjoint_by_inversion(basis, g, u(g)); };

  // Set 1: u(e)=1, u(g^{-1})=u(g)*, u(h)u(i)u(i^{-1}) = u(hi)u(i^{-1}).
  {
    GuardedCheck c0, c1, c2;
    c0.compare(u(ReducedWord{}), PartialIsometryOp::identity(n), basis.core);
    for (const auto& g : ball) c1.compare(u(invert(g)), ustar(g), basis.core);
    for (const auto& h : ball)
      for (const auto& i : ball)
        c2.compare(compose(u(h), compose(u(i), u(invert(i)))),
                   compose(u(multiply(h, i)), u(invert(i))), basis.core);
    record(rep, "set1-unit", basis, c0, 1.0);
    record(rep, "set1-adjoint", basis, c1, coverage_floor);
    record(rep, "set1-composition", basis, c2, coverage_floor);
  }

  // Set 2: partial isometries with commuting ranges, u(e)u(e)*=1,
  // u(g)*u(g)=u(g^{-1})u(g^{-1})*, u(h)u(i)u(i)*u(h)* = u(h)u(i)u(hi)*.
  {
    GuardedCheck c0, c1, c2;
    c0.compare(compose(u(ReducedWord{}), ustar(ReducedWord{})),
               PartialIsometryOp::identity(n), basis.core);
    for (const auto& g : ball)
      c1.compare(compose(ustar(g), u(g)), compose(u(invert(g)), ustar(invert(g))), basis.core);
    for (const auto& h : ball)
      for (const auto& i : ball)
        c2.compare(
            compose(u(h), compose(u(i), compose(ustar(i), ustar(h)))),
            compose(u(h), compose(u(i), ustar(multiply(h, i)))), basis.core);
    record(rep, "set2-unit", basis, c0, 1.0);
    record(rep, "set2-source", basis, c1, coverage_floor);
    record(rep, "set2-composition", basis, c2, coverage_floor);
  }

  // Set 3: u(e)=1, u(g)* = u(g^{-1}), u(h)u(i) = u(h)u(h)*u(hi).
  {
    GuardedCheck c0, c1, c2;
    c0.compare(u(ReducedWord{}), PartialIsometryOp::identity(n), basis.core);
    for (const auto& g : ball) c1.compare(ustar(g), u(invert(g)), basis.core);
    for (const auto& h : ball)
      for (const auto& i : ball)
        c2.compare(compose(u(h), u(i)),
                   compose(u(h), compose(ustar(h), u(multiply(h, i)))), basis.core);
    record(rep, "set3-unit", basis, c0, 1.0);
    record(rep, "set3-adjoint", basis, c1, coverage_floor);
    record(rep, "set3-composition", basis, c2, coverage_floor);
  }
  return rep;
}

Report verify_ck_relations(const FiniteBasis& basis, const BooleanEngine* engine,
                           int max_word_len, double coverage_floor) {
  Report rep;
  rep.suite = "ck-relations";
  const ShiftPresentation& pres = basis.handle->presentation();
  const auto* m = pres.matrix();
  if (!m) {
    rep.fail("ck relations need a MatrixSFT presentation");
    return rep;
  }
  const int na = pres.n_symbols();
  const int n = basis.size();
  rep.params["alphabet"] = std::to_string(na);
  rep.params["basis"] = std::to_string(n);

  std::map<ReducedWord, PartialIsometryOp> ops;
  auto op = [&](const ReducedWord& g) -> const PartialIsometryOp& {
    auto it = ops.find(g);
    if (it == ops.end()) it = ops.emplace(g, operator_of(basis, g)).first;
    return it->second;
  };
  auto letter_op = [&](Symbol a) -> const PartialIsometryOp& {
    return op(ReducedWord::generator(a));
  };
  auto letter_inv_op = [&](Symbol a) -> const PartialIsometryOp& {
    return op(ReducedWord::inverse_generator(a));
  };

  // Source projections S_a^* S_a are diagonals supported on D_{a^{-1}}.
  std::vector<std::set<int>> src(static_cast<std::size_t>(na)),
      rng(static_cast<std::size_t>(na));
  for (Symbol a = 0; a < na; ++a) {
    src[static_cast<std::size_t>(a)] =
        domain_support(basis, ReducedWord::inverse_generator(a));
    rng[static_cast<std::size_t>(a)] = domain_support(basis, ReducedWord::generator(a));
  }

  auto axyj = [&](unsigned X, unsigned Y, int j) {
    long v = 1;
    for (Symbol x = 0; x < na; ++x)
      if ((X >> x) & 1u) v *= m->rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)];
    for (Symbol y = 0; y < na; ++y)
      if ((Y >> y) & 1u)
        v *= 1 - m->rows[static_cast<std::size_t>(y)][static_cast<std::size_t>(j)];
    return v;
  };

  // (eq:cka) over every subset pair, as exact support sets and, when an
  // engine is supplied, as an exact symbolic-set identity.
  long cka_pairs = 0;
  for (unsigned X = 0; X < (1u << na); ++X) {
    for (unsigned Y = 0; Y < (1u << na); ++Y) {
      std::set<int> lhs;
      for (int i = 0; i < n; ++i) lhs.insert(i);
      for (Symbol x = 0; x < na; ++x)
        if ((X >> x) & 1u) {
          std::set<int> t;
          std::set_intersection(lhs.begin(), lhs.end(),
                                src[static_cast<std::size_t>(x)].begin(),
                                src[static_cast<std::size_t>(x)].end(),
                                std::inserter(t, t.begin()));
          lhs = std::move(t);
        }
      for (Symbol y = 0; y < na; ++y)
        if ((Y >> y) & 1u) {
          std::set<int> t;
          for (int i : lhs)
            if (!src[static_cast<std::size_t>(y)].count(i)) t.insert(i);
          lhs = std::move(t);
        }
      std::set<int> rhs;
      for (Symbol j = 0; j < na; ++j)
        if (axyj(X, Y, j) == 1)
          rhs.insert(rng[static_cast<std::size_t>(j)].begin(),
                     rng[static_cast<std::size_t>(j)].end());
      if (lhs != rhs)
        rep.fail("(cka) supports differ at X=" + std::to_string(X) +
                 " Y=" + std::to_string(Y));

      if (engine) {
        SymbolicSet sym = engine->full(Resolution{0, 1});
        for (Symbol x = 0; x < na; ++x)
          if ((X >> x) & 1u)
            sym = engine->meet(sym, engine->domain_set(ReducedWord::inverse_generator(x)));
        for (Symbol y = 0; y < na; ++y)
          if ((Y >> y) & 1u)
            sym = engine->meet(
                sym, engine->complement(engine->domain_set(ReducedWord::inverse_generator(y))));
        SymbolicSet symr = engine->empty(Resolution{1, 0});
        for (Symbol j = 0; j < na; ++j)
          if (axyj(X, Y, j) == 1)
            symr = engine->join(symr, engine->domain_set(ReducedWord::generator(j)));
        if (!engine->equal(sym, symr))
          rep.fail("(cka) symbolic identity differs at X=" + std::to_string(X) +
                   " Y=" + std::to_string(Y));
      }
      ++cka_pairs;
    }
  }
  rep.params["cka_pairs"] = std::to_string(cka_pairs);
  rep.coverage["cka-supports"] = 1.0;

  // (ckb) commuting source projections, as operators.
  GuardedCheck ckb;
  for (Symbol i = 0; i < na; ++i) {
    for (Symbol j = 0; j < na; ++j) {
      const auto pi = PartialIsometryOp::projection(n, src[static_cast<std::size_t>(i)]);
      const auto pj = PartialIsometryOp::projection(n, src[static_cast<std::size_t>(j)]);
      ckb.compare(compose(pi, pj), compose(pj, pi), basis.core);
    }
  }
  record(rep, "ckb", basis, ckb, coverage_floor);

  // (ckc) and (ckd) on guarded vectors.
  GuardedCheck ckc, ckd;
  for (Symbol i = 0; i < na; ++i) {
    for (Symbol j = 0; j < na; ++j) {
      if (i != j)
        ckc.compare(compose(letter_inv_op(i), letter_op(j)), PartialIsometryOp::zero(n), basis.core);
      const PartialIsometryOp rhsop =
          m->rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 1
              ? letter_op(j)
              : PartialIsometryOp::zero(n);
      ckd.compare(compose(letter_inv_op(i), compose(letter_op(i), letter_op(j))), rhsop, basis.core);
    }
  }
  record(rep, "ckc", basis, ckc, coverage_floor);
  record(rep, "ckd", basis, ckd, coverage_floor);

  // Word properties (ckpa)-(ckpe).
  std::map<Word, PartialIsometryOp> word_ops;
  auto word_op = [&](const Word& w) -> const PartialIsometryOp& {
    auto it = word_ops.find(w);
    if (it != word_ops.end()) return it->second;
    PartialIsometryOp acc = PartialIsometryOp::identity(n);
    for (auto rit = w.rbegin(); rit != w.rend(); ++rit) acc = compose(letter_op(*rit), acc);
    return word_ops.emplace(w, std::move(acc)).first->second;
  };
  std::vector<Word> words;
  for (int len = 0; len <= max_word_len; ++len) {
    Word w(static_cast<std::size_t>(len), 0);
    auto walk = [&](auto&& self, std::size_t pos) -> void {
      if (pos == w.size()) {
        words.push_back(w);
        return;
      }
      for (Symbol s = 0; s < na; ++s) {
        w[pos] = s;
        self(self, pos + 1);
      }
    };
    walk(walk, 0);
  }

  GuardedCheck ckpa, ckpb, ckpc, ckpd, ckpe;
  const auto ball = reduced_ball(na, 2);
  for (const auto& h : ball) {
    for (const auto& i : ball) {
      const auto sh = compose(op(invert(h)), op(h));
      const auto si = compose(op(invert(i)), op(i));
      ckpa.compare(compose(sh, si), compose(si, sh), basis.core);
    }
  }
  for (const Word& muw : words) {
    for (const Word& nuw : words) {
      Word cat = muw;
      cat.insert(cat.end(), nuw.begin(), nuw.end());
      if (cat.size() <= static_cast<std::size_t>(max_word_len))
        ckpb.compare(compose(word_op(muw), word_op(nuw)), word_op(cat), basis.core);
      if (!muw.empty() && muw.size() == nuw.size() && muw != nuw)
        ckpc.compare(compose(op(invert(ReducedWord::from_positive(muw))), word_op(nuw)),
                     PartialIsometryOp::zero(n), basis.core);
    }
    if (!muw.empty()) {
      long a = 1;
      for (std::size_t t = 0; t + 1 < muw.size(); ++t)
        a *= m->rows[static_cast<std::size_t>(muw[t])][static_cast<std::size_t>(muw[t + 1])];
      const auto smu = word_op(muw);
      const auto smu_star = adjoint_by_inversion(basis, ReducedWord::from_positive(muw),
                                                 op(ReducedWord::from_positive(muw)));
      const auto last = ReducedWord::generator(muw.back());
      const auto rhs = a == 1 ? compose(op(invert(last)), op(last))
                              : PartialIsometryOp::zero(n);
      ckpd.compare(compose(smu_star, smu), rhs, basis.core);
    }
  }
  for (const auto& g : reduced_ball(na, std::min(3, max_word_len))) {
    auto nf = one_sided_normal_form(g);
    if (!nf) {
      ckpe.compare(operator_of(basis, g), PartialIsometryOp::zero(n), basis.core);
    } else {
      const auto& [muw, nuw] = *nf;
      ckpe.compare(operator_of(basis, g),
                   compose(word_op(muw),
                           operator_of(basis, invert(ReducedWord::from_positive(nuw)))), basis.core);
    }
  }
  record(rep, "ckpa", basis, ckpa, coverage_floor);
  record(rep, "ckpb", basis, ckpb, coverage_floor);
  record(rep, "ckpc", basis, ckpc, coverage_floor);
  record(rep, "ckpd", basis, ckpd, coverage_floor);
  record(rep, "ckpe", basis, ckpe, coverage_floor);
  return rep;
}

Report verify_crossed_product(const FiniteBasis& basis, int radius) {
  Report rep;
  rep.suite = "crossed-product";
  rep.params["radius"] = std::to_string(radius);
  rep.params["basis"] = std::to_string(basis.size());
  const PartialActionHandle& h = *basis.handle;
  if (h.side() != Side::TwoSided) {
    rep.fail("crossed-product suite needs a two-sided handle");
    return rep;
  }
  const int n = basis.size();

  // U = sum_a S_a sends e_z to e_{tau^{-1} z}; on periodic points this is a
  // permutation of the basis.
  PartialIsometryOp U(n);
  for (int i = 0; i < n; ++i) {
    Point z = basis.points[static_cast<std::size_t>(i)].shifted_back();
    int j = basis.index_of(z);
    if (j < 0) throw std::invalid_argument("basis is not closed under tau^{-1}");
    U.at(i) = {PartialIsometryOp::State::To, j};
  }
  if (!U.is_partial_injection() || U.range_support().size() != static_cast<std::size_t>(n))
    rep.fail("U is not a permutation of the basis");

  auto upow = [&](int k) {
    PartialIsometryOp acc = PartialIsometryOp::identity(n);
    PartialIsometryOp Ui = U;
    if (k < 0) {
      Ui = PartialIsometryOp(n);
      for (int i = 0; i < n; ++i) Ui.at(U.at(i).to) = {PartialIsometryOp::State::To, i};
      k = -k;
    }
    for (int t = 0; t < k; ++t) acc = compose(Ui, acc);
    return acc;
  };

  const auto ball = reduced_ball(h.presentation().n_symbols(), radius);
  GuardedCheck factor, cov, addit;
  for (const auto& g : ball) {
    // S_g = 1_{D_g} U^{[g]} exactly.
    const auto lhs = operator_of(basis, g);
    const auto rhs = compose(
        PartialIsometryOp::projection(n, domain_support(basis, g)), upow(degree(g)));
    factor.compare(lhs, rhs, basis.core);

    // Covariance: U p_{D_g} U^* = p_{tau^{-1}(D_g)}.
    std::set<int> pre;
    for (int i = 0; i < n; ++i) {
      Tri in = h.in_domain(g, basis.points[static_cast<std::size_t>(i)].shifted());
      if (in == Tri::Yes) pre.insert(i);
    }
    cov.compare(compose(U, compose(PartialIsometryOp::projection(n, domain_support(basis, g)),
                                   upow(-1))),
                PartialIsometryOp::projection(n, pre), basis.core);
  }
  for (const auto& g1 : ball)
    for (const auto& g2 : ball)
      addit.compare(compose(upow(degree(g1)), upow(degree(g2))),
                    upow(degree(multiply(g1, g2))), basis.core);

  record(rep, "factorization", basis, factor, 1.0);
  record(rep, "covariance", basis, cov, 1.0);
  record(rep, "degree-additivity", basis, addit, 1.0);
  return rep;
}

Report verify_lambda_phi(const FiniteBasis& basis, const BooleanEngine& engine,
                         const std::vector<SymbolicSet>& samples,
                         double coverage_floor) {
  Report rep;
  rep.suite = "lambda-phi";
  rep.params["samples"] = std::to_string(samples.size());
  const int n = basis.size();
  const ShiftPresentation& pres = basis.handle->presentation();

  auto diag_of = [&](const SymbolicSet& A) {
    std::set<int> s;
    for (int i = 0; i < n; ++i) {
      Tri in = engine.contains(A, basis.points[static_cast<std::size_t>(i)]);
      if (in == Tri::Undecided)
        throw std::logic_error("lambda-phi: undecided membership on basis point");
      if (in == Tri::Yes) s.insert(i);
    }
    return PartialIsometryOp::projection(n, s);
  };

  GuardedCheck lam, phi;
  for (const SymbolicSet& A : samples) {
    const auto pA = diag_of(A);
    for (Symbol a = 0; a < pres.n_symbols(); ++a) {
      const auto Sa = operator_of(basis, ReducedWord::generator(a));
      const auto SaStar = operator_of(basis, ReducedWord::inverse_generator(a));
      // lambda_a: p_{theta_{a^{-1}}(A)} = S_a^* p_A S_a.
      lam.compare(compose(SaStar, compose(pA, Sa)),
                  diag_of(engine.act(ReducedWord::inverse_generator(a), A)), basis.core);
      // phi_a: p_{theta_a(A)} = S_a p_A S_a^*.
      phi.compare(compose(Sa, compose(pA, SaStar)),
                  diag_of(engine.act(ReducedWord::generator(a), A)), basis.core);
    }
  }
  record(rep, "lambda", basis, lam, coverage_floor);
  record(rep, "phi", basis, phi, coverage_floor);
  return rep;
}

}  // namespace parshift

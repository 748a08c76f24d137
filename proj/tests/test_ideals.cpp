#include <doctest.h>

#include <random>

#include "parshift/ideals.hpp"

using namespace parshift;

namespace {

struct Fixture {
  ShiftPresentation pres;
  PartialActionHandle handle;
  BooleanEngine engine;
  explicit Fixture(ShiftPresentation p) : pres(std::move(p)), handle(&pres), engine(&handle) {}
};

Fixture golden_mean() {
  return Fixture(ShiftPresentation(Alphabet::letters("ab"), Side::OneSided,
                                   MatrixSftKind{{{1, 1}, {1, 0}}}));
}

Fixture upper_triangular() {
  return Fixture(ShiftPresentation(Alphabet::letters("ab"), Side::OneSided,
                                   MatrixSftKind{{{1, 1}, {0, 1}}}));
}

Fixture full2() {
  return Fixture(ShiftPresentation(Alphabet::letters("ab"), Side::OneSided, FullShiftKind{}));
}

Fixture fibonacci(Side side = Side::OneSided) {
  return Fixture(ShiftPresentation(Alphabet::letters("ab"), side,
                                   SubstitutionKind{{{0, 1}, {0}}, 0}));
}

}  // namespace

TEST_CASE("admissible core") {
  auto f = golden_mean();
  // The full space is its own core.
  SymbolicSet full = f.engine.full({2, 2});
  CHECK(f.engine.equal(admissible_core(f.engine, {2, 2}, full), full));
  // A single non-isolated point contains no atom: core is empty at every
  // resolution (every atom of an irreducible SFT is infinite).
  auto singleton_oracle = [](const Atom&) { return false; };
  CHECK(f.engine.is_empty(admissible_core(f.engine, {2, 2}, singleton_oracle)));
  CHECK(f.engine.is_empty(admissible_core(f.engine, {3, 3}, singleton_oracle)));
  // A symbolic set is a fixed point of the core.
  SymbolicSet da = f.engine.domain_set(ReducedWord::generator(0));
  CHECK(f.engine.equal(admissible_core(f.engine, {2, 2}, da),
                       f.engine.refine(da, common_refinement(da.r, {2, 2}))));
}

TEST_CASE("invariant lattice: upper triangular has the three-chain") {
  auto f = upper_triangular();
  InvariantLattice lat = invariant_admissible_sets(f.engine, {3, 3});
  CHECK(lat.sets.size() == 3);
  CHECK(lat.report.verdict == Verdict::Pass);
  // The middle set is the b-visible part: every atom except the pure-a one.
  REQUIRE(lat.sets.size() == 3);
  const SymbolicSet& mid = lat.sets[1];
  const int n = static_cast<int>(f.engine.table({3, 3}).atoms.size());
  CHECK(static_cast<int>(mid.atoms.size()) == n - 1);
  int pure_a = f.engine.table({3, 3}).find({0, 0, 0}, {{0, 0, 0}});
  REQUIRE(pure_a >= 0);
  CHECK_FALSE(mid.atoms.count(pure_a));
  // Hasse chain 0 < 1 < 2.
  CHECK(lat.inclusions.size() == 2);
}

TEST_CASE("invariant lattice: irreducible shifts are simple at the core") {
  auto fs = full2();
  InvariantLattice lat = invariant_admissible_sets(fs.engine, {2, 2});
  CHECK(lat.sets.size() == 2);
  CHECK(lat.report.verdict == Verdict::Pass);

  auto gm = golden_mean();
  InvariantLattice lg = invariant_admissible_sets(gm.engine, {2, 2});
  CHECK(lg.sets.size() == 2);
}

TEST_CASE("left special scan") {
  auto fib = fibonacci();
  SpecialElementLedger led = left_special_scan(fib.handle, 12);
  for (long c : led.counts) CHECK(c == 1);  // Sturmian
  CHECK(led.counts_stabilized);
  CHECK(led.candidates.size() == 1);
  CHECK(led.n_tail_classes == 1);
  CHECK_FALSE(led.periodic[0]);
  // The candidate is a prefix of the left special point, which for the
  // fibonacci substitution is the fixed point itself.
  CHECK(led.candidates[0] == fib.pres.fixed_point_prefix(12));

  auto gm = golden_mean();
  SpecialElementLedger lg = left_special_scan(gm.handle, 10);
  CHECK_FALSE(lg.counts_stabilized);
  for (std::size_t i = 5; i + 1 < lg.counts.size(); ++i)
    CHECK(lg.counts[i] < lg.counts[i + 1]);  // Fibonacci growth

  auto fs = full2();
  SpecialElementLedger lf = left_special_scan(fs.handle, 6);
  // Every factor is left special in the full shift.
  for (std::size_t i = 0; i < lf.counts.size(); ++i)
    CHECK(lf.counts[i] == (1l << (i + 1)));
}

TEST_CASE("property star") {
  auto gm = golden_mean();
  Report r = check_property_star(gm.handle, 3);
  CHECK(r.verdict == Verdict::Fail);
  bool mentions_b = false;
  for (const auto& c : r.counterexamples) mentions_b |= (c.find("{b}") != std::string::npos);
  CHECK(mentions_b);

  auto fib = fibonacci();
  Report rf = check_property_star(fib.handle, 6, 30);
  CHECK(rf.verdict == Verdict::Pass);

  // Degenerate finite system: a^inf only; P_j = {a^j} is a singleton.
  auto fp = Fixture(ShiftPresentation(Alphabet::letters("ab"), Side::OneSided,
                                      FinitePointsKind{{EvPeriodicSpec{{}, {0}}}}));
  CHECK(check_property_star(fp.handle, 3).verdict == Verdict::Pass);
}

TEST_CASE("property starstar") {
  auto fib = fibonacci();
  Report rf = check_property_starstar(fib.handle, 12);
  CHECK(rf.verdict == Verdict::Pass);
  CHECK(rf.params.at("n_tail_classes") == "1");

  auto gm = golden_mean();
  CHECK(check_property_starstar(gm.handle, 12).verdict == Verdict::Fail);
}

TEST_CASE("psi on fibonacci") {
  auto one = fibonacci(Side::OneSided);
  auto two = fibonacci(Side::TwoSided);
  Report star = check_property_star(one.handle, 4, 30);
  REQUIRE(star.verdict == Verdict::Pass);
  PsiMap psi(&one.engine, &two.engine, star);

  std::mt19937_64 rng(0);
  for (Resolution r : {Resolution{1, 1}, Resolution{2, 2}, Resolution{3, 3}}) {
    CHECK(psi.check_kernel_rule(r).verdict == Verdict::Pass);
    CHECK(psi.check_homomorphism(r, rng, 25).verdict == Verdict::Pass);
    CHECK(psi.check_equivariance(r, rng, 10).verdict == Verdict::Pass);
  }

  // psi of the full set is full; images of distinct singleton-P atoms are
  // disjoint.
  Resolution r{1, 1};
  CHECK(two.engine.is_full(psi.apply(one.engine.full(r))));
  const AtomTable& t = one.engine.table(r);
  std::vector<SymbolicSet> images;
  for (int i = 0; i < static_cast<int>(t.atoms.size()); ++i)
    if (t.atoms[static_cast<std::size_t>(i)].preds.size() == 1)
      images.push_back(psi.apply_atom(r, i));
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      CHECK(two.engine.is_empty(two.engine.meet(images[i], images[j])));
}

TEST_CASE("psi requires property star") {
  auto one = golden_mean();
  auto gm2 = Fixture(ShiftPresentation(Alphabet::letters("ab"), Side::TwoSided,
                                       MatrixSftKind{{{1, 1}, {1, 0}}}));
  Report star = check_property_star(one.handle, 3);
  REQUIRE(star.verdict == Verdict::Fail);
  CHECK_THROWS_AS(PsiMap(&one.engine, &gm2.engine, star), std::invalid_argument);
}

TEST_CASE("kappa three-case formula") {
  auto one = fibonacci(Side::OneSided);
  auto two = fibonacci(Side::TwoSided);
  Report star = check_property_star(one.handle, 4, 30);
  PsiMap psi(&one.engine, &two.engine, star);

  // mu = eps: the cylinder on nu.
  SymbolicSet k1 = psi.kappa_on_cylinder({}, {0, 1});
  CHECK(k1.atoms.size() == 1);
  CHECK(k1.r == Resolution{2, 0});
  // nu = eps: the window [-|mu|, 0) cylinder.
  SymbolicSet k2 = psi.kappa_on_cylinder({0, 1}, {});
  CHECK(k2.r == Resolution{0, 2});
  CHECK(k2.atoms.size() == 1);
  // Incomparable words: zero, and psi agrees.
  SymbolicSet k3 = psi.kappa_on_cylinder({1}, {0, 0});  // b vs aa: b not a suffix of aa
  CHECK(two.engine.is_empty(k3));
  CHECK(two.engine.is_empty(psi.apply(one.engine.cylinder({1}, {0, 0}))));

  std::mt19937_64 rng(1);
  Report rep = psi.check_kappa(rng, 50, 3);
  CHECK(rep.verdict == Verdict::Pass);
}

TEST_CASE("matrix units on the fibonacci tail class") {
  auto fib = fibonacci();
  std::vector<Point> sample;
  for (long off = 0; off < 3; ++off)
    sample.push_back(Point::substitution_orbit(&fib.pres, off));
  MatrixUnitSystem sys = matrix_units(fib.engine, fib.handle, sample, 12, 6);
  CHECK(sys.report.verdict == Verdict::Pass);
  CHECK(sys.report.counterexamples.empty());
  CHECK(sys.units.size() == 9);
  CHECK(sys.singletons.size() == 3);
  // iso witness found within the bound k <= 12.
  CHECK(std::stoi(sys.report.params.at("iso_k")) <= 12);
  CHECK(std::stoi(sys.report.params.at("iso_k")) >= 1);
}

TEST_CASE("non-singleton atoms sit on the left-special tail class") {
  // At every resolution up to (3,3) the fibonacci atoms with richer
  // predecessor data are finitely many and every witness point is tail
  // equivalent to the left special element (= the fixed point).
  auto fib = fibonacci();
  Point special = Point::substitution_orbit(&fib.pres, 0);
  for (Resolution r : {Resolution{1, 1}, Resolution{2, 2}, Resolution{3, 3}}) {
    const AtomTable& t = fib.engine.table(r);
    int rich = 0;
    for (const Atom& a : t.atoms) {
      if (a.preds.size() < 2) continue;
      ++rich;
      for (const Point& x : a.point_witnesses) {
        bool spliced = false;
        for (long n = 0; n <= 12 && !spliced; ++n)
          for (long m = 0; m <= 12 && !spliced; ++m)
            spliced = (x.window(n, n + 24) == special.window(m, m + 24));
        CHECK(spliced);
      }
    }
    CHECK(rich >= 1);
    CHECK(rich <= r.k + r.l + 2);
  }
}

TEST_CASE("quotient report") {
  std::mt19937_64 rng(2);
  // Y = empty and Y = full are always invariant; the quotient checks pass.
  auto gm = golden_mean();
  CHECK(quotient_report(gm.engine, gm.engine.empty({2, 2}), rng, 10).verdict ==
        Verdict::Pass);
  CHECK(quotient_report(gm.engine, gm.engine.full({2, 2}), rng, 10).verdict ==
        Verdict::Pass);

  // Upper triangular: the b-visible invariant set.
  auto ut = upper_triangular();
  InvariantLattice lat = invariant_admissible_sets(ut.engine, {3, 3}, false);
  REQUIRE(lat.sets.size() == 3);
  ShiftPresentation rest(Alphabet::letters("ab"), Side::OneSided,
                         FinitePointsKind{{EvPeriodicSpec{{}, {0}}}});
  PartialActionHandle hrest(&rest);
  Report rep = quotient_report(ut.engine, lat.sets[1], rng, 10, &hrest);
  CHECK(rep.verdict == Verdict::Pass);

  // A non-invariant Y is rejected.
  SymbolicSet bad = ut.engine.single({3, 3}, *lat.sets[1].atoms.begin());
  Report repbad = quotient_report(ut.engine, bad, rng, 5);
  CHECK(repbad.verdict == Verdict::Fail);
}

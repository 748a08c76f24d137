#include <doctest.h>

#include "parshift/ideals.hpp"
#include "parshift/representation.hpp"

using namespace parshift;

namespace {

struct Fixture {
  ShiftPresentation pres;
  PartialActionHandle handle;
  BooleanEngine engine;
  explicit Fixture(ShiftPresentation p) : pres(std::move(p)), handle(&pres), engine(&handle) {}
};

Fixture golden_mean(Side side = Side::OneSided) {
  return Fixture(ShiftPresentation(Alphabet::letters("ab"), side,
                                   MatrixSftKind{{{1, 1}, {1, 0}}}));
}

Fixture full2(Side side = Side::OneSided) {
  return Fixture(ShiftPresentation(Alphabet::letters("ab"), side, FullShiftKind{}));
}

}  // namespace

TEST_CASE("basis construction") {
  auto fs = full2();
  FiniteBasis b = build_basis(fs.handle, 0, 2);
  CHECK(b.size() == 4);  // a*, b*, (ab)*, (ba)*

  auto gm = golden_mean();
  FiniteBasis bg = build_basis(gm.handle, 0, 2);
  CHECK(bg.size() == 3);  // b* is inadmissible

  FiniteBasis bq = build_basis(gm.handle, 1, 2);
  CHECK(bq.size() > bg.size());  // one-letter-prefixed variants survive

  auto fib = Fixture(ShiftPresentation(Alphabet::letters("ab"), Side::OneSided,
                                       SubstitutionKind{{{0, 1}, {0}}, 0}));
  CHECK_THROWS_AS(build_basis(fib.handle, 0, 2), std::invalid_argument);
}

TEST_CASE("operators are partial injections") {
  auto fs = full2();
  FiniteBasis b = build_basis(fs.handle, 1, 2);
  // S_e = 1.
  PartialIsometryOp e = operator_of(b, ReducedWord{});
  for (int i = 0; i < b.size(); ++i) {
    CHECK(e.at(i).state == PartialIsometryOp::State::To);
    CHECK(e.at(i).to == i);
  }
  // S_0 maps x to 0x when 0x stays in the basis.
  PartialIsometryOp s0 = operator_of(b, ReducedWord::generator(0));
  CHECK(s0.is_partial_injection());
  int azero = b.index_of(Point::ev_periodic(&fs.pres, {}, {0}));
  REQUIRE(azero >= 0);
  CHECK(s0.at(azero).state == PartialIsometryOp::State::To);
  CHECK(s0.at(azero).to == azero);  // 0 . 0^inf = 0^inf

  // Adjoint by inversion equals the operator of the inverse on decisives.
  PartialIsometryOp s0inv = operator_of(b, ReducedWord::inverse_generator(0));
  PartialIsometryOp s0adj = adjoint_by_inversion(b, ReducedWord::generator(0), s0);
  GuardedCheck chk;
  chk.compare(s0inv, s0adj, b.core);
  CHECK(chk.mismatches.empty());
  CHECK(chk.decisive > 0);
}

TEST_CASE("definition relation suite") {
  auto gm = golden_mean();
  FiniteBasis b = build_basis(gm.handle, 2, 3, 8);
  Report rep = verify_definition_relations(b, 2, 0.9);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(rep.counterexamples.empty());
  for (const auto& [name, cov] : rep.coverage) {
    INFO(name);
    CHECK(cov >= 0.9);
  }

  auto fs = full2();
  FiniteBasis bf = build_basis(fs.handle, 2, 3, 8);
  Report repf = verify_definition_relations(bf, 2, 0.9);
  CHECK(repf.verdict == Verdict::Pass);
}

TEST_CASE("radius zero is only the unit") {
  auto gm = golden_mean();
  FiniteBasis b = build_basis(gm.handle, 1, 2, 0);
  Report rep = verify_definition_relations(b, 0, 0.9);
  CHECK(rep.verdict == Verdict::Pass);
}

TEST_CASE("appendix axiom sets") {
  auto fs = full2();
  FiniteBasis b = build_basis(fs.handle, 2, 3, 8);
  Report rep = verify_appendix_axiom_sets(b, 2, 0.9);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(rep.counterexamples.empty());

  auto gm = golden_mean();
  FiniteBasis bg = build_basis(gm.handle, 2, 3, 8);
  Report repg = verify_appendix_axiom_sets(bg, 2, 0.9);
  CHECK(repg.verdict == Verdict::Pass);
}

TEST_CASE("ck relations") {
  auto gm = golden_mean();
  FiniteBasis b = build_basis(gm.handle, 2, 3, 6);
  Report rep = verify_ck_relations(b, &gm.engine, 3, 0.9);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(rep.counterexamples.empty());

  // The upper-triangular SFT.
  auto ut = Fixture(ShiftPresentation(Alphabet::letters("ab"), Side::OneSided,
                                      MatrixSftKind{{{1, 1}, {0, 1}}}));
  FiniteBasis bu = build_basis(ut.handle, 2, 3, 6);
  Report repu = verify_ck_relations(bu, &ut.engine, 3, 0.9);
  CHECK(repu.verdict == Verdict::Pass);
}

TEST_CASE("crossed product suite") {
  auto fs = full2(Side::TwoSided);
  FiniteBasis b = build_basis(fs.handle, 0, 4);
  CHECK(b.size() > 4);
  Report rep = verify_crossed_product(b, 3);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(rep.coverage.at("factorization") == 1.0);

  auto gm = golden_mean(Side::TwoSided);
  FiniteBasis bg = build_basis(gm.handle, 0, 4);
  Report repg = verify_crossed_product(bg, 3);
  CHECK(repg.verdict == Verdict::Pass);
}

TEST_CASE("lambda and phi conjugation") {
  auto gm = golden_mean();
  FiniteBasis b = build_basis(gm.handle, 2, 3, 2);
  std::vector<SymbolicSet> samples;
  samples.push_back(gm.engine.full({1, 1}));
  for (Symbol a = 0; a < 2; ++a) {
    samples.push_back(gm.engine.domain_set(ReducedWord::generator(a)));
    samples.push_back(gm.engine.domain_set(ReducedWord::inverse_generator(a)));
  }
  const AtomTable& t = gm.engine.table({1, 1});
  for (int i = 0; i < static_cast<int>(t.atoms.size()); ++i)
    samples.push_back(gm.engine.single({1, 1}, i));
  Report rep = verify_lambda_phi(b, gm.engine, samples, 0.9);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(rep.counterexamples.empty());
}

TEST_CASE("empty domains kill the operator") {
  // FinitePointSet {a^inf} over {a,b}: D_b is empty, so S_b = 0 and the
  // diagonal of D_b vanishes (an empty domain forces a zero operator).
  auto fp = Fixture(ShiftPresentation(Alphabet::letters("ab"), Side::OneSided,
                                      FinitePointsKind{{EvPeriodicSpec{{}, {0}}}}));
  FiniteBasis b = build_basis(fp.handle, 1, 2, 2);
  CHECK(b.size() == 1);
  PartialIsometryOp sb = operator_of(b, ReducedWord::generator(1));
  for (int i = 0; i < b.size(); ++i)
    CHECK(sb.at(i).state == PartialIsometryOp::State::Zero);
  CHECK(fp.engine.is_empty(fp.engine.domain_set(ReducedWord::generator(1))));

  // D_h /\ D_i empty implies S_h* S_i = 0: here D_a /\ D_b would need a
  // second point.
  PartialIsometryOp sa = operator_of(b, ReducedWord::generator(0));
  PartialIsometryOp prod = compose(adjoint_by_inversion(b, ReducedWord::generator(1), sb), sa);
  for (int i = 0; i < b.size(); ++i)
    CHECK(prod.at(i).state != PartialIsometryOp::State::To);

  // Both lambda/phi sides vanish on the dead letter.
  std::vector<SymbolicSet> samples{fp.engine.full({1, 1})};
  Report rep = verify_lambda_phi(b, fp.engine, samples, 0.5);
  CHECK(rep.verdict == Verdict::Pass);
}

#include <doctest.h>

#include "parshift/partial_action.hpp"

using namespace parshift;

namespace {

ShiftPresentation golden_mean(Side side = Side::OneSided) {
  return ShiftPresentation(Alphabet::letters("ab"), side,
                           MatrixSftKind{{{1, 1}, {1, 0}}});
}

const Letter A{0, +1}, Ai{0, -1}, B{1, +1}, Bi{1, -1};

ReducedWord w(std::initializer_list<Letter> ls) {
  return ReducedWord::reduce(std::vector<Letter>(ls));
}

}  // namespace

TEST_CASE("one-sided domains via normal form") {
  auto gm = golden_mean();
  PartialActionHandle h(&gm);

  // D_e = X.
  Point p = Point::ev_periodic(&gm, {}, {0});
  CHECK(h.in_domain(ReducedWord{}, p) == Tri::Yes);

  // g = b a^{-1}: D_g = { x : x_0 = b, a x_[1,inf) in X }.
  ReducedWord g = w({B, Ai});
  Point pb = Point::ev_periodic(&gm, {1}, {0});  // b a a a ...
  CHECK(h.in_domain(g, pb) == Tri::Yes);
  CHECK(h.in_domain(g, p) == Tri::No);  // starts with a

  // No normal form: D empty.
  CHECK(h.in_domain(w({Ai, B}), p) == Tri::No);
}

TEST_CASE("apply matches the generator maps") {
  auto gm = golden_mean();
  PartialActionHandle h(&gm);
  Point p = Point::ev_periodic(&gm, {}, {0});  // a^inf

  // theta_a prepends a.
  auto r = h.apply(ReducedWord::generator(0), p);
  REQUIRE(r.point);
  CHECK(Point::equal(*r.point, p) == PointEq::Equal);  // a . a^inf = a^inf

  auto rb = h.apply(ReducedWord::generator(1), p);
  REQUIRE(rb.point);
  CHECK(rb.point->window(0, 3) == Word{1, 0, 0});

  // theta_{a^{-1}} is the shift on D_a.
  auto rs = h.apply(ReducedWord::inverse_generator(1), *rb.point);
  REQUIRE(rs.point);
  CHECK(Point::equal(*rs.point, p) == PointEq::Equal);

  // theta_{b^{-1}} undefined off D_b.
  CHECK_FALSE(h.apply(ReducedWord::inverse_generator(1), p).point);
}

TEST_CASE("two-sided action is the shift power") {
  auto gm = golden_mean(Side::TwoSided);
  PartialActionHandle h(&gm);
  Point z = Point::two_sided_periodic(&gm, {0, 1});

  // Positive mu acts as tau^{-|mu|} on D_{mu^{-1}}.
  ReducedWord mu = w({A, B});  // matches z_{-2} z_{-1} = ab
  CHECK(z.window(-2, 0) == Word{0, 1});
  auto r = h.apply(mu, z);
  REQUIRE(r.point);
  CHECK(Point::equal(*r.point, z.shifted_back().shifted_back()) == PointEq::Equal);

  // Mixed words have empty domains.
  CHECK(h.in_domain(w({Ai, B}), z) == Tri::No);
  CHECK(h.in_domain(w({A, Bi}), z) == Tri::No);
}

TEST_CASE("partial action axioms brute force") {
  auto gm = golden_mean();
  PartialActionHandle h(&gm);
  auto ball = reduced_ball(2, 2);
  auto pts = enumerate_ev_periodic(gm, 2, 3);
  CHECK(pts.size() > 10);
  Report rep = check_partial_action_axioms(h, ball, pts);
  CHECK(rep.verdict == Verdict::Pass);
  CHECK(rep.counterexamples.empty());
}

TEST_CASE("two-sided axioms brute force") {
  auto gm = golden_mean(Side::TwoSided);
  PartialActionHandle h(&gm);
  auto ball = reduced_ball(2, 2);
  auto pts = enumerate_two_sided_periodic(gm, 3);
  Report rep = check_partial_action_axioms(h, ball, pts);
  CHECK(rep.verdict == Verdict::Pass);
}

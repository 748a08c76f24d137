#include "parshift/partial_action.hpp"

namespace parshift {

Tri PartialActionHandle::in_domain(const ReducedWord& g, const Point& p) const {
  if (side() == Side::OneSided) {
    auto nf = one_sided_normal_form(g);
    if (!nf) return Tri::No;
    const auto& [mu, nu] = *nf;
    // D_{mu nu^{-1}} = { x : x_[0,|mu|) = mu, nu . x_[|mu|,inf) in X }
    if (p.window(0, static_cast<long>(mu.size())) != mu) return Tri::No;
    Point tail = p;
    for (std::size_t i = 0; i < mu.size(); ++i) tail = tail.shifted();
    return prependable(*pres_, nu, tail, depth_);
  }

  // Two-sided: nonempty domains occur only for positive g or inverses of
  // positive g; membership is a window read.
  if (g.is_identity()) return Tri::Yes;
  if (g.is_positive()) {
    Word mu = g.positive_word();
    return tri_of(p.window(0, static_cast<long>(mu.size())) == mu);
  }
  ReducedWord gi = invert(g);
  if (gi.is_positive()) {
    Word mu = gi.positive_word();
    return tri_of(p.window(-static_cast<long>(mu.size()), 0) == mu);
  }
  return Tri::No;
}

PartialActionHandle::ApplyOutcome PartialActionHandle::apply(const ReducedWord& g,
                                                             const Point& p) const {
  ApplyOutcome out;
  out.in_domain = in_domain(invert(g), p);
  if (out.in_domain != Tri::Yes) return out;

  if (side() == Side::OneSided) {
    const auto nf = one_sided_normal_form(g);  // present: D_{g^{-1}} nonempty
    const auto& [mu, nu] = *nf;
    // theta_{mu nu^{-1}} sends nu x to mu x.
    Point tail = p;
    for (std::size_t i = 0; i < nu.size(); ++i) tail = tail.shifted();
    out.point = tail.prepended(mu);
    return out;
  }

  // Two-sided: theta_g is the restriction of tau^{-[g]}.
  Point q = p;
  int d = degree(g);
  for (; d > 0; --d) q = q.shifted_back();
  for (; d < 0; ++d) q = q.shifted();
  out.point = std::move(q);
  return out;
}

namespace {

std::string describe(const PartialActionHandle& h, const ReducedWord& g) {
  return to_string(g, h.presentation().alphabet().names);
}

}  // namespace

Report check_partial_action_axioms(const PartialActionHandle& handle,
                                   const std::vector<ReducedWord>& group_sample,
                                   const std::vector<Point>& point_sample) {
  Report rep;
  rep.suite = "partial-action-axioms";
  rep.params["group_sample"] = std::to_string(group_sample.size());
  rep.params["point_sample"] = std::to_string(point_sample.size());

  long checked = 0, undecided = 0;
  const ReducedWord e;

  // (a) theta_e is the identity with full domain.
  for (const Point& p : point_sample) {
    if (handle.in_domain(e, p) != Tri::Yes)
      rep.fail("D_e does not contain " + p.to_string());
    auto r = handle.apply(e, p);
    if (!r.point || Point::equal(*r.point, p) != PointEq::Equal)
      rep.fail("theta_e moves " + p.to_string());
    ++checked;
  }

  for (const ReducedWord& h : group_sample) {
    for (const ReducedWord& i : group_sample) {
      const ReducedWord hi = multiply(h, i);
      for (const Point& p : point_sample) {
        // (b) p in theta_h(D_i)  <=>  p in D_h /\ D_{hi}.
        Tri in_h = handle.in_domain(h, p);
        Tri in_hi = handle.in_domain(hi, p);
        Tri lhs;
        if (in_h != Tri::Yes) {
          lhs = in_h;  // not in the range of theta_h at all
        } else {
          auto back = handle.apply(invert(h), p);
          lhs = back.point ? handle.in_domain(i, *back.point) : back.in_domain;
        }
        Tri rhs;
        tri_all(in_h, in_hi, rhs);
        if (lhs == Tri::Undecided || rhs == Tri::Undecided) {
          ++undecided;
        } else if (lhs != rhs) {
          rep.fail("theta_h(D_i) != D_h /\\ D_{hi} at h=" + describe(handle, h) +
                   " i=" + describe(handle, i) + " p=" + p.to_string());
        }
        ++checked;

        // (c) composition where composable.
        Tri c1 = handle.in_domain(invert(i), p);
        Tri c2 = handle.in_domain(multiply(invert(i), invert(h)), p);
        Tri both;
        tri_all(c1, c2, both);
        if (both == Tri::Undecided) {
          ++undecided;
        } else if (both == Tri::Yes) {
          auto qi = handle.apply(i, p);
          auto q2 = qi.point ? handle.apply(h, *qi.point)
                             : PartialActionHandle::ApplyOutcome{};
          auto q3 = handle.apply(hi, p);
          if (!q2.point || !q3.point) {
            rep.fail("composition undefined though composable: h=" + describe(handle, h) +
                     " i=" + describe(handle, i) + " p=" + p.to_string());
          } else {
            PointEq eq = Point::equal(*q2.point, *q3.point);
            if (eq == PointEq::Distinct)
              rep.fail("theta_h(theta_i(p)) != theta_{hi}(p) at h=" + describe(handle, h) +
                       " i=" + describe(handle, i) + " p=" + p.to_string());
            else if (eq == PointEq::Undecided)
              ++undecided;
          }
          ++checked;
        }
      }
    }
  }

  // Disjointness: distinct equal-length positive words have disjoint
  // domains; witnessed on the sampled points.
  for (const ReducedWord& g1 : group_sample) {
    if (!g1.is_positive() || g1.is_identity()) continue;
    for (const ReducedWord& g2 : group_sample) {
      if (!g2.is_positive() || g1.length() != g2.length() || g1 == g2) continue;
      for (const Point& p : point_sample) {
        Tri a = handle.in_domain(g1, p);
        Tri b = handle.in_domain(g2, p);
        if (a == Tri::Yes && b == Tri::Yes)
          rep.fail("D_mu/\\D_nu nonempty for mu=" + describe(handle, g1) +
                   " nu=" + describe(handle, g2) + " at " + p.to_string());
        ++checked;
      }
    }
  }

  rep.params["checks"] = std::to_string(checked);
  rep.params["undecided"] = std::to_string(undecided);
  if (undecided > 0) rep.undecided();
  rep.coverage["axioms"] =
      checked == 0 ? 0.0 : 1.0 - static_cast<double>(undecided) / static_cast<double>(checked);
  return rep;
}

}  // namespace parshift

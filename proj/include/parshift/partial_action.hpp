#pragma once

#include <optional>
#include <vector>

#include "parshift/free_group.hpp"
#include "parshift/point.hpp"
#include "parshift/report.hpp"
#include "parshift/shift_space.hpp"

namespace parshift {

/// The partial action of the free group over the alphabet on the points of
/// a shift presentation.  Domain membership is computed from the one-sided
/// normal form (or the positive/inverse shape, two-sided) rather than by
/// composing generator maps.
class PartialActionHandle {
 public:
  explicit PartialActionHandle(const ShiftPresentation* pres, int depth = 24)
      : pres_(pres), depth_(depth) {}

  const ShiftPresentation& presentation() const { return *pres_; }
  Side side() const { return pres_->side(); }
  int depth() const { return depth_; }

  /// Is p in D_g?
  Tri in_domain(const ReducedWord& g, const Point& p) const;

  struct ApplyOutcome {
    Tri in_domain = Tri::No;        // membership of p in D_{g^{-1}}
    std::optional<Point> point;     // theta_g(p) when in_domain == Yes
  };
  ApplyOutcome apply(const ReducedWord& g, const Point& p) const;

 private:
  const ShiftPresentation* pres_;
  int depth_;
};

/// Brute-force check of the partial-action axioms on finite samples:
/// theta_e = id, theta_h(D_i) = D_h /\ D_{hi} (membership both ways),
/// theta_h(theta_i(p)) = theta_{hi}(p) where composable, and pairwise
/// disjointness of D_mu for distinct equal-length positive mu.
Report check_partial_action_axioms(const PartialActionHandle& handle,
                                   const std::vector<ReducedWord>& group_sample,
                                   const std::vector<Point>& point_sample);

}  // namespace parshift

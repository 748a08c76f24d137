#pragma once

#include <cstdint>
#include <vector>

#include "parshift/boolean_algebra.hpp"
#include "parshift/partial_action.hpp"

namespace parshift {

/// A finite truncation of the point set: all eventually periodic points
/// with preperiod <= q+d and period <= p (one-sided), or all periodic
/// points with period <= p (two-sided).  The core (preperiod <= q) is the
/// guard set: prepending up to d letters never leaves the basis, so factor
/// chains of depth <= d stay decisive on core vectors.  Indices are stable.
struct FiniteBasis {
  const PartialActionHandle* handle = nullptr;
  std::vector<Point> points;
  std::vector<char> core;  // per index
  std::map<Point, int> index;  // canonical forms are unique per point
  int q = 0, p = 0, d = 0;

  int size() const { return static_cast<int>(points.size()); }
  long core_size() const;
  int index_of(const Point& x) const;  // exact; -1 when absent
};

FiniteBasis build_basis(const PartialActionHandle& handle, int q, int p, int d = 0);

/// A partial injection on basis indices standing for an operator on the
/// truncation of l2(X).  Per source index the image is either a basis
/// index, a genuine zero, or fell outside the truncation (Escaped);
/// identities are asserted only where no factor escapes.
class PartialIsometryOp {
 public:
  enum class State : std::uint8_t { Zero, To, Escaped };
  struct Entry {
    State state = State::Zero;
    int to = -1;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  PartialIsometryOp() = default;
  explicit PartialIsometryOp(int n) : entries_(static_cast<std::size_t>(n)) {}

  static PartialIsometryOp identity(int n);
  static PartialIsometryOp zero(int n);
  /// Diagonal projection onto a support set.
  static PartialIsometryOp projection(int n, const std::set<int>& support);

  int size() const { return static_cast<int>(entries_.size()); }
  Entry& at(int i) { return entries_[static_cast<std::size_t>(i)]; }
  const Entry& at(int i) const { return entries_[static_cast<std::size_t>(i)]; }

  bool is_partial_injection() const;
  std::set<int> range_support() const;  // images of To entries

 private:
  std::vector<Entry> entries_;
};

/// f after g (the operator product f.g).
PartialIsometryOp compose(const PartialIsometryOp& f, const PartialIsometryOp& g);

/// S_g on the basis: y -> theta_g(y) where defined and inside the basis.
PartialIsometryOp operator_of(const FiniteBasis& basis, const ReducedWord& g);

/// The adjoint by inversion of the partial map; sources in D_g whose
/// preimage escaped stay Escaped.
PartialIsometryOp adjoint_by_inversion(const FiniteBasis& basis, const ReducedWord& g,
                                       const PartialIsometryOp& op);

/// Guarded per-vector comparison bookkeeping.  Mismatches are recorded on
/// every decisive vector; coverage counts the guard core only.
struct GuardedCheck {
  long decisive = 0;
  long total = 0;
  std::vector<int> mismatches;

  void compare(const PartialIsometryOp& lhs, const PartialIsometryOp& rhs,
               const std::vector<char>& core);
  double coverage() const {
    return total == 0 ? 0.0 : static_cast<double>(decisive) / static_cast<double>(total);
  }
};

/// Definition relation suite: partial isometries, unit, adjoints, the
/// product relation and commuting range projections over the reduced ball
/// of the given radius, plus the diagonal identification D_g -> s_g s_g*.
Report verify_definition_relations(const FiniteBasis& basis, int radius,
                                   double coverage_floor);

/// The three equivalent partial-representation axiom sets, each verified
/// independently on the same operators.
Report verify_appendix_axiom_sets(const FiniteBasis& basis, int radius,
                                  double coverage_floor);

/// Cuntz-Krieger / Exel-Laca relations for a MatrixSFT handle, at operator
/// level and (optionally) as exact symbolic-set identities over all subset
/// pairs of the alphabet, plus the derived word properties.
Report verify_ck_relations(const FiniteBasis& basis, const BooleanEngine* engine,
                           int max_word_len, double coverage_floor);

/// Crossed-product suite for a two-sided handle on a tau-closed basis:
/// U = sum_a S_a is a permutation, S_g = 1_{D_g} U^{[g]}, covariance.
Report verify_crossed_product(const FiniteBasis& basis, int radius);

/// gamma-conjugation of the diagonal maps: p_{theta_{a^{-1}}(A)} =
/// S_a* p_A S_a and p_{theta_a(A)} = S_a p_A S_a* on sampled sets.
Report verify_lambda_phi(const FiniteBasis& basis, const BooleanEngine& engine,
                         const std::vector<SymbolicSet>& samples,
                         double coverage_floor);

}  // namespace parshift

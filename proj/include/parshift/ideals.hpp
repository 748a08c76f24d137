#pragma once

#include <functional>
#include <optional>

#include "parshift/boolean_algebra.hpp"
#include "parshift/representation.hpp"

namespace parshift {

/// Union of the atoms of r contained in Y, for Y given as a per-atom
/// containment oracle ("is this whole atom inside Y").
SymbolicSet admissible_core(const BooleanEngine& engine, Resolution r,
                            const std::function<bool(const Atom&)>& contained_in_Y);

/// A symbolic set is its own admissible core.
SymbolicSet admissible_core(const BooleanEngine& engine, Resolution r,
                            const SymbolicSet& Y);

/// The lattice of invariant admissible sets at a resolution: all unions of
/// atoms closed under the atom-level images of sigma and sigma^{-1}.
struct InvariantLattice {
  Resolution r;
  std::vector<SymbolicSet> sets;               // ordered by atom count
  std::vector<std::pair<int, int>> inclusions;  // Hasse diagram edges i < j
  Report report;
};

InvariantLattice invariant_admissible_sets(const BooleanEngine& engine, Resolution r,
                                           bool check_refinement_stability = true);

/// Left-special structure: factors with >= 2 one-letter left extensions,
/// their counts per length, periodicity evidence and tail classing.
struct SpecialElementLedger {
  std::vector<long> counts;       // left-special factor count at length 1..depth
  std::vector<Word> candidates;   // the depth-length left-special factors
  std::vector<bool> periodic;     // per candidate: looks eventually periodic
  bool counts_stabilized = false;
  int n_tail_classes = -1;        // -1 when inconclusive
  Report report;
};

SpecialElementLedger left_special_scan(const PartialActionHandle& handle, int depth);

/// Property (*): every word is the sole predecessor set of some point.
/// Exact for MatrixSFT; witness search with extension evidence otherwise.
Report check_property_star(const PartialActionHandle& handle, int max_len,
                           int word_bound = 24);

/// Property (**): (*) plus finitely many left-special elements, none
/// eventually periodic.
Report check_property_starstar(const PartialActionHandle& handle, int depth);

/// The Boolean homomorphism psi from the one-sided algebra to the
/// two-sided one (atom rule: singleton predecessor set -> consistent
/// cylinder, otherwise empty), with its verification suites.
class PsiMap {
 public:
  PsiMap(const BooleanEngine* one_sided, const BooleanEngine* two_sided,
         const Report& property_star_evidence);

  const BooleanEngine& one_sided() const { return *one_; }
  const BooleanEngine& two_sided() const { return *two_; }

  /// psi of a single one-sided atom.
  SymbolicSet apply_atom(Resolution r, int atom) const;
  SymbolicSet apply(const SymbolicSet& a) const;

  /// The kernel at a resolution: the union of atoms with non-singleton
  /// predecessor data.
  SymbolicSet kernel_set(Resolution r) const;

  Report check_homomorphism(Resolution r, std::mt19937_64& rng, int samples) const;
  Report check_equivariance(Resolution r, std::mt19937_64& rng, int samples) const;
  Report check_kernel_rule(Resolution r) const;

  /// kappa on a cylinder generator: the three-case formula, cross-checked
  /// against psi(cylinder(mu, nu)).
  SymbolicSet kappa_on_cylinder(const Word& mu, const Word& nu) const;
  Report check_kappa(std::mt19937_64& rng, int samples, int max_len) const;

 private:
  const BooleanEngine* one_;
  const BooleanEngine* two_;
};

/// A matrix unit e_{x,y} = Lambda({x}) s_{x_[0,n) y_[0,m)^{-1}} Lambda({y})
/// between points of one right-tail class, with its splice exponents.
struct SymbolicMatrixUnit {
  Point x, y;
  long n = 0, m = 0;
  ReducedWord group_element;
};

struct MatrixUnitSystem {
  std::vector<Point> points;                 // the sampled class members
  std::vector<SymbolicMatrixUnit> units;     // for every ordered pair
  std::vector<SymbolicSet> singletons;       // Lambda({x}) for each point
  Report report;
};

/// Build matrix units over sampled points of one tail class of a handle
/// with property (**); verifies the adjoint and product laws by reducing
/// to point computations, the splice-exponent well-definedness, and the
/// singleton construction within the given bound.
MatrixUnitSystem matrix_units(const BooleanEngine& engine,
                              const PartialActionHandle& handle,
                              const std::vector<Point>& class_sample,
                              int singleton_bound, int splice_bound);

/// Proposition-level quotient checks for an invariant admissible Y: the
/// atom-level round trip Y = U(I(Y)), Boolean closure of the cut family
/// {A /\ ~Y}, and, when a presentation of the restricted system is
/// supplied, agreement of the restricted partial action with the original
/// one on the surviving points.
Report quotient_report(const BooleanEngine& engine, const SymbolicSet& Y,
                       std::mt19937_64& rng, int samples,
                       const PartialActionHandle* restricted = nullptr);

}  // namespace parshift

#pragma once

#include <map>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "parshift/partial_action.hpp"

namespace parshift {

/// Resolution (k,l): prefix length k, predecessor length l.  The order
/// (k1,l1) <= (k2,l2) iff k1 <= k2 and l1-k1 <= l2-k2 is the refinement
/// guarantee order of the atom partitions.
struct Resolution {
  int k = 0;
  int l = 0;
  friend auto operator<=>(const Resolution&, const Resolution&) = default;
};

bool preceq(Resolution a, Resolution b);
Resolution common_refinement(Resolution a, Resolution b);
std::string to_string(Resolution r);

/// One equivalence class of points at a resolution.  One-sided atoms carry
/// (prefix, predecessor set of the tail); two-sided atoms are plain
/// cylinders and store the window word z_[-l,k) in `prefix` with `preds`
/// empty.  Witnesses certify realizability and compute coarse labels.
struct Atom {
  Word prefix;
  std::vector<Word> preds;  // sorted
  bool exact = true;
  std::vector<Word> word_witnesses;
  std::vector<Point> point_witnesses;  // realizing points (finite sets, substitutions)
};

struct AtomTable {
  Resolution r;
  int margin = 0;
  bool exact = true;
  std::vector<Atom> atoms;
  std::map<std::pair<Word, std::vector<Word>>, int> index;

  int find(const Word& prefix, const std::vector<Word>& preds) const;
};

/// An element of the Boolean algebra generated by the domains, stored as a
/// set of atoms at the least resolution at which it was produced.
struct SymbolicSet {
  Resolution r;
  std::set<int> atoms;
  bool exact = true;
};

/// The atom calculus for one handle: enumeration, Boolean operations,
/// refinement, the action of the group on Boolean elements, domain sets,
/// cylinders and the finite Stone dual.  All results are exact for SFT-like
/// presentations; substitution-backed results carry exactness flags.
class BooleanEngine {
 public:
  explicit BooleanEngine(const PartialActionHandle* handle);

  const PartialActionHandle& handle() const { return *handle_; }
  const ShiftPresentation& presentation() const { return handle_->presentation(); }
  Side side() const { return handle_->side(); }

  const AtomTable& table(Resolution r) const;

  SymbolicSet full(Resolution r) const;
  SymbolicSet empty(Resolution r) const;
  SymbolicSet from_atoms(Resolution r, std::set<int> atoms) const;
  SymbolicSet single(Resolution r, int atom) const;

  SymbolicSet meet(const SymbolicSet& a, const SymbolicSet& b) const;
  SymbolicSet join(const SymbolicSet& a, const SymbolicSet& b) const;
  SymbolicSet complement(const SymbolicSet& a) const;
  SymbolicSet difference(const SymbolicSet& a, const SymbolicSet& b) const;

  bool is_empty(const SymbolicSet& a) const { return a.atoms.empty(); }
  bool is_full(const SymbolicSet& a) const;
  bool equal(const SymbolicSet& a, const SymbolicSet& b) const;
  bool subset(const SymbolicSet& a, const SymbolicSet& b) const;

  /// Same set of points at a finer resolution.  Pre: a.r preceq r.
  SymbolicSet refine(const SymbolicSet& a, Resolution r) const;

  /// theta_g(A), composed along the reduced form of g; each positive letter
  /// raises k by one, each inverse letter raises l by one.
  SymbolicSet act(const ReducedWord& g, const SymbolicSet& a) const;

  /// D_g as a symbolic set, refined at least to `at_least`.
  SymbolicSet domain_set(const ReducedWord& g, Resolution at_least = {0, 0}) const;

  /// C(mu,nu) = theta_nu(D_{mu^{-1}}) = D_nu /\ D_{nu mu^{-1}}; both routes
  /// are computed and compared (throws on mismatch).
  SymbolicSet cylinder(const Word& mu, const Word& nu, Resolution at_least = {0, 0}) const;

  /// Membership of a point, via its label at a.r.
  Tri contains(const SymbolicSet& a, const Point& p) const;

  /// The label of a point at resolution r (atom index; -1 if unrealized).
  int atom_of(Resolution r, const Point& p, bool* exact = nullptr) const;

  /// Coarse label of an atom of `from` at resolution `to`; consistency of
  /// all witnesses is verified.
  int coarse_atom(Resolution from, int atom, Resolution to) const;

  std::string atom_name(Resolution r, int atom) const;

  // -- Finite Stone duality ------------------------------------------------

  /// Dual points are the atoms viewed as 0/1 Boolean homomorphisms on the
  /// resolution's subalgebra.
  struct StoneDualView {
    Resolution r;
    int n_points = 0;
    std::vector<ReducedWord> generating_family;
    // evaluation[i][j] = value of dual point i on generating_family[j]
    std::vector<std::vector<char>> evaluation;
  };
  StoneDualView stone_dual(Resolution r) const;
  /// Separation: distinct dual points differ on some generator D_g.
  Report check_separation(Resolution r) const;
  /// A -> A^ is a Boolean isomorphism onto the dual's clopen algebra.
  Report check_iso(Resolution r, std::mt19937_64& rng, int samples) const;

 private:
  AtomTable enumerate(Resolution r) const;
  AtomTable enumerate_one_sided(Resolution r, int margin) const;
  AtomTable enumerate_two_sided(Resolution r) const;
  SymbolicSet act_letter(const Letter& b, const SymbolicSet& a) const;
  int margin_for(Resolution r) const;

  const PartialActionHandle* handle_;
  int sample_depth_ = 64;  // window depth for point-level labeling
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<int, int>, AtomTable> cache_;
};

/// The ring identity 1 - prod x_i = sum over nonempty E of
/// prod_{i not in E} x_i * prod_{j in E} (1-x_j), instantiated on Boolean
/// symbolic sets (meets/complements, with pairwise-disjointness of the
/// summands) and on random 0/1 diagonal integer matrices.
Report check_modsat(const BooleanEngine* engine, Resolution r, int max_n,
                    int instances, int matrix_size, unsigned seed);

}  // namespace parshift

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "parshift/free_group.hpp"

namespace parshift {

enum class Side { OneSided, TwoSided };

/// Three-valued answer for oracles that may be depth-bounded.
enum class Tri { No, Yes, Undecided };

inline Tri tri_of(bool b) { return b ? Tri::Yes : Tri::No; }
inline bool tri_all(Tri a, Tri b, Tri& out) {  // conjunction, false when undecided
  if (a == Tri::No || b == Tri::No) { out = Tri::No; return true; }
  if (a == Tri::Undecided || b == Tri::Undecided) { out = Tri::Undecided; return true; }
  out = Tri::Yes;
  return true;
}

struct Alphabet {
  std::vector<std::string> names;

  int size() const { return static_cast<int>(names.size()); }
  int index(const std::string& name) const;  // -1 when absent
  static Alphabet letters(const std::string& chars);  // one symbol per char
};

/// An eventually periodic one-sided sequence preperiod.period^inf,
/// or a periodic two-sided orbit when the preperiod is empty.
struct EvPeriodicSpec {
  Word preperiod;
  Word period;  // nonempty

  /// Minimal preperiod, primitive period, fixed phase.  Two specs denote
  /// the same one-sided sequence iff their canonical forms are equal.
  EvPeriodicSpec canonical() const;
  EvPeriodicSpec shifted() const;  // drop the first symbol
  Symbol at(long i) const;         // i >= 0
  friend auto operator<=>(const EvPeriodicSpec&, const EvPeriodicSpec&) = default;
};

struct FullShiftKind {};

struct MatrixSftKind {
  std::vector<std::vector<int>> rows;  // 0/1, square, no zero rows
};

struct ForbiddenWordsKind {
  std::vector<Word> forbidden;  // nonempty words
};

struct SubstitutionKind {
  std::vector<Word> images;  // per symbol, nonempty
  Symbol seed = -1;          // fixed-point seed; autodetected when -1
};

struct FinitePointsKind {
  std::vector<EvPeriodicSpec> points;  // closed under the shift on construction
};

using PresentationKind = std::variant<FullShiftKind, MatrixSftKind, ForbiddenWordsKind,
                                      SubstitutionKind, FinitePointsKind>;

/// The set of length-n factors together with the oracle's honesty data.
struct FactorSet {
  std::set<Word> words;
  bool exact = true;  // false when a substitution scan did not saturate
  int scan_depth = 0;
};

/// A finite-alphabet shift space given by one of the five presentation
/// kinds.  Owns the (memoized) language oracle.  Immutable after
/// construction; the caches fill idempotently under a lock, so concurrent
/// reads are safe.
class ShiftPresentation {
 public:
  ShiftPresentation(Alphabet alphabet, Side side, PresentationKind kind,
                    int substitution_scan_depth = 16);

  const Alphabet& alphabet() const { return alphabet_; }
  int n_symbols() const { return alphabet_.size(); }
  Side side() const { return side_; }
  const PresentationKind& kind() const { return kind_; }

  bool is_full_shift() const { return std::holds_alternative<FullShiftKind>(kind_); }
  const MatrixSftKind* matrix() const { return std::get_if<MatrixSftKind>(&kind_); }
  const SubstitutionKind* substitution() const { return std::get_if<SubstitutionKind>(&kind_); }
  const FinitePointsKind* finite_points() const { return std::get_if<FinitePointsKind>(&kind_); }

  /// Membership of w in the language of the shift space.  Exact for all
  /// kinds except Substitution, where a No may be Undecided if the factor
  /// scan did not saturate at length |w|.
  Tri is_factor(const Word& w) const;

  /// Exactly the length-n factors (subject to the FactorSet exactness flag).
  const FactorSet& factors(int n) const;

  /// Word-level predecessor set {mu in factors(l) : mu w in L(X)}.
  /// `exact` (optional) reports whether every membership query was exact.
  std::set<Word> word_predecessors(int l, const Word& w, bool* exact = nullptr) const;

  /// Prefix of the substitution fixed point (Substitution kind only).
  Word fixed_point_prefix(long n) const;

  /// True when the substitution incidence matrix is primitive.
  bool substitution_is_primitive() const;

  int substitution_scan_depth() const { return sub_scan_depth_; }

 private:
  void validate();
  FactorSet compute_factors(int n) const;
  Tri word_in_language(const Word& w) const;  // uncached core for SFT kinds

  Alphabet alphabet_;
  Side side_;
  PresentationKind kind_;
  int sub_scan_depth_;

  // ForbiddenWordsKind: de Bruijn graph over avoid-words of length m-1.
  struct AvoidGraph {
    int m = 2;                       // window length
    std::vector<Word> states;        // avoid-words of length m-1
    std::map<Word, int> state_index;
    std::vector<std::vector<int>> succ;   // by state
    std::vector<char> right_live;
    std::vector<char> left_live;
  };
  std::shared_ptr<AvoidGraph> avoid_;  // built once in the constructor

  std::vector<char> matrix_left_live_;  // MatrixSftKind, two-sided use

  struct Caches {
    std::mutex mutex;
    std::map<int, FactorSet> factors;
    Word fixed_point;
  };
  std::unique_ptr<Caches> caches_ = std::make_unique<Caches>();
};

std::string to_string(Side side);

}  // namespace parshift

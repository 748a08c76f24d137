#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "parshift/shift_space.hpp"

namespace parshift {

/// Tail of a point after an explicit finite prefix: either a periodic cycle
/// or a shifted substitution fixed point.
struct PeriodicCore {
  Word period;  // nonempty
  friend auto operator<=>(const PeriodicCore&, const PeriodicCore&) = default;
};

struct SubOrbitCore {
  Symbol seed = 0;
  long offset = 0;  // read the fixed point from this index on
  friend auto operator<=>(const SubOrbitCore&, const SubOrbitCore&) = default;
};

struct TailSpec {
  Word prefix;
  std::variant<PeriodicCore, SubOrbitCore> core = PeriodicCore{};
  friend auto operator<=>(const TailSpec&, const TailSpec&) = default;
};

enum class PointEq { Equal, Distinct, Undecided };

/// A one- or two-sided sequence with finitely describable tails.  One-sided
/// points read x_0 x_1 ... from `right`; two-sided points additionally read
/// x_{-1} x_{-2} ... from `left` (indexed away from the origin).
class Point {
 public:
  static Point one_sided(const ShiftPresentation* pres, TailSpec right);
  static Point ev_periodic(const ShiftPresentation* pres, Word preperiod, Word period);
  static Point substitution_orbit(const ShiftPresentation* pres, long offset);
  static Point two_sided(const ShiftPresentation* pres, TailSpec left, TailSpec right);
  /// The periodic two-sided point z with z_n = period[(n + phase) mod p].
  static Point two_sided_periodic(const ShiftPresentation* pres, const Word& period,
                                  long phase = 0);

  Side side() const { return side_; }
  const ShiftPresentation* presentation() const { return pres_; }
  const TailSpec& right() const { return right_; }
  const TailSpec& left() const { return left_; }

  Symbol at(long i) const;
  Word window(long from, long to) const;  // x_{[from,to)}; from >= 0 when one-sided

  Point shifted() const;        // sigma (one-sided) or tau (two-sided)
  Point shifted_back() const;   // tau^{-1}; two-sided only
  Point prepended(const Word& w) const;  // w . x; one-sided only

  /// Structural equality of normalized specs, window-compare to +-depth
  /// otherwise; exact between eventually periodic points.
  static PointEq equal(const Point& a, const Point& b, int depth = 64);

  /// Every window of length up to `depth` lies in the language.
  Tri valid(int depth = 24) const;

  std::string to_string() const;

  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  Side side_ = Side::OneSided;
  const ShiftPresentation* pres_ = nullptr;
  TailSpec right_;
  TailSpec left_;  // unused for one-sided points

  void normalize();
};

/// Point-level predecessor set P_l(x): exact for FullShift, MatrixSFT,
/// ForbiddenWordsSFT (memory-bounded) and FinitePointSet; computed from a
/// window of length `depth` (stability-checked, flagged) for substitutions.
std::set<Word> point_predecessors(const ShiftPresentation& pres, int l, const Point& x,
                                  int depth, bool* exact = nullptr);

/// Is mu . x in the shift space?
Tri prependable(const ShiftPresentation& pres, const Word& mu, const Point& x, int depth);

/// All distinct one-sided eventually periodic points with preperiod length
/// <= q and (primitive) period length <= p, in canonical form.
std::vector<Point> enumerate_ev_periodic(const ShiftPresentation& pres, int q, int p);

/// All distinct two-sided points of period <= p (every phase).
std::vector<Point> enumerate_two_sided_periodic(const ShiftPresentation& pres, int p);

}  // namespace parshift

#pragma once

#include <string>

#include "parshift/boolean_algebra.hpp"
#include "parshift/shift_space.hpp"

namespace parshift {

/// Parsed form of a system configuration file.  Sectioned key-value text:
///
///   [system]
///   alphabet = a b
///   kind = matrix            # full | matrix | forbidden | substitution | points
///   side = one               # one | two
///   matrix = 1 1 / 1 0       # rows, by alphabet order
///   # forbidden = bb ba
///   # substitution = a -> ab ; b -> a
///   # points = a.(ba) ; (ab)        # preperiod.(period)
///
///   [bounds]
///   resolution = 3 3
///   radius = 2
///   basis = 2 4              # q p
///   coverage_floor = 0.9
///   depth = 12
///   seed = 0
struct SystemConfig {
  Alphabet alphabet;
  Side side = Side::OneSided;
  PresentationKind kind = FullShiftKind{};

  Resolution resolution{3, 3};
  int radius = 2;
  int basis_q = 2;
  int basis_p = 4;
  double coverage_floor = 0.9;
  int depth = 12;
  unsigned seed = 0;

  ShiftPresentation make_presentation() const;
  ShiftPresentation make_presentation(Side forced_side) const;
};

SystemConfig parse_config(const std::string& text);
SystemConfig load_config(const std::string& path);

}  // namespace parshift

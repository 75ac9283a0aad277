#pragma once

#include "hilbdim/arith.hpp"

namespace hilbdim {

/// Intersection numbers of a polarized 3-fold (X, L) together with the
/// Euler characteristics used by the dimension formulas.
struct InvariantSet {
  Integer L3;
  Integer KL2;
  Integer K2L;
  Integer K3;
  Integer c2L;
  Integer Kc2;
  Integer c3;
  Integer chi_OX = 1;
  Integer chi_OS = 1;
  Integer h1L = 0;

  friend bool operator==(const InvariantSet&, const InvariantSet&) = default;
};

/// True when the seven intersection numbers coincide (Euler data ignored).
inline bool same_intersection_numbers(const InvariantSet& a, const InvariantSet& b) {
  return a.L3 == b.L3 && a.KL2 == b.KL2 && a.K2L == b.K2L && a.K3 == b.K3 && a.c2L == b.c2L &&
         a.Kc2 == b.Kc2 && a.c3 == b.c3;
}

}  // namespace hilbdim

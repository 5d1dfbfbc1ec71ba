#pragma once

#include <initializer_list>
#include <vector>

#include "ringloc/construct.hpp"
#include "ringloc/ore.hpp"

namespace fx {

using ringloc::Elem;
using ringloc::ElementSet;
using ringloc::FiniteRing;

inline FiniteRing ring(const char* expr) { return ringloc::construct(expr); }

inline ElementSet set(const FiniteRing& R, std::initializer_list<Elem> xs) {
  return ElementSet(R.order(), xs);
}

inline ringloc::MultSet mult(const FiniteRing& R, std::initializer_list<Elem> xs) {
  return ringloc::MultSet::from(R, set(R, xs));
}

inline std::vector<Elem> ids(const ElementSet& s) { return s.elements(); }

// T2 = Tri(2, Zn(2)): [[a, b], [0, d]] has id 4a + 2b + d.
namespace t2 {
inline constexpr Elem e12 = 2;       // [[0,1],[0,0]]
inline constexpr Elem e22 = 1;       // [[0,0],[0,1]]
inline constexpr Elem e11 = 4;       // [[1,0],[0,0]]
inline constexpr Elem I = 5;         // identity
inline constexpr Elem I_e12 = 7;     // I + e12
}  // namespace t2

}  // namespace fx

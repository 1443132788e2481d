#pragma once

#include "qpm/space.hpp"

namespace qpm {

// min over a in A of d(x,a). Inf = min on finite sets.
Rational point_to_set(const Space& s, int x, const Subset& a);

// min over a in A of d(a,x).
Rational set_to_point(const Space& s, const Subset& a, int x);

// H(A,B) = max( max_{a in A} d(a,B), max_{b in B} d(A,b) ).
// Always finite here (finite spaces), so the "extended" codomain of the
// general definition never materializes and the return type is a plain
// Rational. H({x},{y}) = d(x,y) and H(A,A) = 0.
Rational hausdorff(const Space& s, const Subset& a, const Subset& b);

} // namespace qpm

#pragma once

#include <vector>

#include "dzeta/poly.hpp"
#include "dzeta/types.hpp"

namespace dzeta {

struct RrefResult {
  RatMatrix reduced;
  std::vector<Index> pivot_columns;
  Index rank = 0;
};

// Unique reduced row-echelon form. Rows are first scaled to integers, the
// forward pass is fraction-free (Bareiss), and a final normalization pass
// produces the RREF; no rounding anywhere.
RrefResult rref(const RatMatrix& m);

// rows form an RREF-canonical basis of { v : v * m = 0 }
RatMatrix left_kernel(const RatMatrix& m);

// rows form an RREF-canonical basis of { x : m * x^T = 0 }
RatMatrix right_kernel(const RatMatrix& m);

// monic det(tI - m); constant 1 for the 0x0 matrix. Denominators are
// cleared first and the characteristic polynomial of the integer matrix is
// computed by Faddeev-LeVerrier (division-controlled: every division is an
// exact integer division).
RatPoly charpoly(const RatMatrix& m);

// rows form a basis of { v : v * m = mu * v }; 0 x n when mu is not an eigenvalue
RatMatrix eigenspace_left(const RatMatrix& m, const Rat& mu);

}  // namespace dzeta

#pragma once

#include "slopes/matrix.hpp"
#include "slopes/newton.hpp"
#include "slopes/report.hpp"

#include <utility>
#include <vector>

namespace slopes {

// Matrix of T_2 on the echelonized basis of S_k, acting on q-expansions by
// (T_2 h)_n = a_{2n} + 2^{k-1} a_{n/2}. Entries are asserted integral.
RationalMatrix t2_matrix(long k);

// Newton polygon of 1 + sum_{n<=m} X^n prod_{j<=n}
//   2^{2j} (k-8j)! (k-8j-3)! (k-12j-2) / ((k-12j)! (k-6j-1)!)
// where m = dim S_k.
NewtonPolygon conjectural_polygon_classical(long k);

// For k <= 0, the 2-adic valuations of the partial products
//   c_n = prod_{j<=n} 2^{2j} (-k+2+12j)! (-k+6j)! / ((-k+2+8j)! (-k-2+8j)! (-k-12j)).
// Throws naming j when k = -12j hits the pole for some j <= nmax.
std::vector<std::pair<long, long>> conjectural_series_overconvergent(long k, long nmax);

// Computes both Newton polygons for weight k and reports whether they agree
// exactly, including the vertex lists and dim S_k.
VerificationReport verify_classical_polygon(long k);

}  // namespace slopes

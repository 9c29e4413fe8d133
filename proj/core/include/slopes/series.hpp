#pragma once

#include "slopes/fpoly.hpp"
#include "slopes/qseries.hpp"
#include "slopes/report.hpp"

#include <vector>

namespace slopes {

// The named q-expansions. Product formulas are expanded factor by factor,
// independently of any identity that gets tested against them.

// Delta = q prod_{n>=1} (1-q^n)^24.
QSeries delta_qexp(long prec);

// The Hauptmodul f = q prod_{n>=1} (1+q^n)^24 = Delta(2 tau)/Delta(tau).
QSeries f_qexp(long prec);

// g = 2^6 f, the Banach-basis generator.
QSeries g_qexp(long prec);

// E4 = 1 + 240 sum sigma_3(n) q^n.
QSeries e4_qexp(long prec);

// E6 = 1 - 504 sum sigma_5(n) q^n.
QSeries e6_qexp(long prec);

// theta = sum_{a,b in Z} q^{a^2+ab+b^2} = 1 + 6q + 6q^3 + ...
QSeries theta_qexp(long prec);

// 1/j = Delta/E4^3.
QSeries j_inverse_qexp(long prec);

// Writes s as a polynomial of degree <= maxdeg in f, solving the
// unitriangular system given by f = q + O(q^2). Throws when the residual is
// nonzero anywhere in the provable window.
FPolynomial decompose_in_f(const QSeries& s, long maxdeg);

// dim S_k for even k >= 12: floor(k/12) - (1 if k = 2 mod 12).
long dim_cusp_forms(long k);

// Echelonized basis of the weight-k level-1 cusp forms: element i (1-based)
// expands as q^i + O(q^{dim+1}). Requires k even >= 12 and prec >= 2 dim + 1.
std::vector<QSeries> miller_basis(long k, long prec);

// Checks theta^4 == E4 mod 8 and 64/j == g/(4g+1)^3 through q^prec.
VerificationReport theta_j_identities(long prec);

}  // namespace slopes

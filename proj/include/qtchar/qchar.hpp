#pragma once

#include "qtchar/torus.hpp"
#include "qtchar/ymonomial.hpp"

namespace qtchar {

// A_{i,p} = Y_{i,p-1} Y_{i,p+1} Y_{i-1,p}^{-1} Y_{i+1,p}^{-1} with the
// boundary convention Y_0 = Y_n = 1.  Requires p == i+1 (mod 2).
YMonomial aVariable(int rank, int i, int p);

// q-character of the fundamental module L(Y_{i,p}), computed by closing the
// highest monomial under the dominance expansion: every variable carried
// with a positive exponent at (j,s) contributes the monomial multiplied by
// A_{j,s+1}^{-1}.  For fundamentals in type A the closure is the full
// character: all coefficients 1, binomial(rank, i) monomials.
TorusElement fundamentalQCharExpand(int rank, int i, int p);

// Independent route: the tableau sum over 1 <= a_1 < ... < a_i <= rank of
// products of boxes Y_{a,s+a-1} Y_{a-1,s+a}^{-1} at staggered parameters
// s_k = p + i - 2k + 1.  Used as the oracle gating the expansion route.
TorusElement fundamentalQCharTableau(int rank, int i, int p);

// Shift every spectral parameter in x by delta_p (must be even).
TorusElement shiftSpectral(const TorusElement& x, int delta_p);

}  // namespace qtchar

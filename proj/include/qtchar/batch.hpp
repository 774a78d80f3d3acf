#pragma once

#include <utility>
#include <vector>

#include "qtchar/basis.hpp"
#include "qtchar/heightfunc.hpp"
#include "qtchar/inflate.hpp"

namespace qtchar {

// Canonical basis elements for a batch of dominant monomials.  The parallel
// flavor fans the batch out with OpenMP; the ring caches are shared and
// locked, so both flavors return identical results.
std::vector<std::pair<YMonomial, TorusElement>> canonicalBatch(
    const Ring& ring, const std::vector<YMonomial>& monomials);
std::vector<std::pair<YMonomial, TorusElement>> canonicalBatchParallel(
    const Ring& ring, const std::vector<YMonomial>& monomials);

// Canonical-preservation verdicts for a batch of dominant monomials under
// one inflation instance, OpenMP across monomials.
std::vector<std::pair<YMonomial, bool>> inflationBatchParallel(
    const Ring& src, const Ring& dst, const HeightFunction& xi,
    const HeightFunction& xitilde, const IncreasingMap& nu,
    const std::vector<YMonomial>& monomials);

// All dominant monomials with at most max_factors generator factors
// (counted with multiplicity) and parameters inside [p_lo, p_hi],
// in canonical order.  Includes the unit monomial.
std::vector<YMonomial> dominantMonomials(int rank, int p_lo, int p_hi,
                                         int max_factors);

}  // namespace qtchar

#include "qtchar/batch.hpp"

#include <algorithm>

#include "qtchar/inflate.hpp"

namespace qtchar {

std::vector<std::pair<YMonomial, TorusElement>> canonicalBatch(
    const Ring& ring, const std::vector<YMonomial>& monomials) {
  std::vector<std::pair<YMonomial, TorusElement>> out;
  out.reserve(monomials.size());
  for (const auto& m : monomials) out.emplace_back(m, ring.canonical(m));
  return out;
}

std::vector<std::pair<YMonomial, TorusElement>> canonicalBatchParallel(
    const Ring& ring, const std::vector<YMonomial>& monomials) {
  std::vector<std::pair<YMonomial, TorusElement>> out(
      monomials.size(), {YMonomial::unit(ring.rank()), TorusElement(ring.rank())});
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < static_cast<long>(monomials.size()); ++idx)
    out[idx] = {monomials[idx], ring.canonical(monomials[idx])};
  return out;
}

std::vector<std::pair<YMonomial, bool>> inflationBatchParallel(
    const Ring& src, const Ring& dst, const HeightFunction& xi,
    const HeightFunction& xitilde, const IncreasingMap& nu,
    const std::vector<YMonomial>& monomials) {
  std::vector<std::pair<YMonomial, bool>> out(
      monomials.size(), {YMonomial::unit(src.rank()), false});
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < static_cast<long>(monomials.size()); ++idx)
    out[idx] = {monomials[idx], inflationPreservesCanonical(
                                    src, dst, xi, xitilde, nu, monomials[idx])};
  return out;
}

std::vector<YMonomial> dominantMonomials(int rank, int p_lo, int p_hi,
                                         int max_factors) {
  std::vector<YMonomial> gens;
  for (int i = 1; i <= rank - 1; ++i)
    for (int p = p_lo; p <= p_hi; ++p)
      if (((p - i) % 2 + 2) % 2 == 0)
        gens.push_back(YMonomial::generator(rank, i, p));
  std::vector<YMonomial> out{YMonomial::unit(rank)};
  size_t layer_begin = 0;
  for (int f = 1; f <= max_factors; ++f) {
    const size_t layer_end = out.size();
    for (size_t k = layer_begin; k < layer_end; ++k)
      for (const auto& g : gens) out.push_back(out[k] * g);
    layer_begin = layer_end;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qtchar

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "qtchar/basis.hpp"
#include "qtchar/batch.hpp"
#include "qtchar/torus.hpp"

using namespace qtchar;

namespace {

template <class F>
double timeIt(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void benchStar(int rank, int repeat) {
  Ring ring(rank);
  // two dense operands: products of fundamental characters
  TorusElement x = TorusElement::unit(rank);
  TorusElement y = TorusElement::unit(rank);
  for (int i = 1; i <= rank - 1; ++i) {
    x = starMul(ring.pairing(), x, ring.fundamental(i, i));
    y = starMul(ring.pairing(), y, ring.fundamental(i, i + 2));
  }
  TorusElement serial(rank), parallel(rank);
  const double ts = timeIt([&] {
    for (int r = 0; r < repeat; ++r) serial = starMul(ring.pairing(), x, y);
  });
  const double tp = timeIt([&] {
    for (int r = 0; r < repeat; ++r)
      parallel = starMulParallel(ring.pairing(), x, y);
  });
  if (serial != parallel) {
    std::fprintf(stderr, "star kernels disagree\n");
    std::exit(1);
  }
  std::printf("star    rank=%d  %zu x %zu terms -> %zu  serial %.3fs  openmp %.3fs\n",
              rank, x.termCount(), y.termCount(), serial.termCount(), ts, tp);
}

void benchCanonical(int rank, int pmin, int pmax, int max_factors) {
  const std::vector<YMonomial> ms =
      dominantMonomials(rank, pmin, pmax, max_factors);
  Ring ring_s(rank), ring_p(rank);  // separate caches, same work
  std::vector<std::pair<YMonomial, TorusElement>> rs, rp;
  const double ts = timeIt([&] { rs = canonicalBatch(ring_s, ms); });
  const double tp = timeIt([&] { rp = canonicalBatchParallel(ring_p, ms); });
  if (rs.size() != rp.size()) {
    std::fprintf(stderr, "canonical batches disagree\n");
    std::exit(1);
  }
  for (size_t k = 0; k < rs.size(); ++k)
    if (rs[k] != rp[k]) {
      std::fprintf(stderr, "canonical batches disagree at %zu\n", k);
      std::exit(1);
    }
  std::printf("canon   rank=%d  %zu monomials  serial %.3fs  openmp %.3fs\n",
              rank, ms.size(), ts, tp);
}

}  // namespace

int main(int argc, char** argv) {
  // operand size is the full tensor product of fundamentals, so it grows
  // fast with the rank: 4 runs in well under a second, 5 takes a few
  // seconds per product, 6 is out of desk range
  int star_rank = 4, star_repeat = 25;
  int canon_rank = 3, canon_pmin = -3, canon_pmax = 5, canon_factors = 2;
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    auto next = [&] { return std::atoi(argv[++a]); };
    if (arg == "--star-rank")
      star_rank = next();
    else if (arg == "--star-repeat")
      star_repeat = next();
    else if (arg == "--canon-rank")
      canon_rank = next();
    else if (arg == "--canon-pmin")
      canon_pmin = next();
    else if (arg == "--canon-pmax")
      canon_pmax = next();
    else if (arg == "--canon-factors")
      canon_factors = next();
    else {
      std::fprintf(stderr, "unknown argument %s\n", arg.c_str());
      return 2;
    }
  }
  std::printf("threads: %d\n", omp_get_max_threads());
  benchStar(star_rank, star_repeat);
  benchCanonical(canon_rank, canon_pmin, canon_pmax, canon_factors);
  return 0;
}

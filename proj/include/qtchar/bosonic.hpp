#pragma once

#include "qtchar/basis.hpp"
#include "qtchar/heightfunc.hpp"
#include "qtchar/inflate.hpp"
#include "qtchar/torus.hpp"

namespace qtchar {

// Cartan integer of type A_{rank-1}.
int cartanEntry(int rank, int i, int j);

// Image of the generator e_{j,k}: the fundamental character at the
// preimage of (alpha_j, k).
TorusElement generatorImage(const Ring& ring, const HeightFunction& xi, int j,
                            int k);

// Image of the root vector at level k: the right-nested t-commutator of
// generator images e_a, ..., e_{b-1} divided by (t - t^{-1})^{b-a-1}.
// Every division is exact; inexactness is an internal error.
TorusElement eRootImage(const Ring& ring, const HeightFunction& xi, int a,
                        int b, int k);

// Quantum Serre relation at one level between given generator images of
// colors i and j.  Trivially true when i == j.
bool holdsR1(const Ring& ring, const TorusElement& ei, const TorusElement& ej,
             int i, int j);

// Mixed-level straightening: for k < k',
//   e_{i,k} e_{j,k'} = t^{(-1)^{k+k'} c_{i,j}} e_{j,k'} e_{i,k}
//                      + (1 - t^{-2}) delta_{(i,k),(j,k'-1)}.
// `cartan_rank` fixes which Cartan matrix c_{i,j} refers to (the rank of
// the algebra whose relations are being checked, not necessarily the rank
// the images live in).
bool holdsR2(const Ring& ring, const TorusElement& ei, const TorusElement& ej,
             int cartan_rank, int i, int j, int k, int kprime);

// Relations on the generator images of a single presentation.
bool checkR1(const Ring& ring, const HeightFunction& xi, int i, int j, int k);
bool checkR2(const Ring& ring, const HeightFunction& xi, int i, int j, int k,
             int kprime);

// Root-vector splitting: e(alpha_{a,c}) = [e(alpha_{a,b}), e(alpha_{b,c})]
// t-commutator divided by t - t^{-1}, for a < b < c.
bool checkSplitting(const Ring& ring, const HeightFunction& xi, int a, int b,
                    int c, int k);

// Image of e_{i,k} under the composite of the level-k embedding with the
// root-vector assignment of nu, realized inside the target ring.
TorusElement upsilonImage(const Ring& dst, const HeightFunction& xitilde,
                          const IncreasingMap& nu, int i, int k);

}  // namespace qtchar

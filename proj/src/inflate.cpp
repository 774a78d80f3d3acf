#include "qtchar/inflate.hpp"

#include <sstream>
#include <stdexcept>

namespace qtchar {

IncreasingMap::IncreasingMap(int domain_rank, int codomain_rank,
                             std::vector<int> values)
    : n_(domain_rank), ntilde_(codomain_rank), values_(std::move(values)) {
  if (n_ < 2 || ntilde_ < n_)
    throw std::invalid_argument("IncreasingMap: need 2 <= n <= ntilde");
  if (values_.size() != static_cast<size_t>(n_))
    throw std::invalid_argument("IncreasingMap: need n values");
  for (int a = 0; a < n_; ++a) {
    if (values_[a] < 1 || values_[a] > ntilde_)
      throw std::invalid_argument("IncreasingMap: value out of range");
    if (a > 0 && values_[a] <= values_[a - 1])
      throw std::invalid_argument("IncreasingMap: values must increase");
  }
}

IncreasingMap IncreasingMap::dilation(int domain_rank, int codomain_rank) {
  if (codomain_rank % domain_rank != 0)
    throw std::invalid_argument("IncreasingMap: dilation needs n | ntilde");
  const int d = codomain_rank / domain_rank;
  std::vector<int> v(domain_rank);
  for (int a = 1; a <= domain_rank; ++a) v[a - 1] = d * a;
  return IncreasingMap(domain_rank, codomain_rank, std::move(v));
}

int IncreasingMap::apply(int a) const {
  if (a < 1 || a > n_)
    throw std::invalid_argument("IncreasingMap: argument out of range");
  return values_[a - 1];
}

RootLevel IncreasingMap::mapRoot(const RootLevel& rl) const {
  return {apply(rl.a), apply(rl.b), rl.level};
}

IncreasingMap IncreasingMap::composedWith(const IncreasingMap& inner) const {
  if (inner.ntilde_ != n_)
    throw std::invalid_argument("IncreasingMap: ranks not composable");
  std::vector<int> v(inner.n_);
  for (int a = 1; a <= inner.n_; ++a) v[a - 1] = apply(inner.apply(a));
  return IncreasingMap(inner.n_, ntilde_, std::move(v));
}

std::string IncreasingMap::str() const {
  std::ostringstream os;
  os << "(";
  for (int a = 0; a < n_; ++a) os << (a ? "," : "") << values_[a];
  os << ")";
  return os.str();
}

std::vector<IncreasingMap> allIncreasingMaps(int domain_rank,
                                             int codomain_rank) {
  std::vector<IncreasingMap> out;
  std::vector<int> v(domain_rank);
  for (int a = 0; a < domain_rank; ++a) v[a] = a + 1;
  while (true) {
    out.emplace_back(domain_rank, codomain_rank, v);
    int pos = domain_rank - 1;
    while (pos >= 0 && v[pos] == codomain_rank - (domain_rank - 1 - pos))
      --pos;
    if (pos < 0) break;
    ++v[pos];
    for (int a = pos + 1; a < domain_rank; ++a) v[a] = v[a - 1] + 1;
  }
  return out;
}

static void requireIncreasing(const HeightFunction& xi, const char* who) {
  if (!xi.isIncreasing())
    throw std::invalid_argument(std::string(who) +
                                ": height function must be increasing");
}

std::pair<int, int> psiVariable(const HeightFunction& xi,
                                const HeightFunction& xitilde,
                                const IncreasingMap& nu, int i, int p) {
  requireIncreasing(xi, "psiVariable");
  requireIncreasing(xitilde, "psiVariable");
  if (xi.rank() != nu.domainRank() || xitilde.rank() != nu.codomainRank())
    throw std::invalid_argument("psiVariable: rank mismatch");
  const RootLevel rl = phi(xi, i, p);
  return phiInv(xitilde, nu.mapRoot(rl));
}

YMonomial psiDominant(const HeightFunction& xi, const HeightFunction& xitilde,
                      const IncreasingMap& nu, const YMonomial& m) {
  if (m.rank() != nu.domainRank())
    throw std::invalid_argument("psiDominant: rank mismatch");
  if (!m.isDominant())
    throw std::invalid_argument("psiDominant: monomial must be dominant");
  YMonomial out = YMonomial::unit(nu.codomainRank());
  for (const auto& f : m.factors()) {
    const auto [j, s] = psiVariable(xi, xitilde, nu, f.i, f.p);
    out *= YMonomial::generator(nu.codomainRank(), j, s, f.exp);
  }
  return out;
}

TorusElement inflate(const Ring& src, const Ring& dst,
                     const HeightFunction& xi, const HeightFunction& xitilde,
                     const IncreasingMap& nu, const TorusElement& x) {
  if (src.rank() != nu.domainRank() || dst.rank() != nu.codomainRank())
    throw std::invalid_argument("inflate: rank mismatch");
  const StandardExpansion exp = src.expandInStandard(x);
  TorusElement out(dst.rank());
  for (const auto& [m, c] : exp.coords)
    out += dst.standard(psiDominant(xi, xitilde, nu, m)).scaled(c);
  return out;
}

bool inflationPreservesCanonical(const Ring& src, const Ring& dst,
                                 const HeightFunction& xi,
                                 const HeightFunction& xitilde,
                                 const IncreasingMap& nu, const YMonomial& m) {
  const TorusElement lhs = inflate(src, dst, xi, xitilde, nu, src.canonical(m));
  const TorusElement rhs = dst.canonical(psiDominant(xi, xitilde, nu, m));
  return lhs == rhs;
}

TorusElement classicalDilationInflate(const Ring& src, const Ring& dst,
                                      const TorusElement& x) {
  const int n = src.rank();
  const int nn = dst.rank();
  if (x.rank() != n)
    throw std::invalid_argument("classicalDilationInflate: rank mismatch");
  if (nn % n != 0)
    throw std::invalid_argument("classicalDilationInflate: needs n | ntilde");
  if (x != x.evalAtOne())
    throw std::invalid_argument(
        "classicalDilationInflate: argument must be classical");
  const int d = nn / n;
  TorusElement res = x;
  TorusElement out(nn);
  while (!res.isZero()) {
    const YMonomial* top = maximalDominant(res.terms());
    if (top == nullptr)
      throw NotInSpanError(
          "classicalDilationInflate: residual has no dominant monomial");
    const YMonomial m = *top;
    const TCoeff c = res.coeff(m);
    TorusElement src_prod = TorusElement::unit(n);
    TorusElement dst_prod = TorusElement::unit(nn);
    for (const auto& f : m.factors())
      for (int e = 0; e < f.exp; ++e) {
        src_prod = mulPlain(src_prod, src.fundamental(f.i, f.p).evalAtOne());
        dst_prod =
            mulPlain(dst_prod, dst.fundamental(d * f.i, d * f.p).evalAtOne());
      }
    res -= src_prod.scaled(c);
    out += dst_prod.scaled(c);
  }
  return out;
}

}  // namespace qtchar

#include "qtchar/basis.hpp"

#include <algorithm>
#include <sstream>

#include "qtchar/qchar.hpp"

namespace qtchar {

std::string StandardExpansion::str() const {
  if (coords.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : coords) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*E[" << m.str() << "]";
    first = false;
  }
  return os.str();
}

bool nakajimaLeq(const YMonomial& lo, const YMonomial& hi) {
  if (lo.rank() != hi.rank())
    throw std::invalid_argument("nakajimaLeq: rank mismatch");
  const int n = lo.rank();
  YMonomial q = hi * lo.inverse();
  if (q.isUnit()) return true;
  // Weight budget: if q = prod A_{j,s}^{a_{j,s}} then the per-color totals
  // a_j solve C a = u, where u is the per-color weight of q.  The inverse
  // Cartan matrix of A_{n-1} is (min(j,k) - jk/n).
  const std::vector<long long> u = q.colorWeights();
  long long budget = 0;
  for (int j = 1; j <= n - 1; ++j) {
    long long num = 0;
    for (int k = 1; k <= n - 1; ++k)
      num += (static_cast<long long>(n) * std::min(j, k) -
              static_cast<long long>(j) * k) *
             u[k];
    if (num % n != 0 || num < 0) return false;
    budget += num / n;
  }
  // Peel from the top spectral parameter: the only A-variables that can
  // reach parameter P are those at parameter P-1, one per color.
  long long used = 0;
  while (!q.isUnit()) {
    const int top_p = q.entries().rbegin()->first.first;
    std::vector<std::pair<int, int>> peel;  // (color, multiplicity)
    for (auto it = q.entries().rbegin();
         it != q.entries().rend() && it->first.first == top_p; ++it) {
      if (it->second < 0) return false;
      peel.emplace_back(it->first.second, it->second);
    }
    for (const auto& [color, mult] : peel) {
      used += mult;
      if (used > budget) return false;
      q *= aVariable(n, color, top_p - 1).pow(mult).inverse();
    }
  }
  return true;
}

Ring::Ring(int rank) : n_(rank), pt_(rank) {}

TorusElement Ring::fundamental(int i, int p) const {
  YMonomial::checkIndex(n_, i, p);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = fund_.find(i);
    if (it != fund_.end()) return shiftSpectral(it->second, p - i);
  }
  TorusElement rep = fundamentalQCharExpand(n_, i, i);
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = fund_.emplace(i, std::move(rep));
  return shiftSpectral(it->second, p - i);
}

TorusElement Ring::standardOrdered(
    const std::vector<std::pair<int, int>>& factors) const {
  for (size_t k = 0; k + 1 < factors.size(); ++k)
    if (factors[k].second < factors[k + 1].second)
      throw std::invalid_argument(
          "standardOrdered: parameters must be nonincreasing");
  TorusElement prod = TorusElement::unit(n_);
  long long twist = 0;
  std::vector<YMonomial> gens;
  gens.reserve(factors.size());
  for (const auto& [i, p] : factors)
    gens.push_back(YMonomial::generator(n_, i, p));
  for (size_t k = 0; k < gens.size(); ++k)
    for (size_t l = k + 1; l < gens.size(); ++l)
      twist += pt_.pairing(gens[k], gens[l]);
  if (twist > (1LL << 30) || twist < -(1LL << 30))
    throw std::overflow_error("standardOrdered: twist out of range");
  for (const auto& [i, p] : factors) prod = starMul(pt_, prod, fundamental(i, p));
  return prod.scaled(TCoeff::tPower(static_cast<int>(-twist)));
}

TorusElement Ring::standard(const YMonomial& m) const {
  if (m.rank() != n_) throw std::invalid_argument("standard: rank mismatch");
  if (!m.isDominant())
    throw std::invalid_argument("standard: monomial must be dominant");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = standard_.find(m);
    if (it != standard_.end()) return it->second;
  }
  std::vector<std::pair<int, int>> factors;
  for (const auto& f : m.factors())
    for (int c = 0; c < f.exp; ++c) factors.emplace_back(f.i, f.p);
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  TorusElement out = standardOrdered(factors);
  std::lock_guard<std::mutex> lock(mu_);
  return standard_.emplace(m, std::move(out)).first->second;
}

const YMonomial* maximalDominant(const std::map<YMonomial, TCoeff>& terms) {
  std::vector<const YMonomial*> dominant;
  for (const auto& [m, c] : terms)
    if (m.isDominant()) dominant.push_back(&m);
  if (dominant.empty()) return nullptr;
  for (const YMonomial* cand : dominant) {
    bool maximal = true;
    for (const YMonomial* other : dominant) {
      if (other == cand) continue;
      if (*cand != *other && nakajimaLeq(*cand, *other)) {
        maximal = false;
        break;
      }
    }
    if (maximal) return cand;  // first in canonical order wins
  }
  return nullptr;  // unreachable: finite poset has a maximal element
}

StandardExpansion Ring::expandInStandard(const TorusElement& x) const {
  if (x.rank() != n_)
    throw std::invalid_argument("expandInStandard: rank mismatch");
  StandardExpansion out{n_, {}};
  TorusElement res = x;
  long steps = 0;
  while (!res.isZero()) {
    const YMonomial* top = maximalDominant(res.terms());
    if (top == nullptr)
      throw NotInSpanError(
          "expandInStandard: residual has no dominant monomial");
    const YMonomial m = *top;
    const TCoeff c = res.coeff(m);
    out.coords[m] = c;
    res -= standard(m).scaled(c);
    if (++steps > 200000)
      throw std::logic_error("expandInStandard: failed to terminate");
  }
  return out;
}

TorusElement Ring::fromStandard(const StandardExpansion& e) const {
  if (e.rank != n_)
    throw std::invalid_argument("fromStandard: rank mismatch");
  TorusElement out(n_);
  for (const auto& [m, c] : e.coords) out += standard(m).scaled(c);
  return out;
}

TorusElement Ring::canonicalize(const YMonomial& top,
                                TorusElement seed) const {
  long steps = 0;
  while (true) {
    TorusElement defect = seed.bar() - seed;
    if (defect.isZero()) return seed;
    StandardExpansion exp = expandInStandard(defect);
    // the maximal coordinate of the defect drives the correction
    const YMonomial* target = nullptr;
    for (const auto& [m, c] : exp.coords) {
      bool maximal = true;
      for (const auto& [m2, c2] : exp.coords)
        if (m != m2 && nakajimaLeq(m, m2)) {
          maximal = false;
          break;
        }
      if (maximal) {
        target = &m;
        break;
      }
    }
    if (target == nullptr)
      throw std::logic_error("canonicalize: defect without maximal term");
    if (*target == top || !(nakajimaLeq(*target, top)))
      throw std::logic_error("canonicalize: defect not below the top");
    const TCoeff d = exp.coords.at(*target);
    if (d.constantTerm() != 0)
      throw std::logic_error("canonicalize: defect has constant term");
    if (d.bar() != -d)
      throw std::logic_error("canonicalize: defect not bar-antisymmetric");
    // alpha - bar(alpha) = d has the unique negative-part solution
    const TCoeff alpha = d.strictlyNegativePart();
    seed += canonical(*target).scaled(alpha);
    if (++steps > 10000)
      throw std::logic_error("canonicalize: failed to terminate");
  }
}

TorusElement Ring::canonical(const YMonomial& m) const {
  if (m.rank() != n_) throw std::invalid_argument("canonical: rank mismatch");
  if (!m.isDominant())
    throw std::invalid_argument("canonical: monomial must be dominant");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = canonical_.find(m);
    if (it != canonical_.end()) return it->second;
  }
  TorusElement out = canonicalize(m, standard(m));
  std::lock_guard<std::mutex> lock(mu_);
  return canonical_.emplace(m, std::move(out)).first->second;
}

std::vector<std::pair<YMonomial, TorusElement>> Ring::canonicalCache() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<std::pair<YMonomial, TorusElement>> out;
  out.reserve(canonical_.size());
  for (const auto& [m, body] : canonical_) out.emplace_back(m, body);
  return out;
}

bool isCanonicalForm(const Ring& ring, const YMonomial& top,
                     const TorusElement& body) {
  if (body.bar() != body) return false;
  StandardExpansion exp = ring.expandInStandard(body);
  auto it = exp.coords.find(top);
  if (it == exp.coords.end() || !it->second.isOne()) return false;
  for (const auto& [m, c] : exp.coords) {
    if (m == top) continue;
    if (!c.inTInverseZ()) return false;
    if (!nakajimaLeq(m, top) || m == top) return false;
  }
  return true;
}

}  // namespace qtchar

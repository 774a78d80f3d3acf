#include "qtchar/torus.hpp"

#include <omp.h>

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qtchar {

TorusElement::TorusElement(int rank) : rank_(rank) {
  if (rank < 2) throw std::invalid_argument("TorusElement: rank must be >= 2");
}

TorusElement TorusElement::unit(int rank) {
  return monomial(YMonomial::unit(rank));
}

TorusElement TorusElement::monomial(const YMonomial& m, TCoeff c) {
  TorusElement x(m.rank());
  x.add(m, c);
  return x;
}

TCoeff TorusElement::coeff(const YMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? TCoeff::zero() : it->second;
}

void TorusElement::add(const YMonomial& m, const TCoeff& c) {
  if (m.rank() != rank_)
    throw std::invalid_argument("TorusElement: rank mismatch");
  if (c.isZero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  if (rank_ != o.rank_)
    throw std::invalid_argument("TorusElement: rank mismatch");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  if (rank_ != o.rank_)
    throw std::invalid_argument("TorusElement: rank mismatch");
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

TorusElement TorusElement::operator-() const {
  TorusElement r(rank_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

TorusElement TorusElement::scaled(const TCoeff& c) const {
  TorusElement r(rank_);
  if (c.isZero()) return r;
  for (const auto& [m, x] : terms_) {
    TCoeff y = x * c;
    if (!y.isZero()) r.terms_.emplace(m, std::move(y));
  }
  return r;
}

TorusElement TorusElement::bar() const {
  TorusElement r(rank_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.bar());
  return r;
}

TorusElement TorusElement::evalAtOne() const {
  TorusElement r(rank_);
  for (const auto& [m, c] : terms_)
    r.add(m, TCoeff::term(c.evalAtOne(), 0));
  return r;
}

std::string TorusElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    const bool scalar_one = c.isOne();
    const bool simple = c.terms().size() == 1;
    if (!scalar_one) {
      if (simple)
        os << c.str();
      else
        os << "(" << c.str() << ")";
      if (!m.isUnit()) os << "*";
    }
    if (!m.isUnit())
      os << m.str();
    else if (scalar_one)
      os << "1";
    first = false;
  }
  return os.str();
}

static int twistHalfExp(const PairingTable& pt, const YMonomial& a,
                        const YMonomial& b) {
  const long long n = pt.pairing(a, b);
  if (n > (1LL << 30) || n < -(1LL << 30))
    throw std::overflow_error("starMul: pairing exponent out of range");
  return static_cast<int>(n);
}

TorusElement starMul(const PairingTable& pt, const TorusElement& a,
                     const TorusElement& b) {
  if (a.rank() != pt.rank() || b.rank() != pt.rank())
    throw std::invalid_argument("starMul: rank mismatch");
  TorusElement r(a.rank());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const int h = twistHalfExp(pt, ma, mb);
      r.add(ma * mb, ca * cb * TCoeff::tPower(h));
    }
  return r;
}

TorusElement starMulParallel(const PairingTable& pt, const TorusElement& a,
                             const TorusElement& b) {
  if (a.rank() != pt.rank() || b.rank() != pt.rank())
    throw std::invalid_argument("starMul: rank mismatch");
  std::vector<const std::pair<const YMonomial, TCoeff>*> lhs;
  lhs.reserve(a.termCount());
  for (const auto& term : a.terms()) lhs.push_back(&term);
  TorusElement r(a.rank());
  // Exact integer arithmetic: merge order cannot change the sum.
#pragma omp parallel
  {
    TorusElement local(a.rank());
#pragma omp for nowait schedule(dynamic)
    for (long idx = 0; idx < static_cast<long>(lhs.size()); ++idx) {
      const auto& [ma, ca] = *lhs[idx];
      for (const auto& [mb, cb] : b.terms()) {
        const int h = twistHalfExp(pt, ma, mb);
        local.add(ma * mb, ca * cb * TCoeff::tPower(h));
      }
    }
#pragma omp critical(qtchar_starmul_merge)
    r += local;
  }
  return r;
}

TorusElement mulPlain(const TorusElement& a, const TorusElement& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("mulPlain: rank mismatch");
  TorusElement r(a.rank());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add(ma * mb, ca * cb);
  return r;
}

TorusElement tCommutator(const PairingTable& pt, const TorusElement& x,
                         const TorusElement& y) {
  TorusElement r = starMul(pt, x, y).scaled(TCoeff::tPower(1));
  r -= starMul(pt, y, x).scaled(TCoeff::tPower(-1));
  return r;
}

nlohmann::json toJson(const YMonomial& m) {
  nlohmann::json jm = nlohmann::json::array();
  for (const auto& f : m.factors())
    jm.push_back(nlohmann::json::array({f.i, f.p, f.exp}));
  return jm;
}

nlohmann::json toJson(const TCoeff& c) {
  nlohmann::json jc = nlohmann::json::array();
  for (const auto& [e, v] : c.terms())
    jc.push_back(nlohmann::json::array({e, v.str()}));
  return jc;
}

nlohmann::json toJson(const TorusElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : x.terms())
    terms.push_back({{"monomial", toJson(m)}, {"coeff", toJson(c)}});
  return nlohmann::json{{"rank", x.rank()}, {"terms", terms}};
}

TorusElement torusElementFromJson(const nlohmann::json& j) {
  const int rank = j.at("rank").get<int>();
  TorusElement x(rank);
  for (const auto& jt : j.at("terms")) {
    YMonomial m(rank);
    for (const auto& jf : jt.at("monomial")) {
      const int i = jf.at(0).get<int>();
      const int p = jf.at(1).get<int>();
      const int e = jf.at(2).get<int>();
      m *= YMonomial::generator(rank, i, p, e);
    }
    TCoeff c;
    for (const auto& jc : jt.at("coeff"))
      c += TCoeff::term(BigInt(jc.at(1).get<std::string>()),
                        jc.at(0).get<int>());
    x.add(m, c);
  }
  return x;
}

}  // namespace qtchar

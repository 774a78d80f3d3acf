#include "qtchar/tcoeff.hpp"

#include <sstream>
#include <stdexcept>

namespace qtchar {

TCoeff TCoeff::term(BigInt c, int half_exp) {
  TCoeff r;
  if (c != 0) r.terms_.emplace(half_exp, std::move(c));
  return r;
}

TCoeff TCoeff::tMinusTInverse() { return tPower(2) - tPower(-2); }

TCoeff TCoeff::tPlusTInverse() { return tPower(2) + tPower(-2); }

bool TCoeff::isOne() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

BigInt TCoeff::coefficient(int half_exp) const {
  auto it = terms_.find(half_exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TCoeff::addTerm(int half_exp, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(half_exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TCoeff& TCoeff::operator+=(const TCoeff& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

TCoeff& TCoeff::operator-=(const TCoeff& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

TCoeff TCoeff::operator-() const {
  TCoeff r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

TCoeff operator*(const TCoeff& a, const TCoeff& b) {
  TCoeff r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.addTerm(ea + eb, ca * cb);
  return r;
}

TCoeff TCoeff::bar() const {
  TCoeff r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

BigInt TCoeff::evalAtOne() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

DivRem TCoeff::divmod(const TCoeff& d) const {
  if (d.isZero()) throw std::invalid_argument("TCoeff: division by zero");
  DivRem out;
  if (isZero()) return out;
  // Shift both operands into Z[T] so ordinary polynomial division applies;
  // units T^k do not affect divisibility.
  const int shift_a = terms_.begin()->first;
  const int shift_b = d.terms_.begin()->first;
  TCoeff rem;
  for (const auto& [e, c] : terms_) rem.terms_.emplace(e - shift_a, c);
  TCoeff div;
  for (const auto& [e, c] : d.terms_) div.terms_.emplace(e - shift_b, c);
  const auto lead = std::prev(div.terms_.end());
  TCoeff quot;
  while (!rem.isZero()) {
    const auto top = std::prev(rem.terms_.end());
    if (top->first < lead->first) break;  // proper remainder
    BigInt q = top->second / lead->second;
    if (q * lead->second != top->second) break;  // inexact leading step
    TCoeff piece = term(q, top->first - lead->first);
    quot += piece;
    rem -= piece * div;
  }
  for (const auto& [e, c] : quot.terms_)
    out.quotient.terms_.emplace(e + shift_a - shift_b, c);
  for (const auto& [e, c] : rem.terms_)
    out.remainder.terms_.emplace(e + shift_a, c);
  return out;
}

std::optional<TCoeff> TCoeff::dividedBy(const TCoeff& d) const {
  DivRem dr = divmod(d);
  if (!dr.remainder.isZero()) return std::nullopt;
  return dr.quotient;
}

TCoeff TCoeff::strictlyNegativePart() const {
  TCoeff r;
  for (const auto& [e, c] : terms_) {
    if (e < 0) r.terms_.emplace(e, c);
  }
  return r;
}

bool TCoeff::inTInverseZ() const {
  for (const auto& [e, c] : terms_) {
    if (e % 2 != 0 || e > -2) return false;
  }
  return true;
}

std::string TCoeff::str() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest power first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    BigInt c = it->second;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    const int e = it->first;
    if (e == 0) {
      os << c;
    } else {
      if (c == -1)
        os << "-";
      else if (c != 1)
        os << c << "*";
      os << "t";
      if (e != 2) {
        if (e % 2 == 0)
          os << "^" << e / 2;
        else
          os << "^(" << e << "/2)";
      }
    }
    first = false;
  }
  return os.str();
}

}  // namespace qtchar

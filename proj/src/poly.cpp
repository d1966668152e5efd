#include "posmat/poly.hpp"

#include <algorithm>
#include <cassert>

#include "posmat/error.hpp"

namespace posmat {

Poly::Poly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::constant(const mpq_class& c) {
  Poly p;
  if (c != 0) p.coeffs_.push_back(c);
  return p;
}

Poly Poly::monomial(const mpq_class& c, int degree) {
  Poly p;
  if (c != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, mpq_class(0));
    p.coeffs_.back() = c;
  }
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  const auto& big = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const auto& small = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  Poly r = big;
  for (std::size_t i = 0; i < small.coeffs_.size(); ++i) r.coeffs_[i] += small.coeffs_[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  Poly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw Error("polynomial division by zero");
  Poly rem = dividend;
  Poly quot;
  const int dd = divisor.degree();
  if (rem.degree() >= dd) {
    quot.coeffs_.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, mpq_class(0));
  }
  const mpq_class inv_lc = 1 / divisor.lc();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    mpq_class f = rem.lc() * inv_lc;
    quot.coeffs_[static_cast<std::size_t>(shift)] = f;
    for (int k = 0; k <= dd; ++k) {
      rem.coeffs_[static_cast<std::size_t>(k + shift)] -= f * divisor.coeffs_[static_cast<std::size_t>(k)];
    }
    // The leading term cancels exactly; drop it even if rounding is exact anyway.
    rem.coeffs_.pop_back();
    rem.trim();
  }
  quot.trim();
  return {std::move(quot), std::move(rem)};
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / lc());
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly Poly::substitute_affine(const mpq_class& a, const mpq_class& b) const {
  if (b == 0) return substitute_scale(a);
  // Horner in the substituted variable.
  Poly lin(std::vector<mpq_class>{b, a});
  Poly r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r = r * lin + Poly::constant(*it);
  }
  return r;
}

Poly Poly::substitute_scale(const mpq_class& q) const {
  Poly r = *this;
  mpq_class power = 1;
  for (auto& c : r.coeffs_) {
    c *= power;
    power *= q;
  }
  r.trim();
  return r;
}

mpq_class Poly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const mpq_class& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    mpq_class mag = negative ? mpq_class(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "s";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  canonicalize();
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
  }
  if (den_.lc() != 1) {
    const mpq_class inv = 1 / den_.lc();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

int RatFun::sign() const {
  if (num_.is_zero()) return 0;
  return sgn(num_.lc());
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Canonical{}); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RatFun(a.num_ + b.num_, a.den_, RatFun::Canonical{});
    return RatFun(a.num_ + b.num_, a.den_);
  }
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) {
    return RatFun(a.num_ * b.num_, a.den_, RatFun::Canonical{});
  }
  if (a.is_constant()) return RatFun(b.num_.scaled(a.num_.lc()), b.den_, RatFun::Canonical{});
  if (b.is_constant()) return RatFun(a.num_.scaled(b.num_.lc()), a.den_, RatFun::Canonical{});
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw Error("inverse of zero rational function");
  return RatFun(den_, num_);
}

RatFun RatFun::substitute_affine(const mpq_class& a, const mpq_class& b) const {
  if (den_.is_one()) return RatFun(num_.substitute_affine(a, b));
  return RatFun(num_.substitute_affine(a, b), den_.substitute_affine(a, b));
}

RatFun RatFun::substitute_scale(const mpq_class& q) const {
  if (den_.is_one()) return RatFun(num_.substitute_scale(q), den_, Canonical{});
  // Scaling the variable preserves coprimality; only the monic normalization moves.
  Poly num = num_.substitute_scale(q);
  Poly den = den_.substitute_scale(q);
  const mpq_class inv = 1 / den.lc();
  return RatFun(num.scaled(inv), den.scaled(inv), Canonical{});
}

std::string RatFun::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace posmat

#include "posmat/ring.hpp"

#include "posmat/error.hpp"

namespace posmat {

namespace {

mpq_class pow2(long k) {
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(k < 0 ? -k : k));
  return k < 0 ? mpq_class(1, p) : mpq_class(p);
}

Dyadic make_dyadic(mpz_class num, long exp) {
  if (num == 0) return {0, 0};
  const auto shift = mpz_scan1(num.get_mpz_t(), 0);
  if (shift > 0) {
    mpz_fdiv_q_2exp(num.get_mpz_t(), num.get_mpz_t(), shift);
    exp += static_cast<long>(shift);
  }
  return {std::move(num), exp};
}

mpq_class dyadic_value(const Dyadic& d) { return mpq_class(d.num) * pow2(d.exp); }

Dyadic dyadic_add(const Dyadic& a, const Dyadic& b) {
  if (a.num == 0) return b;
  if (b.num == 0) return a;
  const long e = std::min(a.exp, b.exp);
  mpz_class x = a.num;
  mpz_class y = b.num;
  mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(a.exp - e));
  mpz_mul_2exp(y.get_mpz_t(), y.get_mpz_t(), static_cast<mp_bitcnt_t>(b.exp - e));
  return make_dyadic(x + y, e);
}

SkewPoly skew_add(const SkewPoly& a, const SkewPoly& b) {
  SkewPoly r = a;
  for (const auto& [deg, coef] : b.terms) {
    auto it = r.terms.find(deg);
    if (it == r.terms.end()) {
      r.terms.emplace(deg, coef);
      continue;
    }
    it->second = it->second + coef;
    if (it->second.is_zero()) r.terms.erase(it);
  }
  return r;
}

SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b) {
  SkewPoly r;
  for (const auto& [i, f] : a.terms) {
    for (const auto& [j, g] : b.terms) {
      // (f t^i)(g t^j) = f * g(2^i s) * t^(i+j)
      RatFun term = f * twist(g, i);
      auto [it, inserted] = r.terms.emplace(i + j, term);
      if (!inserted) {
        it->second = it->second + term;
        if (it->second.is_zero()) r.terms.erase(it);
      }
    }
  }
  return r;
}

void require_same(const RingElement& a, const RingElement& b) {
  if (a.ring() != b.ring()) throw RingMismatch();
}

}  // namespace

RatFun twist(const RatFun& f, long k) {
  if (k == 0 || f.is_constant()) return f;
  return f.substitute_scale(pow2(k));
}

std::string_view ring_name(RingId ring) {
  switch (ring) {
    case RingId::Q: return "Q";
    case RingId::Dyadic: return "DYADIC";
    case RingId::RatFun: return "RATFUN";
    case RingId::Skew: return "SKEW";
  }
  return "?";
}

RingId parse_ring(std::string_view name) {
  if (name == "Q") return RingId::Q;
  if (name == "DYADIC") return RingId::Dyadic;
  if (name == "RATFUN") return RingId::RatFun;
  if (name == "SKEW") return RingId::Skew;
  throw ParseError("unknown ring '" + std::string(name) + "'");
}

RingElement::RingElement(RingId ring) : ring_(ring) {
  switch (ring) {
    case RingId::Q: payload_ = mpq_class(0); break;
    case RingId::Dyadic: payload_ = Dyadic{}; break;
    case RingId::RatFun: payload_ = RatFun{}; break;
    case RingId::Skew: payload_ = SkewPoly{}; break;
  }
}

RingElement RingElement::integer(RingId ring, long value) { return rational(ring, mpq_class(value)); }

RingElement RingElement::rational(RingId ring, const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  switch (ring) {
    case RingId::Q: return {ring, v};
    case RingId::Dyadic: {
      const mpz_class& den = v.get_den();
      if (mpz_popcount(den.get_mpz_t()) != 1) {
        throw NotRepresentable(v.get_str() + " is not a dyadic rational");
      }
      const long shift = static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
      return {ring, make_dyadic(v.get_num(), -shift)};
    }
    case RingId::RatFun: return {ring, RatFun::constant(v)};
    case RingId::Skew: {
      SkewPoly p;
      if (v != 0) p.terms.emplace(0, RatFun::constant(v));
      return {ring, std::move(p)};
    }
  }
  throw Error("unreachable");
}

RingElement RingElement::ratfun(RingId ring, RatFun value) {
  if (ring == RingId::RatFun) return {ring, std::move(value)};
  if (ring == RingId::Skew) {
    SkewPoly p;
    if (!value.is_zero()) p.terms.emplace(0, std::move(value));
    return {ring, std::move(p)};
  }
  auto c = value.is_constant() ? std::optional<mpq_class>(value.leading_ratio()) : std::nullopt;
  if (!c) throw NotRepresentable("rational function " + value.str() + " outside Q(s)-rings");
  return rational(ring, *c);
}

RingElement RingElement::skew(SkewPoly value) {
  for (auto it = value.terms.begin(); it != value.terms.end();) {
    it = it->second.is_zero() ? value.terms.erase(it) : std::next(it);
  }
  return {RingId::Skew, std::move(value)};
}

RingElement RingElement::dyadic(mpz_class num, long exp) {
  return {RingId::Dyadic, make_dyadic(std::move(num), exp)};
}

RingElement RingElement::s(RingId ring) {
  if (ring != RingId::RatFun && ring != RingId::Skew) {
    throw UnsupportedRing("ring " + std::string(ring_name(ring)) + " has no indeterminate s");
  }
  return ratfun(ring, RatFun::variable());
}

RingElement RingElement::t() {
  SkewPoly p;
  p.terms.emplace(1, RatFun::constant(1));
  return {RingId::Skew, std::move(p)};
}

int RingElement::sign() const {
  switch (ring_) {
    case RingId::Q: return sgn(std::get<mpq_class>(payload_));
    case RingId::Dyadic: return sgn(std::get<Dyadic>(payload_).num);
    case RingId::RatFun: return std::get<RatFun>(payload_).sign();
    case RingId::Skew: {
      const auto& terms = std::get<SkewPoly>(payload_).terms;
      return terms.empty() ? 0 : terms.begin()->second.sign();
    }
  }
  return 0;
}

bool RingElement::is_one() const { return *this == one(ring_); }

RingElement RingElement::operator-() const {
  switch (ring_) {
    case RingId::Q: return {ring_, mpq_class(-std::get<mpq_class>(payload_))};
    case RingId::Dyadic: {
      const auto& d = std::get<Dyadic>(payload_);
      return {ring_, Dyadic{-d.num, d.exp}};
    }
    case RingId::RatFun: return {ring_, -std::get<RatFun>(payload_)};
    case RingId::Skew: {
      SkewPoly p = std::get<SkewPoly>(payload_);
      for (auto& [deg, coef] : p.terms) coef = -coef;
      return {ring_, std::move(p)};
    }
  }
  throw Error("unreachable");
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  switch (a.ring_) {
    case RingId::Q:
      return {a.ring_, mpq_class(std::get<mpq_class>(a.payload_) + std::get<mpq_class>(b.payload_))};
    case RingId::Dyadic:
      return {a.ring_, dyadic_add(std::get<Dyadic>(a.payload_), std::get<Dyadic>(b.payload_))};
    case RingId::RatFun:
      return {a.ring_, std::get<RatFun>(a.payload_) + std::get<RatFun>(b.payload_)};
    case RingId::Skew:
      return {a.ring_, skew_add(std::get<SkewPoly>(a.payload_), std::get<SkewPoly>(b.payload_))};
  }
  throw Error("unreachable");
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  switch (a.ring_) {
    case RingId::Q:
      return {a.ring_, mpq_class(std::get<mpq_class>(a.payload_) * std::get<mpq_class>(b.payload_))};
    case RingId::Dyadic: {
      const auto& x = std::get<Dyadic>(a.payload_);
      const auto& y = std::get<Dyadic>(b.payload_);
      if (x.num == 0 || y.num == 0) return RingElement(a.ring_);
      return {a.ring_, Dyadic{x.num * y.num, x.exp + y.exp}};
    }
    case RingId::RatFun:
      return {a.ring_, std::get<RatFun>(a.payload_) * std::get<RatFun>(b.payload_)};
    case RingId::Skew:
      return {a.ring_, skew_mul(std::get<SkewPoly>(a.payload_), std::get<SkewPoly>(b.payload_))};
  }
  throw Error("unreachable");
}

std::optional<RingElement> RingElement::try_invert() const {
  switch (ring_) {
    case RingId::Q: {
      const auto& q = std::get<mpq_class>(payload_);
      if (q == 0) return std::nullopt;
      return RingElement(ring_, mpq_class(1 / q));
    }
    case RingId::Dyadic: {
      const auto& d = std::get<Dyadic>(payload_);
      if (d.num != 1 && d.num != -1) return std::nullopt;
      return RingElement(ring_, Dyadic{d.num, -d.exp});
    }
    case RingId::RatFun: {
      const auto& f = std::get<RatFun>(payload_);
      if (f.is_zero()) return std::nullopt;
      return RingElement(ring_, f.inverse());
    }
    case RingId::Skew: {
      const auto& terms = std::get<SkewPoly>(payload_).terms;
      if (terms.size() != 1) return std::nullopt;
      const auto& [k, f] = *terms.begin();
      // (f t^k)^(-1) = t^(-k) f^(-1) = f^(-1)(2^(-k) s) t^(-k)
      SkewPoly inv;
      inv.terms.emplace(-k, twist(f.inverse(), -k));
      return RingElement(ring_, std::move(inv));
    }
  }
  return std::nullopt;
}

RingElement RingElement::inverse() const {
  auto inv = try_invert();
  if (!inv) throw NotAUnit(str() + " is not a unit of " + std::string(ring_name(ring_)));
  return *std::move(inv);
}

bool RingElement::is_central() const {
  if (is_commutative(ring_)) return true;
  const RingElement s_gen = s(ring_);
  const RingElement t_gen = t();
  return *this * s_gen == s_gen * *this && *this * t_gen == t_gen * *this;
}

std::optional<mpq_class> RingElement::as_rational() const {
  switch (ring_) {
    case RingId::Q: return std::get<mpq_class>(payload_);
    case RingId::Dyadic: return dyadic_value(std::get<Dyadic>(payload_));
    case RingId::RatFun: {
      const auto& f = std::get<RatFun>(payload_);
      if (!f.is_constant()) return std::nullopt;
      return f.is_zero() ? mpq_class(0) : f.leading_ratio();
    }
    case RingId::Skew: {
      auto f = as_ratfun();
      if (!f || !f->is_constant()) return std::nullopt;
      return f->is_zero() ? mpq_class(0) : f->leading_ratio();
    }
  }
  return std::nullopt;
}

std::optional<RatFun> RingElement::as_ratfun() const {
  if (ring_ == RingId::RatFun) return std::get<RatFun>(payload_);
  if (ring_ == RingId::Skew) {
    const auto& terms = std::get<SkewPoly>(payload_).terms;
    if (terms.empty()) return RatFun{};
    if (terms.size() == 1 && terms.begin()->first == 0) return terms.begin()->second;
    return std::nullopt;
  }
  auto q = as_rational();
  return RatFun::constant(*q);
}

mpq_class RingElement::leading_ratio() const {
  if (ring_ == RingId::Skew) throw UnsupportedRing("leading ratio is defined on commutative rings only");
  if (ring_ == RingId::RatFun) return std::get<RatFun>(payload_).leading_ratio();
  return *as_rational();
}

int RingElement::s_degree() const {
  if (ring_ == RingId::Skew) throw UnsupportedRing("s-degree is defined on commutative rings only");
  if (ring_ == RingId::RatFun) return std::get<RatFun>(payload_).degree();
  return 0;
}

std::string RingElement::str() const {
  switch (ring_) {
    case RingId::Q: return std::get<mpq_class>(payload_).get_str();
    case RingId::Dyadic: return dyadic_value(std::get<Dyadic>(payload_)).get_str();
    case RingId::RatFun: return std::get<RatFun>(payload_).str();
    case RingId::Skew: {
      const auto& terms = std::get<SkewPoly>(payload_).terms;
      if (terms.empty()) return "0";
      std::string out;
      for (const auto& [deg, coef] : terms) {
        if (!out.empty()) out += " + ";
        if (deg == 0) {
          out += coef.is_constant() ? coef.str() : "(" + coef.str() + ")";
          continue;
        }
        if (!(coef == RatFun::constant(1))) out += "(" + coef.str() + ")*";
        out += "t";
        if (deg != 1) out += "^" + std::to_string(deg);
      }
      return out;
    }
  }
  return "?";
}

RingElement pow(const RingElement& base, unsigned exponent) {
  RingElement result = RingElement::one(base.ring());
  RingElement b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

bool less(const RingElement& a, const RingElement& b) { return (b - a).is_positive(); }

}  // namespace posmat

#pragma once

// Exact arithmetic and linear order for the catalog of ordered rings:
//
//   Q       rationals
//   DYADIC  Z[1/2]
//   RATFUN  Q(s), ordered so that s exceeds every rational
//   SKEW    Laurent polynomials in t over Q(s) with t*f(s) = f(2s)*t,
//           positive iff the coefficient of the lowest power of t is positive
//
// Every value is kept in canonical form, so equality is structural.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "posmat/poly.hpp"

namespace posmat {

enum class RingId { Q, Dyadic, RatFun, Skew };

std::string_view ring_name(RingId ring);
/// Accepts "Q", "DYADIC", "RATFUN", "SKEW"; throws ParseError otherwise.
RingId parse_ring(std::string_view name);
inline bool is_commutative(RingId ring) { return ring != RingId::Skew; }

/// num * 2^exp with num odd, or num = 0 and exp = 0.
struct Dyadic {
  mpz_class num;
  long exp = 0;
  friend bool operator==(const Dyadic&, const Dyadic&) = default;
};

/// Finite map from t-degree to nonzero coefficient in Q(s).
struct SkewPoly {
  std::map<long, RatFun> terms;
  friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.terms == b.terms; }
};

class RingElement {
 public:
  using Payload = std::variant<mpq_class, Dyadic, RatFun, SkewPoly>;

  /// Zero of Q.
  RingElement() : RingElement(RingId::Q) {}
  /// Zero of `ring`.
  explicit RingElement(RingId ring);

  static RingElement zero(RingId ring) { return RingElement(ring); }
  static RingElement one(RingId ring) { return integer(ring, 1); }
  static RingElement integer(RingId ring, long value);
  /// Embeds a rational; throws NotRepresentable for DYADIC when the
  /// denominator is not a power of two.
  static RingElement rational(RingId ring, const mpq_class& value);
  /// Embeds a rational function (RATFUN or SKEW only).
  static RingElement ratfun(RingId ring, RatFun value);
  static RingElement skew(SkewPoly value);
  static RingElement dyadic(mpz_class num, long exp);
  /// The indeterminate s (RATFUN or SKEW).
  static RingElement s(RingId ring);
  /// The twisting indeterminate t (SKEW only).
  static RingElement t();

  RingId ring() const { return ring_; }
  const Payload& payload() const { return payload_; }

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }
  bool is_nonnegative() const { return sign() >= 0; }
  bool is_one() const;

  RingElement operator-() const;
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement& operator+=(const RingElement& b) { return *this = *this + b; }
  RingElement& operator*=(const RingElement& b) { return *this = *this * b; }
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring_ == b.ring_ && a.payload_ == b.payload_;
  }

  /// Two-sided inverse if this is a unit of the ring.
  std::optional<RingElement> try_invert() const;
  /// As try_invert, throwing NotAUnit for non-units.
  RingElement inverse() const;
  bool is_unit() const { return try_invert().has_value(); }

  /// Whether this commutes with every ring element. For SKEW this is decided
  /// by commuting with the generators s and t.
  bool is_central() const;

  /// The rational value if the element is a constant of Q.
  std::optional<mpq_class> as_rational() const;
  /// The Q(s) value if the element has no nonzero t-power (RATFUN always).
  std::optional<RatFun> as_ratfun() const;

  /// Leading-coefficient ratio and degree in s (commutative rings; Q and
  /// DYADIC report degree 0). Used by the central homotheties.
  mpq_class leading_ratio() const;
  int s_degree() const;

  std::string str() const;

 private:
  RingElement(RingId ring, Payload payload) : ring_(ring), payload_(std::move(payload)) {}

  RingId ring_;
  Payload payload_;
};

RingElement pow(const RingElement& base, unsigned exponent);

/// The order automorphism f(s) -> f(2^k s) of Q(s) that defines the SKEW twist.
RatFun twist(const RatFun& f, long k);

/// Less-than in the ring order (both operands in the same ring).
bool less(const RingElement& a, const RingElement& b);

}  // namespace posmat

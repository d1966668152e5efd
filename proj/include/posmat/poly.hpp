#pragma once

// Dense univariate polynomials over Q and their fraction field Q(s).

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace posmat {

/// Polynomial in s with rational coefficients, ascending degree, no trailing
/// zero coefficients (the zero polynomial has an empty coefficient list).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<mpq_class> coeffs);
  static Poly constant(const mpq_class& c);
  static Poly monomial(const mpq_class& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpq_class& lc() const { return coeffs_.back(); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  mpq_class coeff(int k) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const mpq_class& c) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; `divisor` must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);
  /// Monic gcd (zero if both inputs are zero).
  static Poly gcd(Poly a, Poly b);
  Poly monic() const;

  /// p(s) -> p(a*s + b).
  Poly substitute_affine(const mpq_class& a, const mpq_class& b) const;
  /// p(s) -> p(q*s); cheaper special case of substitute_affine.
  Poly substitute_scale(const mpq_class& q) const;
  mpq_class evaluate(const mpq_class& x) const;

  std::string str() const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// Element of Q(s): num/den with gcd(num, den) = 1 and den monic.
class RatFun {
 public:
  RatFun() : den_(Poly::constant(1)) {}
  RatFun(Poly num, Poly den);  // canonicalizes; den must be nonzero
  explicit RatFun(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}
  static RatFun constant(const mpq_class& c) { return RatFun(Poly::constant(c)); }
  static RatFun variable() { return RatFun(Poly::monomial(1, 1)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  /// Sign for the order in which s exceeds every rational.
  int sign() const;
  /// Leading-coefficient ratio lc(num)/lc(den) and degree difference.
  mpq_class leading_ratio() const { return is_zero() ? mpq_class(0) : num_.lc(); }
  int degree() const { return num_.degree() - den_.degree(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  /// Multiplicative inverse; requires a nonzero value.
  RatFun inverse() const;

  RatFun substitute_affine(const mpq_class& a, const mpq_class& b) const;
  RatFun substitute_scale(const mpq_class& q) const;

  std::string str() const;

 private:
  struct Canonical {};
  RatFun(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  Poly num_;
  Poly den_;
};

}  // namespace posmat

#pragma once

// Standard automorphisms of G_n(R): inner maps X -> M X M^{-1} by monomial M,
// entrywise order-automorphisms of the ring, and central homotheties
// X -> lambda(X) X. A StandardTriple (M, c, lambda) denotes the composite
// Phi_M o Phi^c o Omega (Omega applied first).

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "posmat/matrix.hpp"
#include "posmat/words.hpp"

namespace posmat {

/// Closed catalog of order-preserving ring automorphisms:
///
///   identity
///   affine  RATFUN: f(s) -> f(a s + b),  a > 0
///           SKEW:   s -> a s, t -> g(s) t  with b = 0 and g > 0 in Q(s)
///
/// Conjugation by a unit f t^k of SKEW is the affine map a = 2^k,
/// g = f(s)/f(2s), so the SKEW family contains the inner automorphisms that
/// normalization leaves behind.
struct RingMapDescriptor {
  enum class Variant { Identity, Affine };

  RingId ring = RingId::Q;
  Variant variant = Variant::Identity;
  mpq_class a = 1;
  mpq_class b = 0;
  RatFun t_coef = RatFun::constant(1);

  static RingMapDescriptor identity(RingId ring);
  /// Collapses to identity when the parameters are trivial.
  static RingMapDescriptor affine(RingId ring, mpq_class a, mpq_class b, RatFun t_coef = RatFun::constant(1));

  bool is_identity() const { return variant == Variant::Identity; }
  /// Throws InvalidTriple if the descriptor is not an order automorphism of `ring`.
  void validate() const;

  RingElement apply(const RingElement& x) const;
  Matrix apply(const Matrix& x) const;
  RingMapDescriptor inverse() const;
  friend bool operator==(const RingMapDescriptor& x, const RingMapDescriptor& y) {
    return x.ring == y.ring && x.variant == y.variant && x.a == y.a && x.b == y.b && x.t_coef == y.t_coef;
  }
};

/// outer o inner.
RingMapDescriptor compose(const RingMapDescriptor& outer, const RingMapDescriptor& inner);

/// Central homomorphism lambda(X) = gamma(|lc det X|) * kappa^(deg det X).
///
/// gamma is given on primes and extended multiplicatively to positive
/// rationals (gamma(p) = 1 off the map). kappa (`degree_weight`) is only
/// nontrivial over RATFUN, where conjugating a homothety by an affine ring map
/// rescales leading coefficients. SKEW supports the trivial homothety only.
struct CentralHomDescriptor {
  RingId ring = RingId::Q;
  std::map<unsigned long, mpq_class> gamma;
  mpq_class degree_weight = 1;

  static CentralHomDescriptor trivial(RingId ring) { return {ring, {}, 1}; }

  bool is_trivial() const { return gamma.empty() && degree_weight == 1; }
  mpq_class gamma_of(const mpq_class& positive) const;
  /// Throws UnsupportedRing (nontrivial over SKEW) or InvalidTriple.
  void validate(int n) const;
  /// Unimodularity of I + n*E, E the exponent matrix of gamma on the primes
  /// it touches. Exactly the condition for X -> lambda(X) X to be bijective.
  bool invertible(int n) const;

  mpq_class lambda(const Matrix& x) const;
  Matrix apply(const Matrix& x) const;
  /// The unique preimage under apply; requires invertible(n).
  Matrix apply_inverse(const Matrix& y) const;
  friend bool operator==(const CentralHomDescriptor&, const CentralHomDescriptor&) = default;
};

struct StandardTriple {
  MonomialMatrix m;
  RingMapDescriptor c;
  CentralHomDescriptor lambda;

  int size() const { return m.size(); }
  RingId ring() const { return m.ring(); }
  static StandardTriple identity(RingId ring, int n);
  /// Throws InvalidTriple / UnsupportedRing.
  void validate() const;
  Matrix apply(const Matrix& x) const;
};

/// A black-box map Matrix -> Matrix claimed to be an automorphism, with a
/// query counter shared by every oracle derived from it.
class AutomorphismOracle {
 public:
  using Fn = std::function<Matrix(const Matrix&)>;

  AutomorphismOracle(int n, RingId ring, Fn fn);
  /// An oracle built on top of `parent`. It does not count its own calls;
  /// they are charged when `fn` reaches the parent.
  AutomorphismOracle(const AutomorphismOracle& parent, Fn fn);

  Matrix operator()(const Matrix& x) const;
  int size() const { return n_; }
  RingId ring() const { return ring_; }
  long queries() const { return counter_->load(); }

 private:
  int n_;
  RingId ring_;
  Fn fn_;
  std::shared_ptr<std::atomic<long>> counter_;
  bool counts_ = true;
};

Matrix apply_inner(const MonomialMatrix& m, const Matrix& x);
Matrix apply_ringmap(const RingMapDescriptor& c, const Matrix& x);
Matrix apply_homothety(const CentralHomDescriptor& h, const Matrix& x);

/// Non-automorphisms used to exercise the rejection paths.
struct FlipPart {};       ///< permutation matrices fixed, everything else transposed
struct TransposePart {};  ///< X -> X^T, an anti-automorphism
struct InnerPart {
  MonomialMatrix m;
};
using AutomorphismPart = std::variant<InnerPart, RingMapDescriptor, CentralHomDescriptor, FlipPart, TransposePart>;

/// Composition of parts applied right to left (the last part acts first).
struct AutomorphismDescription {
  int n = 3;
  RingId ring = RingId::Q;
  std::vector<AutomorphismPart> compose;
};

Matrix apply_part(const AutomorphismPart& part, const Matrix& x);
/// The composite left o right as a single triple.
StandardTriple compose(const StandardTriple& left, const StandardTriple& right);
/// Folds the description into one triple; nullopt if a non-automorphism part
/// is present. Throws InvalidTriple for invalid parts.
std::optional<StandardTriple> ground_truth(const AutomorphismDescription& desc);

AutomorphismOracle oracle_from_triple(const StandardTriple& t);

struct ObfuscatedOracle {
  AutomorphismOracle oracle;
  std::optional<StandardTriple> truth;
};
/// Wraps the composition in an opaque oracle. The seed interleaves
/// cancelling conjugation pairs so the call pattern carries no structure.
ObfuscatedOracle obfuscated_oracle(const AutomorphismDescription& desc, std::uint64_t seed);

/// Random certified-invertible homothety over Q or RATFUN; trivial elsewhere.
CentralHomDescriptor random_homothety(RingId ring, Rng& rng);
/// Random catalog ring map (identity over Q and DYADIC).
RingMapDescriptor random_ringmap(RingId ring, Rng& rng);

/// Random valid description: one to four parts, at least one inner part,
/// homotheties drawn from certified-invertible maps on the primes 2, 3, 5.
AutomorphismDescription random_description(int n, RingId ring, Rng& rng);

}  // namespace posmat

#include "posmat/automorphism.hpp"

#include <set>

#include "posmat/error.hpp"

namespace posmat {

namespace {

mpq_class qpow(const mpq_class& base, long e) {
  mpz_class num;
  mpz_class den;
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  mpq_class r = e < 0 ? mpq_class(den, num) : mpq_class(num, den);
  r.canonicalize();
  return r;
}

long valuation(mpz_class v, unsigned long p) {
  if (v == 0) return 0;
  long k = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
    ++k;
  }
  return k;
}

long valuation(const mpq_class& q, unsigned long p) {
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

void collect_primes(mpz_class v, std::set<unsigned long>& out) {
  v = abs(v);
  for (unsigned long p = 2; v > 1 && p < 100000; ++p) {
    if (!mpz_divisible_ui_p(v.get_mpz_t(), p)) continue;
    out.insert(p);
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
  }
  if (v > 1) {
    if (!v.fits_ulong_p() || mpz_probab_prime_p(v.get_mpz_t(), 30) == 0) {
      throw InvalidTriple("homothety values too large to factor");
    }
    out.insert(v.get_ui());
  }
}

void collect_primes(const mpq_class& q, std::set<unsigned long>& out) {
  collect_primes(q.get_num(), out);
  collect_primes(q.get_den(), out);
}

}  // namespace

// --- Ring maps -------------------------------------------------------------

RingMapDescriptor RingMapDescriptor::identity(RingId ring) { return {ring, Variant::Identity, 1, 0, RatFun::constant(1)}; }

RingMapDescriptor RingMapDescriptor::affine(RingId ring, mpq_class a, mpq_class b, RatFun t_coef) {
  if (a == 1 && b == 0 && t_coef == RatFun::constant(1)) return identity(ring);
  return {ring, Variant::Affine, std::move(a), std::move(b), std::move(t_coef)};
}

void RingMapDescriptor::validate() const {
  if (is_identity()) return;
  if (ring == RingId::Q || ring == RingId::Dyadic) {
    throw InvalidTriple("the only order automorphism of " + std::string(ring_name(ring)) + " is the identity");
  }
  if (a <= 0) throw InvalidTriple("affine ring map needs a > 0");
  if (ring == RingId::RatFun && !(t_coef == RatFun::constant(1))) {
    throw InvalidTriple("t coefficient is meaningful over SKEW only");
  }
  if (ring == RingId::Skew) {
    if (b != 0) throw InvalidTriple("affine map on SKEW must have b = 0 to respect the twist");
    if (t_coef.sign() <= 0) throw InvalidTriple("t coefficient must be positive");
  }
}

RingElement RingMapDescriptor::apply(const RingElement& x) const {
  if (x.ring() != ring) throw RingMismatch();
  if (is_identity() || x.is_zero()) return x;
  if (ring == RingId::RatFun) {
    return RingElement::ratfun(ring, std::get<RatFun>(x.payload()).substitute_affine(a, b));
  }
  if (ring != RingId::Skew) return x;
  // f t^i -> f(a s) * (g t)^i, where (g t)^i = g(s) g(2s) ... g(2^{i-1} s) t^i.
  SkewPoly out;
  for (const auto& [deg, f] : std::get<SkewPoly>(x.payload()).terms) {
    RatFun coef = f.substitute_scale(a);
    for (long k = 0; k < deg; ++k) coef = coef * twist(t_coef, k);
    for (long k = 1; k <= -deg; ++k) coef = coef * twist(t_coef, -k).inverse();
    out.terms.emplace(deg, std::move(coef));
  }
  return RingElement::skew(std::move(out));
}

Matrix RingMapDescriptor::apply(const Matrix& x) const {
  if (x.ring() != ring) throw RingMismatch();
  if (is_identity()) return x;
  std::vector<RingElement> e;
  e.reserve(x.entries().size());
  for (const auto& v : x.entries()) e.push_back(apply(v));
  return Matrix(ring, x.size(), std::move(e));
}

RingMapDescriptor RingMapDescriptor::inverse() const {
  if (is_identity()) return *this;
  const mpq_class ainv = 1 / a;
  if (ring == RingId::Skew) {
    // c^{-1}(t) = h t with h(s) = 1 / g(s / a)
    return affine(ring, ainv, 0, t_coef.substitute_scale(ainv).inverse());
  }
  return affine(ring, ainv, -b * ainv);
}

RingMapDescriptor compose(const RingMapDescriptor& outer, const RingMapDescriptor& inner) {
  if (outer.ring != inner.ring) throw RingMismatch();
  if (outer.is_identity()) return inner;
  if (inner.is_identity()) return outer;
  // inner: f(s) -> f(a1 s + b1); outer: h(s) -> h(a2 s + b2)
  // outer(inner(f))(s) = f(a1 a2 s + a1 b2 + b1); t -> g1(a2 s) g2(s) t
  RatFun g = inner.t_coef.substitute_scale(outer.a) * outer.t_coef;
  return RingMapDescriptor::affine(outer.ring, inner.a * outer.a, inner.a * outer.b + inner.b, std::move(g));
}

// --- Central homotheties ---------------------------------------------------

mpq_class CentralHomDescriptor::gamma_of(const mpq_class& positive) const {
  mpq_class r = 1;
  for (const auto& [p, v] : gamma) {
    const long e = valuation(positive, p);
    if (e != 0) r *= qpow(v, e);
  }
  return r;
}

namespace {

std::vector<unsigned long> touched_primes(const CentralHomDescriptor& h) {
  std::set<unsigned long> primes;
  for (const auto& [p, v] : h.gamma) {
    primes.insert(p);
    collect_primes(v, primes);
  }
  collect_primes(h.degree_weight, primes);
  return {primes.begin(), primes.end()};
}

// I + n*E over the touched primes, with E[q][p] = v_q(gamma(p)).
Matrix exponent_system(const CentralHomDescriptor& h, const std::vector<unsigned long>& primes, int n) {
  const int m = static_cast<int>(primes.size());
  Matrix sys = Matrix::identity(RingId::Q, m);
  for (int col = 0; col < m; ++col) {
    auto it = h.gamma.find(primes[static_cast<std::size_t>(col)]);
    if (it == h.gamma.end()) continue;
    for (int row = 0; row < m; ++row) {
      const long e = valuation(it->second, primes[static_cast<std::size_t>(row)]);
      sys(row, col) += RingElement::integer(RingId::Q, n * e);
    }
  }
  return sys;
}

}  // namespace

void CentralHomDescriptor::validate(int n) const {
  if (is_trivial()) return;
  if (ring == RingId::Skew) throw UnsupportedRing("nontrivial homotheties are not supported over SKEW");
  if (degree_weight <= 0) throw InvalidTriple("degree weight must be positive");
  if (degree_weight != 1 && ring != RingId::RatFun) throw InvalidTriple("degree weight is meaningful over RATFUN only");
  for (const auto& [p, v] : gamma) {
    if (p < 2 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0) {
      throw InvalidTriple("gamma key " + std::to_string(p) + " is not prime");
    }
    if (v <= 0) throw InvalidTriple("gamma values must be positive");
    if (ring == RingId::Dyadic) {
      // Values must be positive units of Z[1/2].
      if (mpz_popcount(v.get_num_mpz_t()) != 1 || mpz_popcount(v.get_den_mpz_t()) != 1) {
        throw InvalidTriple("gamma values over DYADIC must be powers of two");
      }
    }
  }
  if (!invertible(n)) throw InvalidTriple("homothety fails the unimodular invertibility certificate");
}

bool CentralHomDescriptor::invertible(int n) const {
  if (gamma.empty()) return true;
  const auto primes = touched_primes(*this);
  const RingElement det = determinant(exponent_system(*this, primes, n));
  return det.is_one() || (-det).is_one();
}

mpq_class CentralHomDescriptor::lambda(const Matrix& x) const {
  if (is_trivial()) return 1;
  const RingElement det = determinant(x);
  if (det.is_zero()) throw Error("homothety applied to a singular matrix");
  mpq_class lead = abs(det.leading_ratio());
  return gamma_of(lead) * qpow(degree_weight, det.s_degree());
}

Matrix CentralHomDescriptor::apply(const Matrix& x) const {
  if (x.ring() != ring) throw RingMismatch();
  if (is_trivial()) return x;
  return x.scaled_left(RingElement::rational(ring, lambda(x)));
}

Matrix CentralHomDescriptor::apply_inverse(const Matrix& y) const {
  if (y.ring() != ring) throw RingMismatch();
  if (is_trivial()) return y;
  const int n = y.size();
  const auto primes = touched_primes(*this);
  const RingElement det = determinant(y);
  if (det.is_zero()) throw Error("homothety inverse applied to a singular matrix");
  const mpq_class lead = abs(det.leading_ratio());
  const long deg = det.s_degree();
  // Exponents of |lc det X| on the touched primes solve (I + nE) e_X = e_Y - n deg e_kappa.
  const auto sys_inv = exact_inverse(exponent_system(*this, primes, n));
  if (!sys_inv) throw InvalidTriple("homothety is not invertible");
  const int m = static_cast<int>(primes.size());
  mpq_class gamma_x = 1;
  for (int row = 0; row < m; ++row) {
    mpq_class e = 0;
    for (int col = 0; col < m; ++col) {
      const unsigned long p = primes[static_cast<std::size_t>(col)];
      const mpq_class rhs = valuation(lead, p) - static_cast<long>(n) * deg * valuation(degree_weight, p);
      e += *(*sys_inv)(row, col).as_rational() * rhs;
    }
    if (e.get_den() != 1) throw InvalidTriple("non-integral exponent in homothety inverse");
    auto it = gamma.find(primes[static_cast<std::size_t>(row)]);
    if (it != gamma.end()) gamma_x *= qpow(it->second, e.get_num().get_si());
  }
  const mpq_class lam = gamma_x * qpow(degree_weight, deg);
  return y.scaled_left(RingElement::rational(ring, 1 / lam));
}

namespace {

// Homothety h2 applied after the triple (M, c, h1), expressed as one homothety.
CentralHomDescriptor compose_hom(const CentralHomDescriptor& h2, const CentralHomDescriptor& h1,
                                 const RingMapDescriptor& c, int n) {
  if (h2.is_trivial()) return h1;
  CentralHomDescriptor out{h1.ring, {}, 1};
  std::set<unsigned long> keys;
  for (const auto& [p, v] : h1.gamma) keys.insert(p);
  for (const auto& [p, v] : h2.gamma) keys.insert(p);
  for (unsigned long p : keys) {
    const mpq_class g1 = h1.gamma_of(mpq_class(p));
    const mpq_class v = g1 * h2.gamma_of(mpq_class(p)) * qpow(h2.gamma_of(g1), n);
    if (v != 1) out.gamma.emplace(p, v);
  }
  // An affine ring map scales lc(f) by a^deg f.
  const mpq_class a = c.is_identity() ? mpq_class(1) : c.a;
  out.degree_weight = h1.degree_weight * h2.degree_weight * h2.gamma_of(a) * qpow(h2.gamma_of(h1.degree_weight), n);
  return out;
}

}  // namespace

// --- Triples ---------------------------------------------------------------

StandardTriple StandardTriple::identity(RingId ring, int n) {
  return {MonomialMatrix::identity(ring, n), RingMapDescriptor::identity(ring), CentralHomDescriptor::trivial(ring)};
}

void StandardTriple::validate() const {
  const RingId r = ring();
  for (const auto& d : m.diag) {
    if (d.ring() != r) throw RingMismatch();
    if (!d.is_positive() || !d.is_unit()) throw InvalidTriple("monomial diagonal must hold positive units");
  }
  if (c.ring != r || lambda.ring != r) throw RingMismatch();
  c.validate();
  lambda.validate(size());
}

Matrix StandardTriple::apply(const Matrix& x) const { return conjugate(m, c.apply(lambda.apply(x))); }

StandardTriple compose(const StandardTriple& left, const StandardTriple& right) {
  if (left.size() != right.size()) throw DimensionMismatch();
  if (left.ring() != right.ring()) throw RingMismatch();
  // left o right = Phi_M2 o c2 o Omega2 o Phi_M1 o c1 o Omega1; fold from the inside.
  StandardTriple t = right;
  t.lambda = compose_hom(left.lambda, t.lambda, t.c, t.size());
  if (!left.c.is_identity()) {
    for (auto& d : t.m.diag) d = left.c.apply(d);
    t.c = compose(left.c, t.c);
  }
  t.m = left.m * t.m;
  return t;
}

// --- Oracles ---------------------------------------------------------------

AutomorphismOracle::AutomorphismOracle(int n, RingId ring, Fn fn)
    : n_(n), ring_(ring), fn_(std::move(fn)), counter_(std::make_shared<std::atomic<long>>(0)) {}

AutomorphismOracle::AutomorphismOracle(const AutomorphismOracle& parent, Fn fn)
    : n_(parent.n_), ring_(parent.ring_), fn_(std::move(fn)), counter_(parent.counter_), counts_(false) {}

Matrix AutomorphismOracle::operator()(const Matrix& x) const {
  if (x.size() != n_) throw DimensionMismatch();
  if (x.ring() != ring_) throw RingMismatch();
  if (counts_) counter_->fetch_add(1);
  return fn_(x);
}

Matrix apply_inner(const MonomialMatrix& m, const Matrix& x) { return conjugate(m, x); }
Matrix apply_ringmap(const RingMapDescriptor& c, const Matrix& x) { return c.apply(x); }
Matrix apply_homothety(const CentralHomDescriptor& h, const Matrix& x) { return h.apply(x); }

Matrix apply_part(const AutomorphismPart& part, const Matrix& x) {
  return std::visit(
      [&](const auto& p) -> Matrix {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, InnerPart>) {
          return conjugate(p.m, x);
        } else if constexpr (std::is_same_v<T, RingMapDescriptor>) {
          return p.apply(x);
        } else if constexpr (std::is_same_v<T, CentralHomDescriptor>) {
          return p.apply(x);
        } else if constexpr (std::is_same_v<T, FlipPart>) {
          if (monomial_recognize(x) && std::all_of(x.entries().begin(), x.entries().end(), [](const RingElement& e) {
                return e.is_zero() || e.is_one();
              })) {
            return x;
          }
          return x.transpose();
        } else {
          return x.transpose();
        }
      },
      part);
}

namespace {

std::optional<StandardTriple> part_triple(const AutomorphismPart& part, RingId ring, int n) {
  StandardTriple t = StandardTriple::identity(ring, n);
  if (const auto* inner = std::get_if<InnerPart>(&part)) {
    if (inner->m.size() != n) throw DimensionMismatch();
    t.m = inner->m;
  } else if (const auto* c = std::get_if<RingMapDescriptor>(&part)) {
    t.c = *c;
  } else if (const auto* h = std::get_if<CentralHomDescriptor>(&part)) {
    t.lambda = *h;
  } else {
    return std::nullopt;
  }
  t.validate();
  return t;
}

}  // namespace

std::optional<StandardTriple> ground_truth(const AutomorphismDescription& desc) {
  StandardTriple acc = StandardTriple::identity(desc.ring, desc.n);
  bool genuine = true;
  for (auto it = desc.compose.rbegin(); it != desc.compose.rend(); ++it) {
    auto t = part_triple(*it, desc.ring, desc.n);
    if (!t) {
      genuine = false;
      continue;
    }
    if (genuine) acc = compose(*t, acc);
  }
  if (!genuine) return std::nullopt;
  return acc;
}

AutomorphismOracle oracle_from_triple(const StandardTriple& t) {
  t.validate();
  return AutomorphismOracle(t.size(), t.ring(), [t](const Matrix& x) { return t.apply(x); });
}

ObfuscatedOracle obfuscated_oracle(const AutomorphismDescription& desc, std::uint64_t seed) {
  auto truth = ground_truth(desc);
  Rng rng(seed);
  std::vector<AutomorphismPart> parts = desc.compose;
  std::uniform_int_distribution<int> pairs(1, 2);
  const int extra = pairs(rng);
  for (int k = 0; k < extra; ++k) {
    const MonomialMatrix n = random_monomial(desc.ring, desc.n, rng);
    std::uniform_int_distribution<std::size_t> pos(0, parts.size());
    const auto at = static_cast<std::ptrdiff_t>(pos(rng));
    parts.insert(parts.begin() + at, InnerPart{invert_monomial(n)});
    parts.insert(parts.begin() + at, InnerPart{n});
  }
  AutomorphismOracle oracle(desc.n, desc.ring, [parts = std::move(parts)](const Matrix& x) {
    Matrix y = x;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) y = apply_part(*it, y);
    return y;
  });
  return {std::move(oracle), std::move(truth)};
}

namespace {

template <typename T>
const T& choose(const std::vector<T>& options, Rng& rng) {
  std::uniform_int_distribution<std::size_t> d(0, options.size() - 1);
  return options[d(rng)];
}

}  // namespace

CentralHomDescriptor random_homothety(RingId ring, Rng& rng) {
  // gamma(p) only involves primes larger than p, so the exponent matrix is
  // strictly triangular and I + nE is unimodular for every n.
  CentralHomDescriptor h{ring, {}, 1};
  if (ring != RingId::Q && ring != RingId::RatFun) return h;
  const std::vector<mpq_class> at2{1, 3, 5, mpq_class(1, 3), 15, mpq_class(3, 5)};
  const std::vector<mpq_class> at3{1, 5, mpq_class(1, 5), 7};
  const std::vector<mpq_class> at5{1, 7, mpq_class(1, 7)};
  for (auto [p, options] : {std::pair{2UL, &at2}, std::pair{3UL, &at3}, std::pair{5UL, &at5}}) {
    const mpq_class& v = choose(*options, rng);
    if (v != 1) h.gamma.emplace(p, v);
  }
  if (ring == RingId::RatFun) h.degree_weight = choose(std::vector<mpq_class>{1, 2, mpq_class(1, 3), 6}, rng);
  return h;
}

RingMapDescriptor random_ringmap(RingId ring, Rng& rng) {
  if (ring == RingId::RatFun) {
    const mpq_class a = choose(std::vector<mpq_class>{1, 2, mpq_class(1, 2), 3}, rng);
    const mpq_class b = choose(std::vector<mpq_class>{0, 0, 1, -1, mpq_class(1, 2)}, rng);
    return RingMapDescriptor::affine(ring, a, b);
  }
  if (ring == RingId::Skew) {
    const mpq_class a = choose(std::vector<mpq_class>{1, 2, mpq_class(1, 2)}, rng);
    const RatFun s = RatFun::variable();
    const std::vector<RatFun> gs{RatFun::constant(1), RatFun::constant(2), RatFun::constant(mpq_class(1, 2)), s,
                                 s + RatFun::constant(1)};
    return RingMapDescriptor::affine(ring, a, 0, choose(gs, rng));
  }
  return RingMapDescriptor::identity(ring);
}

AutomorphismDescription random_description(int n, RingId ring, Rng& rng) {
  AutomorphismDescription desc{n, ring, {}};
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> kind(0, 3);
  const bool has_maps = ring == RingId::RatFun || ring == RingId::Skew;
  const bool has_homotheties = ring == RingId::Q || ring == RingId::RatFun;
  bool has_inner = false;
  const int parts = count(rng);
  for (int k = 0; k < parts; ++k) {
    const int pick = kind(rng);
    if (pick == 2 && has_maps) {
      desc.compose.emplace_back(random_ringmap(ring, rng));
    } else if (pick == 3 && has_homotheties) {
      desc.compose.emplace_back(random_homothety(ring, rng));
    } else {
      desc.compose.emplace_back(InnerPart{random_monomial(ring, n, rng)});
      has_inner = true;
    }
  }
  if (!has_inner) desc.compose.emplace_back(InnerPart{random_monomial(ring, n, rng)});
  return desc;
}

}  // namespace posmat

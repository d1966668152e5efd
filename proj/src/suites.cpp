#include "posmat/suites.hpp"

#include <algorithm>
#include <functional>

#include "posmat/error.hpp"

namespace posmat {

namespace {

struct Recorder {
  SuiteReport& report;

  void check(bool ok, const std::function<Json()>& describe) {
    ++report.checks;
    if (ok) return;
    ++report.failures;
    if (!report.counterexample) report.counterexample = describe();
  }
};

Json note(std::string what) { return Json{{"check", std::move(what)}}; }

Matrix random_word_matrix(int n, RingId ring, Rng& rng, int max_length = 8) {
  std::uniform_int_distribution<int> len(1, max_length);
  return eval(random_word(n, ring, len(rng), rng));
}

std::vector<RingElement> central_units(RingId ring) {
  std::vector<RingElement> out;
  for (auto& u : unit_pool(ring))
    if (u.is_central()) out.push_back(std::move(u));
  return out;
}

const RingElement& pick(const std::vector<RingElement>& pool, Rng& rng) {
  std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
  return pool[d(rng)];
}

ObfuscatedOracle genuine_oracle(int n, RingId ring, Rng& rng) {
  const auto desc = random_description(n, ring, rng);
  return obfuscated_oracle(desc, rng());
}

Permutation random_involution(int n, Rng& rng) {
  std::vector<int> pts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = i;
  std::shuffle(pts.begin(), pts.end(), rng);
  std::uniform_int_distribution<int> pairs(0, n / 2);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  for (int k = pairs(rng); k > 0; --k) {
    const int a = pts[static_cast<std::size_t>(2 * k - 2)];
    const int b = pts[static_cast<std::size_t>(2 * k - 1)];
    images[static_cast<std::size_t>(a)] = b;
    images[static_cast<std::size_t>(b)] = a;
  }
  return Permutation(std::move(images));
}

Matrix diag_first_two(RingId ring, int n, const RingElement& a, const RingElement& b) {
  std::vector<RingElement> d(static_cast<std::size_t>(n), RingElement::one(ring));
  d[0] = a;
  d[1] = b;
  return Matrix::diagonal(ring, d);
}

void require_n(const SuiteConfig& c, int min) {
  if (c.n < min) throw Error("suite needs n >= " + std::to_string(min));
}

// --- Suites ----------------------------------------------------------------

void ring_axioms(const SuiteConfig& cfg, Recorder& rec) {
  Rng rng(cfg.seed);
  const RingId ring = cfg.ring;
  for (int k = 0; k < cfg.trials; ++k) {
    const RingElement a = random_element(ring, rng);
    const RingElement b = random_element(ring, rng);
    const RingElement c = random_element(ring, rng);
    const int cases = (a.is_zero() ? 1 : 0) + (a.is_positive() ? 1 : 0) + ((-a).is_positive() ? 1 : 0);
    rec.check(cases == 1, [&] { return Json{{"check", "trichotomy"}, {"a", to_json(a)}}; });
    if (a.is_positive() && b.is_positive()) {
      rec.check((a + b).is_positive() && (a * b).is_positive(),
                [&] { return Json{{"check", "positive closure"}, {"a", to_json(a)}, {"b", to_json(b)}}; });
    }
    rec.check((a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c,
              [&] { return Json{{"check", "associativity/distributivity"}, {"a", to_json(a)}, {"b", to_json(b)}}; });
    if (auto inv = a.try_invert()) {
      rec.check((a * *inv).is_one() && (*inv * a).is_one(),
                [&] { return Json{{"check", "unit roundtrip"}, {"a", to_json(a)}}; });
    }
    if (ring == RingId::Skew || ring == RingId::RatFun) {
      if (const auto f = a.as_ratfun(); f && f->sign() > 0) {
        rec.check(twist(*f, 1).sign() > 0, [&] { return Json{{"check", "twist preserves order"}, {"f", f->str()}}; });
      }
    }
  }
}

void inverse_positivity(const SuiteConfig& cfg, Recorder& rec) {
  if (!is_commutative(cfg.ring)) {
    throw UnsupportedRing("the inverse oracle is defined over commutative rings only");
  }
  Rng rng(cfg.seed);
  const int n = cfg.n;
  for (int k = 0; k < cfg.trials; ++k) {
    const Matrix a = random_word_matrix(n, cfg.ring, rng);
    const auto inv = exact_inverse(a);
    rec.check(inv && is_nonnegative(*inv) == monomial_recognize(a).has_value(),
              [&] { return Json{{"check", "nonnegative inverse iff monomial"}, {"a", to_json(a)}}; });
  }
  // Invertible nonnegative non-monomial matrices must have a negative inverse entry.
  const auto pool = nonnegative_pool(cfg.ring);
  std::bernoulli_distribution zero(0.5);
  for (int k = 0; k < cfg.trials;) {
    std::vector<RingElement> e;
    for (int i = 0; i < n * n; ++i) e.push_back(zero(rng) ? RingElement::zero(cfg.ring) : pick(pool, rng));
    const Matrix a(cfg.ring, n, std::move(e));
    if (monomial_recognize(a)) continue;
    const auto inv = exact_inverse(a);
    if (!inv) continue;
    ++k;
    rec.check(!is_nonnegative(*inv), [&] { return Json{{"check", "non-monomial has nonnegative inverse"}, {"a", to_json(a)}}; });
  }
}

void positive_torsion(const SuiteConfig& cfg, Recorder& rec) {
  Rng rng(cfg.seed);
  std::vector<RingElement> samples = positive_pool(cfg.ring);
  std::uniform_int_distribution<int> exps(-3, 3);
  for (int k = 0; k < cfg.trials; ++k) {
    RingElement r = random_element(cfg.ring, rng);
    if (cfg.ring == RingId::Skew) {
      // Powers of long skew polynomials grow too fast; monomials q s^i t^j
      // still exercise the twist.
      r = random_element(RingId::Q, rng);
      r = RingElement::rational(RingId::Skew, *r.as_rational());
      const int i = exps(rng);
      const int j = exps(rng);
      RingElement si = pow(i >= 0 ? RingElement::s(RingId::Skew) : RingElement::s(RingId::Skew).inverse(),
                           static_cast<unsigned>(std::abs(i)));
      RingElement tj = pow(j >= 0 ? RingElement::t() : RingElement::t().inverse(), static_cast<unsigned>(std::abs(j)));
      r = r * si * tj;
    }
    if (r.sign() < 0) r = -r;
    if (!r.is_zero()) samples.push_back(std::move(r));
  }
  for (const auto& r : samples) {
    if (r.is_one()) continue;
    RingElement p = r;
    for (unsigned k = 1; k <= 20; ++k, p = p * r) {
      rec.check(!p.is_one(), [&] { return Json{{"check", "positive torsion"}, {"r", to_json(r)}, {"k", k}}; });
    }
    if (r.is_unit() && cfg.n >= 1) {
      std::vector<RingElement> d(static_cast<std::size_t>(cfg.n), RingElement::one(cfg.ring));
      d[0] = r;
      rec.check(!has_finite_order(Matrix::diagonal(cfg.ring, d), 20),
                [&] { return Json{{"check", "diag[r,1,...] has finite order"}, {"r", to_json(r)}}; });
    }
  }
}

void involutions(const SuiteConfig& cfg, Recorder& rec) {
  Rng rng(cfg.seed);
  const int n = cfg.n;
  const auto units = unit_pool(cfg.ring);
  for (int k = 0; k < cfg.trials; ++k) {
    const Permutation sigma = random_involution(n, rng);
    std::vector<RingElement> t(static_cast<std::size_t>(n), RingElement::one(cfg.ring));
    for (int i = 0; i < n; ++i) {
      const int j = sigma(i);
      if (i < j) {
        t[static_cast<std::size_t>(i)] = pick(units, rng);
        t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(i)].inverse();
      }
    }
    const InvolutionData data{t, sigma};
    const Matrix a = data.to_matrix();
    const auto got = involution_classify(a);
    bool ok = got && got->sigma == sigma && got->t == t;
    for (int i = 0; ok && i < n; ++i) {
      ok = (got->t[static_cast<std::size_t>(i)] * got->t[static_cast<std::size_t>(got->sigma(i))]).is_one();
    }
    rec.check(ok, [&] { return Json{{"check", "involution roundtrip"}, {"a", to_json(a)}}; });
  }
  for (int k = 0; k < cfg.trials;) {
    const bool monomial = k % 2 == 0;
    const Matrix a = monomial ? random_monomial(cfg.ring, n, rng).to_matrix() : random_word_matrix(n, cfg.ring, rng);
    if (a * a == Matrix::identity(cfg.ring, n)) continue;
    ++k;
    rec.check(!involution_classify(a), [&] { return Json{{"check", "non-involution accepted"}, {"a", to_json(a)}}; });
  }
}

void preservation(const SuiteConfig& cfg, Recorder& rec) {
  require_n(cfg, 3);
  Rng rng(cfg.seed);
  const int n = cfg.n;
  const RingId ring = cfg.ring;
  std::vector<RingElement> powers;
  for (int i = 1; i <= n; ++i) powers.push_back(RingElement::integer(ring, 1L << i));
  const Matrix witness = Matrix::diagonal(ring, powers);
  const long order_bound = factorial(n);
  for (int k = 0; k < cfg.trials; ++k) {
    auto o = genuine_oracle(n, ring, rng);
    const Matrix m = random_monomial(ring, n, rng).to_matrix();
    const Matrix img = o.oracle(m);
    rec.check(monomial_recognize(img).has_value(), [&] { return Json{{"check", "monomial image"}, {"m", to_json(m)}}; });

    const Matrix dimg = o.oracle(witness);
    bool distinct = dimg.is_diagonal();
    const auto e = dimg.diagonal_entries();
    for (std::size_t i = 0; distinct && i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) distinct = distinct && !(e[i] == e[j]);
    rec.check(distinct, [&] { return Json{{"check", "diag[2,4,...,2^n] image"}, {"image", to_json(dimg)}}; });

    const Matrix s = Matrix::permutation(ring, random_permutation(n, rng));
    rec.check(has_finite_order(o.oracle(s), static_cast<int>(order_bound)),
              [&] { return Json{{"check", "finite order preserved"}, {"s", to_json(s)}}; });

    // Centralizer of the witness inside Gamma_n is diagonal.
    const MonomialMatrix g = k % 2 == 0 ? random_monomial(ring, n, rng)
                                        : MonomialMatrix::from_diagonal(random_monomial(ring, n, rng).diag);
    const Matrix gm = g.to_matrix();
    rec.check(!commutes(gm, witness) || gm.is_diagonal(),
              [&] { return Json{{"check", "centralizer shape"}, {"g", to_json(gm)}}; });

    // S_sigma diag[a] S_sigma^{-1} = diag[a_{sigma^{-1}(i)}].
    const Permutation sigma = random_permutation(n, rng);
    const auto a = random_monomial(ring, n, rng).diag;
    std::vector<RingElement> moved(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) moved[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(sigma.inverse()(i))];
    const Matrix sm = Matrix::permutation(ring, sigma);
    rec.check(sm * Matrix::diagonal(ring, a) * Matrix::permutation(ring, sigma.inverse()) == Matrix::diagonal(ring, moved),
              [&] { return note("conjugation of diagonals"); });
  }
}

void k_normalization(const SuiteConfig& cfg, Recorder& rec) {
  require_n(cfg, 3);
  Rng rng(cfg.seed);
  const int n = cfg.n;
  const RingId ring = cfg.ring;
  const auto units = unit_pool(ring);
  for (int k = 0; k < cfg.trials; ++k) {
    auto o = genuine_oracle(n, ring, rng);
    Permutation sigma(n);
    try {
      sigma = stage_k_normalize(o.oracle);
    } catch (const NotAutomorphism& e) {
      rec.check(false, [&] { return Json{{"check", "k_normalize rejected a genuine automorphism"}, {"reason", e.reason}}; });
      continue;
    }
    const MonomialMatrix s = MonomialMatrix::from_permutation(ring, sigma);
    std::vector<RingElement> d(static_cast<std::size_t>(n), RingElement::one(ring));
    d.back() = RingElement::integer(ring, 2);
    const Matrix probe = Matrix::diagonal(ring, d);
    rec.check(in_K(probe) && in_K(conjugate(s, o.oracle(probe))), [&] { return note("diag[1,...,1,2] lands in K"); });

    // A random element of K: a word on the first n-1 coordinates plus a unit corner.
    const Matrix inner = random_word_matrix(n - 1, ring, rng);
    Matrix x(ring, n);
    for (int i = 0; i < n - 1; ++i)
      for (int j = 0; j < n - 1; ++j) x(i, j) = inner(i, j);
    x(n - 1, n - 1) = pick(units, rng);
    const Matrix img = conjugate(s, o.oracle(x));
    rec.check(in_K(x) && in_K(img), [&] { return Json{{"check", "K preserved after normalization"}, {"x", to_json(x)}}; });
  }
}

struct Normalized {
  ObfuscatedOracle source;
  FixPermutationsResult fixed;
  NormalizationTrace trace;
};

std::optional<Normalized> normalize(const SuiteConfig& cfg, Rng& rng, Recorder& rec) {
  auto o = genuine_oracle(cfg.n, cfg.ring, rng);
  NormalizationTrace trace;
  DecomposeConfig dc;
  dc.seed = rng();
  try {
    auto fixed = stage_fix_permutations(o.oracle, trace, dc);
    return Normalized{std::move(o), std::move(fixed), std::move(trace)};
  } catch (const NotAutomorphism& e) {
    rec.check(false, [&] { return Json{{"check", "normalization rejected a genuine automorphism"}, {"reason", e.reason}}; });
    return std::nullopt;
  }
}

void permutation_fixing(const SuiteConfig& cfg, Recorder& rec) {
  require_n(cfg, 3);
  Rng rng(cfg.seed);
  const int n = cfg.n;
  const RingId ring = cfg.ring;
  for (int k = 0; k < cfg.trials; ++k) {
    auto norm = normalize(cfg, rng, rec);
    if (!norm) continue;
    const auto& oracle = norm->fixed.normalized;
    const Matrix swap = Matrix::permutation(ring, Permutation::transposition(n, 0, 1));
    const Matrix cyc = Matrix::permutation(ring, Permutation::cycle(n));
    rec.check(oracle(swap) == swap && oracle(cyc) == cyc, [&] { return note("generators fixed"); });
    for (int r = 0; r < 5; ++r) {
      const Matrix s = Matrix::permutation(ring, random_permutation(n, rng));
      rec.check(oracle(s) == s, [&] { return Json{{"check", "random permutation fixed"}, {"s", to_json(s)}}; });
    }
    rec.check(norm->trace.beta && norm->trace.beta->is_one(), [&] { return note("beta = 1"); });
    if (n == 6) rec.check(norm->trace.tau6.has_value(), [&] { return note("tau recorded for n = 6"); });
    // The conjugator undoes the true inner part up to a scalar matrix.
    if (norm->source.truth) {
      const MonomialMatrix prod = norm->fixed.conjugator * norm->source.truth->m;
      bool scalar = prod.perm.is_identity();
      for (const auto& d : prod.diag) scalar = scalar && d == prod.diag[0];
      rec.check(scalar, [&] { return note("conjugator inverts the inner part up to a scalar"); });
    }
  }
}

void central_diagonals(const SuiteConfig& cfg, Recorder& rec) {
  require_n(cfg, 3);
  Rng rng(cfg.seed);
  const auto units = central_units(cfg.ring);
  for (int k = 0; k < cfg.trials; ++k) {
    auto norm = normalize(cfg, rng, rec);
    if (!norm) continue;
    const RingElement& a = pick(units, rng);
    RingElement b = pick(units, rng);
    while (b == a) b = pick(units, rng);
    const Matrix x = diag_first_two(cfg.ring, cfg.n, a, b);
    const Matrix y = norm->fixed.normalized(x);
    rec.check(y.is_diagonal() && !(y(0, 0) == y(1, 1)) && y(0, 0).is_central() && y(1, 1).is_central(),
              [&] { return Json{{"check", "distinct central diagonal stays distinct and central"}, {"image", to_json(y)}}; });
  }
}

void block_shape(const SuiteConfig& cfg, Recorder& rec) {
  require_n(cfg, 3);
  Rng rng(cfg.seed);
  const int n = cfg.n;
  const auto pool = nonnegative_pool(cfg.ring);
  for (int k = 0; k < cfg.trials; ++k) {
    auto norm = normalize(cfg, rng, rec);
    if (!norm) continue;
    for (const RingElement& x : {RingElement::one(cfg.ring), pick(pool, rng)}) {
      const Matrix y = norm->fixed.normalized(Matrix::transvection(cfg.ring, n, 0, 1, x));
      bool ok = true;
      const RingElement& a = y(n - 1, n - 1);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          if (r < 2 && c < 2) continue;
          ok = ok && (r == c ? y(r, c) == a : y(r, c).is_zero());
        }
      ok = ok && a.is_central() && a.is_positive();
      rec.check(ok, [&] { return Json{{"check", "2x2 block plus central scalar"}, {"image", to_json(y)}}; });
    }
  }
}

void shape_suite(const SuiteConfig& cfg, Recorder& rec, int which) {
  require_n(cfg, 3);
  Rng rng(cfg.seed);
  for (int k = 0; k < cfg.trials; ++k) {
    auto norm = normalize(cfg, rng, rec);
    if (!norm) continue;
    try {
      stage_shape_diagnostics(norm->fixed.normalized, norm->trace);
    } catch (const NotAutomorphism& e) {
      rec.check(false, [&] { return Json{{"check", "shape diagnostics"}, {"reason", e.reason}}; });
      continue;
    }
    const auto& t = norm->trace;
    if (which == 10) {
      for (const auto& [x, xe] : t.xi_eta_samples) {
        rec.check(xe.first.is_central() && xe.second.is_central(),
                  [&] { return Json{{"check", "xi, eta central"}, {"x", to_json(x)}}; });
      }
    } else {
      for (std::size_t i = 0; i < t.nu_samples.size(); ++i)
        for (std::size_t j = i + 1; j < t.nu_samples.size(); ++j) {
          rec.check(!(t.nu_samples[i].second == t.nu_samples[j].second), [&] {
            return Json{{"check", "nu injective"}, {"x1", to_json(t.nu_samples[i].first)}, {"x2", to_json(t.nu_samples[j].first)}};
          });
        }
      const RingElement two = RingElement::integer(cfg.ring, 2);
      const auto it = std::find_if(t.nu_samples.begin(), t.nu_samples.end(), [&](const auto& p) { return p.first == two; });
      rec.check(it != t.nu_samples.end() && it->second == two, [&] { return note("nu(2) = 2"); });
    }
  }
}

void c_extraction(const SuiteConfig& cfg, Recorder& rec) {
  require_n(cfg, 3);
  Rng rng(cfg.seed);
  const auto pool = nonnegative_pool(cfg.ring);
  for (int k = 0; k < cfg.trials; ++k) {
    auto norm = normalize(cfg, rng, rec);
    if (!norm) continue;
    SampleTable c;
    try {
      c = stage_extract_c(norm->fixed.normalized, pool);
    } catch (const NotAutomorphism& e) {
      rec.check(false, [&] { return Json{{"check", "extract_c rejected a genuine automorphism"}, {"reason", e.reason}}; });
      continue;
    }
    const auto check = verify_c(c, cfg.ring);
    rec.check(check.ok, [&] { return Json{{"check", "c is a semiring map"}, {"failure", check.failure}}; });
    // Over commutative rings the scalar left by normalization is central, so
    // c must be the ring map of the ground truth.
    if (is_commutative(cfg.ring) && norm->source.truth) {
      for (const auto& [x, cx] : c) {
        rec.check(norm->source.truth->c.apply(x) == cx,
                  [&] { return Json{{"check", "c matches ground truth"}, {"x", to_json(x)}, {"c(x)", to_json(cx)}}; });
      }
    }
  }
}

void flip_rejection(const SuiteConfig& cfg, Recorder& rec) {
  require_n(cfg, 3);
  Rng rng(cfg.seed);
  for (int k = 0; k < cfg.trials; ++k) {
    AutomorphismDescription desc{cfg.n, cfg.ring, {InnerPart{random_monomial(cfg.ring, cfg.n, rng)}, FlipPart{}}};
    auto o = obfuscated_oracle(desc, rng());
    DecomposeConfig dc;
    dc.seed = rng();
    dc.shuffle_pool = true;
    const auto r = decompose(o.oracle, dc);
    auto detail = [&](const std::string& key) -> std::string {
      for (const auto& [k2, v] : r.detail)
        if (k2 == key) return v;
      return "";
    };
    const bool ok = r.verdict == DecompositionReport::Verdict::NotAutomorphism && r.stage == "extract_c" &&
                    detail("identity_holds") == "false" && !detail("c(x)^2 + c(x^2)").empty() &&
                    detail("c(x)^2 + c(x^2)") != "0";
    rec.check(ok, [&] { return Json{{"check", "flip rejected with witness"}, {"report", to_json(r)}}; });
  }
}

void composite_identities(const SuiteConfig& cfg, Recorder& rec) {
  require_n(cfg, 3);
  Rng rng(cfg.seed);
  const int n = cfg.n;
  const RingId ring = cfg.ring;
  const auto pool = nonnegative_pool(ring);
  const RingElement one = RingElement::one(ring);
  std::vector<RingElement> two(static_cast<std::size_t>(n), one);
  std::vector<RingElement> half(static_cast<std::size_t>(n), one);
  two[0] = RingElement::integer(ring, 2);
  half[0] = two[0].inverse();
  const Matrix d2 = Matrix::diagonal(ring, two);
  const Matrix dh = Matrix::diagonal(ring, half);
  const Matrix s23 = Matrix::permutation(ring, Permutation::transposition(n, 1, 2));
  auto b = [&](int i, int j, const RingElement& x) { return Matrix::transvection(ring, n, i, j, x); };
  const bool homotheties = ring == RingId::Q || ring == RingId::RatFun;

  for (int k = 0; k < cfg.trials; ++k) {
    const RingElement& x1 = pick(pool, rng);
    const RingElement& x2 = pick(pool, rng);
    rec.check(b(0, 2, x1) * b(2, 1, x2) == b(2, 1, x2) * b(0, 2, x1) * b(0, 1, x1 * x2),
              [&] { return Json{{"check", "commutator identity"}, {"x1", to_json(x1)}, {"x2", to_json(x2)}}; });
    rec.check(b(0, 1, x1) * b(0, 1, x2) == b(0, 1, x1 + x2), [&] { return note("transvection additivity"); });
    rec.check(s23 * b(0, 1, x1) * s23 == b(0, 2, x1), [&] { return note("conjugation transport"); });
    rec.check(b(0, 1, x1) * b(0, 1, x1) == d2 * b(0, 1, x1) * dh, [&] { return note("square identity"); });

    std::uniform_int_distribution<int> len(0, 6);
    const GeneratorWord u = random_word(n, ring, len(rng), rng);
    const GeneratorWord v = random_word(n, ring, len(rng), rng);
    const Matrix eu = eval(u);
    const Matrix ev = eval(v);
    rec.check(eval(u.concat(v)) == eu * ev && is_nonnegative(eu),
              [&] { return Json{{"check", "eval homomorphism"}, {"u", to_json(u)}, {"v", to_json(v)}}; });

    if (homotheties) {
      const CentralHomDescriptor h = random_homothety(ring, rng);
      rec.check(h.apply(eu * ev) == h.apply(eu) * h.apply(ev),
                [&] { return Json{{"check", "homothety multiplicative"}, {"homothety", to_json(h)}, {"u", to_json(u)}, {"v", to_json(v)}}; });
      rec.check(h.invertible(n) && h.apply_inverse(h.apply(eu)) == eu,
                [&] { return Json{{"check", "homothety inverse"}, {"homothety", to_json(h)}, {"u", to_json(u)}}; });
    }

    // Triples compose like the maps they denote.
    Rng r1(rng());
    const auto t1 = ground_truth(random_description(n, ring, r1));
    const auto t2 = ground_truth(random_description(n, ring, r1));
    if (t1 && t2) {
      rec.check(compose(*t1, *t2).apply(eu) == t1->apply(t2->apply(eu)),
                [&] { return Json{{"check", "triple composition"}, {"left", to_json(*t1)}, {"right", to_json(*t2)}}; });
    }
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ring-axioms", "1", "2", "3", "4", "5", "7", "8", "9", "10", "11", "12",
                                              "13", "theorem-identities"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteConfig& config) {
  if (config.trials < 1) throw Error("trials must be at least 1");
  if (config.n < 1) throw Error("n must be positive");
  SuiteReport report{std::string(name), config, 0, 0, std::nullopt};
  Recorder rec{report};
  if (name == "ring-axioms") ring_axioms(config, rec);
  else if (name == "1") inverse_positivity(config, rec);
  else if (name == "2") positive_torsion(config, rec);
  else if (name == "3") involutions(config, rec);
  else if (name == "4") preservation(config, rec);
  else if (name == "5") k_normalization(config, rec);
  else if (name == "7") permutation_fixing(config, rec);
  else if (name == "8") central_diagonals(config, rec);
  else if (name == "9") block_shape(config, rec);
  else if (name == "10") shape_suite(config, rec, 10);
  else if (name == "11") shape_suite(config, rec, 11);
  else if (name == "12") c_extraction(config, rec);
  else if (name == "13") flip_rejection(config, rec);
  else if (name == "theorem-identities") composite_identities(config, rec);
  else throw Error("unknown suite \"" + std::string(name) + "\"");
  return report;
}

Json to_json(const SuiteReport& r) {
  Json out{{"suite", r.suite},
           {"ring", ring_name(r.config.ring)},
           {"n", r.config.n},
           {"trials", r.config.trials},
           {"seed", r.config.seed},
           {"checks", r.checks},
           {"failures", r.failures},
           {"ok", r.ok()}};
  if (r.counterexample) out["counterexample"] = *r.counterexample;
  return out;
}

}  // namespace posmat

#include "posmat/decompose.hpp"

#include <algorithm>
#include <map>

namespace posmat {

namespace {

Matrix diag_with_first(RingId ring, int n, const RingElement& x) {
  std::vector<RingElement> d(static_cast<std::size_t>(n), RingElement::one(ring));
  d[0] = x;
  return Matrix::diagonal(ring, d);
}

// y if m == B_ij(y) exactly, nullopt otherwise.
std::optional<RingElement> read_transvection(const Matrix& m, int i, int j) {
  const int n = m.size();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (r == c) {
        if (!m(r, c).is_one()) return std::nullopt;
      } else if (!(r == i && c == j) && !m(r, c).is_zero()) {
        return std::nullopt;
      }
    }
  return m(i, j);
}

std::pair<int, int> points(const Permutation& p) {
  std::vector<int> moved;
  for (int i = 0; i < p.size(); ++i)
    if (p(i) != i) moved.push_back(i);
  return {moved.at(0), moved.at(1)};
}

bool is_transposition(const Permutation& p) { return p.support_size() == 2 && (p * p).is_identity(); }

bool is_triple_transposition(const Permutation& p) { return p.support_size() == 6 && (p * p).is_identity(); }

const RingElement* find_sample(const SampleTable& t, const RingElement& x) {
  for (const auto& [k, v] : t)
    if (k == x) return &v;
  return nullptr;
}

// rho with phi((1 k)) = (rho(1) rho(k)) for k = 2..m+1, from the shared point.
Permutation rho_from_transpositions(const std::vector<std::pair<int, int>>& images, int n, const Matrix& witness) {
  const auto [a, b] = images.at(0);
  const auto [c, d] = images.at(1);
  const bool share_a = a == c || a == d;
  const bool share_b = b == c || b == d;
  if (share_a == share_b) {
    throw NotAutomorphism("fix_permutations", share_a ? "images of (1 2) and (1 3) coincide"
                                                      : "images of (1 2) and (1 3) are disjoint",
                          witness);
  }
  const int p = share_a ? a : b;
  std::vector<int> rho(static_cast<std::size_t>(n), -1);
  rho[0] = p;
  for (std::size_t k = 0; k < images.size(); ++k) {
    const auto [x, y] = images[k];
    if (x != p && y != p) throw NotAutomorphism("fix_permutations", "φ not an automorphism", witness);
    rho[k + 1] = x == p ? y : x;
  }
  for (int k = static_cast<int>(images.size()) + 1; k < n; ++k) rho[static_cast<std::size_t>(k)] = k;
  try {
    return Permutation(std::move(rho));
  } catch (const Error&) {
    throw NotAutomorphism("fix_permutations", "φ not an automorphism", witness);
  }
}

AutomorphismOracle conjugated(const AutomorphismOracle& base, const MonomialMatrix& c) {
  return AutomorphismOracle(base, [base, c](const Matrix& x) { return conjugate(c, base(x)); });
}

struct Unfittable {
  std::string stage;
  std::string reason;
};

}  // namespace

std::string_view verdict_name(DecompositionReport::Verdict v) {
  switch (v) {
    case DecompositionReport::Verdict::OK: return "OK";
    case DecompositionReport::Verdict::NotAutomorphism: return "NotAutomorphism";
    default: return "Unfittable";
  }
}

Permutation stage_k_normalize(const AutomorphismOracle& oracle) {
  const int n = oracle.size();
  const RingId ring = oracle.ring();
  std::vector<RingElement> d(static_cast<std::size_t>(n), RingElement::one(ring));
  d.back() = RingElement::integer(ring, 2);
  const Matrix y = oracle(Matrix::diagonal(ring, d));
  const char* reason = "image of central-type diagonal is not of shape γ…γδγ…γ";
  if (!y.is_diagonal()) throw NotAutomorphism("k_normalize", reason, y);
  const auto e = y.diagonal_entries();
  const RingElement& common = (e[0] == e[1] || e[0] == e[2]) ? e[0] : e[1];
  int odd = -1;
  for (int i = 0; i < n; ++i) {
    if (e[static_cast<std::size_t>(i)] == common) continue;
    if (odd >= 0) throw NotAutomorphism("k_normalize", reason, y);
    odd = i;
  }
  if (odd < 0) throw NotAutomorphism("k_normalize", reason, y);
  return odd == n - 1 ? Permutation(n) : Permutation::transposition(n, odd, n - 1);
}

FixPermutationsResult stage_fix_permutations(const AutomorphismOracle& oracle, NormalizationTrace& trace,
                                             const DecomposeConfig& config) {
  const int n = oracle.size();
  const RingId ring = oracle.ring();
  if (n < 3) throw DimensionMismatch("decomposition needs n >= 3");
  MonomialMatrix conj = MonomialMatrix::identity(ring, n);
  AutomorphismOracle current = oracle;
  auto narrow = [&](const MonomialMatrix& m) {
    conj = m * conj;
    current = conjugated(oracle, conj);
  };

  if (n == 6 || config.force_k_normalize) {
    const Permutation sigma = stage_k_normalize(current);
    trace.sigma_k = sigma;
    if (!sigma.is_identity()) narrow(MonomialMatrix::from_permutation(ring, sigma));
  }

  // phi on the transpositions (1 k).
  std::vector<std::pair<int, int>> images;
  std::vector<Matrix> witnesses;
  for (int k = 1; k < n; ++k) {
    const Matrix y = current(Matrix::permutation(ring, Permutation::transposition(n, 0, k)));
    const auto m = monomial_recognize(y);
    if (!m) throw NotAutomorphism("fix_permutations", "image of a permutation matrix is not monomial", y);
    if (n == 6 && is_triple_transposition(m->perm)) {
      throw NotAutomorphism("fix_permutations", "n=6 outer case detected", y);
    }
    if (!is_transposition(m->perm)) throw NotAutomorphism("fix_permutations", "φ not an automorphism", y);
    images.push_back(points(m->perm));
    witnesses.push_back(y);
  }

  Permutation rho(n);
  if (n == 6) {
    // After K-normalization the last point is fixed: recover tau on the
    // first five points, then (1 6) must go to (tau(1) 6).
    std::vector<std::pair<int, int>> inner(images.begin(), images.begin() + 4);
    for (const auto& [a, b] : inner) {
      if (a == 5 || b == 5) throw NotAutomorphism("fix_permutations", "φ not an automorphism", witnesses[0]);
    }
    const Permutation tau = rho_from_transpositions(inner, n, witnesses[0]);
    trace.tau6 = tau;
    const auto last = images[4];
    const std::pair<int, int> expected{std::min(tau(0), 5), std::max(tau(0), 5)};
    if (last != expected) throw NotAutomorphism("fix_permutations", "n=6 outer case detected", witnesses[4]);
    rho = tau;
  } else {
    rho = rho_from_transpositions(images, n, witnesses[0]);
  }
  trace.rho = rho;
  if (!rho.is_identity()) narrow(MonomialMatrix::from_permutation(ring, rho.inverse()));

  // Diagonal correction from the image of the cycle.
  const Permutation cyc = Permutation::cycle(n);
  const Matrix cyc_matrix = Matrix::permutation(ring, cyc);
  const Matrix y = current(cyc_matrix);
  const auto m = monomial_recognize(y);
  if (!m || !(m->perm == cyc)) throw NotAutomorphism("fix_permutations", "φ not an automorphism", y);
  const auto& alpha = m->diag;
  RingElement prod = RingElement::one(ring);
  for (int i = n - 1; i >= 0; --i) prod = prod * alpha[static_cast<std::size_t>(i)];
  if (!prod.is_one()) throw NotAutomorphism("fix_permutations", "product of α's ≠ 1", y);
  // Entry (i, i-1) of the image is alpha_i; conjugating by diag[t] turns it
  // into t_i alpha_i t_{i-1}^{-1}, so t_{i-1} = t_i alpha_i with t_n = 1.
  std::vector<RingElement> t(static_cast<std::size_t>(n), RingElement::one(ring));
  for (int i = n - 2; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i + 1)] * alpha[static_cast<std::size_t>(i + 1)];
  }
  trace.t = t;
  narrow(MonomialMatrix::from_diagonal(t));

  const Permutation swap = Permutation::transposition(n, 0, 1);
  const Matrix swap_matrix = Matrix::permutation(ring, swap);
  const Matrix z = current(swap_matrix);
  const auto ms = monomial_recognize(z);
  if (!ms || !(ms->perm == swap)) throw NotAutomorphism("fix_permutations", "φ not an automorphism", z);
  const RingElement beta = ms->diag[0];
  trace.beta = beta;
  bool shape = (beta * ms->diag[1]).is_one();
  for (int i = 2; i < n; ++i) shape = shape && ms->diag[static_cast<std::size_t>(i)].is_one();
  if (!shape) throw NotAutomorphism("fix_permutations", "image of S_(1,2) is not diag[β, β⁻¹, 1, …]·S_(1,2)", z);
  if (!beta.is_one()) throw NotAutomorphism("fix_permutations", "β ≠ 1", z);

  const Matrix c2 = current(cyc_matrix);
  if (!(c2 == cyc_matrix)) throw NotAutomorphism("fix_permutations", "φ not an automorphism", c2);
  Rng rng(config.seed ^ 0x5eedf1c5ULL);
  for (int k = 0; k < config.random_perm_checks; ++k) {
    const Matrix s = Matrix::permutation(ring, random_permutation(n, rng));
    const Matrix img = current(s);
    if (!(img == s)) throw NotAutomorphism("fix_permutations", "normalized map moves a permutation matrix", img);
  }
  return {conj, current};
}

void stage_shape_diagnostics(const AutomorphismOracle& normalized, NormalizationTrace& trace) {
  const int n = normalized.size();
  const RingId ring = normalized.ring();
  const char* stage = "shape_diagnostics";

  // B_12(1) goes to Y + aI with Y supported on the leading 2x2 block.
  const Matrix b = normalized(Matrix::transvection(ring, n, 0, 1, RingElement::one(ring)));
  bool block = true;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (r < 2 && c < 2) continue;
      if (r != c && !b(r, c).is_zero()) block = false;
    }
  const RingElement& a = b(n - 1, n - 1);
  for (int i = 2; i < n; ++i) block = block && b(i, i) == a;
  if (!block || !a.is_positive() || !a.is_central() || !a.is_unit()) {
    throw NotAutomorphism(stage, "image of B_12(1) is not a 2x2 block plus a central scalar", b);
  }

  std::vector<RingElement> xs;
  for (const auto& u : unit_pool(ring))
    if (u.is_central()) xs.push_back(u);
  const RingElement four = RingElement::integer(ring, 4);
  if (std::find(xs.begin(), xs.end(), four) == xs.end()) xs.push_back(four);

  for (const auto& x : xs) {
    const Matrix y = normalized(diag_with_first(ring, n, x));
    if (!y.is_diagonal()) throw NotAutomorphism(stage, "image of diag[x,1,…,1] is not diagonal", y);
    const auto e = y.diagonal_entries();
    const RingElement& xi = e[0];
    const RingElement& eta = e[1];
    for (int i = 2; i < n; ++i) {
      if (!(e[static_cast<std::size_t>(i)] == eta)) {
        throw NotAutomorphism(stage, "image of diag[x,1,…,1] is not of shape diag[ξ,η,…,η]", y);
      }
    }
    if (!x.is_one() && xi == eta) throw NotAutomorphism(stage, "distinct diagonal entries collapsed", y);
    if (!xi.is_central() || !eta.is_central()) throw NotAutomorphism(stage, "ξ or η is not central", y);
    const RingElement nu = xi * eta.inverse();
    for (const auto& [prev, prev_nu] : trace.nu_samples) {
      if (prev_nu == nu) {
        throw NotAutomorphism(stage, "ν is not injective on the pool", y,
                              {{"x1", prev.str()}, {"x2", x.str()}, {"nu", nu.str()}});
      }
    }
    trace.xi_eta_samples.push_back({x, {xi, eta}});
    trace.nu_samples.emplace_back(x, nu);
  }
  const RingElement two = RingElement::integer(ring, 2);
  const RingElement* nu2 = find_sample(trace.nu_samples, two);
  if (nu2 == nullptr || !(*nu2 == two)) {
    throw NotAutomorphism(stage, "ν(2) ≠ 2", std::nullopt, {{"nu(2)", nu2 ? nu2->str() : "missing"}});
  }
}

namespace {

[[noreturn]] void reject_flip(const AutomorphismOracle& normalized, const RingElement& x, const RingElement& cx) {
  const int n = normalized.size();
  const RingId ring = normalized.ring();
  const char* stage = "extract_c";
  const Matrix sq = normalized(Matrix::transvection(ring, n, 0, 1, x * x));
  const auto cx2 = read_transvection(sq, 1, 0);
  if (!cx2) throw NotAutomorphism(stage, "image not a transvection", sq);
  // B13(x) B32(x) = B32(x) B13(x) B12(x^2) must survive the map. In the flip
  // case the two sides differ at (2,1) by c(x)^2 + c(x^2).
  const Matrix b13 = normalized(Matrix::transvection(ring, n, 0, 2, x));
  const Matrix b32 = normalized(Matrix::transvection(ring, n, 2, 1, x));
  const Matrix lhs = b13 * b32;
  const Matrix rhs = b32 * b13 * sq;
  const RingElement gap = cx * cx + *cx2;
  throw NotAutomorphism(stage, "flip case: commutator identity forces c ≡ 0", rhs,
                        {{"x", x.str()},
                         {"c(x)", cx.str()},
                         {"c(x^2)", cx2->str()},
                         {"c(x)^2 + c(x^2)", gap.str()},
                         {"identity_holds", lhs == rhs ? "true" : "false"}});
}

}  // namespace

SampleTable stage_extract_c(const AutomorphismOracle& normalized, const std::vector<RingElement>& pool) {
  const int n = normalized.size();
  const RingId ring = normalized.ring();
  SampleTable table;
  for (const auto& x : pool) {
    const Matrix y = normalized(Matrix::transvection(ring, n, 0, 1, x));
    if (auto v = read_transvection(y, 0, 1)) {
      table.emplace_back(x, *v);
      continue;
    }
    if (auto v = read_transvection(y, 1, 0); v && !x.is_zero()) reject_flip(normalized, x, *v);
    throw NotAutomorphism("extract_c", "image not a transvection", y);
  }
  return table;
}

CheckResult verify_c(const SampleTable& c, RingId ring,
                     const std::function<std::optional<RingElement>(const RingElement&)>& lookup) {
  (void)ring;
  std::vector<std::pair<RingElement, RingElement>> pairs;
  for (const auto& [a, ca] : c)
    for (const auto& [b, cb] : c) pairs.emplace_back(a, b);
  return verify_c_pairs(c, pairs, lookup);
}

CheckResult verify_c_pairs(const SampleTable& c, const std::vector<std::pair<RingElement, RingElement>>& pairs,
                           const std::function<std::optional<RingElement>(const RingElement&)>& lookup) {
  auto value = [&](const RingElement& x) -> std::optional<RingElement> {
    if (const RingElement* v = find_sample(c, x)) return *v;
    if (lookup) return lookup(x);
    return std::nullopt;
  };
  if (!c.empty()) {
    const RingElement one = RingElement::one(c.front().first.ring());
    if (auto c1 = value(one); c1 && !c1->is_one()) return {false, "c(1) != 1", std::pair{one, one}};
  }
  for (const auto& [a, b] : pairs) {
    const auto ca = value(a);
    const auto cb = value(b);
    if (!ca || !cb) continue;
    if (auto s = value(a + b); s && !(*s == *ca + *cb)) return {false, "c is not additive", std::pair{a, b}};
    if (auto p = value(a * b); p && !(*p == *ca * *cb)) return {false, "c is not multiplicative", std::pair{a, b}};
    if (less(a, b) && !less(*ca, *cb)) return {false, "c does not preserve the order", std::pair{a, b}};
  }
  return {};
}

std::optional<RingMapDescriptor> fit_ring_map(const SampleTable& c, RingId ring) {
  RingMapDescriptor candidate = RingMapDescriptor::identity(ring);
  if (ring == RingId::RatFun) {
    if (const RingElement* cs = find_sample(c, RingElement::s(ring))) {
      const RatFun f = *cs->as_ratfun();
      if (!f.is_polynomial() || f.num().degree() != 1 || f.num().lc() <= 0) return std::nullopt;
      candidate = RingMapDescriptor::affine(ring, f.num().coeff(1), f.num().coeff(0));
    }
  } else if (ring == RingId::Skew) {
    const RingElement* cs = find_sample(c, RingElement::s(ring));
    const RingElement* ct = find_sample(c, RingElement::t());
    if (cs != nullptr && ct != nullptr) {
      const auto& ts = std::get<SkewPoly>(cs->payload()).terms;
      const auto& tt = std::get<SkewPoly>(ct->payload()).terms;
      if (ts.size() != 1 || ts.begin()->first != 0 || tt.size() != 1 || tt.begin()->first != 1) return std::nullopt;
      const RatFun& f = ts.begin()->second;
      if (!f.is_polynomial() || f.num().degree() != 1 || f.num().coeff(0) != 0) return std::nullopt;
      candidate = RingMapDescriptor::affine(ring, f.num().coeff(1), 0, tt.begin()->second);
    }
  }
  try {
    candidate.validate();
  } catch (const Error&) {
    return std::nullopt;
  }
  for (const auto& [x, cx] : c)
    if (!(candidate.apply(x) == cx)) return std::nullopt;
  return candidate;
}

SampleTable stage_extract_gamma(const AutomorphismOracle& normalized, const std::vector<RingElement>& probes) {
  const int n = normalized.size();
  const RingId ring = normalized.ring();
  const char* stage = "extract_gamma";
  SampleTable table;
  auto query = [&](const RingElement& alpha) {
    if (const RingElement* v = find_sample(table, alpha)) return *v;
    const Matrix y = normalized(diag_with_first(ring, n, alpha));
    bool shape = y.is_diagonal();
    RingElement g = y(n - 1, n - 1);
    for (int i = 1; shape && i < n; ++i) shape = y(i, i) == g;
    shape = shape && y(0, 0) == alpha * g;
    if (!shape) throw NotAutomorphism(stage, "diagonal image shape violated", y);
    if (!g.is_central() || !g.is_positive()) throw NotAutomorphism(stage, "γ not central/multiplicative", y);
    table.emplace_back(alpha, g);
    return g;
  };
  for (const auto& a : probes) query(a);
  const std::size_t base = probes.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = i; j < base; ++j) {
      const RingElement a = table[i].first;
      const RingElement b = table[j].first;
      const RingElement ga = table[i].second;
      const RingElement gb = table[j].second;
      const RingElement gab = query(a * b);
      if (!(gab == ga * gb)) {
        throw NotAutomorphism(stage, "γ not central/multiplicative", std::nullopt,
                              {{"alpha1", a.str()}, {"alpha2", b.str()}, {"gamma(alpha1 alpha2)", gab.str()}});
      }
    }
  return table;
}

std::optional<CentralHomDescriptor> fit_homothety(const SampleTable& gamma, RingId ring) {
  CentralHomDescriptor h = CentralHomDescriptor::trivial(ring);
  if (ring != RingId::Skew) {
    for (unsigned long p : {2UL, 3UL, 5UL}) {
      const RingElement* g = find_sample(gamma, RingElement::integer(ring, static_cast<long>(p)));
      if (g == nullptr) continue;
      const auto q = g->as_rational();
      if (!q) return std::nullopt;
      if (*q != 1) h.gamma.emplace(p, *q);
    }
    if (ring == RingId::RatFun) {
      if (const RingElement* g = find_sample(gamma, RingElement::s(ring))) {
        const auto q = g->as_rational();
        if (!q) return std::nullopt;
        h.degree_weight = *q;
      }
    }
  }
  for (const auto& [alpha, g] : gamma) {
    mpq_class expected = 1;
    if (!h.is_trivial()) {
      expected = h.gamma_of(abs(alpha.leading_ratio()));
      for (int d = alpha.s_degree(); d > 0; --d) expected *= h.degree_weight;
      for (int d = alpha.s_degree(); d < 0; ++d) expected /= h.degree_weight;
    }
    if (!(g == RingElement::rational(ring, expected))) return std::nullopt;
  }
  return h;
}

DecompositionReport decompose(const AutomorphismOracle& oracle, const DecomposeConfig& config) {
  DecompositionReport report;
  const int n = oracle.size();
  const RingId ring = oracle.ring();
  auto& trace = report.trace;
  try {
    if (n < 3) throw DimensionMismatch("decomposition needs n >= 3");

    // Diagonal and monomial matrices must be preserved.
    std::vector<RingElement> powers;
    for (int i = 1; i <= n; ++i) powers.push_back(RingElement::integer(ring, 1L << i));
    const Matrix dy = oracle(Matrix::diagonal(ring, powers));
    if (!dy.is_diagonal()) throw NotAutomorphism("preservation", "image of diag[2,4,…,2^n] is not diagonal", dy);
    const auto de = dy.diagonal_entries();
    for (std::size_t i = 0; i < de.size(); ++i)
      for (std::size_t j = i + 1; j < de.size(); ++j)
        if (de[i] == de[j]) throw NotAutomorphism("preservation", "image of diag[2,4,…,2^n] has repeated entries", dy);
    Rng rng(config.seed);
    for (int k = 0; k < 5; ++k) {
      const Matrix y = oracle(random_monomial(ring, n, rng).to_matrix());
      if (!monomial_recognize(y)) throw NotAutomorphism("preservation", "image of a monomial matrix is not monomial", y);
    }

    auto fixed = stage_fix_permutations(oracle, trace, config);
    const AutomorphismOracle& normalized = fixed.normalized;
    stage_shape_diagnostics(normalized, trace);

    auto pool = nonnegative_pool(ring);
    if (config.shuffle_pool) std::shuffle(pool.begin(), pool.end(), rng);
    trace.c_samples = stage_extract_c(normalized, pool);

    // Sums and products leaving the pool are queried once and remembered.
    std::map<std::string, std::pair<RingElement, RingElement>> memo;
    auto lookup = [&](const RingElement& x) -> std::optional<RingElement> {
      const std::string key = x.str();
      if (auto it = memo.find(key); it != memo.end()) return it->second.second;
      const Matrix y = normalized(Matrix::transvection(ring, n, 0, 1, x));
      auto v = read_transvection(y, 0, 1);
      if (!v) throw NotAutomorphism("verify_c", "image not a transvection", y);
      memo.emplace(key, std::pair{x, *v});
      return v;
    };
    std::vector<std::pair<RingElement, RingElement>> pairs;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int k = 0; k < config.c_pair_samples; ++k) pairs.emplace_back(pool[pick(rng)], pool[pick(rng)]);
    const CheckResult check = verify_c_pairs(trace.c_samples, pairs, lookup);
    if (!check.ok) {
      std::vector<std::pair<std::string, std::string>> detail;
      if (check.pair) detail = {{"x1", check.pair->first.str()}, {"x2", check.pair->second.str()}};
      throw NotAutomorphism("verify_c", check.failure, std::nullopt, detail);
    }

    SampleTable all_c = trace.c_samples;
    for (const auto& [key, xv] : memo) all_c.push_back(xv);
    const auto c = fit_ring_map(all_c, ring);
    if (!c) throw Unfittable{"fit_c", "c matches no catalog ring map"};

    const RingMapDescriptor c_inv = c->inverse();
    const AutomorphismOracle homothety_part(normalized, [normalized, c_inv](const Matrix& x) {
      return c_inv.apply(normalized(x));
    });
    std::vector<RingElement> probes = unit_pool(ring);
    for (long p : {3L, 5L}) {
      const RingElement v = RingElement::integer(ring, p);
      if (std::find(probes.begin(), probes.end(), v) == probes.end()) probes.push_back(v);
    }
    trace.gamma_samples = stage_extract_gamma(homothety_part, probes);
    const auto h = fit_homothety(trace.gamma_samples, ring);
    if (!h) throw Unfittable{"fit_gamma", "γ matches no catalog homothety"};

    StandardTriple triple{invert_monomial(fixed.conjugator), *c, *h};
    if (is_commutative(ring)) {
      const RingElement scale = triple.m.diag[0].inverse();
      for (auto& d : triple.m.diag) d = d * scale;
    }
    try {
      triple.validate();
    } catch (const Error& e) {
      throw NotAutomorphism("assemble", e.what());
    }
    report.triple = triple;

    Rng words(config.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> length(1, std::max(1, config.max_word_length));
    bool all_equal = true;
    for (int k = 0; k < config.word_count; ++k) {
      GeneratorWord w = random_word(n, ring, length(words), words);
      const Matrix x = eval(w);
      Matrix lhs = oracle(x);
      Matrix rhs = triple.apply(x);
      const bool eq = lhs == rhs;
      all_equal = all_equal && eq;
      report.residuals.push_back({std::move(w), std::move(lhs), std::move(rhs), eq});
    }
    if (!all_equal) {
      const auto bad = std::find_if(report.residuals.begin(), report.residuals.end(),
                                    [](const ResidualCheck& r) { return !r.equal; });
      throw NotAutomorphism("residual", "triple disagrees with the oracle on a sampled word", bad->lhs);
    }
    report.verdict = DecompositionReport::Verdict::OK;
  } catch (const NotAutomorphism& e) {
    report.verdict = DecompositionReport::Verdict::NotAutomorphism;
    report.stage = e.stage;
    report.reason = e.reason;
    report.witness = e.witness;
    report.detail = e.detail;
  } catch (const Unfittable& e) {
    report.verdict = DecompositionReport::Verdict::Unfittable;
    report.stage = e.stage;
    report.reason = e.reason;
  } catch (const NotMonomial& e) {
    report.verdict = DecompositionReport::Verdict::NotAutomorphism;
    report.stage = "recognition";
    report.reason = e.what();
  }
  report.query_count = oracle.queries();
  return report;
}

}  // namespace posmat

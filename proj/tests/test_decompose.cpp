#include "support.hpp"

using namespace posmat;
using namespace posmat::test;

namespace {
const RingId Qr = RingId::Q;

AutomorphismOracle identity_oracle(int n, RingId r) {
  return AutomorphismOracle(n, r, [](const Matrix& x) { return x; });
}

AutomorphismOracle inner_oracle(const MonomialMatrix& m) {
  return oracle_from_triple(StandardTriple{m, RingMapDescriptor::identity(m.ring()), CentralHomDescriptor::trivial(m.ring())});
}

const RingElement* lookup(const SampleTable& t, const RingElement& x) {
  for (const auto& [k, v] : t)
    if (k == x) return &v;
  return nullptr;
}
}  // namespace

TEST_CASE("K-normalization") {
  CHECK(stage_k_normalize(identity_oracle(3, Qr)).is_identity());
  const auto m = MonomialMatrix::from_permutation(Qr, swap1(3, 1, 3));
  CHECK(stage_k_normalize(inner_oracle(m)) == swap1(3, 1, 3));

  AutomorphismOracle bad(3, Qr, [](const Matrix& x) { return x.is_diagonal() ? x + Matrix::transvection(Qr, 3, 0, 1, q(Qr, 1)) : x; });
  CHECK_THROWS_AS(stage_k_normalize(bad), NotAutomorphism);
}

TEST_CASE("permutation normalization") {
  NormalizationTrace trace;
  auto res = stage_fix_permutations(identity_oracle(3, Qr), trace);
  CHECK(res.conjugator.to_matrix().is_identity());

  const Matrix m = diag_q({{2, 1}, {1, 1}, {1, 1}}) * perm_matrix(Qr, Permutation::cycle(3));
  NormalizationTrace t2;
  auto r2 = stage_fix_permutations(inner_oracle(*monomial_recognize(m)), t2);
  const Matrix s12 = perm_matrix(Qr, swap1(3, 1, 2));
  const Matrix c3 = perm_matrix(Qr, Permutation::cycle(3));
  CHECK(r2.normalized(s12) == s12);
  CHECK(r2.normalized(c3) == c3);
  REQUIRE(t2.beta);
  CHECK(t2.beta->is_one());

  Rng rng(12);
  for (int k = 0; k < 5; ++k) {
    const MonomialMatrix m6 = random_monomial(Qr, 6, rng);
    NormalizationTrace t6;
    auto r6 = stage_fix_permutations(inner_oracle(m6), t6);
    CHECK(t6.tau6.has_value());
    for (const auto& p : {swap1(6, 1, 2), Permutation::cycle(6), random_permutation(6, rng)})
      CHECK(r6.normalized(perm_matrix(Qr, p)) == perm_matrix(Qr, p));
  }

  AutomorphismOracle transpose(3, Qr, [](const Matrix& x) { return x.transpose(); });
  NormalizationTrace t3;
  CHECK_THROWS_AS(stage_fix_permutations(transpose, t3), NotAutomorphism);
}

TEST_CASE("c extraction") {
  const auto pool = nonnegative_pool(Qr);
  const auto c = stage_extract_c(identity_oracle(3, Qr), pool);
  for (const auto& [x, y] : c) CHECK(x == y);

  const RingId R = RingId::RatFun;
  const auto map = RingMapDescriptor::affine(R, 2, 0);
  const auto oracle = oracle_from_triple(StandardTriple{MonomialMatrix::identity(R, 3), map, CentralHomDescriptor::trivial(R)});
  const RingElement s = RingElement::s(R);
  const auto table = stage_extract_c(oracle, {s});
  REQUIRE(lookup(table, s));
  CHECK(*lookup(table, s) == q(R, 2) * s);
  const auto fitted = fit_ring_map(stage_extract_c(oracle, nonnegative_pool(R)), R);
  REQUIRE(fitted);
  CHECK(*fitted == map);
}

TEST_CASE("flip oracle is rejected through the commutator identity") {
  AutomorphismOracle flip(3, Qr, [](const Matrix& x) { return apply_part(FlipPart{}, x); });
  try {
    stage_extract_c(flip, nonnegative_pool(Qr));
    FAIL("flip accepted");
  } catch (const NotAutomorphism& e) {
    CHECK(e.stage == "extract_c");
    bool holds_false = false;
    for (const auto& [k, v] : e.detail)
      if (k == "identity_holds") holds_false = v == "false";
    CHECK(holds_false);
  }
  const auto ob = obfuscated_oracle(AutomorphismDescription{4, Qr, {InnerPart{MonomialMatrix::from_permutation(Qr, Permutation::cycle(4))}, FlipPart{}}}, 3);
  const auto rep = decompose(ob.oracle);
  CHECK(rep.verdict == DecompositionReport::Verdict::NotAutomorphism);
  CHECK(rep.stage == "extract_c");
}

TEST_CASE("verify_c") {
  auto ident = [](const RingElement& x) { return std::optional<RingElement>(x); };
  SampleTable id;
  for (const auto& x : nonnegative_pool(Qr)) id.emplace_back(x, x);
  CHECK(verify_c(id, Qr, ident).ok);

  const RingId R = RingId::RatFun;
  const auto map = RingMapDescriptor::affine(R, 2, 0);
  SampleTable aff;
  for (const auto& x : nonnegative_pool(R)) aff.emplace_back(x, map.apply(x));
  CHECK(verify_c(aff, R, [&](const RingElement& x) { return std::optional<RingElement>(map.apply(x)); }).ok);

  SampleTable broken = id;
  broken[3].second = broken[3].second + RingElement::one(Qr);
  const auto res = verify_c(broken, Qr, ident);
  CHECK_FALSE(res.ok);
  CHECK(res.pair.has_value());
}

TEST_CASE("gamma extraction") {
  const auto g = stage_extract_gamma(identity_oracle(3, Qr), unit_pool(Qr));
  for (const auto& [a, v] : g) CHECK(v.is_one());

  CentralHomDescriptor h = CentralHomDescriptor::trivial(Qr);
  h.gamma[2] = 3;
  const auto oracle = oracle_from_triple(StandardTriple{MonomialMatrix::identity(Qr, 3), RingMapDescriptor::identity(Qr), h});
  CHECK(oracle(diag_q({{2, 1}, {1, 1}, {1, 1}})) == diag_q({{6, 1}, {3, 1}, {3, 1}}));
  const auto table = stage_extract_gamma(oracle, {q(Qr, 2), q(Qr, 3)});
  REQUIRE(lookup(table, q(Qr, 2)));
  CHECK(*lookup(table, q(Qr, 2)) == q(Qr, 3));
  const auto fitted = fit_homothety(table, Qr);
  REQUIRE(fitted);
  CHECK(*fitted == h);

  // would-be gamma equal to s, which is not central in SKEW
  const RingElement s = RingElement::s(RingId::Skew);
  AutomorphismOracle faulty(3, RingId::Skew, [s](const Matrix& x) { return x.is_diagonal() ? x.scaled_left(s) : x; });
  CHECK_THROWS_AS(stage_extract_gamma(faulty, {q(RingId::Skew, 2)}), NotAutomorphism);
}

TEST_CASE("decompose roundtrips") {
  const auto rep = decompose(identity_oracle(3, Qr));
  REQUIRE(rep.verdict == DecompositionReport::Verdict::OK);
  REQUIRE(rep.triple);
  CHECK(rep.triple->m.to_matrix().is_identity());
  CHECK(rep.triple->c.is_identity());
  CHECK(rep.triple->lambda.is_trivial());
  for (const auto& r : rep.residuals) CHECK(r.equal);

  CentralHomDescriptor h = CentralHomDescriptor::trivial(Qr);
  h.gamma[2] = 3;
  const Matrix m = diag_q({{1, 1}, {2, 1}, {1, 1}}) * perm_matrix(Qr, swap1(3, 1, 2));
  AutomorphismDescription desc{3, Qr, {InnerPart{*monomial_recognize(m)}, RingMapDescriptor::identity(Qr), h}};
  const auto ob = obfuscated_oracle(desc, 99);
  const auto r2 = decompose(ob.oracle);
  REQUIRE(r2.verdict == DecompositionReport::Verdict::OK);
  CHECK(r2.residuals.size() == 50);
  Rng rng(1);
  for (int k = 0; k < 50; ++k) {
    const Matrix x = eval(random_word(3, Qr, 1 + k % 12, rng));
    CHECK(r2.triple->apply(x) == ob.truth->apply(x));
  }
  CHECK(r2.query_count == ob.oracle.queries());

  for (auto ring : {RingId::Dyadic, RingId::RatFun, RingId::Skew}) {
    for (int n : {3, 6}) {
      const auto d = random_description(n, ring, rng);
      const auto o = obfuscated_oracle(d, rng());
      DecomposeConfig cfg;
      cfg.word_count = 10;
      const auto r = decompose(o.oracle, cfg);
      CHECK(r.verdict == DecompositionReport::Verdict::OK);
      REQUIRE(r.trace.beta);
      CHECK(r.trace.beta->is_one());
    }
  }
}

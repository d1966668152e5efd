#include "support.hpp"

using namespace posmat;
using namespace posmat::test;

namespace {
const RingId Qr = RingId::Q;

CentralHomDescriptor gamma_2_to_3() {
  CentralHomDescriptor h = CentralHomDescriptor::trivial(Qr);
  h.gamma[2] = 3;
  return h;
}
}  // namespace

TEST_CASE("inner automorphisms") {
  const Matrix b = Matrix::transvection(Qr, 3, 0, 1, q(Qr, 1));
  CHECK(apply_inner(MonomialMatrix::identity(Qr, 3), b) == b);
  CHECK(apply_inner(MonomialMatrix::from_permutation(Qr, swap1(3, 1, 2)), b) ==
        Matrix::transvection(Qr, 3, 1, 0, q(Qr, 1)));
  const auto d = MonomialMatrix::from_diagonal({q(Qr, 2), q(Qr, 1), q(Qr, 1)});
  CHECK(apply_inner(d, b) == Matrix::transvection(Qr, 3, 0, 1, q(Qr, 2)));
}

TEST_CASE("conjugating a diagonal by a permutation") {
  // S_sigma diag(a) S_sigma^{-1} = diag(a_{sigma^{-1}(i)})
  const Permutation c = Permutation::cycle(3);
  const std::vector<RingElement> a{q(Qr, 2), q(Qr, 3), q(Qr, 5)};
  std::vector<RingElement> want(3);
  for (int i = 0; i < 3; ++i) want[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(c.inverse()(i))];
  CHECK(apply_inner(MonomialMatrix::from_permutation(Qr, c), Matrix::diagonal(Qr, a)) == Matrix::diagonal(Qr, want));
}

TEST_CASE("ring maps") {
  const RingId R = RingId::RatFun;
  const RingElement s = RingElement::s(R);
  const Matrix b = Matrix::transvection(R, 3, 0, 1, s);
  CHECK(apply_ringmap(RingMapDescriptor::identity(R), b) == b);
  const auto c = RingMapDescriptor::affine(R, 2, 0);
  CHECK(apply_ringmap(c, b) == Matrix::transvection(R, 3, 0, 1, q(R, 2) * s));
  CHECK(RingMapDescriptor::affine(R, 1, 0).is_identity());

  const auto d = RingMapDescriptor::affine(R, mpq_class(1, 3), 5);
  const RingElement x = (s * s + q(R, 1)) * (s + q(R, 7)).inverse();
  CHECK(d.inverse().apply(d.apply(x)) == x);
  CHECK(compose(c, d).apply(x) == c.apply(d.apply(x)));
  CHECK_THROWS_AS(RingMapDescriptor::affine(R, -1, 0).validate(), InvalidTriple);
  CHECK_THROWS_AS(RingMapDescriptor::affine(RingId::Skew, 2, 1).validate(), InvalidTriple);
}

TEST_CASE("skew ring maps respect the twist") {
  const RingElement s = RingElement::s(RingId::Skew);
  const RingElement t = RingElement::t();
  // t_coef = (s+1)/(2s+1): conjugation by (s+1) t^0 composed with s -> s
  const RatFun g(Poly({1, 1}), Poly({1, 2}));
  const auto c = RingMapDescriptor::affine(RingId::Skew, 3, 0, g);
  CHECK_NOTHROW(c.validate());
  const RingElement x = s * t + q(RingId::Skew, 2) * t.inverse();
  const RingElement y = t * s + s;
  CHECK(c.apply(x * y) == c.apply(x) * c.apply(y));
  CHECK(c.apply(x + y) == c.apply(x) + c.apply(y));
  CHECK(c.apply(t * s) == c.apply(q(RingId::Skew, 2) * s * t));
  CHECK(c.inverse().apply(c.apply(x)) == x);
  CHECK(c.apply(x).is_positive() == x.is_positive());
}

TEST_CASE("homothety") {
  const Matrix x = diag_q({{2, 1}, {1, 1}, {1, 1}});
  CHECK(apply_homothety(CentralHomDescriptor::trivial(Qr), x) == x);
  const auto h = gamma_2_to_3();
  CHECK(apply_homothety(h, x) == diag_q({{6, 1}, {3, 1}, {3, 1}}));
  CHECK(h.gamma_of(mpq_class(4, 3)) == 9);
  CHECK(h.invertible(3));
  CHECK(h.apply_inverse(h.apply(x)) == x);

  // gamma(2) = 2 at n = 2 triples the exponent of 2 in det, not onto.
  CentralHomDescriptor bad = CentralHomDescriptor::trivial(Qr);
  bad.gamma[2] = 2;
  CHECK_FALSE(bad.invertible(2));
  CHECK_THROWS_AS(bad.validate(2), InvalidTriple);
  // gamma(2) = 1/2 at n = 2 negates that exponent, which is bijective.
  CentralHomDescriptor neg = CentralHomDescriptor::trivial(Qr);
  neg.gamma[2] = mpq_class(1, 2);
  CHECK(neg.invertible(2));

  CentralHomDescriptor skew = CentralHomDescriptor::trivial(RingId::Skew);
  skew.gamma[2] = 3;
  CHECK_THROWS_AS(skew.validate(3), UnsupportedRing);
}

TEST_CASE("homothety is multiplicative and invertible") {
  Rng rng(4);
  const auto h = gamma_2_to_3();
  for (int k = 0; k < 50; ++k) {
    const Matrix a = eval(random_word(3, Qr, 5, rng));
    const Matrix b = eval(random_word(3, Qr, 5, rng));
    CHECK(h.apply(a * b) == h.apply(a) * h.apply(b));
    CHECK(h.apply_inverse(h.apply(a)) == a);
  }
}

TEST_CASE("triples and descriptions") {
  const auto id = StandardTriple::identity(Qr, 3);
  const Matrix b = Matrix::transvection(Qr, 3, 0, 1, q(Qr, 1));
  CHECK(id.apply(b) == b);
  StandardTriple t{MonomialMatrix::from_permutation(Qr, swap1(3, 1, 2)), RingMapDescriptor::identity(Qr),
                   CentralHomDescriptor::trivial(Qr)};
  CHECK(t.apply(b) == Matrix::transvection(Qr, 3, 1, 0, q(Qr, 1)));

  Rng rng(8);
  for (auto r : {RingId::Q, RingId::Dyadic, RingId::RatFun, RingId::Skew}) {
    for (int k = 0; k < 8; ++k) {
      const auto desc = random_description(4, r, rng);
      const auto truth = ground_truth(desc);
      REQUIRE(truth);
      const auto ob = obfuscated_oracle(desc, rng());
      for (int w = 0; w < 5; ++w) {
        const Matrix x = eval(random_word(4, r, 4, rng));
        Matrix direct = x;
        for (auto it = desc.compose.rbegin(); it != desc.compose.rend(); ++it) direct = apply_part(*it, direct);
        CHECK(truth->apply(x) == direct);
        CHECK(ob.oracle(x) == direct);
      }
    }
  }
}

TEST_CASE("non-automorphism parts have no ground truth") {
  AutomorphismDescription d{3, Qr, {FlipPart{}}};
  CHECK_FALSE(ground_truth(d));
  const Matrix b = Matrix::transvection(Qr, 3, 0, 1, q(Qr, 1));
  CHECK(apply_part(FlipPart{}, b) == Matrix::transvection(Qr, 3, 1, 0, q(Qr, 1)));
  const Matrix s = perm_matrix(Qr, Permutation::cycle(3));
  CHECK(apply_part(FlipPart{}, s) == s);
  CHECK(apply_part(TransposePart{}, s) == s.transpose());
}

TEST_CASE("query counting is shared") {
  AutomorphismOracle base(3, Qr, [](const Matrix& x) { return x; });
  AutomorphismOracle derived(base, [&](const Matrix& x) { return base(base(x)); });
  derived(Matrix::identity(Qr, 3));
  CHECK(base.queries() == 2);
  CHECK(derived.queries() == 2);
}

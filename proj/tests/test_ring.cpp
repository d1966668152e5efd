#include "support.hpp"

using namespace posmat;
using namespace posmat::test;

namespace {

RatFun poly(std::vector<mpq_class> c) { return RatFun(Poly(std::move(c))); }

// Independent description of a SKEW element as its term map.
RingElement skew_terms(std::map<long, RatFun> terms) { return RingElement::skew(SkewPoly{std::move(terms)}); }

}  // namespace

TEST_CASE("rational basics") {
  CHECK(q(RingId::Q, 1, 2) + q(RingId::Q, 1, 2) == RingElement::one(RingId::Q));
  CHECK((q(RingId::Q, 2) * q(RingId::Q, 1, 2)).is_one());
  CHECK(q(RingId::Q, 1, 2).sign() == 1);
  CHECK(q(RingId::Q, -3, 7).sign() == -1);
  CHECK(RingElement::zero(RingId::Q).sign() == 0);
}

TEST_CASE("ratfun arithmetic against polynomial oracle") {
  const RingElement s = RingElement::s(RingId::RatFun);
  CHECK((s + (-s)).is_zero());
  const RingElement one = RingElement::one(RingId::RatFun);
  const RingElement got = (s + one) * (s - one);
  CHECK(got == RingElement::ratfun(RingId::RatFun, poly({-1, 0, 1})));
}

TEST_CASE("ratfun order is the order at s = +infinity") {
  const RingElement s = RingElement::s(RingId::RatFun);
  const RingElement a = s - q(RingId::RatFun, 1000000);
  CHECK(a.sign() == 1);
  // evaluation oracle far beyond every root
  CHECK(Poly({-1000000, 1}).evaluate(10000000) > 0);
  const RingElement b = q(RingId::RatFun, 3) - s;
  CHECK(b.sign() == -1);
  CHECK(Poly({3, -1}).evaluate(10000000) < 0);
  CHECK(less(q(RingId::RatFun, 1000000000), s));
  CHECK(s.inverse().is_positive());
  CHECK(less(s.inverse(), q(RingId::RatFun, 1, 1000000000)));
}

TEST_CASE("dyadic units") {
  const auto inv = q(RingId::Dyadic, 2).try_invert();
  REQUIRE(inv);
  CHECK(*inv == q(RingId::Dyadic, 1, 2));
  CHECK_FALSE(q(RingId::Dyadic, 3).try_invert());
  CHECK_THROWS_AS(q(RingId::Dyadic, 3).inverse(), NotAUnit);
  CHECK_THROWS_AS(q(RingId::Dyadic, 1, 3), NotRepresentable);
  // 3 * m * 2^e is 3 times an odd number times a power of two, never 1.
  for (long m = -99; m <= 99; m += 2)
    for (long e = -8; e <= 8; ++e) CHECK_FALSE((q(RingId::Dyadic, 3) * RingElement::dyadic(m, e)).is_one());
}

TEST_CASE("skew twist and multiplication") {
  const RingElement s = RingElement::s(RingId::Skew);
  const RingElement t = RingElement::t();
  CHECK(t * s == skew_terms({{1, poly({0, 2})}}));
  CHECK((t * s) * s == t * (s * s));
  CHECK(s * t + s * t == skew_terms({{1, poly({0, 2})}}));
  CHECK(twist(RatFun::variable(), 3) == poly({0, 8}));
}

TEST_CASE("skew units and inverse of s*t") {
  const RingElement s = RingElement::s(RingId::Skew);
  const RingElement t = RingElement::t();
  const RingElement st = s * t;
  const auto inv = st.try_invert();
  REQUIRE(inv);
  CHECK((st * *inv).is_one());
  CHECK((*inv * st).is_one());
  // (s t)^{-1} = t^{-1} s^{-1} = (2/s) t^{-1}
  const RatFun two_over_s(Poly({2}), Poly({0, 1}));
  CHECK(*inv == skew_terms({{-1, two_over_s}}));
  CHECK_FALSE((s + t).try_invert());
}

TEST_CASE("skew order uses the lowest t-degree") {
  const RingElement s = RingElement::s(RingId::Skew);
  const RingElement t = RingElement::t();
  CHECK((t - s).sign() == -1);
  CHECK((s - t).sign() == 1);
  CHECK((t.inverse() - q(RingId::Skew, 1000)).sign() == 1);
}

TEST_CASE("centrality") {
  CHECK(q(RingId::Q, 1, 2).is_central());
  const RingElement s = RingElement::s(RingId::Skew);
  CHECK_FALSE(s.is_central());
  CHECK_FALSE(RingElement::t().is_central());
  CHECK(q(RingId::Skew, 7, 3).is_central());
  CHECK(s.is_unit());
  CHECK(RingElement::s(RingId::RatFun).is_central());
}

TEST_CASE("ring names") {
  for (auto r : {RingId::Q, RingId::Dyadic, RingId::RatFun, RingId::Skew}) CHECK(parse_ring(ring_name(r)) == r);
  CHECK_THROWS_AS(parse_ring("Z"), ParseError);
}

TEST_CASE("mixing rings is rejected") {
  CHECK_THROWS_AS(q(RingId::Q, 1) + q(RingId::Dyadic, 1), RingMismatch);
}

TEST_CASE("axiom sweep on random elements") {
  Rng rng(5);
  for (auto r : {RingId::Q, RingId::Dyadic, RingId::RatFun, RingId::Skew}) {
    for (int k = 0; k < 200; ++k) {
      const RingElement a = random_element(r, rng);
      const RingElement b = random_element(r, rng);
      const int cases = int(a.is_zero()) + int(a.is_positive()) + int((-a).is_positive());
      CHECK(cases == 1);
      if (a.is_positive() && b.is_positive()) {
        CHECK((a + b).is_positive());
        CHECK((a * b).is_positive());
      }
    }
  }
}

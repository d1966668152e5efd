#include "support.hpp"

using namespace posmat;
using namespace posmat::test;

namespace {
const RingId Qr = RingId::Q;

Matrix b12(RingId r, int n, const RingElement& x) { return Matrix::transvection(r, n, 0, 1, x); }
}  // namespace

TEST_CASE("products") {
  const Matrix a = b12(Qr, 3, q(Qr, 5));
  CHECK(Matrix::identity(Qr, 3) * a == a);
  const Matrix s12 = perm_matrix(Qr, swap1(3, 1, 2));
  CHECK((s12 * s12).is_identity());
}

TEST_CASE("permutation matrix convention") {
  // (S_sigma)_{ij} = 1 iff i = sigma(j); then S_a S_b = S_{ab}.
  const Permutation c = Permutation::cycle(3);
  const Matrix m = perm_matrix(Qr, c);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) CHECK(m(i, j).is_one() == (i == c(j)));
  const Permutation t = swap1(3, 1, 3);
  CHECK(perm_matrix(Qr, c) * perm_matrix(Qr, t) == perm_matrix(Qr, c * t));
}

TEST_CASE("nonnegativity") {
  CHECK(is_nonnegative(Matrix::identity(Qr, 3)));
  Matrix bad = b12(Qr, 3, q(Qr, 1));
  bad(0, 1) = q(Qr, -1);
  CHECK_FALSE(is_nonnegative(bad));
  CHECK(is_nonnegative(diag_q({{2, 1}, {4, 1}, {8, 1}})));
}

TEST_CASE("monomial recognition") {
  const auto id = monomial_recognize(Matrix::identity(Qr, 3));
  REQUIRE(id);
  CHECK(id->perm.is_identity());
  for (const auto& d : id->diag) CHECK(d.is_one());

  const auto m = monomial_recognize(diag_q({{2, 1}, {4, 1}, {8, 1}}));
  REQUIRE(m);
  CHECK(m->perm.is_identity());
  CHECK(m->diag == std::vector<RingElement>{q(Qr, 2), q(Qr, 4), q(Qr, 8)});

  const Matrix b = b12(Qr, 3, q(Qr, 1));
  CHECK_FALSE(monomial_recognize(b));
  CHECK_THROWS_AS(require_monomial(b), NotMonomial);
  const auto inv = exact_inverse(b);
  REQUIRE(inv);
  CHECK((*inv)(0, 1) == q(Qr, -1));
  CHECK(*inv * b == Matrix::identity(Qr, 3));

  // 3 is positive but not a unit of Z[1/2].
  CHECK_FALSE(monomial_recognize(diag_q({{3, 1}, {1, 1}, {1, 1}}, RingId::Dyadic)));
}

TEST_CASE("monomial matrix algebra") {
  Rng rng(3);
  for (auto r : {RingId::Q, RingId::Dyadic, RingId::RatFun, RingId::Skew}) {
    for (int k = 0; k < 20; ++k) {
      const MonomialMatrix a = random_monomial(r, 4, rng);
      const MonomialMatrix b = random_monomial(r, 4, rng);
      CHECK((a * b).to_matrix() == a.to_matrix() * b.to_matrix());
      CHECK((a * invert_monomial(a)).to_matrix().is_identity());
      const Matrix x = eval(random_word(4, r, 3, rng));
      CHECK(conjugate(a, x) * a.to_matrix() == a.to_matrix() * x);
    }
  }
  const MonomialMatrix p = MonomialMatrix::from_permutation(Qr, Permutation::cycle(4));
  CHECK(invert_monomial(p) == MonomialMatrix::from_permutation(Qr, Permutation::cycle(4).inverse()));
}

TEST_CASE("skew diagonal inverse") {
  const RingElement s = RingElement::s(RingId::Skew);
  const auto one = RingElement::one(RingId::Skew);
  const MonomialMatrix d = MonomialMatrix::from_diagonal({s, one, one});
  const MonomialMatrix inv = invert_monomial(d);
  CHECK(inv.diag[0] == s.inverse());
  CHECK((d * inv).to_matrix().is_identity());
  CHECK((inv * d).to_matrix().is_identity());
}

TEST_CASE("involutions") {
  const auto id = involution_classify(Matrix::identity(Qr, 3));
  REQUIRE(id);
  CHECK(id->sigma.is_identity());

  const Matrix a = diag_q({{2, 1}, {1, 2}, {1, 1}}) * perm_matrix(Qr, swap1(3, 1, 2));
  CHECK((a * a).is_identity());
  const auto got = involution_classify(a);
  REQUIRE(got);
  CHECK(got->sigma == swap1(3, 1, 2));
  CHECK(got->t == std::vector<RingElement>{q(Qr, 2), q(Qr, 1, 2), q(Qr, 1)});
  CHECK(got->to_matrix() == a);

  const Matrix bad = diag_q({{2, 1}, {1, 1}, {1, 1}}) * perm_matrix(Qr, swap1(3, 1, 2));
  CHECK(bad * bad == diag_q({{2, 1}, {2, 1}, {1, 1}}));
  CHECK_FALSE(involution_classify(bad));
}

TEST_CASE("commutation") {
  Rng rng(1);
  const Matrix a = eval(random_word(3, Qr, 4, rng));
  CHECK(commutes(a, Matrix::identity(Qr, 3)));
  CHECK_FALSE(commutes(diag_q({{2, 1}, {4, 1}, {8, 1}}), perm_matrix(Qr, swap1(3, 1, 2))));
  const RingElement s = RingElement::s(RingId::Skew);
  const auto one = RingElement::one(RingId::Skew);
  CHECK(commutes(diag(RingId::Skew, {s, s, one}), diag_q({{2, 1}, {2, 1}, {3, 1}}, RingId::Skew)));
  CHECK_FALSE(commutes(diag(RingId::Skew, {s, one, one}), diag(RingId::Skew, {RingElement::t(), one, one})));
}

TEST_CASE("finite order") {
  const Matrix c = perm_matrix(Qr, Permutation::cycle(3));
  CHECK(has_finite_order(c, 6));
  CHECK_FALSE(has_finite_order(c, 2));
  CHECK_FALSE(has_finite_order(diag_q({{2, 1}, {1, 1}, {1, 1}}), 6));
  const Matrix inv = diag_q({{2, 1}, {1, 2}, {1, 1}}) * perm_matrix(Qr, swap1(3, 1, 2));
  CHECK(has_finite_order(inv, 2));
  CHECK_THROWS_AS(has_finite_order(b12(Qr, 3, q(Qr, 1)), 4), NotMonomial);
}

TEST_CASE("block semigroup K") {
  CHECK(in_K(Matrix::identity(Qr, 4)));
  CHECK_FALSE(in_K(perm_matrix(Qr, swap1(4, 1, 4))));
  CHECK(in_K(diag_q({{1, 1}, {1, 1}, {1, 1}, {2, 1}})));
  CHECK(in_K(perm_matrix(Qr, swap1(4, 1, 3))));
  CHECK_FALSE(in_K(Matrix::transvection(Qr, 4, 3, 0, q(Qr, 1))));
}

TEST_CASE("determinant and inverse") {
  Rng rng(9);
  for (int k = 0; k < 30; ++k) {
    const Matrix a = eval(random_word(4, RingId::RatFun, 5, rng));
    const auto inv = exact_inverse(a);
    REQUIRE(inv);
    CHECK((a * *inv).is_identity());
    CHECK((determinant(a) * determinant(*inv)).is_one());
  }
  CHECK(determinant(diag_q({{2, 1}, {4, 1}, {8, 1}})) == q(Qr, 64));
  CHECK(determinant(perm_matrix(Qr, swap1(3, 1, 2))) == q(Qr, -1));
  CHECK_THROWS_AS(exact_inverse(Matrix::identity(RingId::Skew, 3)), UnsupportedRing);
  CHECK(factorial(6) == 720);
}

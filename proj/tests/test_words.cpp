#include "support.hpp"

using namespace posmat;
using namespace posmat::test;

namespace {
const RingId Qr = RingId::Q;

GeneratorWord word(std::vector<Generator> seq, int n = 3, RingId r = Qr) { return GeneratorWord{n, r, std::move(seq)}; }

std::vector<RingElement> ds(std::initializer_list<std::pair<long, long>> v) {
  std::vector<RingElement> out;
  for (auto [a, b] : v) out.push_back(q(Qr, a, b));
  return out;
}
}  // namespace

TEST_CASE("eval") {
  CHECK(eval(word({})).is_identity());
  const Matrix b2 = Matrix::transvection(Qr, 3, 0, 1, q(Qr, 2));
  CHECK(eval(word({ElemGen{0, 1, q(Qr, 1)}, ElemGen{0, 1, q(Qr, 1)}})) == b2);
  CHECK(eval(word({DiagGen{ds({{2, 1}, {1, 1}, {1, 1}})}, ElemGen{0, 1, q(Qr, 1)}, DiagGen{ds({{1, 2}, {1, 1}, {1, 1}})}})) ==
        b2);
  // B_12(1)^2 = diag[2,1,1] B_12(1) diag[1/2,1,1]
  const Matrix b1 = Matrix::transvection(Qr, 3, 0, 1, q(Qr, 1));
  CHECK(b1 * b1 == diag_q({{2, 1}, {1, 1}, {1, 1}}) * b1 * diag_q({{1, 2}, {1, 1}, {1, 1}}));
}

TEST_CASE("word validation") {
  CHECK_THROWS_AS(word({ElemGen{0, 1, q(Qr, -1)}}).validate(), Error);
  CHECK_THROWS_AS(word({ElemGen{1, 1, q(Qr, 1)}}).validate(), Error);
  CHECK_THROWS_AS(word({DiagGen{ds({{0, 1}, {1, 1}, {1, 1}})}}).validate(), Error);
  CHECK_THROWS_AS(word({DiagGen{ds({{3, 1}, {1, 1}, {1, 1}})}}, 3, RingId::Dyadic).validate(), Error);
  CHECK_NOTHROW(word({PermGen{Permutation::cycle(3)}, ElemGen{2, 0, q(Qr, 0)}}).validate());
}

TEST_CASE("factor monomial") {
  const auto fid = factor_monomial(MonomialMatrix::identity(Qr, 3));
  REQUIRE(fid.seq.size() == 2);
  CHECK(eval(fid).is_identity());

  const auto f = factor_monomial(*monomial_recognize(diag_q({{2, 1}, {4, 1}, {8, 1}})));
  REQUIRE(f.seq.size() == 2);
  CHECK(std::get<DiagGen>(f.seq[0]).d == ds({{2, 1}, {4, 1}, {8, 1}}));
  CHECK(std::get<PermGen>(f.seq[1]).sigma.is_identity());

  const Matrix a = diag_q({{2, 1}, {1, 2}, {1, 1}}) * perm_matrix(Qr, swap1(3, 1, 2));
  const auto g = factor_monomial(*monomial_recognize(a));
  CHECK(std::get<PermGen>(g.seq[1]).sigma == swap1(3, 1, 2));
  CHECK(eval(g) == a);

  Rng rng(2);
  for (auto r : {RingId::Q, RingId::Dyadic, RingId::RatFun, RingId::Skew}) {
    for (int k = 0; k < 10; ++k) {
      const MonomialMatrix m = random_monomial(r, 5, rng);
      CHECK(eval(factor_monomial(m)) == m.to_matrix());
    }
  }
}

TEST_CASE("random words are reproducible") {
  Rng a(77), b(77);
  CHECK(random_word(4, RingId::RatFun, 0, a).seq.empty());
  for (int k = 0; k < 5; ++k) {
    const auto w1 = random_word(4, RingId::RatFun, 6, a);
    const auto w2 = random_word(4, RingId::RatFun, 6, b);
    CHECK(to_json(w1) == to_json(w2));
    CHECK(w1.seq.size() == 6);
    CHECK_NOTHROW(w1.validate());
    CHECK(is_nonnegative(eval(w1)));
  }
}

TEST_CASE("pools") {
  for (auto r : {RingId::Q, RingId::Dyadic, RingId::RatFun, RingId::Skew}) {
    for (const auto& x : nonnegative_pool(r)) CHECK(x.is_nonnegative());
    for (const auto& x : positive_pool(r)) CHECK(x.is_positive());
    for (const auto& x : unit_pool(r)) {
      CHECK(x.is_positive());
      CHECK(x.is_unit());
    }
  }
  CHECK(unit_pool(RingId::Dyadic).size() == 3);
}

TEST_CASE("P-equivalence chains") {
  const Matrix id = Matrix::identity(Qr, 3);
  PEquivChain trivial{{PEquivStep{word({}), word({}), word({}), word({}), id, id}}};
  CHECK(verify_pequiv(trivial));

  // S_(1,2) B_12(1) I = I B_21(1) S_(1,2)
  const auto s12 = PermGen{swap1(3, 1, 2)};
  PEquivStep step{word({s12}), word({}), word({}), word({s12}), Matrix::transvection(Qr, 3, 0, 1, q(Qr, 1)),
                  Matrix::transvection(Qr, 3, 1, 0, q(Qr, 1))};
  CHECK(verify_pequiv(PEquivChain{{step}}));

  PEquivStep broken = step;
  broken.a_next = Matrix::transvection(Qr, 3, 1, 0, q(Qr, 2));
  CHECK_FALSE(verify_pequiv(PEquivChain{{broken}}));

  // consecutive steps must share their matrices
  PEquivStep back{word({}), word({s12}), word({s12}), word({}), step.a_next, step.a};
  CHECK(verify_pequiv(PEquivChain{{step, back}}));
  PEquivStep mismatch{word({}), word({}), word({}), word({}), id, id};
  CHECK_FALSE(verify_pequiv(PEquivChain{{step, mismatch}}));
}

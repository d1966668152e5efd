#include "posmat/words.hpp"

#include <algorithm>

#include "posmat/error.hpp"

namespace posmat {

std::vector<RingElement> nonnegative_pool(RingId ring) {
  std::vector<RingElement> pool;
  pool.push_back(RingElement::zero(ring));
  for (auto q : {mpq_class(1), mpq_class(2), mpq_class(1, 2), mpq_class(3), mpq_class(3, 2), mpq_class(5)}) {
    pool.push_back(RingElement::rational(ring, q));
  }
  if (ring == RingId::RatFun) {
    const RingElement s = RingElement::s(ring);
    pool.push_back(s);
    pool.push_back(s + RingElement::one(ring));
    pool.push_back(RingElement::integer(ring, 2) * s);
  } else if (ring == RingId::Skew) {
    const RingElement s = RingElement::s(ring);
    const RingElement t = RingElement::t();
    pool.push_back(s);
    pool.push_back(t);
    pool.push_back(s * t);
  }
  return pool;
}

std::vector<RingElement> positive_pool(RingId ring) {
  auto pool = nonnegative_pool(ring);
  pool.erase(pool.begin());
  return pool;
}

std::vector<RingElement> unit_pool(RingId ring) {
  std::vector<RingElement> units;
  for (auto& x : positive_pool(ring)) {
    if (x.is_unit()) units.push_back(std::move(x));
  }
  return units;
}

namespace {

mpq_class small_rational(Rng& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

RatFun random_ratfun(Rng& rng) {
  std::uniform_int_distribution<int> deg(0, 3);
  std::vector<mpq_class> num(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& c : num) c = small_rational(rng);
  std::vector<mpq_class> den(static_cast<std::size_t>(deg(rng) % 3 + 1));
  for (auto& c : den) c = small_rational(rng);
  den.back() = 1;
  return RatFun(Poly(std::move(num)), Poly(std::move(den)));
}

}  // namespace

RingElement random_element(RingId ring, Rng& rng) {
  switch (ring) {
    case RingId::Q: return RingElement::rational(ring, small_rational(rng));
    case RingId::Dyadic: {
      std::uniform_int_distribution<long> num(-60, 60);
      std::uniform_int_distribution<long> exp(-6, 6);
      return RingElement::dyadic(num(rng), exp(rng));
    }
    case RingId::RatFun: return RingElement::ratfun(ring, random_ratfun(rng));
    default: {
      std::uniform_int_distribution<int> terms(1, 3);
      std::uniform_int_distribution<long> tdeg(-2, 2);
      SkewPoly p;
      for (int k = terms(rng); k > 0; --k) p.terms[tdeg(rng)] = random_ratfun(rng);
      return RingElement::skew(std::move(p));
    }
  }
}

Matrix generator_matrix(RingId ring, int n, const Generator& g) {
  return std::visit(
      [&](const auto& gen) -> Matrix {
        using T = std::decay_t<decltype(gen)>;
        if constexpr (std::is_same_v<T, PermGen>) {
          return Matrix::permutation(ring, gen.sigma);
        } else if constexpr (std::is_same_v<T, ElemGen>) {
          return Matrix::transvection(ring, n, gen.i, gen.j, gen.x);
        } else {
          return Matrix::diagonal(ring, gen.d);
        }
      },
      g);
}

void GeneratorWord::validate() const {
  for (const auto& g : seq) {
    if (const auto* p = std::get_if<PermGen>(&g)) {
      if (p->sigma.size() != n) throw DimensionMismatch();
    } else if (const auto* e = std::get_if<ElemGen>(&g)) {
      if (e->i == e->j || e->i < 0 || e->j < 0 || e->i >= n || e->j >= n) {
        throw Error("transvection indices must be distinct and in range");
      }
      if (e->x.ring() != ring) throw RingMismatch();
      if (!e->x.is_nonnegative()) throw Error("transvection parameter must be nonnegative");
    } else {
      const auto& d = std::get<DiagGen>(g).d;
      if (static_cast<int>(d.size()) != n) throw DimensionMismatch();
      for (const auto& x : d) {
        if (x.ring() != ring) throw RingMismatch();
        if (!x.is_positive() || !x.is_unit()) throw Error("diagonal entries must be positive units");
      }
    }
  }
}

GeneratorWord GeneratorWord::concat(const GeneratorWord& other) const {
  if (n != other.n) throw DimensionMismatch();
  if (ring != other.ring) throw RingMismatch();
  GeneratorWord w = *this;
  w.seq.insert(w.seq.end(), other.seq.begin(), other.seq.end());
  return w;
}

Matrix eval(const GeneratorWord& w) {
  Matrix acc = Matrix::identity(w.ring, w.n);
  for (const auto& g : w.seq) {
    if (const auto* p = std::get_if<PermGen>(&g)) {
      // (A S_sigma)_{ij} = A_{i, sigma(j)}
      Matrix next(w.ring, w.n);
      for (int i = 0; i < w.n; ++i)
        for (int j = 0; j < w.n; ++j) next(i, j) = acc(i, p->sigma(j));
      acc = std::move(next);
    } else if (const auto* e = std::get_if<ElemGen>(&g)) {
      // A * B_ij(x): column j gains column i times x.
      if (e->x.is_zero()) continue;
      for (int r = 0; r < w.n; ++r) {
        if (!acc(r, e->i).is_zero()) acc(r, e->j) += acc(r, e->i) * e->x;
      }
    } else {
      const auto& d = std::get<DiagGen>(g).d;
      for (int r = 0; r < w.n; ++r)
        for (int c = 0; c < w.n; ++c) {
          if (!acc(r, c).is_zero()) acc(r, c) = acc(r, c) * d[static_cast<std::size_t>(c)];
        }
    }
  }
  return acc;
}

GeneratorWord factor_monomial(const MonomialMatrix& m) {
  GeneratorWord w{m.size(), m.ring(), {}};
  w.seq.emplace_back(DiagGen{m.diag});
  w.seq.emplace_back(PermGen{m.perm});
  return w;
}

Permutation random_permutation(int n, Rng& rng) {
  Permutation p(n);
  std::vector<int> images = p.images();
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

namespace {

const RingElement& pick(const std::vector<RingElement>& pool, Rng& rng) {
  std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
  return pool[dist(rng)];
}

std::vector<RingElement> random_unit_diagonal(RingId ring, int n, Rng& rng) {
  const auto units = unit_pool(ring);
  std::bernoulli_distribution keep_one(0.5);
  std::vector<RingElement> d;
  d.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) d.push_back(keep_one(rng) ? RingElement::one(ring) : pick(units, rng));
  return d;
}

}  // namespace

MonomialMatrix random_monomial(RingId ring, int n, Rng& rng) {
  return {random_unit_diagonal(ring, n, rng), random_permutation(n, rng)};
}

GeneratorWord random_word(int n, RingId ring, int length, Rng& rng) {
  const auto positives = positive_pool(ring);
  GeneratorWord w{n, ring, {}};
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> index(0, n - 1);
  for (int k = 0; k < length; ++k) {
    switch (kind(rng)) {
      case 0: w.seq.emplace_back(PermGen{random_permutation(n, rng)}); break;
      case 1: {
        const int i = index(rng);
        int j = index(rng);
        while (j == i) j = index(rng);
        w.seq.emplace_back(ElemGen{i, j, pick(positives, rng)});
        break;
      }
      default: w.seq.emplace_back(DiagGen{random_unit_diagonal(ring, n, rng)}); break;
    }
  }
  return w;
}

bool verify_pequiv(const PEquivChain& chain) {
  for (std::size_t k = 0; k < chain.steps.size(); ++k) {
    const auto& s = chain.steps[k];
    if (k > 0 && !(chain.steps[k - 1].a_next == s.a)) return false;
    if (!(eval(s.p) * s.a * eval(s.p_tilde) == eval(s.q) * s.a_next * eval(s.q_tilde))) return false;
  }
  return true;
}

}  // namespace posmat

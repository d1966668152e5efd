#pragma once

// Intensional elements of GE_n^+(R): words over the generators S_sigma,
// B_ij(x) and positive diagonal matrices.

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "posmat/matrix.hpp"

namespace posmat {

/// Seeded engine used by every randomized routine. Callers own the state.
using Rng = std::mt19937_64;

/// Fixed sample pools (reproducibility of the property suites).
///
/// nonnegative: {0, 1, 2, 1/2, 3, 3/2, 5} plus s, s+1, 2s for RATFUN and
///              s, t, s*t for SKEW.
/// positive:    nonnegative without 0.
/// units:       positive units only (DYADIC keeps {1, 2, 1/2}).
std::vector<RingElement> nonnegative_pool(RingId ring);
std::vector<RingElement> positive_pool(RingId ring);
std::vector<RingElement> unit_pool(RingId ring);

/// Random scalar with small coefficients (any sign, possibly zero).
RingElement random_element(RingId ring, Rng& rng);

struct PermGen {
  Permutation sigma;
};
/// B_ij(x), zero-based indices.
struct ElemGen {
  int i = 0;
  int j = 1;
  RingElement x;
};
struct DiagGen {
  std::vector<RingElement> d;
};
using Generator = std::variant<PermGen, ElemGen, DiagGen>;

Matrix generator_matrix(RingId ring, int n, const Generator& g);

struct GeneratorWord {
  int n = 0;
  RingId ring = RingId::Q;
  std::vector<Generator> seq;

  /// Validates generator invariants (nonnegative transvection parameter,
  /// positive unit diagonals, distinct indices, dimensions); throws Error.
  void validate() const;
  GeneratorWord concat(const GeneratorWord& other) const;
};

/// Product of the generator matrices, left to right. The empty word is I.
Matrix eval(const GeneratorWord& w);

/// [Diag(d), Perm(sigma)], always two letters.
GeneratorWord factor_monomial(const MonomialMatrix& m);

/// Reproducible word of exactly `length` letters.
GeneratorWord random_word(int n, RingId ring, int length, Rng& rng);
Permutation random_permutation(int n, Rng& rng);
MonomialMatrix random_monomial(RingId ring, int n, Rng& rng);

/// One step P A P~ = Q A' Q~ of a P-equivalence chain.
struct PEquivStep {
  GeneratorWord p, p_tilde, q, q_tilde;
  Matrix a, a_next;
};
struct PEquivChain {
  std::vector<PEquivStep> steps;
};

/// True iff every step equation holds exactly and consecutive steps share
/// their matrices.
bool verify_pequiv(const PEquivChain& chain);

}  // namespace posmat

#pragma once

// Black-box decomposition of an automorphism of G_n(R) into a standard
// triple. Stages run in order; each one narrows the oracle by composing it
// with an inner automorphism or a ring map, and checks the shape facts a
// genuine automorphism must satisfy at that point.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posmat/automorphism.hpp"
#include "posmat/error.hpp"

namespace posmat {

/// Raised inside the pipeline when the oracle violates a necessary
/// condition. `witness` is the offending image when there is one.
class NotAutomorphism : public Error {
 public:
  NotAutomorphism(std::string stage, std::string reason, std::optional<Matrix> witness = std::nullopt,
                  std::vector<std::pair<std::string, std::string>> detail = {})
      : Error(stage + ": " + reason),
        stage(std::move(stage)),
        reason(std::move(reason)),
        witness(std::move(witness)),
        detail(std::move(detail)) {}

  std::string stage;
  std::string reason;
  std::optional<Matrix> witness;
  /// Named scalar values backing the rejection (e.g. c(x), c(x^2)).
  std::vector<std::pair<std::string, std::string>> detail;
};

/// Samples x -> f(x), in query order.
using SampleTable = std::vector<std::pair<RingElement, RingElement>>;

struct NormalizationTrace {
  std::optional<Permutation> sigma_k;
  std::optional<Permutation> rho;
  std::optional<Permutation> tau6;
  std::vector<RingElement> t;
  std::optional<RingElement> beta;
  SampleTable nu_samples;
  std::vector<std::pair<RingElement, std::pair<RingElement, RingElement>>> xi_eta_samples;
  SampleTable c_samples;
  SampleTable gamma_samples;
};

struct ResidualCheck {
  GeneratorWord word;
  Matrix lhs;  // oracle(eval(word))
  Matrix rhs;  // triple applied to eval(word)
  bool equal = false;
};

struct DecomposeConfig {
  bool force_k_normalize = false;
  int word_count = 50;
  int max_word_length = 12;
  std::uint64_t seed = 0;
  int c_pair_samples = 1000;
  int random_perm_checks = 20;
  /// Visit the c pool in a seed-dependent order (changes which element
  /// witnesses a rejection).
  bool shuffle_pool = false;
};

struct DecompositionReport {
  enum class Verdict { OK, NotAutomorphism, Unfittable };

  Verdict verdict = Verdict::OK;
  std::optional<StandardTriple> triple;
  NormalizationTrace trace;
  std::vector<ResidualCheck> residuals;
  long query_count = 0;
  // Rejection details (verdict != OK).
  std::string stage;
  std::string reason;
  std::optional<Matrix> witness;
  std::vector<std::pair<std::string, std::string>> detail;
};

std::string_view verdict_name(DecompositionReport::Verdict v);

/// Position of the odd entry of the image of diag[1,...,1,2]; returns the
/// transposition moving it to the last slot (identity if already there).
Permutation stage_k_normalize(const AutomorphismOracle& oracle);

struct FixPermutationsResult {
  /// Phi' = Phi_C o Phi fixes every S_sigma.
  MonomialMatrix conjugator;
  AutomorphismOracle normalized;
};

/// Recovers the permutation action, corrects the diagonal part and checks
/// that the result fixes permutation matrices. Fills sigma_k, rho, tau6, t
/// and beta in `trace`.
FixPermutationsResult stage_fix_permutations(const AutomorphismOracle& oracle, NormalizationTrace& trace,
                                             const DecomposeConfig& config = {});

/// Images of diagonal and block matrices under an oracle fixing every S_sigma.
/// Fills xi_eta_samples and nu_samples.
void stage_shape_diagnostics(const AutomorphismOracle& normalized, NormalizationTrace& trace);

/// c on the pool, read from the images of B_12(x).
SampleTable stage_extract_c(const AutomorphismOracle& normalized, const std::vector<RingElement>& pool);

struct CheckResult {
  bool ok = true;
  std::string failure;
  std::optional<std::pair<RingElement, RingElement>> pair;
};

/// Additivity, multiplicativity, c(1) = 1 and monotonicity on the table.
/// Pairs whose sum or product is missing from the table are skipped unless
/// `lookup` supplies the value.
CheckResult verify_c(const SampleTable& c, RingId ring,
                     const std::function<std::optional<RingElement>(const RingElement&)>& lookup = {});

/// As verify_c, over an explicit list of pairs.
CheckResult verify_c_pairs(const SampleTable& c, const std::vector<std::pair<RingElement, RingElement>>& pairs,
                           const std::function<std::optional<RingElement>(const RingElement&)>& lookup = {});

/// Fits c to the ring-map catalog; nullopt if no member matches every sample.
std::optional<RingMapDescriptor> fit_ring_map(const SampleTable& c, RingId ring);

/// gamma(alpha) read from the images of diag[alpha, 1, ..., 1].
SampleTable stage_extract_gamma(const AutomorphismOracle& normalized, const std::vector<RingElement>& probes);

/// Fits gamma (and the degree weight over RATFUN); nullopt if no catalog
/// homothety matches every sample.
std::optional<CentralHomDescriptor> fit_homothety(const SampleTable& gamma, RingId ring);

DecompositionReport decompose(const AutomorphismOracle& oracle, const DecomposeConfig& config = {});

}  // namespace posmat

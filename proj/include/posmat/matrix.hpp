#pragma once

// Square matrices over the catalog rings and the recognition procedures for
// the distinguished subsets of G_n(R): monomial matrices (the unit group),
// diagonal matrices, the block semigroup K_n and involutions.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posmat/ring.hpp"

namespace posmat {

/// Bijection of {0, ..., n-1}. Composition follows function notation:
/// (a * b)(i) = a(b(i)), so that S_a * S_b = S_{a*b}.
class Permutation {
 public:
  Permutation() = default;
  /// Identity on n points.
  explicit Permutation(int n);
  /// Throws Error unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);
  static Permutation from_one_based(std::span<const int> images);
  /// The transposition (i j), zero-based.
  static Permutation transposition(int n, int i, int j);
  /// The cycle i -> i+1 (mod n).
  static Permutation cycle(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  bool is_identity() const;
  /// Number of moved points.
  int support_size() const;

  /// Cycle notation with one-based points, "()" for the identity.
  std::string str() const;

 private:
  std::vector<int> images_;
};

class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix.
  Matrix(RingId ring, int n);
  Matrix(RingId ring, int n, std::vector<RingElement> row_major);

  static Matrix identity(RingId ring, int n);
  static Matrix diagonal(RingId ring, std::span<const RingElement> entries);
  /// S_sigma, the matrix (delta_{i, sigma(j)}).
  static Matrix permutation(RingId ring, const Permutation& sigma);
  /// B_ij(x) = I + x E_ij, zero-based indices.
  static Matrix transvection(RingId ring, int n, int i, int j, const RingElement& x);
  static Matrix scalar(int n, const RingElement& x);

  RingId ring() const { return ring_; }
  int size() const { return n_; }
  const RingElement& operator()(int i, int j) const { return entries_[idx(i, j)]; }
  RingElement& operator()(int i, int j) { return entries_[idx(i, j)]; }
  const std::vector<RingElement>& entries() const { return entries_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.ring_ == b.ring_ && a.entries_ == b.entries_;
  }
  /// x * A with x multiplied from the left.
  Matrix scaled_left(const RingElement& x) const;
  Matrix transpose() const;

  bool is_identity() const;
  bool is_diagonal() const;
  std::vector<RingElement> diagonal_entries() const;

  std::string str() const;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * n_ + j); }

  RingId ring_ = RingId::Q;
  int n_ = 0;
  std::vector<RingElement> entries_;
};

Matrix matmul(const Matrix& a, const Matrix& b);

/// diag[d_1..d_n] * S_sigma with every d_i a positive unit.
struct MonomialMatrix {
  std::vector<RingElement> diag;
  Permutation perm;

  int size() const { return perm.size(); }
  RingId ring() const { return diag.at(0).ring(); }
  Matrix to_matrix() const;
  static MonomialMatrix identity(RingId ring, int n);
  static MonomialMatrix from_permutation(RingId ring, const Permutation& sigma);
  static MonomialMatrix from_diagonal(std::vector<RingElement> diag);
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

/// Product of monomial matrices, computed without densifying.
MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
MonomialMatrix invert_monomial(const MonomialMatrix& m);
/// M * X * M^{-1} in O(n^2) ring operations.
Matrix conjugate(const MonomialMatrix& m, const Matrix& x);

/// diag[t] * S_sigma with sigma^2 = e and t_i * t_{sigma(i)} = 1.
struct InvolutionData {
  std::vector<RingElement> t;
  Permutation sigma;
  Matrix to_matrix() const;
};

bool is_nonnegative(const Matrix& a);
/// Succeeds iff every row and column holds exactly one nonzero entry and
/// each nonzero entry is a positive unit, i.e. iff A lies in Gamma_n(R).
std::optional<MonomialMatrix> monomial_recognize(const Matrix& a);
/// As monomial_recognize, throwing NotMonomial.
MonomialMatrix require_monomial(const Matrix& a);
std::optional<InvolutionData> involution_classify(const Matrix& a);
bool commutes(const Matrix& a, const Matrix& b);
/// Whether M^k = I for some 1 <= k <= bound. Throws NotMonomial when M is
/// not in Gamma_n(R).
bool has_finite_order(const Matrix& m, int bound);
bool in_K(const Matrix& a);

/// Exact inverse over a commutative ring, or nullopt when the matrix is
/// singular or its inverse leaves the ring. Throws UnsupportedRing for SKEW.
std::optional<Matrix> exact_inverse(const Matrix& a);
/// Determinant over a commutative ring (fraction-free elimination).
RingElement determinant(const Matrix& a);

long factorial(int n);

}  // namespace posmat

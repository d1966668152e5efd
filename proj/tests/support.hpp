#pragma once

#include <doctest.h>

#include <vector>

#include "posmat/json_io.hpp"

namespace posmat::test {

inline RingElement q(RingId r, long num, long den = 1) { return RingElement::rational(r, mpq_class(num, den)); }

inline Matrix diag(RingId r, std::vector<RingElement> d) { return Matrix::diagonal(r, d); }

inline Matrix diag_q(std::initializer_list<std::pair<long, long>> vals, RingId r = RingId::Q) {
  std::vector<RingElement> d;
  for (auto [a, b] : vals) d.push_back(q(r, a, b));
  return Matrix::diagonal(r, d);
}

// One-based transposition, to keep the tests close to the usual notation.
inline Permutation swap1(int n, int i, int j) { return Permutation::transposition(n, i - 1, j - 1); }

inline Matrix perm_matrix(RingId r, const Permutation& p) { return Matrix::permutation(r, p); }

}  // namespace posmat::test

#include "posmat/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "posmat/error.hpp"

namespace posmat {

// --- Permutation -----------------------------------------------------------

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw Error("image list is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> zero(images.begin(), images.end());
  for (int& v : zero) --v;
  return Permutation(std::move(zero));
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p(n);
  std::swap(p.images_[static_cast<std::size_t>(i)], p.images_[static_cast<std::size_t>(j)]);
  return p;
}

Permutation Permutation::cycle(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % n;
  return Permutation(std::move(images));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out = images_;
  for (int& v : out) ++v;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DimensionMismatch();
  Permutation p;
  p.images_.resize(b.images_.size());
  for (int i = 0; i < b.size(); ++i) p.images_[static_cast<std::size_t>(i)] = a(b(i));
  return p;
}

bool Permutation::is_identity() const { return support_size() == 0; }

int Permutation::support_size() const {
  int moved = 0;
  for (int i = 0; i < size(); ++i) moved += (*this)(i) != i;
  return moved;
}

std::string Permutation::str() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
    out += "(";
    int i = start;
    do {
      seen[static_cast<std::size_t>(i)] = true;
      if (i != start) out += ",";
      out += std::to_string(i + 1);
      i = (*this)(i);
    } while (i != start);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// --- Matrix ----------------------------------------------------------------

Matrix::Matrix(RingId ring, int n)
    : ring_(ring), n_(n), entries_(static_cast<std::size_t>(n * n), RingElement(ring)) {}

Matrix::Matrix(RingId ring, int n, std::vector<RingElement> row_major)
    : ring_(ring), n_(n), entries_(std::move(row_major)) {
  if (entries_.size() != static_cast<std::size_t>(n * n)) throw DimensionMismatch();
  for (const auto& e : entries_) {
    if (e.ring() != ring) throw RingMismatch();
  }
}

Matrix Matrix::identity(RingId ring, int n) {
  Matrix m(ring, n);
  for (int i = 0; i < n; ++i) m(i, i) = RingElement::one(ring);
  return m;
}

Matrix Matrix::diagonal(RingId ring, std::span<const RingElement> entries) {
  const int n = static_cast<int>(entries.size());
  Matrix m(ring, n);
  for (int i = 0; i < n; ++i) {
    if (entries[static_cast<std::size_t>(i)].ring() != ring) throw RingMismatch();
    m(i, i) = entries[static_cast<std::size_t>(i)];
  }
  return m;
}

Matrix Matrix::permutation(RingId ring, const Permutation& sigma) {
  Matrix m(ring, sigma.size());
  for (int j = 0; j < sigma.size(); ++j) m(sigma(j), j) = RingElement::one(ring);
  return m;
}

Matrix Matrix::transvection(RingId ring, int n, int i, int j, const RingElement& x) {
  if (i == j) throw Error("transvection needs distinct indices");
  if (x.ring() != ring) throw RingMismatch();
  Matrix m = identity(ring, n);
  m(i, j) = x;
  return m;
}

Matrix Matrix::scalar(int n, const RingElement& x) {
  Matrix m(x.ring(), n);
  for (int i = 0; i < n; ++i) m(i, i) = x;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch();
  if (a.ring_ != b.ring_) throw RingMismatch();
  const int n = a.n_;
  Matrix c(a.ring_, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const RingElement& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const RingElement& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch();
  if (a.ring_ != b.ring_) throw RingMismatch();
  Matrix c = a;
  for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
  return c;
}

Matrix matmul(const Matrix& a, const Matrix& b) { return a * b; }

Matrix Matrix::scaled_left(const RingElement& x) const {
  Matrix c = *this;
  for (auto& e : c.entries_) {
    if (!e.is_zero()) e = x * e;
  }
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_identity() const { return *this == identity(ring_, n_); }

bool Matrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

std::vector<RingElement> Matrix::diagonal_entries() const {
  std::vector<RingElement> d;
  d.reserve(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) d.push_back((*this)(i, i));
  return d;
}

std::string Matrix::str() const {
  std::string out = "[";
  for (int i = 0; i < n_; ++i) {
    out += i == 0 ? "[" : ", [";
    for (int j = 0; j < n_; ++j) {
      if (j > 0) out += ", ";
      out += (*this)(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

// --- Monomial matrices -----------------------------------------------------

Matrix MonomialMatrix::to_matrix() const {
  Matrix m(ring(), size());
  // Row i carries d_i in column sigma^{-1}(i).
  for (int j = 0; j < size(); ++j) m(perm(j), j) = diag[static_cast<std::size_t>(perm(j))];
  return m;
}

MonomialMatrix MonomialMatrix::identity(RingId ring, int n) {
  return {std::vector<RingElement>(static_cast<std::size_t>(n), RingElement::one(ring)), Permutation(n)};
}

MonomialMatrix MonomialMatrix::from_permutation(RingId ring, const Permutation& sigma) {
  return {std::vector<RingElement>(static_cast<std::size_t>(sigma.size()), RingElement::one(ring)), sigma};
}

MonomialMatrix MonomialMatrix::from_diagonal(std::vector<RingElement> diag) {
  const int n = static_cast<int>(diag.size());
  return {std::move(diag), Permutation(n)};
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.size() != b.size()) throw DimensionMismatch();
  // D1 S_a D2 S_b = D1 diag[d2_{a^{-1}(i)}] S_{ab}
  const Permutation ainv = a.perm.inverse();
  MonomialMatrix r{a.diag, a.perm * b.perm};
  for (int i = 0; i < a.size(); ++i) {
    r.diag[static_cast<std::size_t>(i)] = a.diag[static_cast<std::size_t>(i)] * b.diag[static_cast<std::size_t>(ainv(i))];
  }
  return r;
}

MonomialMatrix invert_monomial(const MonomialMatrix& m) {
  // (D S_sigma)^{-1} = diag[d_{sigma(i)}^{-1}] S_{sigma^{-1}}
  MonomialMatrix r{m.diag, m.perm.inverse()};
  for (int i = 0; i < m.size(); ++i) {
    r.diag[static_cast<std::size_t>(i)] = m.diag[static_cast<std::size_t>(m.perm(i))].inverse();
  }
  return r;
}

Matrix conjugate(const MonomialMatrix& m, const Matrix& x) {
  if (m.size() != x.size()) throw DimensionMismatch();
  if (m.ring() != x.ring()) throw RingMismatch();
  const int n = x.size();
  std::vector<RingElement> inv;
  inv.reserve(static_cast<std::size_t>(n));
  for (const auto& d : m.diag) inv.push_back(d.inverse());
  Matrix y(x.ring(), n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const RingElement& e = x(i, j);
      if (e.is_zero()) continue;
      // S_sigma X S_sigma^{-1} moves entry (i, j) to (sigma(i), sigma(j)).
      const int r = m.perm(i);
      const int c = m.perm(j);
      y(r, c) = m.diag[static_cast<std::size_t>(r)] * e * inv[static_cast<std::size_t>(c)];
    }
  }
  return y;
}

Matrix InvolutionData::to_matrix() const { return MonomialMatrix{t, sigma}.to_matrix(); }

// --- Recognition -----------------------------------------------------------

bool is_nonnegative(const Matrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [](const RingElement& e) { return e.is_nonnegative(); });
}

std::optional<MonomialMatrix> monomial_recognize(const Matrix& a) {
  const int n = a.size();
  if (n == 0) return std::nullopt;
  std::vector<int> col_of_row(static_cast<std::size_t>(n), -1);
  std::vector<bool> col_used(static_cast<std::size_t>(n), false);
  std::vector<RingElement> diag(static_cast<std::size_t>(n), RingElement(a.ring()));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const RingElement& e = a(i, j);
      if (e.is_zero()) continue;
      if (!e.is_positive() || !e.is_unit()) return std::nullopt;
      if (col_of_row[static_cast<std::size_t>(i)] >= 0 || col_used[static_cast<std::size_t>(j)]) {
        return std::nullopt;
      }
      col_of_row[static_cast<std::size_t>(i)] = j;
      col_used[static_cast<std::size_t>(j)] = true;
      diag[static_cast<std::size_t>(i)] = e;
    }
    if (col_of_row[static_cast<std::size_t>(i)] < 0) return std::nullopt;
  }
  // Row i holds its entry in column sigma^{-1}(i).
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(col_of_row[static_cast<std::size_t>(i)])] = i;
  return MonomialMatrix{std::move(diag), Permutation(std::move(images))};
}

MonomialMatrix require_monomial(const Matrix& a) {
  auto m = monomial_recognize(a);
  if (!m) throw NotMonomial();
  return *std::move(m);
}

std::optional<InvolutionData> involution_classify(const Matrix& a) {
  auto m = monomial_recognize(a);
  if (!m || !(a * a).is_identity()) return std::nullopt;
  return InvolutionData{std::move(m->diag), std::move(m->perm)};
}

bool commutes(const Matrix& a, const Matrix& b) { return a * b == b * a; }

bool has_finite_order(const Matrix& m, int bound) {
  require_monomial(m);
  Matrix power = m;
  for (int k = 1; k <= bound; ++k) {
    if (power.is_identity()) return true;
    power = power * m;
  }
  return false;
}

bool in_K(const Matrix& a) {
  const int n = a.size();
  const int last = n - 1;
  for (int k = 0; k < last; ++k) {
    if (!a(last, k).is_zero() || !a(k, last).is_zero()) return false;
  }
  const RingElement& corner = a(last, last);
  return corner.is_positive() && corner.is_unit();
}

// --- Commutative linear algebra --------------------------------------------

namespace {

// Working ring for elimination: DYADIC is lifted to Q, which is its fraction field.
RingId field_of(RingId ring) {
  if (ring == RingId::Skew) throw UnsupportedRing("elimination requires a commutative ring");
  return ring == RingId::Dyadic ? RingId::Q : ring;
}

Matrix lift(const Matrix& a, RingId field) {
  if (a.ring() == field) return a;
  std::vector<RingElement> e;
  e.reserve(a.entries().size());
  for (const auto& x : a.entries()) e.push_back(RingElement::rational(field, *x.as_rational()));
  return Matrix(field, a.size(), std::move(e));
}

std::optional<RingElement> lower(const RingElement& x, RingId ring) {
  if (x.ring() == ring) return x;
  try {
    return RingElement::rational(ring, *x.as_rational());
  } catch (const NotRepresentable&) {
    return std::nullopt;
  }
}

}  // namespace

RingElement determinant(const Matrix& a) {
  const RingId field = field_of(a.ring());
  Matrix m = lift(a, field);
  const int n = m.size();
  RingElement det = RingElement::one(field);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return RingElement(a.ring());
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    const RingElement p = m(col, col);
    det = det * p;
    const RingElement pinv = p.inverse();
    for (int r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const RingElement f = m(r, col) * pinv;
      for (int j = col; j < n; ++j) m(r, j) = m(r, j) - f * m(col, j);
    }
  }
  return *lower(det, a.ring());
}

std::optional<Matrix> exact_inverse(const Matrix& a) {
  const RingId field = field_of(a.ring());
  Matrix m = lift(a, field);
  const int n = m.size();
  Matrix inv = Matrix::identity(field, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const RingElement pinv = m(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      m(col, j) = pinv * m(col, j);
      inv(col, j) = pinv * inv(col, j);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      const RingElement f = m(r, col);
      for (int j = 0; j < n; ++j) {
        m(r, j) = m(r, j) - f * m(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  if (field == a.ring()) return inv;
  std::vector<RingElement> e;
  e.reserve(inv.entries().size());
  for (const auto& x : inv.entries()) {
    auto y = lower(x, a.ring());
    if (!y) return std::nullopt;
    e.push_back(*std::move(y));
  }
  return Matrix(a.ring(), n, std::move(e));
}

long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace posmat

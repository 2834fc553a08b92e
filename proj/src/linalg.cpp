#include "coxkit/linalg.hpp"

#include <utility>

#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

void require_same(const ExactMatrix& A, const ExactMatrix& B, const char* what) {
  if (A.dim() != B.dim() || A.conductor() != B.conductor()) {
    throw UsageError(std::string(what) + ": shape or conductor mismatch");
  }
}

std::vector<ExactVector> rows_of(const ExactMatrix& A) {
  std::vector<ExactVector> rows;
  rows.reserve(static_cast<std::size_t>(A.dim()));
  for (int i = 0; i < A.dim(); ++i) rows.push_back(A.row(i));
  return rows;
}

CycloNum lift_scalar(const CycloNum& x, int N) {
  if (x.conductor() == N) return x;
  return promote(x, N);
}

}  // namespace

ExactMatrix::ExactMatrix(int n, int N)
    : n_(n), N_(N), a_(static_cast<std::size_t>(n) * n, CycloNum(N)) {
  if (n < 0) throw UsageError("negative matrix dimension");
}

ExactMatrix ExactMatrix::identity(int n, int N) {
  ExactMatrix m(n, N);
  const CycloNum one(N, Rational(1));
  for (int i = 0; i < n; ++i) m.at(i, i) = one;
  return m;
}

ExactMatrix ExactMatrix::scalar(int n, const CycloNum& c) {
  ExactMatrix m(n, c.conductor());
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

ExactVector ExactMatrix::row(int i) const {
  return ExactVector(a_.begin() + static_cast<std::ptrdiff_t>(i) * n_,
                     a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * n_);
}

bool ExactMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const CycloNum& x = at(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  }
  return true;
}

std::size_t ExactMatrix::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(n_) * 0x51ED27ULL + static_cast<std::size_t>(N_);
  for (const auto& x : a_) h = (h ^ x.hash()) * 0x100000001B3ULL;
  return h;
}

std::vector<int> rref(std::vector<ExactVector>& rows, int ncols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    if (!rows[r][c].is_one()) {
      const CycloNum inv = invert(rows[r][c]);
      for (int j = c; j < ncols; ++j) {
        if (!rows[r][j].is_zero()) rows[r][j] *= inv;
      }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const CycloNum f = rows[i][c];
      for (int j = c; j < ncols; ++j) {
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

Subspace Subspace::span(int ambient_dim, int N, std::vector<ExactVector> rows) {
  Subspace s;
  s.n_ = ambient_dim;
  s.N_ = N;
  for (const auto& v : rows) {
    if (static_cast<int>(v.size()) != ambient_dim) throw UsageError("vector length differs from ambient dimension");
    for (const auto& x : v) {
      if (x.conductor() != N) throw UsageError("vector conductor differs from subspace conductor");
    }
  }
  s.pivots_ = rref(rows, ambient_dim);
  s.basis_ = std::move(rows);
  return s;
}

Subspace Subspace::full(int ambient_dim, int N) {
  return span(ambient_dim, N, rows_of(ExactMatrix::identity(ambient_dim, N)));
}

Subspace Subspace::zero(int ambient_dim, int N) { return span(ambient_dim, N, {}); }

bool Subspace::contains(const ExactVector& v) const {
  if (static_cast<int>(v.size()) != n_) throw UsageError("vector length differs from ambient dimension");
  ExactVector w = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const CycloNum f = w[pivots_[k]];
    if (f.is_zero()) continue;
    for (int j = pivots_[k]; j < n_; ++j) {
      if (!basis_[k][j].is_zero()) w[j] -= f * basis_[k][j];
    }
  }
  for (const auto& x : w) {
    if (!x.is_zero()) return false;
  }
  return true;
}

ExactMatrix mat_mul(const ExactMatrix& A, const ExactMatrix& B) {
  require_same(A, B, "mat_mul");
  const int n = A.dim();
  ExactMatrix C(n, A.conductor());
  CycloAccumulator acc(A.conductor());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const CycloNum& a = A.at(i, k);
        if (a.is_zero()) continue;
        const CycloNum& b = B.at(k, j);
        if (!b.is_zero()) acc.add_product(a, b);
      }
      C.at(i, j) = acc.finish();
    }
  }
  return C;
}

ExactMatrix operator*(const ExactMatrix& A, const ExactMatrix& B) { return mat_mul(A, B); }

ExactMatrix operator+(const ExactMatrix& A, const ExactMatrix& B) {
  require_same(A, B, "matrix sum");
  ExactMatrix C = A;
  for (int i = 0; i < A.dim(); ++i) {
    for (int j = 0; j < A.dim(); ++j) C.at(i, j) += B.at(i, j);
  }
  return C;
}

ExactMatrix operator-(const ExactMatrix& A, const ExactMatrix& B) {
  require_same(A, B, "matrix difference");
  ExactMatrix C = A;
  for (int i = 0; i < A.dim(); ++i) {
    for (int j = 0; j < A.dim(); ++j) C.at(i, j) -= B.at(i, j);
  }
  return C;
}

ExactVector mat_vec(const ExactMatrix& A, const ExactVector& v) {
  if (static_cast<int>(v.size()) != A.dim()) throw UsageError("mat_vec: length mismatch");
  ExactVector out;
  out.reserve(v.size());
  for (int i = 0; i < A.dim(); ++i) {
    CycloAccumulator acc(A.conductor());
    for (int k = 0; k < A.dim(); ++k) {
      if (!A.at(i, k).is_zero() && !v[k].is_zero()) acc.add_product(A.at(i, k), v[k]);
    }
    out.push_back(acc.finish());
  }
  return out;
}

CycloNum dot(const ExactVector& a, const ExactVector& b) {
  if (a.size() != b.size() || a.empty()) {
    if (a.size() != b.size()) throw UsageError("dot: length mismatch");
    return CycloNum();
  }
  CycloAccumulator acc(a[0].conductor());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc.add_product(a[i], b[i]);
  }
  return acc.finish();
}

int rank(const ExactMatrix& A) {
  auto rows = rows_of(A);
  return static_cast<int>(rref(rows, A.dim()).size());
}

Subspace kernel(const ExactMatrix& A) {
  const int n = A.dim();
  const int N = A.conductor();
  auto rows = rows_of(A);
  const std::vector<int> pivots = rref(rows, n);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<ExactVector> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    ExactVector v(static_cast<std::size_t>(n), CycloNum(N));
    v[f] = CycloNum(N, Rational(1));
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, N, std::move(basis));
}

CycloNum trace(const ExactMatrix& A) {
  CycloNum t(A.conductor());
  for (int i = 0; i < A.dim(); ++i) t += A.at(i, i);
  return t;
}

CycloNum determinant(const ExactMatrix& A) {
  const int n = A.dim();
  auto rows = rows_of(A);
  CycloNum det(A.conductor(), Rational(1));
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && rows[p][c].is_zero()) ++p;
    if (p == n) return CycloNum(A.conductor());
    if (p != c) {
      std::swap(rows[p], rows[c]);
      det = -det;
    }
    det *= rows[c][c];
    const CycloNum inv = invert(rows[c][c]);
    for (int i = c + 1; i < n; ++i) {
      if (rows[i][c].is_zero()) continue;
      const CycloNum f = rows[i][c] * inv;
      for (int j = c; j < n; ++j) {
        if (!rows[c][j].is_zero()) rows[i][j] -= f * rows[c][j];
      }
    }
  }
  return det;
}

ExactMatrix inverse(const ExactMatrix& A) {
  const int n = A.dim();
  const int N = A.conductor();
  std::vector<ExactVector> rows;
  for (int i = 0; i < n; ++i) {
    ExactVector r = A.row(i);
    for (int j = 0; j < n; ++j) r.push_back(i == j ? CycloNum(N, Rational(1)) : CycloNum(N));
    rows.push_back(std::move(r));
  }
  const std::vector<int> pivots = rref(rows, 2 * n);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) {
    throw DivisionByZero("inverse of a singular matrix");
  }
  ExactMatrix B(n, N);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) B.at(i, j) = rows[i][n + j];
  }
  return B;
}

std::vector<CycloNum> char_poly(const ExactMatrix& A) {
  const int n = A.dim();
  const int N = A.conductor();
  std::vector<CycloNum> c(static_cast<std::size_t>(n) + 1, CycloNum(N));
  c[n] = CycloNum(N, Rational(1));
  ExactMatrix M(n, N);
  for (int k = 1; k <= n; ++k) {
    M = A * M + ExactMatrix::scalar(n, c[n - k + 1]);
    c[n - k] = trace(A * M) * Rational(Integer(-1), Integer(k));
  }
  return c;
}

CycloNum evaluate_poly(const std::vector<CycloNum>& coeffs, const CycloNum& x) {
  if (coeffs.empty()) return CycloNum(x.conductor());
  CycloNum acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

Subspace eigenspace(const ExactMatrix& A, const CycloNum& lambda) {
  const CycloNum l = lift_scalar(lambda, A.conductor());
  return kernel(A - ExactMatrix::scalar(A.dim(), l));
}

bool subspace_contained_in(const Subspace& A, const Subspace& B) {
  if (A.ambient_dim() != B.ambient_dim()) throw UsageError("subspace_contained_in: ambient dimension mismatch");
  if (A.dim() > B.dim()) return false;
  for (const auto& v : A.basis()) {
    if (!B.contains(v)) return false;
  }
  return true;
}

int matrix_order(const ExactMatrix& A, int cap) {
  ExactMatrix cur = A;
  int m = 1;
  while (!cur.is_identity()) {
    if (++m > cap) throw ResourceError("matrix order exceeds cap " + std::to_string(cap));
    cur = cur * A;
  }
  return m;
}

ExactMatrix matrix_power(const ExactMatrix& A, long long e) {
  ExactMatrix base = e < 0 ? inverse(A) : A;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  ExactMatrix result = ExactMatrix::identity(A.dim(), A.conductor());
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

ExactMatrix promote(const ExactMatrix& A, int M) {
  if (A.conductor() == M) return A;
  ExactMatrix B(A.dim(), M);
  for (int i = 0; i < A.dim(); ++i) {
    for (int j = 0; j < A.dim(); ++j) B.at(i, j) = promote(A.at(i, j), M);
  }
  return B;
}

ExactVector promote(const ExactVector& v, int M) {
  ExactVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(promote(x, M));
  return out;
}

Subspace promote(const Subspace& S, int M) {
  std::vector<ExactVector> rows;
  for (const auto& v : S.basis()) rows.push_back(promote(v, M));
  return Subspace::span(S.ambient_dim(), M, std::move(rows));
}

ExactMatrix galois_apply(long long k, const ExactMatrix& A) {
  ExactMatrix B(A.dim(), A.conductor());
  for (int i = 0; i < A.dim(); ++i) {
    for (int j = 0; j < A.dim(); ++j) B.at(i, j) = galois_apply(k, A.at(i, j));
  }
  return B;
}

}  // namespace coxkit

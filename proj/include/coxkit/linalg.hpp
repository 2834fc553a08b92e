#pragma once

#include <vector>

#include "coxkit/cyclotomic.hpp"

namespace coxkit {

using ExactVector = std::vector<CycloNum>;

// Square matrix over Q(zeta_N), row-major; acts on column vectors.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int n, int N);

  static ExactMatrix identity(int n, int N);
  static ExactMatrix scalar(int n, const CycloNum& c);

  int dim() const noexcept { return n_; }
  int conductor() const noexcept { return N_; }

  CycloNum& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const CycloNum& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<CycloNum>& entries() const noexcept { return a_; }
  ExactVector row(int i) const;

  bool is_identity() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) noexcept {
    return a.n_ == b.n_ && a.N_ == b.N_ && a.a_ == b.a_;
  }

 private:
  int n_ = 0;
  int N_ = 1;
  std::vector<CycloNum> a_;
};

struct MatrixHash {
  std::size_t operator()(const ExactMatrix& m) const noexcept { return m.hash(); }
};

// Row space kept in reduced row echelon form, so equal spaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(int ambient_dim, int N, std::vector<ExactVector> rows);
  static Subspace full(int ambient_dim, int N);
  static Subspace zero(int ambient_dim, int N);

  int ambient_dim() const noexcept { return n_; }
  int conductor() const noexcept { return N_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<ExactVector>& basis() const noexcept { return basis_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }
  bool contains(const ExactVector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
    return a.n_ == b.n_ && a.N_ == b.N_ && a.basis_ == b.basis_;
  }

 private:
  int n_ = 0;
  int N_ = 1;
  std::vector<ExactVector> basis_;
  std::vector<int> pivots_;
};

// In-place reduced row echelon form; drops zero rows, returns pivot columns.
std::vector<int> rref(std::vector<ExactVector>& rows, int ncols);

ExactMatrix mat_mul(const ExactMatrix& A, const ExactMatrix& B);
ExactMatrix operator*(const ExactMatrix& A, const ExactMatrix& B);
ExactMatrix operator+(const ExactMatrix& A, const ExactMatrix& B);
ExactMatrix operator-(const ExactMatrix& A, const ExactMatrix& B);
ExactVector mat_vec(const ExactMatrix& A, const ExactVector& v);
CycloNum dot(const ExactVector& a, const ExactVector& b);

int rank(const ExactMatrix& A);
Subspace kernel(const ExactMatrix& A);
CycloNum trace(const ExactMatrix& A);
CycloNum determinant(const ExactMatrix& A);
ExactMatrix inverse(const ExactMatrix& A);
// Monic, low to high degree, length n + 1.
std::vector<CycloNum> char_poly(const ExactMatrix& A);
CycloNum evaluate_poly(const std::vector<CycloNum>& coeffs, const CycloNum& x);
Subspace eigenspace(const ExactMatrix& A, const CycloNum& lambda);
bool subspace_contained_in(const Subspace& A, const Subspace& B);
int matrix_order(const ExactMatrix& A, int cap);
ExactMatrix matrix_power(const ExactMatrix& A, long long e);

ExactMatrix promote(const ExactMatrix& A, int M);
Subspace promote(const Subspace& S, int M);
ExactVector promote(const ExactVector& v, int M);
ExactMatrix galois_apply(long long k, const ExactMatrix& A);

}  // namespace coxkit

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "coxkit/errors.hpp"
#include "coxkit/linalg.hpp"

using namespace coxkit;

namespace {

CycloNum q(int N, long long a, long long b = 1) { return CycloNum(N, Rational(Integer(a), Integer(b))); }

CycloNum random_entry(std::mt19937& rng, int N) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> pick(0, N - 1);
  CycloNum x(N);
  for (int t = 0; t < 2; ++t) x += root_of_unity(N, pick(rng)) * q(N, coef(rng));
  return x;
}

ExactMatrix random_matrix(std::mt19937& rng, int n, int N) {
  ExactMatrix A(n, N);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) A.at(i, j) = random_entry(rng, N);
  }
  return A;
}

// Sum over permutations, independent of elimination.
CycloNum leibniz(const ExactMatrix& A) {
  const int n = A.dim();
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  CycloNum total(A.conductor());
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j] ? 1 : 0;
    }
    CycloNum term = q(A.conductor(), inversions % 2 == 0 ? 1 : -1);
    for (int i = 0; i < n; ++i) term = term * A.at(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Rank 1 outer product u v^T.
ExactMatrix outer(const ExactVector& u, const ExactVector& v, int N) {
  const int n = static_cast<int>(u.size());
  ExactMatrix A(n, N);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) A.at(i, j) = u[i] * v[j];
  }
  return A;
}

}  // namespace

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937 rng(20240611);
  for (int N : {1, 3, 4, 5, 12}) {
    for (int n = 1; n <= 4; ++n) {
      for (int trial = 0; trial < 6; ++trial) {
        const ExactMatrix A = random_matrix(rng, n, N);
        CHECK(determinant(A) == leibniz(A));
      }
    }
  }
}

TEST_CASE("characteristic polynomial matches det(xI - A) at sample points") {
  std::mt19937 rng(7);
  for (int N : {1, 5, 8}) {
    for (int n = 1; n <= 4; ++n) {
      const ExactMatrix A = random_matrix(rng, n, N);
      const auto cp = char_poly(A);
      REQUIRE(cp.size() == static_cast<std::size_t>(n) + 1);
      CHECK(cp.back().is_one());
      CHECK(-cp[n - 1] == trace(A));
      for (int x = -2; x <= 2; ++x) {
        const ExactMatrix M = ExactMatrix::scalar(n, q(N, x)) - A;
        CHECK(evaluate_poly(cp, q(N, x)) == leibniz(M));
      }
    }
  }
}

TEST_CASE("inverse and identity") {
  std::mt19937 rng(11);
  int tested = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int N = trial % 2 == 0 ? 3 : 7;
    const ExactMatrix A = random_matrix(rng, 3, N);
    if (determinant(A).is_zero()) {
      CHECK_THROWS_AS(inverse(A), DivisionByZero);
      continue;
    }
    const ExactMatrix B = inverse(A);
    CHECK((A * B).is_identity());
    CHECK((B * A).is_identity());
    ++tested;
  }
  CHECK(tested > 20);
}

TEST_CASE("rank, kernel and rank-nullity") {
  std::mt19937 rng(3);
  const int N = 5;
  for (int r = 0; r <= 3; ++r) {
    ExactMatrix A(4, N);
    for (int t = 0; t < r; ++t) {
      ExactVector u(4, CycloNum(N)), v(4, CycloNum(N));
      for (int i = 0; i < 4; ++i) {
        u[i] = random_entry(rng, N);
        v[i] = random_entry(rng, N);
      }
      A = A + outer(u, v, N);
    }
    const int rk = rank(A);
    CHECK(rk <= r);
    const Subspace K = kernel(A);
    CHECK(rk + K.dim() == 4);
    for (const auto& b : K.basis()) {
      for (const auto& x : mat_vec(A, b)) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("subspaces are canonical") {
  const int N = 3;
  const CycloNum w = root_of_unity(N, 1);
  const ExactVector a{q(N, 1), w, q(N, 0)};
  const ExactVector b{q(N, 0), q(N, 1), q(N, 1)};
  ExactVector c(3, CycloNum(N));
  for (int i = 0; i < 3; ++i) c[i] = a[i] * q(N, 2) - b[i] * w;
  const Subspace S = Subspace::span(3, N, {a, b});
  const Subspace T = Subspace::span(3, N, {c, b, a});
  CHECK(S == T);
  CHECK(S.dim() == 2);
  CHECK(S.contains(c));
  CHECK(subspace_contained_in(Subspace::span(3, N, {c}), S));
  CHECK_FALSE(S.contains(ExactVector{q(N, 1), q(N, 0), q(N, 0)}));
  CHECK(Subspace::full(3, N).dim() == 3);
  CHECK(Subspace::zero(3, N).dim() == 0);
}

TEST_CASE("eigenspaces of a rotation of order 5") {
  const int N = 5;
  // Companion matrix of x^2 - (z + z^4) x + 1.
  ExactMatrix A(2, N);
  A.at(0, 1) = q(N, -1);
  A.at(1, 0) = q(N, 1);
  A.at(1, 1) = root_of_unity(N, 1) + root_of_unity(N, 4);
  CHECK(matrix_order(A, 100) == 5);
  CHECK(eigenspace(A, root_of_unity(N, 1)).dim() == 1);
  CHECK(eigenspace(A, root_of_unity(N, 4)).dim() == 1);
  CHECK(eigenspace(A, root_of_unity(N, 2)).dim() == 0);
  CHECK(matrix_power(A, 5).is_identity());
  CHECK(matrix_power(A, -1) == inverse(A));
}

TEST_CASE("galois action on matrices is multiplicative") {
  std::mt19937 rng(99);
  const int N = 7;
  for (int trial = 0; trial < 5; ++trial) {
    const ExactMatrix A = random_matrix(rng, 3, N);
    const ExactMatrix B = random_matrix(rng, 3, N);
    for (int k : {2, 3, 6}) {
      CHECK(galois_apply(k, A * B) == galois_apply(k, A) * galois_apply(k, B));
      CHECK(galois_apply(k, determinant(A)) == determinant(galois_apply(k, A)));
    }
  }
}

TEST_CASE("promotion preserves products and determinants") {
  std::mt19937 rng(5);
  const ExactMatrix A = random_matrix(rng, 3, 3);
  const ExactMatrix B = random_matrix(rng, 3, 3);
  CHECK(promote(A * B, 12) == promote(A, 12) * promote(B, 12));
  CHECK(determinant(promote(A, 12)) == promote(determinant(A), 12));
  CHECK_THROWS_AS(promote(A, 10), UsageError);
}

TEST_CASE("matrix order cap") {
  ExactMatrix A(1, 1);
  A.at(0, 0) = q(1, 2);
  CHECK_THROWS_AS(matrix_order(A, 50), ResourceError);
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxkit/integer.hpp"

namespace coxkit {

int euler_phi(int n);

// Per-conductor data for Q(zeta_N), built once and shared.
struct CycloField {
  int N = 1;
  int phi = 1;
  // Phi_N, low to high, monic, length phi + 1.
  std::vector<std::int64_t> cyclo;
  // red[j] = coordinates of zeta_N^j in the power basis, j in [0, N).
  std::vector<std::vector<std::int64_t>> red;
};

// Thread-safe; the returned reference stays valid for the program lifetime.
const CycloField& cyclotomic_field(int N);

// Element of Q(zeta_N) in the power basis 1, z, ..., z^(phi-1).
//
// Stored as integer numerators over one positive common denominator with
// gcd(content, den) = 1, so equal elements have identical representations.
class CycloNum {
 public:
  CycloNum() : CycloNum(1) {}
  explicit CycloNum(int N);
  CycloNum(int N, const Rational& q);

  static CycloNum root_of_unity(int N, long long k);
  static CycloNum parse(std::string_view text);

  int conductor() const noexcept { return field_->N; }
  const CycloField& field() const noexcept { return *field_; }
  int size() const noexcept { return static_cast<int>(num_.size()); }
  Rational coeff(int i) const { return Rational(num_[i], den_); }
  const std::vector<Integer>& numerators() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept;
  // Only meaningful when is_rational().
  Rational rational_value() const { return coeff(0); }

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator*=(const Rational& q);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(CycloNum a, const Rational& q) { return a *= q; }

  friend bool operator==(const CycloNum& a, const CycloNum& b) noexcept;

  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  friend class CycloAccumulator;
  friend CycloNum galois_apply(long long k, const CycloNum& x);
  friend CycloNum promote(const CycloNum& x, int M);

  void check_same_field(const CycloNum& o) const;
  void normalize();

  const CycloField* field_;
  std::vector<Integer> num_;
  Integer den_{1};
};

// Sum of products with a single reduction at the end; used by matrix products.
class CycloAccumulator {
 public:
  explicit CycloAccumulator(int N);
  void add_product(const CycloNum& a, const CycloNum& b);
  void add(const CycloNum& a);
  CycloNum finish();

 private:
  const CycloField* field_;
  std::vector<Integer> num_;
  Integer den_{1};
};

enum class ArithOp { add, sub, mul, neg };
CycloNum arith(ArithOp op, const CycloNum& x, const CycloNum& y);

CycloNum root_of_unity(int N, long long k);
CycloNum invert(const CycloNum& x);
CycloNum pow(const CycloNum& x, long long e);
CycloNum galois_apply(long long k, const CycloNum& x);
CycloNum complex_conjugate(const CycloNum& x);
CycloNum promote(const CycloNum& x, int M);
std::optional<int> root_of_unity_order(const CycloNum& x);
std::pair<double, double> to_complex_approx(const CycloNum& x);

std::ostream& operator<<(std::ostream& os, const CycloNum& x);

struct CycloHash {
  std::size_t operator()(const CycloNum& x) const noexcept { return x.hash(); }
};

}  // namespace coxkit

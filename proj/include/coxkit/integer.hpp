#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace coxkit {

// Arbitrary-precision integer with an inline 64-bit fast path.
//
// Values that fit in int64_t are stored inline and never touch GMP; results
// that overflow are promoted to an mpz_class and demoted again as soon as
// they fit. Invariant: big_ is non-null only when the value does not fit
// in int64_t.
class Integer {
 public:
  Integer() noexcept = default;
  template <std::signed_integral T>
  Integer(T v) noexcept : small_(static_cast<std::int64_t>(v)) {}  // NOLINT
  explicit Integer(const mpz_class& v);

  Integer(const Integer& other);
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& other);
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  static Integer parse(std::string_view text);

  bool is_small() const noexcept { return !big_; }
  std::int64_t small_value() const noexcept { return small_; }
  mpz_class to_mpz() const;

  int sign() const noexcept;
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }
  bool fits_int64() const noexcept { return !big_; }

  double to_double() const;
  std::string to_string() const;
  std::size_t hash() const noexcept;

  Integer operator-() const;
  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);

  // this += a * b
  void add_mul(const Integer& a, const Integer& b);
  // this -= a * b
  void sub_mul(const Integer& a, const Integer& b);

  friend Integer operator+(const Integer& a, const Integer& b);
  friend Integer operator-(const Integer& a, const Integer& b);
  friend Integer operator*(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b) noexcept;
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

  // Exact quotient; b must divide a.
  friend Integer divexact(const Integer& a, const Integer& b);
  friend Integer gcd(const Integer& a, const Integer& b);
  friend Integer lcm(const Integer& a, const Integer& b);
  friend Integer abs(const Integer& a);

 private:
  void set_big(mpz_class v);
  void normalize();

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::signed_integral T>
  Rational(T v) : num_(v) {}  // NOLINT
  Rational(Integer v) : num_(std::move(v)) {}  // NOLINT
  Rational(Integer num, Integer den);

  static Rational parse(std::string_view text);

  const Integer& numerator() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_.is_one(); }
  int sign() const noexcept { return num_.sign(); }

  double to_double() const;
  std::string to_string() const;

  Rational operator-() const { return Rational(-num_, den_, Reduced{}); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Reduced {};
  Rational(Integer num, Integer den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  Integer num_{0};
  Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace coxkit

#include "coxkit/integer.hpp"

#include <functional>
#include <limits>
#include <numeric>
#include <ostream>

#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

mpz_class mpz_from_int64(std::int64_t v) {
  mpz_class r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &v);
  // mpz_import reads the raw bits as unsigned; patch the sign afterwards.
  if (v < 0) {
    std::uint64_t mag = static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(v);
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &mag);
    r = -r;
  }
  return r;
}

std::uint64_t magnitude(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(v)
               : static_cast<std::uint64_t>(v);
}

}  // namespace

Integer::Integer(const mpz_class& v) { set_big(v); }

Integer::Integer(const Integer& other)
    : small_(other.small_),
      big_(other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr) {}

Integer& Integer::operator=(const Integer& other) {
  if (this != &other) {
    small_ = other.small_;
    big_ = other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Integer::set_big(mpz_class v) {
  if (mpz_fits_slong_p(v.get_mpz_t()) && sizeof(long) == sizeof(std::int64_t)) {
    small_ = mpz_get_si(v.get_mpz_t());
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<mpz_class>(std::move(v));
  }
}

void Integer::normalize() {
  if (big_) set_big(std::move(*big_));
}

Integer Integer::parse(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  mpz_class v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw ParseError("invalid integer literal '" + std::string(text) + "'");
  }
  return Integer(v);
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : mpz_from_int64(small_); }

int Integer::sign() const noexcept {
  if (big_) return mpz_sgn(big_->get_mpz_t());
  return (small_ > 0) - (small_ < 0);
}

double Integer::to_double() const {
  return big_ ? big_->get_d() : static_cast<double>(small_);
}

std::string Integer::to_string() const {
  return big_ ? big_->get_str() : std::to_string(small_);
}

std::size_t Integer::hash() const noexcept {
  if (!big_) return std::hash<std::int64_t>{}(small_);
  std::size_t h = static_cast<std::size_t>(mpz_sgn(big_->get_mpz_t()));
  const std::size_t limbs = mpz_size(big_->get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    h = h * 0x9E3779B97F4A7C15ULL + mpz_getlimbn(big_->get_mpz_t(), static_cast<mp_size_t>(i));
  }
  return h;
}

Integer Integer::operator-() const {
  if (!big_ && small_ != kMin) return Integer(-small_);
  return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  set_big(to_mpz() + o.to_mpz());
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  set_big(to_mpz() - o.to_mpz());
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  std::int64_t r;
  if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  set_big(to_mpz() * o.to_mpz());
  return *this;
}

void Integer::add_mul(const Integer& a, const Integer& b) {
  std::int64_t p, r;
  if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &p) &&
      !__builtin_add_overflow(small_, p, &r)) {
    small_ = r;
    return;
  }
  mpz_class acc = to_mpz();
  mpz_class x = a.to_mpz();
  mpz_class y = b.to_mpz();
  mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  set_big(std::move(acc));
}

void Integer::sub_mul(const Integer& a, const Integer& b) {
  std::int64_t p, r;
  if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &p) &&
      !__builtin_sub_overflow(small_, p, &r)) {
    small_ = r;
    return;
  }
  mpz_class acc = to_mpz();
  mpz_class x = a.to_mpz();
  mpz_class y = b.to_mpz();
  mpz_submul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  set_big(std::move(acc));
}

Integer operator+(const Integer& a, const Integer& b) {
  Integer r(a);
  r += b;
  return r;
}

Integer operator-(const Integer& a, const Integer& b) {
  Integer r(a);
  r -= b;
  return r;
}

Integer operator*(const Integer& a, const Integer& b) {
  Integer r(a);
  r *= b;
  return r;
}

bool operator==(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // normalized: a big value never equals a small one
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  const int c = mpz_cmp(a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer divexact(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw DivisionByZero("integer division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == kMin && b.small_ == -1)) {
    return Integer(a.small_ / b.small_);
  }
  mpz_class q;
  mpz_class x = a.to_mpz();
  mpz_class y = b.to_mpz();
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return Integer(q);
}

Integer gcd(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) {
    const std::uint64_t g = std::gcd(magnitude(a.small_), magnitude(b.small_));
    if (g <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      return Integer(static_cast<std::int64_t>(g));
    }
  }
  mpz_class g;
  mpz_class x = a.to_mpz();
  mpz_class y = b.to_mpz();
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(divexact(a, gcd(a, b)) * b);
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Rational::Rational(Integer num, Integer den) {
  if (den.is_zero()) throw DivisionByZero("rational with zero denominator");
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  Integer g = gcd(num, den);
  if (!g.is_one()) {
    num = divexact(num, g);
    den = divexact(den, g);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  return Rational(Integer::parse(text.substr(0, slash)), Integer::parse(text.substr(slash + 1)));
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DivisionByZero("rational division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace coxkit

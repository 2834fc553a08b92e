#include "coxkit/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

using Poly64 = std::vector<std::int64_t>;

// Exact quotient of a by monic-up-to-sign b (b's leading coefficient is +-1).
Poly64 exact_divide(Poly64 a, const Poly64& b) {
  const std::size_t db = b.size() - 1;
  const std::int64_t lead = b.back();
  Poly64 q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i] * lead;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw IntegrityError("cyclotomic polynomial division left a remainder");
  }
  return q;
}

Poly64 cyclotomic_poly(int n) {
  Poly64 p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = exact_divide(std::move(p), cyclotomic_poly(d));
  }
  return p;
}

std::unique_ptr<CycloField> build_field(int N) {
  auto f = std::make_unique<CycloField>();
  f->N = N;
  f->phi = euler_phi(N);
  f->cyclo = cyclotomic_poly(N);
  const int phi = f->phi;
  f->red.assign(static_cast<std::size_t>(N), Poly64(static_cast<std::size_t>(phi), 0));
  f->red[0][0] = 1;
  for (int j = 1; j < N; ++j) {
    const Poly64& prev = f->red[j - 1];
    Poly64& cur = f->red[j];
    const std::int64_t top = prev[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < phi; ++i) cur[i] -= top * f->cyclo[i];
    }
  }
  return f;
}

// Reduces p modulo the monic Phi_N and truncates to phi coordinates.
void reduce_poly(const CycloField& f, std::vector<Integer>& p) {
  const int phi = f.phi;
  for (int d = static_cast<int>(p.size()) - 1; d >= phi; --d) {
    if (p[d].is_zero()) continue;
    const Integer c = p[d];
    for (int i = 0; i < phi; ++i) {
      const std::int64_t k = f.cyclo[i];
      if (k != 0) p[d - phi + i].sub_mul(c, Integer(k));
    }
  }
  p.resize(static_cast<std::size_t>(phi));
}

long long mod_pos(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw UsageError("euler_phi needs a positive argument");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const CycloField& cyclotomic_field(int N) {
  thread_local int last_n = 0;
  thread_local const CycloField* last = nullptr;
  if (N == last_n) return *last;
  if (N < 1) throw UsageError("conductor must be positive");

  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it == cache.end()) it = cache.emplace(N, build_field(N)).first;
  last_n = N;
  last = it->second.get();
  return *last;
}

CycloNum::CycloNum(int N)
    : field_(&cyclotomic_field(N)), num_(static_cast<std::size_t>(field_->phi)) {}

CycloNum::CycloNum(int N, const Rational& q) : CycloNum(N) {
  num_[0] = q.numerator();
  den_ = q.denominator();
}

CycloNum CycloNum::root_of_unity(int N, long long k) {
  CycloNum x(N);
  const auto& r = x.field_->red[mod_pos(k, N)];
  for (int i = 0; i < x.size(); ++i) x.num_[i] = Integer(r[i]);
  return x;
}

bool CycloNum::is_zero() const noexcept {
  for (const auto& c : num_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CycloNum::is_one() const noexcept { return den_.is_one() && num_[0].is_one() && is_rational(); }

bool CycloNum::is_rational() const noexcept {
  for (std::size_t i = 1; i < num_.size(); ++i) {
    if (!num_[i].is_zero()) return false;
  }
  return true;
}

void CycloNum::check_same_field(const CycloNum& o) const {
  if (field_ != o.field_) {
    throw UsageError("conductor mismatch: " + std::to_string(field_->N) + " vs " +
                     std::to_string(o.field_->N));
  }
}

void CycloNum::normalize() {
  if (den_.is_one()) return;
  Integer g = den_;
  for (const auto& c : num_) {
    if (g.is_one()) break;
    if (!c.is_zero()) g = gcd(g, c);
  }
  if (is_zero()) {
    den_ = Integer(1);
    return;
  }
  if (g.is_one()) return;
  for (auto& c : num_) {
    if (!c.is_zero()) c = divexact(c, g);
  }
  den_ = divexact(den_, g);
}

CycloNum CycloNum::operator-() const {
  CycloNum r(*this);
  for (auto& c : r.num_) c = -c;
  return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  check_same_field(o);
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    const Integer g = gcd(den_, o.den_);
    const Integer fa = divexact(o.den_, g);
    const Integer fb = divexact(den_, g);
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= fa;
      num_[i].add_mul(o.num_[i], fb);
    }
    den_ *= fa;
  }
  normalize();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  a.check_same_field(b);
  const int phi = a.field_->phi;
  if (b.is_rational()) {
    CycloNum r(a);
    for (auto& c : r.num_) c *= b.num_[0];
    r.den_ *= b.den_;
    r.normalize();
    return r;
  }
  if (a.is_rational()) return b * a;
  std::vector<Integer> p(static_cast<std::size_t>(2 * phi - 1));
  for (int i = 0; i < phi; ++i) {
    if (a.num_[i].is_zero()) continue;
    for (int j = 0; j < phi; ++j) {
      if (!b.num_[j].is_zero()) p[i + j].add_mul(a.num_[i], b.num_[j]);
    }
  }
  reduce_poly(*a.field_, p);
  CycloNum r(a.field_->N);
  r.num_ = std::move(p);
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) { return *this = *this * o; }

CycloNum& CycloNum::operator*=(const Rational& q) {
  if (q.is_zero()) {
    for (auto& c : num_) c = Integer(0);
    den_ = Integer(1);
    return *this;
  }
  for (auto& c : num_) c *= q.numerator();
  den_ *= q.denominator();
  normalize();
  return *this;
}

bool operator==(const CycloNum& a, const CycloNum& b) noexcept {
  return a.field_ == b.field_ && a.den_ == b.den_ && a.num_ == b.num_;
}

std::size_t CycloNum::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(field_->N) * 0x100000001B3ULL ^ den_.hash();
  for (const auto& c : num_) h = (h ^ c.hash()) * 0x9E3779B97F4A7C15ULL + 0x7F4A7C15;
  return h;
}

std::string CycloNum::to_string() const {
  std::string out = "Q(zeta_" + std::to_string(field_->N) + "): ";
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (num_[i].is_zero()) continue;
    if (!first) out += " + ";
    first = false;
    out += coeff(i).to_string() + "*z^" + std::to_string(i);
  }
  if (first) out += "0";
  return out;
}

namespace {

struct TermParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool at_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  Integer read_uint() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw ParseError("expected digits in '" + std::string(s) + "'");
    return Integer::parse(s.substr(start, pos - start));
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
};

}  // namespace

CycloNum CycloNum::parse(std::string_view text) {
  TermParser p{text};
  p.skip_ws();
  const std::string_view head = "Q(zeta_";
  if (text.substr(p.pos, head.size()) != head) {
    throw ParseError("cyclotomic literal must start with 'Q(zeta_N)': '" + std::string(text) + "'");
  }
  p.pos += head.size();
  const Integer n = p.read_uint();
  if (!p.eat(')')) throw ParseError("missing ')' in '" + std::string(text) + "'");
  if (!n.fits_int64() || n.small_value() < 1 || n.small_value() > 100000) {
    throw ParseError("unsupported conductor in '" + std::string(text) + "'");
  }
  const int N = static_cast<int>(n.small_value());
  p.eat(':');
  CycloNum result(N);
  bool first = true;
  while (!p.done()) {
    bool negative = false;
    bool signed_term = false;
    while (true) {
      if (p.eat('+')) {
        signed_term = true;
      } else if (p.eat('-')) {
        signed_term = true;
        negative = !negative;
      } else {
        break;
      }
    }
    if (!first && !signed_term) throw ParseError("expected '+' between terms in '" + std::string(text) + "'");
    first = false;

    Rational coeff(1);
    bool has_coeff = false;
    if (p.at_digit()) {
      Integer num = p.read_uint();
      Integer den(1);
      if (p.eat('/')) den = p.read_uint();
      coeff = Rational(num, den);
      has_coeff = true;
    }
    long long k = 0;
    const bool star = p.eat('*');
    if (p.eat('z')) {
      k = 1;
      if (p.eat('^')) {
        bool neg_exp = p.eat('-');
        const Integer e = p.read_uint();
        if (!e.fits_int64()) throw ParseError("exponent too large");
        k = neg_exp ? -e.small_value() : e.small_value();
      }
    } else if (star || !has_coeff) {
      throw ParseError("malformed term in '" + std::string(text) + "'");
    }
    if (negative) coeff = -coeff;
    result += CycloNum::root_of_unity(N, k) * CycloNum(N, coeff);
  }
  if (first) throw ParseError("empty cyclotomic literal '" + std::string(text) + "'");
  return result;
}

CycloAccumulator::CycloAccumulator(int N)
    : field_(&cyclotomic_field(N)), num_(static_cast<std::size_t>(2 * field_->phi - 1)) {}

void CycloAccumulator::add_product(const CycloNum& a, const CycloNum& b) {
  if (a.field_ != field_ || b.field_ != field_) throw UsageError("conductor mismatch in accumulator");
  const int phi = field_->phi;
  Integer d = a.den_ * b.den_;
  Integer scale(1);
  if (d != den_) {
    const Integer g = gcd(den_, d);
    const Integer up = divexact(d, g);
    if (!up.is_one()) {
      for (auto& c : num_) {
        if (!c.is_zero()) c *= up;
      }
    }
    scale = divexact(den_, g);
    den_ *= up;
  }
  for (int i = 0; i < phi; ++i) {
    if (a.num_[i].is_zero()) continue;
    const Integer ai = scale.is_one() ? a.num_[i] : a.num_[i] * scale;
    for (int j = 0; j < phi; ++j) {
      if (!b.num_[j].is_zero()) num_[i + j].add_mul(ai, b.num_[j]);
    }
  }
}

void CycloAccumulator::add(const CycloNum& a) {
  static thread_local const CycloField* one_field = nullptr;
  static thread_local CycloNum one;
  if (one_field != field_) {
    one = CycloNum(field_->N, Rational(1));
    one_field = field_;
  }
  add_product(a, one);
}

CycloNum CycloAccumulator::finish() {
  reduce_poly(*field_, num_);
  CycloNum r(field_->N);
  r.num_ = std::move(num_);
  r.den_ = std::move(den_);
  r.normalize();
  num_.assign(static_cast<std::size_t>(2 * field_->phi - 1), Integer(0));
  den_ = Integer(1);
  return r;
}

CycloNum arith(ArithOp op, const CycloNum& x, const CycloNum& y) {
  switch (op) {
    case ArithOp::add:
      return x + y;
    case ArithOp::sub:
      return x - y;
    case ArithOp::mul:
      return x * y;
    case ArithOp::neg:
      return -x;
  }
  throw UsageError("unknown arithmetic operation");
}

CycloNum root_of_unity(int N, long long k) { return CycloNum::root_of_unity(N, k); }

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// a = q*b + r
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead = b.back();
  while (r.size() >= b.size() && !r.empty()) {
    const std::size_t shift = r.size() - b.size();
    const Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    r.pop_back();
    trim(r);
  }
}

QPoly sub_mul_poly(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly out(std::max(a.size(), q.size() + b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

CycloNum from_qpoly(int N, const QPoly& p) {
  const CycloField& f = cyclotomic_field(N);
  Integer den(1);
  for (const auto& c : p) den = lcm(den, c.denominator());
  std::vector<Integer> ints(std::max<std::size_t>(p.size(), static_cast<std::size_t>(f.phi)));
  for (std::size_t i = 0; i < p.size(); ++i) {
    ints[i] = p[i].numerator() * divexact(den, p[i].denominator());
  }
  reduce_poly(f, ints);
  CycloNum r(N);
  for (int i = 0; i < f.phi; ++i) r += CycloNum::root_of_unity(N, i) * CycloNum(N, Rational(ints[i], den));
  return r;
}

}  // namespace

CycloNum invert(const CycloNum& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(x.conductor()) + ")");
  const int N = x.conductor();
  if (x.is_rational()) return CycloNum(N, Rational(1) / x.rational_value());

  const CycloField& f = x.field();
  QPoly r0(f.cyclo.begin(), f.cyclo.end());
  QPoly r1;
  for (int i = 0; i < x.size(); ++i) r1.push_back(x.coeff(i));
  trim(r1);
  QPoly s0;
  QPoly s1{Rational(1)};
  while (r1.size() > 1) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s2 = sub_mul_poly(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw IntegrityError("cyclotomic polynomial is not coprime to a nonzero element");
  const Rational c = Rational(1) / r1[0];
  for (auto& v : s1) v *= c;
  return from_qpoly(N, s1);
}

CycloNum pow(const CycloNum& x, long long e) {
  CycloNum base = e < 0 ? invert(x) : x;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  CycloNum result(x.conductor(), Rational(1));
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

CycloNum galois_apply(long long k, const CycloNum& x) {
  const CycloField& f = x.field();
  const int N = f.N;
  if (std::gcd(mod_pos(k, N), static_cast<long long>(N)) != 1) {
    throw InvalidAutomorphism("galois_apply: " + std::to_string(k) + " is not a unit mod " + std::to_string(N));
  }
  const long long kk = mod_pos(k, N);
  if (kk == 1 % N || x.is_rational()) return x;
  CycloNum r(N);
  for (int i = 0; i < f.phi; ++i) {
    if (x.num_[i].is_zero()) continue;
    const auto& red = f.red[(static_cast<long long>(i) * kk) % N];
    for (int j = 0; j < f.phi; ++j) {
      if (red[j] != 0) r.num_[j].add_mul(x.num_[i], Integer(red[j]));
    }
  }
  r.den_ = x.den_;
  r.normalize();
  return r;
}

CycloNum complex_conjugate(const CycloNum& x) { return galois_apply(-1, x); }

CycloNum promote(const CycloNum& x, int M) {
  const int N = x.conductor();
  if (M < 1 || M % N != 0) {
    throw UsageError("cannot promote Q(zeta_" + std::to_string(N) + ") into Q(zeta_" + std::to_string(M) + ")");
  }
  if (M == N) return x;
  const CycloField& g = cyclotomic_field(M);
  const int step = M / N;
  CycloNum r(M);
  for (int i = 0; i < x.size(); ++i) {
    if (x.num_[i].is_zero()) continue;
    const auto& red = g.red[i * step];
    for (int j = 0; j < g.phi; ++j) {
      if (red[j] != 0) r.num_[j].add_mul(x.num_[i], Integer(red[j]));
    }
  }
  r.den_ = x.den_;
  r.normalize();
  return r;
}

std::optional<int> root_of_unity_order(const CycloNum& x) {
  if (!x.denominator().is_one()) return std::nullopt;
  const int N = x.conductor();
  const CycloField& f = x.field();
  const auto& num = x.numerators();
  for (int k = 0; k < N; ++k) {
    const auto& red = f.red[k];
    bool plus = true;
    bool minus = true;
    for (int i = 0; i < f.phi && (plus || minus); ++i) {
      if (!num[i].is_small()) return std::nullopt;
      const std::int64_t v = num[i].small_value();
      plus = plus && v == red[i];
      minus = minus && v == -red[i];
    }
    if (plus) return N / std::gcd(N, k);
    if (minus) {
      // -z^k = zeta_{2N}^{N+2k}
      const int M = 2 * N;
      return M / std::gcd(M, N + 2 * k);
    }
  }
  return std::nullopt;
}

std::pair<double, double> to_complex_approx(const CycloNum& x) {
  const int N = x.conductor();
  const double den = x.denominator().to_double();
  double re = 0.0;
  double im = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    const double c = x.numerators()[i].to_double() / den;
    if (c == 0.0) continue;
    const double a = 2.0 * std::numbers::pi * i / N;
    re += c * std::cos(a);
    im += c * std::sin(a);
  }
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << x.to_string(); }

}  // namespace coxkit

#include "trimod/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <utility>

namespace trimod {

namespace {

using i128 = __int128;

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) { return v >= kMin64 && v <= kMax64; }

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  auto hi = static_cast<unsigned long>(u >> 64);
  auto lo = static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL);
  mpz_class r = hi;
  r <<= 64;
  r += lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) : num_(0), den_(1) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) : num_(0), den_(1) {
  mpq_class c = q;
  c.canonicalize();
  if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
    num_ = c.get_num().get_si();
    den_ = c.get_den().get_si();
  } else {
    set_big(c);
  }
}

void Rational::copy_big(const Rational& other) { big_ = new mpq_class(*other.big_); }

void Rational::release_big() noexcept { delete big_; }

Rational& Rational::assign_slow(const Rational& other) {
  if (this == &other) return *this;
  if (other.den_ == 0) {
    set_big(*other.big_);
  } else {
    delete big_;
    num_ = other.num_;
    den_ = other.den_;
  }
  return *this;
}

void Rational::set_big(const mpq_class& q) {
  if (den_ == 0) {
    *big_ = q;
  } else {
    big_ = new mpq_class(q);
    den_ = 0;
  }
}

Rational Rational::from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  if (n == 0) return r;
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  r.set_big(q);
  return r;
}

bool Rational::is_integer() const {
  if (den_ != 0) return den_ == 1;
  return big_->get_den() == 1;
}

int Rational::sign() const {
  if (den_ != 0) return (num_ > 0) - (num_ < 0);
  return sgn(*big_);
}

mpq_class Rational::to_mpq() const {
  if (den_ == 0) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
  if (den_ == 0) return big_->get_num();
  return mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  if (den_ == 0) return big_->get_den();
  return mpz_class(static_cast<long>(den_));
}

std::string Rational::to_string() const {
  if (den_ != 0) {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  if (big_->get_den() == 1) return big_->get_num().get_str();
  return big_->get_num().get_str() + "/" + big_->get_den().get_str();
}

std::optional<Rational> Rational::parse_canonical(std::string_view text) {
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') i = 1;
    if (i >= s.size()) return false;
    if (s[i] == '0' && s.size() - i > 1) return false;  // leading zero
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  if (!digits_ok(num_text, true)) return std::nullopt;
  if (num_text == "-0") return std::nullopt;
  mpz_class num{std::string(num_text)};
  if (slash == std::string_view::npos) return Rational(mpq_class(num));
  std::string_view den_text = text.substr(slash + 1);
  if (!digits_ok(den_text, false)) return std::nullopt;
  mpz_class den{std::string(den_text)};
  if (den <= 1 || num == 0) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) return std::nullopt;
  return Rational(mpq_class(num, den));
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (fits(s)) return Rational(static_cast<long long>(s));
      return Rational::from_i128(s, 1);
    }
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
  }
  return Rational(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a) {
  if (a.den_ != 0) {
    if (a.num_ == std::numeric_limits<std::int64_t>::min()) {
      return Rational::from_i128(-static_cast<i128>(a.num_), a.den_);
    }
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }
  return Rational(mpq_class(-*a.big_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (a.den_ != 0 && b.den_ != 0) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 p = static_cast<i128>(a.num_) * b.num_;
      if (fits(p)) return Rational(static_cast<long long>(p));
      return Rational::from_i128(p, 1);
    }
    i128 n = static_cast<i128>(a.num_) * b.num_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
  }
  return Rational(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.den_ != 0 && b.den_ != 0) {
    i128 n = static_cast<i128>(a.num_) * b.den_;
    i128 d = static_cast<i128>(a.den_) * b.num_;
    return Rational::from_i128(n, d);
  }
  return Rational(a.to_mpq() / b.to_mpq());
}

bool Rational::equal_slow(const Rational& a, const Rational& b) {
  if (a.den_ != 0 || b.den_ != 0) return false;  // canonical: big never equals small
  return *a.big_ == *b.big_;
}

bool operator<(const Rational& a, const Rational& b) {
  if (a.den_ != 0 && b.den_ != 0) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

}  // namespace trimod

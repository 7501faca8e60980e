#include "trimod/field.hpp"

#include <stdexcept>

namespace trimod {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  __int128 r = 1;
  __int128 x = b % p;
  while (e > 0) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p)) {
    throw std::invalid_argument("characteristic must be 0 or a prime below 2^31");
  }
  return Field(p);
}

std::int64_t Field::residue(const Rational& a) const {
  if (a.is_small() && a.small_den() == 1) {
    std::int64_t r = a.small_num() % p_;
    return r < 0 ? r + p_ : r;
  }
  mpz_class pz(static_cast<long>(p_));
  mpz_class n = a.numerator() % pz;
  mpz_class d = a.denominator() % pz;
  if (n < 0) n += pz;
  if (d == 0) throw std::domain_error("denominator divisible by the characteristic");
  std::int64_t ni = n.get_si();
  std::int64_t di = d.get_si();
  return static_cast<std::int64_t>(static_cast<__int128>(ni) * pow_mod(di, p_ - 2, p_) % p_);
}

Rational Field::reduce_mod(const Rational& a) const {
  return Rational(static_cast<long long>(residue(a)));
}

Rational Field::add(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a + b;
  std::int64_t s = a.small_num() + b.small_num();
  if (s >= p_) s -= p_;
  return Rational(static_cast<long long>(s));
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a - b;
  std::int64_t s = a.small_num() - b.small_num();
  if (s < 0) s += p_;
  return Rational(static_cast<long long>(s));
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a * b;
  return Rational(static_cast<long long>(static_cast<__int128>(a.small_num()) * b.small_num() % p_));
}

Rational Field::neg(const Rational& a) const {
  if (p_ == 0) return -a;
  return a.is_zero() ? a : Rational(static_cast<long long>(p_ - a.small_num()));
}

Rational Field::inv(const Rational& a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  if (p_ == 0) return Rational(1) / a;
  return Rational(static_cast<long long>(pow_mod(a.small_num(), p_ - 2, p_)));
}

Rational Field::div(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a / b;
  return mul(a, inv(b));
}

std::optional<Rational> Field::parse(std::string_view text) const {
  auto r = Rational::parse_canonical(text);
  if (!r) return std::nullopt;
  if (p_ == 0) return r;
  if (!r->is_integer() || r->sign() < 0 || !(*r < Rational(static_cast<long long>(p_)))) {
    return std::nullopt;
  }
  return r;
}

std::string Field::name() const { return p_ == 0 ? "rationals" : "prime field"; }

}  // namespace trimod

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace trimod {

// Exact rational number. Values whose numerator and denominator fit in a
// signed 64-bit word are stored inline; everything else spills to a heap
// mpq_class. The representation is always in lowest terms with a positive
// denominator, so structural equality is numeric equality.
class Rational {
 public:
  Rational() noexcept : num_(0), den_(1) {}
  Rational(long long n) noexcept : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
    if (den_ == 0) copy_big(other);
  }
  Rational(Rational&& other) noexcept : num_(other.num_), den_(other.den_) {
    if (other.den_ == 0) {
      other.num_ = 0;
      other.den_ = 1;
    }
  }
  Rational& operator=(const Rational& other) {
    if (den_ != 0 && other.den_ != 0) {
      num_ = other.num_;
      den_ = other.den_;
      return *this;
    }
    return assign_slow(other);
  }
  Rational& operator=(Rational&& other) noexcept {
    if (this == &other) return *this;
    if (den_ == 0) release_big();
    num_ = other.num_;
    den_ = other.den_;
    if (other.den_ == 0) {
      other.num_ = 0;
      other.den_ = 1;
    }
    return *this;
  }
  ~Rational() {
    if (den_ == 0) release_big();
  }

  bool is_zero() const noexcept { return den_ != 0 && num_ == 0; }
  bool is_one() const noexcept { return den_ == 1 && num_ == 1; }
  bool is_integer() const;
  bool is_small() const noexcept { return den_ != 0; }
  int sign() const;

  // Only valid when is_small().
  std::int64_t small_num() const noexcept { return num_; }
  std::int64_t small_den() const noexcept { return den_; }

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;

  // "a/b" in lowest terms, or "a" when b = 1.
  std::string to_string() const;
  // Accepts only the canonical form produced by to_string().
  static std::optional<Rational> parse_canonical(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.den_ != 0 && b.den_ != 0) return a.num_ == b.num_ && a.den_ == b.den_;
    return equal_slow(a, b);
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  static Rational from_i128(__int128 n, __int128 d);
  void set_big(const mpq_class& q);
  void copy_big(const Rational& other);
  void release_big() noexcept;
  Rational& assign_slow(const Rational& other);
  static bool equal_slow(const Rational& a, const Rational& b);

  // den_ == 0 marks the heap form; big_ is then the active member.
  union {
    std::int64_t num_;
    mpq_class* big_;
  };
  std::int64_t den_;
};

}  // namespace trimod

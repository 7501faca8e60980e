#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "trimod/rational.hpp"

namespace trimod {

// The ground field: the rationals (characteristic 0) or Z/p for a prime p.
// Prime-field scalars are Rationals holding an integer residue in [0, p).
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::int64_t p);

  std::int64_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  Rational reduce(const Rational& a) const { return p_ == 0 ? a : reduce_mod(a); }
  Rational from_int(long long v) const { return reduce(Rational(v)); }

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational div(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;

  std::string format(const Rational& a) const { return a.to_string(); }
  // Rejects anything that is not the canonical spelling of an element.
  std::optional<Rational> parse(std::string_view text) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t residue(const Rational& a) const;
  Rational reduce_mod(const Rational& a) const;

  std::int64_t p_ = 0;
};

}  // namespace trimod

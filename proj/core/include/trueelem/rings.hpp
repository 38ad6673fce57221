#pragma once

// Exact arithmetic in Z and Z/m, and principal ideals of those rings.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "trueelem/error.hpp"

namespace trueelem {

using Integer = mpz_class;

/// The ambient ring: the integers, or the integers modulo m >= 2.
class RingSpec {
 public:
  static RingSpec integers() { return RingSpec(Integer(0)); }
  static RingSpec modular(const Integer& modulus);

  /// Parses "Z" or "Z/<m>".
  static RingSpec parse(std::string_view text);

  bool is_integers() const { return modulus_ == 0; }
  bool is_modular() const { return modulus_ != 0; }
  /// 0 for the integers.
  const Integer& modulus() const { return modulus_; }

  /// Canonical representative of an integer: itself over Z, its residue in
  /// [0, m) over Z/m.
  Integer canonical(const Integer& x) const;

  std::string to_string() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.modulus_ == b.modulus_;
  }

 private:
  explicit RingSpec(Integer modulus) : modulus_(std::move(modulus)) {}
  Integer modulus_;
};

/// An element of a RingSpec, always held in canonical form.
class RingValue {
 public:
  RingValue(RingSpec spec, const Integer& value)
      : spec_(std::move(spec)), value_(spec_.canonical(value)) {}
  RingValue(RingSpec spec, long value) : RingValue(std::move(spec), Integer(value)) {}

  static RingValue zero(const RingSpec& spec) { return RingValue(spec, 0L); }
  static RingValue one(const RingSpec& spec) { return RingValue(spec, 1L); }

  const RingSpec& spec() const { return spec_; }
  const Integer& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_unit() const;

  /// Inverse of a unit; throws NotUnit otherwise.
  RingValue unit_inverse() const;

  std::string to_string() const { return value_.get_str(); }

  RingValue operator-() const { return RingValue(spec_, Integer(-value_)); }
  friend RingValue operator+(const RingValue& a, const RingValue& b);
  friend RingValue operator-(const RingValue& a, const RingValue& b);
  friend RingValue operator*(const RingValue& a, const RingValue& b);
  RingValue& operator+=(const RingValue& b) { return *this = *this + b; }
  RingValue& operator-=(const RingValue& b) { return *this = *this - b; }
  RingValue& operator*=(const RingValue& b) { return *this = *this * b; }

  friend bool operator==(const RingValue& a, const RingValue& b) {
    return a.spec_ == b.spec_ && a.value_ == b.value_;
  }

 private:
  RingSpec spec_;
  Integer value_;
};

void require_same_ring(const RingSpec& a, const RingSpec& b);

/// A principal ideal (N). The zero ideal is allowed.
class Ideal {
 public:
  Ideal(RingSpec spec, const Integer& generator);
  explicit Ideal(const RingValue& generator) : Ideal(generator.spec(), generator.value()) {}

  /// Parses "(<N>)".
  static Ideal parse(const RingSpec& spec, std::string_view text);

  const RingSpec& spec() const { return spec_; }
  const RingValue& generator() const { return generator_; }
  bool is_zero() const { return generator_.is_zero(); }

  /// The ideal generated by N^2.
  Ideal squared() const { return Ideal(generator_ * generator_); }

  /// d >= 0 such that x is in the ideal iff d divides the canonical lift of
  /// x (d = 0 means only zero). Over Z this is |N|, over Z/m it is gcd(N, m).
  const Integer& lift_modulus() const { return lift_modulus_; }

  /// Number of elements of the ideal in a finite ring.
  Integer cardinality() const;

  /// Canonical representative of the class of x modulo this ideal.
  Integer residue(const RingValue& x) const;

  std::string to_string() const { return "(" + generator_.to_string() + ")"; }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.generator_ == b.generator_;
  }

 private:
  RingSpec spec_;
  RingValue generator_;
  Integer lift_modulus_;
};

struct Membership {
  bool member = false;
  std::optional<RingValue> witness;  // x = witness * N when member
};

Membership ideal_contains(const RingValue& x, const Ideal& ideal);

/// Smallest nonnegative canonical q with z = q * N. Throws NotInIdeal.
RingValue ideal_divide(const RingValue& z, const Ideal& ideal);

bool congruent_mod_ideal(const RingValue& x, const RingValue& y, const Ideal& ideal);

inline bool in_ideal(const RingValue& x, const Ideal& ideal) {
  require_same_ring(x.spec(), ideal.spec());
  const auto& d = ideal.lift_modulus();
  return d == 0 ? x.is_zero() : mpz_divisible_p(x.value().get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Euler's totient of d >= 1, by trial division.
Integer euler_phi(const Integer& d);

}  // namespace trueelem

// Exact coefficient rings: Z, Q, and Z_m. All arithmetic is exact; no
// floating point appears anywhere in the library.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lch {

// A ring element. Integers and rationals are GMP values; elements of Z_m
// are stored as integers in [0, m). All operations go through a Ring, which
// owns the normalization rules.
using Elem = mpq_class;

bool is_prime(long m);

class Ring {
 public:
  enum class Kind { Integers, Rationals, Mod };

  static Ring integers() { return Ring(Kind::Integers, 0); }
  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  static Ring mod(long m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    return Ring(Kind::Mod, m);
  }
  // Parses "Z", "Q", "Z<m>" (e.g. "Z2").
  static Ring parse(const std::string& token);

  Kind kind() const { return kind_; }
  long modulus() const { return modulus_; }
  bool is_field() const {
    return kind_ == Kind::Rationals || (kind_ == Kind::Mod && is_prime(modulus_));
  }
  bool is_z2() const { return kind_ == Kind::Mod && modulus_ == 2; }
  bool is_integers() const { return kind_ == Kind::Integers; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return normalize(Elem(v)); }
  Elem normalize(const Elem& e) const;

  Elem add(const Elem& a, const Elem& b) const { return normalize(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return normalize(a - b); }
  Elem mul(const Elem& a, const Elem& b) const { return normalize(a * b); }
  Elem neg(const Elem& a) const { return normalize(-a); }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool is_unit(const Elem& a) const;
  // Multiplicative inverse of a unit; throws std::domain_error otherwise.
  Elem inverse(const Elem& a) const;
  // Exact division; throws std::domain_error when b does not divide a.
  Elem divide(const Elem& a, const Elem& b) const;

  std::string str(const Elem& a) const;
  std::string name() const;

  bool operator==(const Ring&) const = default;

 private:
  Ring(Kind kind, long modulus) : kind_(kind), modulus_(modulus) {}
  Kind kind_;
  long modulus_;
};

}  // namespace lch

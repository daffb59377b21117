#ifndef INVKIT_COEFF_HPP
#define INVKIT_COEFF_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "invkit/errors.hpp"

namespace invkit {

/// Coefficient domain tag: the rationals, or a prime field F_p with p < 2^31.
class CoeffField {
 public:
  static CoeffField rationals() { return CoeffField(0); }
  static CoeffField prime_field(std::uint32_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  /// 0 for the rationals, p for F_p.
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t modulus() const;

  bool operator==(const CoeffField& o) const { return p_ == o.p_; }
  bool operator!=(const CoeffField& o) const { return p_ != o.p_; }

  std::string to_string() const;  // "QQ" or "FF p"

 private:
  explicit CoeffField(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Exact field element. Rational values are kept canonical (gcd-reduced,
/// positive denominator, via GMP); prime-field values are residues in [0,p).
class Coeff {
 public:
  Coeff() : field_(CoeffField::rationals()) {}

  static Coeff zero(const CoeffField& f);
  static Coeff one(const CoeffField& f);
  static Coeff rational(mpq_class v);
  static Coeff integer(long v) { return rational(mpq_class(v)); }
  static Coeff residue(long v, std::uint32_t p);
  /// Interprets a rational in the given field (mod-p reduction of num/den
  /// for prime fields; the denominator must be invertible).
  static Coeff from_mpq(const CoeffField& f, const mpq_class& v);

  const CoeffField& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;
  Coeff operator-() const;
  Coeff inverse() const;
  Coeff pow(long e) const;

  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  /// Rational payload; only meaningful over the rationals.
  const mpq_class& rat() const { return rat_; }
  /// Residue payload; only meaningful over a prime field.
  std::uint32_t res() const { return res_; }

  /// Over Q: sign of the value (-1, 0, +1). Over F_p: 0 for zero else +1.
  int sgn() const;

  std::string to_string() const;

 private:
  explicit Coeff(const CoeffField& f) : field_(f) {}
  void check_field(const Coeff& o) const;

  CoeffField field_;
  mpq_class rat_;
  std::uint32_t res_ = 0;
};

}  // namespace invkit

#endif

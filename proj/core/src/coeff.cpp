#include "invkit/coeff.hpp"

namespace invkit {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) fail(ErrorKind::InvalidInput, "division by zero in F_p");
  // extended Euclid on signed 64-bit; p < 2^31 keeps everything in range
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

CoeffField CoeffField::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    fail(ErrorKind::InvalidInput,
         "prime field modulus must be a prime below 2^31");
  return CoeffField(p);
}

std::uint32_t CoeffField::modulus() const {
  if (!is_prime_field())
    fail(ErrorKind::InvalidInput, "modulus() on the rational field");
  return p_;
}

std::string CoeffField::to_string() const {
  return is_rationals() ? "QQ" : "FF " + std::to_string(p_);
}

Coeff Coeff::zero(const CoeffField& f) { return Coeff(f); }

Coeff Coeff::one(const CoeffField& f) {
  Coeff c(f);
  if (f.is_rationals())
    c.rat_ = 1;
  else
    c.res_ = 1 % f.modulus();
  return c;
}

Coeff Coeff::rational(mpq_class v) {
  Coeff c(CoeffField::rationals());
  v.canonicalize();
  c.rat_ = std::move(v);
  return c;
}

Coeff Coeff::residue(long v, std::uint32_t p) {
  CoeffField f = CoeffField::prime_field(p);
  Coeff c(f);
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  c.res_ = static_cast<std::uint32_t>(r);
  return c;
}

Coeff Coeff::from_mpq(const CoeffField& f, const mpq_class& v) {
  if (f.is_rationals()) return rational(v);
  std::uint32_t p = f.modulus();
  mpz_class num = v.get_num(), den = v.get_den();
  std::uint32_t n =
      static_cast<std::uint32_t>(mpz_fdiv_ui(num.get_mpz_t(), p));
  std::uint32_t d =
      static_cast<std::uint32_t>(mpz_fdiv_ui(den.get_mpz_t(), p));
  if (d == 0)
    fail(ErrorKind::InvalidInput, "denominator not invertible mod p");
  Coeff c(f);
  c.res_ = mod_mul(n, mod_inv(d, p), p);
  return c;
}

bool Coeff::is_zero() const {
  return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Coeff::is_one() const {
  return field_.is_rationals() ? rat_ == 1 : res_ == 1 % field_.modulus();
}

void Coeff::check_field(const Coeff& o) const {
  if (field_ != o.field_)
    fail(ErrorKind::RingMismatch, "coefficient field mismatch");
}

Coeff Coeff::operator+(const Coeff& o) const {
  check_field(o);
  Coeff c(field_);
  if (field_.is_rationals())
    c.rat_ = rat_ + o.rat_;
  else
    c.res_ = mod_add(res_, o.res_, field_.modulus());
  return c;
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + (-o); }

Coeff Coeff::operator*(const Coeff& o) const {
  check_field(o);
  Coeff c(field_);
  if (field_.is_rationals())
    c.rat_ = rat_ * o.rat_;
  else
    c.res_ = mod_mul(res_, o.res_, field_.modulus());
  return c;
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inverse(); }

Coeff Coeff::operator-() const {
  Coeff c(field_);
  if (field_.is_rationals())
    c.rat_ = -rat_;
  else
    c.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
  return c;
}

Coeff Coeff::inverse() const {
  if (is_zero()) fail(ErrorKind::InvalidInput, "inverse of zero");
  Coeff c(field_);
  if (field_.is_rationals())
    c.rat_ = 1 / rat_;
  else
    c.res_ = mod_inv(res_, field_.modulus());
  return c;
}

Coeff Coeff::pow(long e) const {
  if (e == 0) return one(field_);
  Coeff base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                          : static_cast<unsigned long>(e);
  Coeff acc = one(field_);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool Coeff::operator==(const Coeff& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

int Coeff::sgn() const {
  if (field_.is_rationals()) return ::sgn(rat_);
  return res_ == 0 ? 0 : 1;
}

std::string Coeff::to_string() const {
  return field_.is_rationals() ? rat_.get_str() : std::to_string(res_);
}

}  // namespace invkit

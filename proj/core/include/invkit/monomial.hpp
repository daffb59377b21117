#ifndef INVKIT_MONOMIAL_HPP
#define INVKIT_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "invkit/errors.hpp"

namespace invkit {

/// Exponent vector of fixed arity (one slot per ring variable).
class Monomial {
 public:
  explicit Monomial(std::size_t arity) : e_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial unit(std::size_t arity) { return Monomial(arity); }
  static Monomial var(std::size_t arity, std::size_t i, std::uint32_t k = 1);

  std::size_t arity() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint64_t degree() const { return deg_; }
  bool is_unit() const { return deg_ == 0; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // pre: o.divides(*this)
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<std::uint32_t> e_;
  std::uint64_t deg_ = 0;
};

struct MonomialOrder {
  enum class Kind : std::uint8_t { Lex, GrevLex, Block };
  Kind kind = Kind::GrevLex;
  // Block: variables [0, split) form the leading (eliminated) block; each
  // block is compared by grevlex.
  std::uint32_t split = 0;

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
  static MonomialOrder block(std::uint32_t split) {
    return {Kind::Block, split};
  }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != Kind::Block || split == o.split);
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }
  bool operator<(const MonomialOrder& o) const {
    if (kind != o.kind) return kind < o.kind;
    return kind == Kind::Block && split < o.split;
  }
};

/// Three-way comparison under the order: -1 if a < b, 0 if equal, +1 if a > b.
int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& o);

}  // namespace invkit

#endif

#include "invkit/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace invkit {

Monomial::Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {
  deg_ = std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

Monomial Monomial::var(std::size_t arity, std::size_t i, std::uint32_t k) {
  Monomial m(arity);
  m.e_[i] = k;
  m.deg_ = k;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
  m.deg_ = deg_ + o.deg_;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
  m.deg_ = deg_ - o.deg_;
  return m;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial m(*this);
  m.deg_ = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    m.e_[i] = std::max(e_[i], o.e_[i]);
    m.deg_ += m.e_[i];
  }
  return m;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial m(*this);
  m.deg_ = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    m.e_[i] = std::min(e_[i], o.e_[i]);
    m.deg_ += m.e_[i];
  }
  return m;
}

namespace {

// grevlex on the index range [lo, hi)
int grevlex_cmp(const Monomial& a, const Monomial& b, std::size_t lo,
                std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace

int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& o) {
  if (a.arity() != b.arity())
    fail(ErrorKind::RingMismatch, "monomial arity mismatch");
  switch (o.kind) {
    case MonomialOrder::Kind::Lex:
      return lex_cmp(a, b);
    case MonomialOrder::Kind::GrevLex:
      return grevlex_cmp(a, b, 0, a.arity());
    case MonomialOrder::Kind::Block: {
      std::size_t s = std::min<std::size_t>(o.split, a.arity());
      int c = grevlex_cmp(a, b, 0, s);
      if (c != 0) return c;
      return grevlex_cmp(a, b, s, a.arity());
    }
  }
  return 0;
}

}  // namespace invkit

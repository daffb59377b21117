#include "invkit/linalg.hpp"

#include <algorithm>

namespace invkit {

namespace {

// row echelon form in place; returns pivot column per pivot row
std::vector<std::size_t> echelon(QMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    mpq_class inv = 1 / a[row][col];
    for (std::size_t j = col; j < a[row].size(); ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (std::size_t j = col; j < a[i].size(); ++j)
        a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<QRow> q_nullspace(QMatrix a, std::size_t ncols) {
  for (auto& r : a) r.resize(ncols, mpq_class(0));
  std::vector<std::size_t> pivots = echelon(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<QRow> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    QRow v(ncols, mpq_class(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<mpz_class> primitive_integer(const QRow& v) {
  mpz_class lcm = 1;
  for (const auto& q : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(v.size());
  mpz_class g = 0;
  for (const auto& q : v) {
    mpz_class w = q.get_num() * (lcm / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.get_mpz_t());
    out.push_back(std::move(w));
  }
  if (g > 1)
    for (auto& w : out) w /= g;
  for (const auto& w : out) {
    if (w == 0) continue;
    if (w < 0)
      for (auto& x : out) x = -x;
    break;
  }
  return out;
}

std::vector<std::vector<mpz_class>> primitive_integer_kernel(
    const QMatrix& a, std::size_t ncols) {
  std::vector<std::vector<mpz_class>> out;
  for (const auto& v : q_nullspace(a, ncols)) out.push_back(primitive_integer(v));
  return out;
}

std::optional<QRow> q_solve(QMatrix a, QRow b) {
  std::size_t ncols = 0;
  for (const auto& r : a) ncols = std::max(ncols, r.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i].resize(ncols, mpq_class(0));
    a[i].push_back(i < b.size() ? b[i] : mpq_class(0));
  }
  std::vector<std::size_t> pivots = echelon(a, ncols);
  // inconsistent iff a nonzero augmented entry survives in a zero row
  for (std::size_t i = pivots.size(); i < a.size(); ++i)
    if (a[i][ncols] != 0) return std::nullopt;
  QRow x(ncols, mpq_class(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][ncols];
  return x;
}

std::size_t q_rank(QMatrix a) {
  std::size_t ncols = 0;
  for (const auto& r : a) ncols = std::max(ncols, r.size());
  for (auto& r : a) r.resize(ncols, mpq_class(0));
  return echelon(a, ncols).size();
}

}  // namespace invkit

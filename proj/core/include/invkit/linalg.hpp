#ifndef INVKIT_LINALG_HPP
#define INVKIT_LINALG_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace invkit {

using QRow = std::vector<mpq_class>;
using QMatrix = std::vector<QRow>;  // row-major

/// Basis of {e : A e = 0} (right kernel) by exact Gaussian elimination.
std::vector<QRow> q_nullspace(QMatrix a, std::size_t ncols);

/// Clears a rational vector to a primitive integer vector (gcd 1, first
/// nonzero entry positive).
std::vector<mpz_class> primitive_integer(const QRow& v);

/// Right kernel of A as primitive integer vectors.
std::vector<std::vector<mpz_class>> primitive_integer_kernel(
    const QMatrix& a, std::size_t ncols);

/// One solution x of A x = b, if consistent.
std::optional<QRow> q_solve(QMatrix a, QRow b);

std::size_t q_rank(QMatrix a);

}  // namespace invkit

#endif

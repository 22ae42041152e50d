#pragma once

#include "symsemi/rational.hpp"
#include "symsemi/sparse.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace symsemi::qlinalg {

struct RrefResult {
    SparseMat reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots; ///< pivot column of each nonzero row, increasing
};

/// Reduced row-echelon form. Pivoting takes the leftmost nonzero column and,
/// within it, the smallest remaining row index.
RrefResult rref(const SparseMat& m);

/// Rank by forward elimination only.
std::size_t rank(const SparseMat& m);

/// Columns form a basis of the right kernel (cols x (cols - rank)).
/// One basis vector per free column, with a 1 in that column.
SparseMat kernel_basis(const SparseMat& m);

struct SkewParity {
    std::size_t ker_dim = 0;
    int parity = 0; ///< ker_dim mod 2
};

/// Kernel dimension of a skew-symmetric matrix and its parity.
/// Throws NotSkewSymmetric unless m is square with m^t = -m.
SkewParity skew_kernel_parity(const SparseMat& m);

/// Exact determinant of a square matrix.
Rational determinant(const SparseMat& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const SparseMat& m, const std::vector<Rational>& b);

/// Inverse of a square matrix; throws Singular.
SparseMat inverse(const SparseMat& m);

/// Symmetric Gaussian elimination without pivoting: true iff every pivot is
/// nonnegative and each zero pivot has a zero row. Throws ShapeMismatch unless m = m^t.
bool is_positive_semidefinite(const SparseMat& m);

/// Polynomial with rational coefficients, lowest degree first.
using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b);

/// Characteristic polynomials det(x I - B) of the diagonal blocks of the
/// block-triangular form induced by the strongly connected components of the
/// sparsity graph. Their product is the characteristic polynomial of m.
std::vector<Poly> charpoly_factors(const SparseMat& m);

/// det(x I - m), monic, lowest degree first.
Poly charpoly(const SparseMat& m);

} // namespace symsemi::qlinalg

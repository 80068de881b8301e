#pragma once

#include <optional>
#include <vector>

#include "liejcd/qmatrix.hpp"
#include "liejcd/qpoly.hpp"
#include "liejcd/subspace.hpp"

namespace liejcd {

struct RrefResult {
    QMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Unique reduced row echelon form, exact Gauss-Jordan.
RrefResult rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// A solution of a x = b with all free variables zero, or nullopt when
/// inconsistent. Inconsistency is a regular return, not an error.
std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b);

/// Nullspace {x : a x = 0} with canonical RREF basis.
Subspace kernel(const QMatrix& a);

/// Row space of a, canonicalized.
Subspace row_space(const QMatrix& a);

/// Inverse of a square matrix; Error(Validation) when singular.
QMatrix inverse(const QMatrix& a);

/// Monic generator of the annihilating ideal of a, by Krylov iteration:
/// per start vector the least annihilating combination, lcm across vectors.
QPoly minimal_polynomial(const QMatrix& a);

/// Diagonalizability test for an upper-triangular matrix: for every distinct
/// diagonal value the geometric multiplicity (via the rank of a - value*I)
/// must match the count of that value on the diagonal. Errors when the input
/// is not upper triangular.
bool is_ut_diagonalizable(const QMatrix& a);

struct UtDiagonalization {
    QMatrix p;  // unit upper triangular
    QMatrix d;  // diagonal, same diagonal as the input
};

/// Conjugates an upper-triangular diagonalizable matrix to its diagonal by a
/// sweep of elementary upper-triangular transvections, row by row: the entry
/// a_ij is cleared by I + c E_ij with c = a_ij / (a_jj - a_ii). Errors when
/// the input is not upper triangular or not diagonalizable.
UtDiagonalization ut_diagonalize(const QMatrix& a);

}  // namespace liejcd

#pragma once

#include "liejcd/qmatrix.hpp"
#include "liejcd/qpoly.hpp"

namespace liejcd {

/// Matrix-level Jordan-Chevalley splitting a = semisimple + nilpotent with
/// commuting parts; witness_poly evaluated at a reproduces the semisimple
/// part, so both parts are polynomials in a.
struct JordanPair {
    QMatrix semisimple;
    QMatrix nilpotent;
    QPoly witness_poly;
};

/// Factorization-free decomposition by Newton lifting in Q[t]/(minimal
/// polynomial): with f the squarefree part of the minimal polynomial and u an
/// inverse of f' modulo f, iterate x <- x - f(x) u(x) starting from x = t
/// until f(x) vanishes. The witness polynomial is reduced modulo the minimal
/// polynomial for a canonical result.
JordanPair matrix_jordan_chevalley(const QMatrix& a);

/// Squarefree minimal polynomial, the right semisimplicity notion over Q.
bool is_semisimple_matrix(const QMatrix& a);

/// a^n = 0 for n the ambient dimension, tested by repeated squaring.
bool is_nilpotent_matrix(const QMatrix& a);

}  // namespace liejcd

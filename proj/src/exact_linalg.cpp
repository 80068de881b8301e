#include "liejcd/exact_linalg.hpp"

#include <map>

#include "liejcd/error.hpp"

namespace liejcd {

RrefResult rref(const QMatrix& m) {
    RrefResult res;
    res.reduced = m;
    QMatrix& a = res.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a.at(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = c; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(p, j));
        Rational inv = a.at(r, c).inv();
        for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            Rational f = a.at(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const QMatrix& m) { return rref(m).rank; }

std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b) {
    if (b.size() != a.rows()) throw Error(ErrorCode::Validation, "solve_linear shape mismatch");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
    QVector x(a.cols());
    for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.reduced.at(k, a.cols());
    return x;
}

Subspace kernel(const QMatrix& a) {
    RrefResult r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVector v(a.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced.at(k, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(basis, a.cols());
}

Subspace row_space(const QMatrix& a) { return Subspace::span_of_rows(a); }

QMatrix inverse(const QMatrix& a) {
    if (!a.is_square()) throw Error(ErrorCode::Validation, "inverse of non-square matrix");
    const std::size_t n = a.rows();
    RrefResult r = rref(QMatrix::hcat(a, QMatrix::identity(n)));
    if (r.rank != n || (n > 0 && r.pivots.back() >= n))
        throw Error(ErrorCode::Validation, "matrix is singular");
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
    return inv;
}

namespace {

/// Least monic polynomial with p(a) v = 0, via the Krylov chain of v.
QPoly local_minimal_polynomial(const QMatrix& a, const QVector& v) {
    const std::size_t n = a.rows();
    std::vector<QVector> chain{v};
    while (true) {
        std::size_t k = chain.size() - 1;
        // Does chain[k] lie in the span of chain[0..k-1]?
        QMatrix cols(n, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < n; ++i) cols.at(i, j) = chain[j][i];
        if (auto c = solve_linear(cols, chain[k])) {
            QVector coeffs(k + 1);
            for (std::size_t j = 0; j < k; ++j) coeffs[j] = -(*c)[j];
            coeffs[k] = 1;
            return QPoly(std::move(coeffs));
        }
        chain.push_back(a.mul_vec(chain.back()));
    }
}

}  // namespace

QPoly minimal_polynomial(const QMatrix& a) {
    if (!a.is_square()) throw Error(ErrorCode::Validation, "minimal polynomial of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return QPoly{Rational(1)};
    QPoly m{Rational(1)};
    QMatrix ma = QMatrix::identity(n);  // m evaluated at a
    for (std::size_t i = 0; i < n && m.degree() < static_cast<int>(n); ++i) {
        bool annihilated = true;
        for (std::size_t r = 0; r < n; ++r)
            if (!ma.at(r, i).is_zero()) { annihilated = false; break; }
        if (annihilated) continue;
        QVector e(n);
        e[i] = 1;
        m = poly_lcm(m, local_minimal_polynomial(a, e));
        ma = m.eval(a);
    }
    return m;
}

bool is_ut_diagonalizable(const QMatrix& a) {
    if (!a.is_upper_triangular())
        throw Error(ErrorCode::Validation, "diagonalizability test requires an upper-triangular matrix");
    const std::size_t n = a.rows();
    std::map<std::size_t, std::size_t> mult;  // representative index -> multiplicity
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i) {
        bool seen = false;
        for (std::size_t rep : reps)
            if (a.at(rep, rep) == a.at(i, i)) { ++mult[rep]; seen = true; break; }
        if (!seen) { reps.push_back(i); mult[i] = 1; }
    }
    // Diagonalizable iff every eigenvalue has geometric multiplicity equal to
    // its count on the diagonal. All eigenvalues are on the diagonal here.
    for (std::size_t rep : reps) {
        QMatrix shifted = a;
        for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) -= a.at(rep, rep);
        if (rank(shifted) != n - mult[rep]) return false;
    }
    return true;
}

UtDiagonalization ut_diagonalize(const QMatrix& a) {
    if (!a.is_upper_triangular())
        throw Error(ErrorCode::Validation, "ut_diagonalize requires an upper-triangular matrix");
    const std::size_t n = a.rows();
    QMatrix b = a;
    QMatrix p = QMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (b.at(i, j).is_zero()) continue;
            if (b.at(j, j) == b.at(i, i))
                throw Error(ErrorCode::Validation,
                            "ut_diagonalize precondition violated: matrix is not diagonalizable");
            Rational c = b.at(i, j) / (b.at(j, j) - b.at(i, i));
            // Conjugate by I + c E_ij: clears (i, j), touches only row i right
            // of j and column j above i (already cleared rows stay cleared).
            QMatrix t = QMatrix::identity(n);
            t.at(i, j) = c;
            QMatrix tinv = QMatrix::identity(n);
            tinv.at(i, j) = -c;
            b = tinv * b * t;
            p = p * t;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!b.at(i, j).is_zero())
                throw Error(ErrorCode::InternalInvariantViolation, "ut_diagonalize sweep left residue");
    return {std::move(p), std::move(b)};
}

}  // namespace liejcd

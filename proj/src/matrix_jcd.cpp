#include "liejcd/matrix_jcd.hpp"

#include "liejcd/error.hpp"
#include "liejcd/exact_linalg.hpp"

namespace liejcd {

namespace {

/// p(x) reduced modulo m, Horner in Q[t]/(m).
QPoly compose_mod(const QPoly& p, const QPoly& x, const QPoly& m) {
    QPoly acc;
    for (int i = p.degree(); i >= 0; --i) {
        acc = poly_mod(acc * x, m);
        acc = acc + QPoly::constant(p.coeff(static_cast<std::size_t>(i)));
    }
    return poly_mod(acc, m);
}

}  // namespace

JordanPair matrix_jordan_chevalley(const QMatrix& a) {
    if (!a.is_square()) throw Error(ErrorCode::Validation, "decomposition needs a square matrix");
    QPoly m = minimal_polynomial(a);
    QPoly f = squarefree_part(m);
    QPoly u = poly_inverse_mod(f.derivative(), f);

    // Newton iteration in Q[t]/(m). f(x) lies in the nilradical, and the
    // update x - f(x) u(x) squares its vanishing order each step; deg m
    // bounds the multiplicity, so convergence takes at most
    // ceil(log2(deg m)) + 1 rounds.
    QPoly x = poly_mod(QPoly::t(), m);
    QPoly fx = compose_mod(f, x, m);
    std::size_t guard = 0;
    while (!fx.is_zero()) {
        QPoly ux = compose_mod(u, x, m);
        x = poly_mod(x - fx * ux, m);
        fx = compose_mod(f, x, m);
        if (++guard > static_cast<std::size_t>(m.degree()) + 2)
            throw Error(ErrorCode::InternalInvariantViolation, "newton lift failed to converge");
    }

    QMatrix s = x.eval(a);
    QMatrix nil = a - s;
    return {std::move(s), std::move(nil), std::move(x)};
}

bool is_semisimple_matrix(const QMatrix& a) {
    if (!a.is_square()) throw Error(ErrorCode::Validation, "semisimplicity test needs a square matrix");
    return is_squarefree(minimal_polynomial(a));
}

bool is_nilpotent_matrix(const QMatrix& a) {
    if (!a.is_square()) throw Error(ErrorCode::Validation, "nilpotency test needs a square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return true;
    QMatrix p = a;
    std::size_t covered = 1;
    while (covered < n) {
        if (p.is_zero()) return true;
        p = p * p;
        covered *= 2;
    }
    return p.is_zero();
}

}  // namespace liejcd

#include "liejcd/levi.hpp"

#include "liejcd/error.hpp"
#include "liejcd/exact_linalg.hpp"

namespace liejcd {

namespace {

/// Corrected lift of a basis of g/r. Starts from unit vectors at the section
/// coordinates and walks the derived series r = C_0 > C_1 > ... > 0; at step
/// k the lifts close under the bracket modulo C_k, and a correction h_i in
/// C_k chosen by a linear solve pushes the defect into C_{k+1}. The quotient
/// images never change, so the quotient structure constants stay valid
/// throughout.
std::vector<QVector> lift_levi_basis(const LieAlgebra& g, const Ideal& rad, const QuotientAlgebra& q) {
    const std::size_t d = g.dim();
    const std::size_t s = q.algebra.dim();
    std::vector<QVector> x(s, zero_vector(d));
    for (std::size_t i = 0; i < s; ++i) x[i][q.section[i]] = 1;

    std::vector<Subspace> chain{rad.subspace};
    while (!chain.back().is_zero()) {
        Subspace next = g.bracket_span(chain.back(), chain.back());
        if (next == chain.back())
            throw Error(ErrorCode::InternalInvariantViolation, "radical derived series stalled");
        chain.push_back(std::move(next));
    }

    const std::size_t pairs = s * (s - 1) / 2;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        const Subspace& ck = chain[k];
        const Subspace& cn = chain[k + 1];
        const std::size_t qk = ck.dim();
        std::vector<QVector> u(qk), ru(qk);
        for (std::size_t b = 0; b < qk; ++b) {
            u[b] = ck.basis_vector(b);
            ru[b] = cn.reduce(u[b]);
        }

        // Unknowns alpha[l * qk + b] with h_l = sum_b alpha u_b; one block of
        // d equations per pair (i, j): reduction mod C_{k+1} of
        //   defect_ij + [h_i, x_j] + [x_i, h_j] - sum_l ct_ij^l h_l
        // must vanish ([h_i, h_j] already lies in C_{k+1}).
        QMatrix sys(pairs * d, s * qk);
        QVector rhs(pairs * d);
        std::size_t p = 0;
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = i + 1; j < s; ++j, ++p) {
                const QVector& ct = q.algebra.structure(i, j);
                QVector defect = g.bracket(x[i], x[j]);
                for (std::size_t l = 0; l < s; ++l)
                    if (!ct[l].is_zero()) defect = vec_sub(defect, vec_scale(ct[l], x[l]));
                QVector rd = cn.reduce(defect);
                for (std::size_t t = 0; t < d; ++t) rhs[p * d + t] = -rd[t];
                for (std::size_t b = 0; b < qk; ++b) {
                    QVector ci = cn.reduce(g.bracket(u[b], x[j]));
                    if (!ct[i].is_zero()) ci = vec_sub(ci, vec_scale(ct[i], ru[b]));
                    for (std::size_t t = 0; t < d; ++t) sys.at(p * d + t, i * qk + b) = ci[t];
                    QVector cj = cn.reduce(g.bracket(x[i], u[b]));
                    if (!ct[j].is_zero()) cj = vec_sub(cj, vec_scale(ct[j], ru[b]));
                    for (std::size_t t = 0; t < d; ++t) sys.at(p * d + t, j * qk + b) = cj[t];
                    for (std::size_t l = 0; l < s; ++l) {
                        if (l == i || l == j || ct[l].is_zero()) continue;
                        for (std::size_t t = 0; t < d; ++t)
                            sys.at(p * d + t, l * qk + b) -= ct[l] * ru[b][t];
                    }
                }
            }

        auto alpha = solve_linear(sys, rhs);
        if (!alpha)
            throw Error(ErrorCode::InternalInvariantViolation, "levi correction system is inconsistent");
        for (std::size_t l = 0; l < s; ++l)
            for (std::size_t b = 0; b < qk; ++b)
                if (!(*alpha)[l * qk + b].is_zero())
                    x[l] = vec_add(x[l], vec_scale((*alpha)[l * qk + b], u[b]));
    }

    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) {
            const QVector& ct = q.algebra.structure(i, j);
            QVector br = g.bracket(x[i], x[j]);
            for (std::size_t l = 0; l < s; ++l)
                if (!ct[l].is_zero()) br = vec_sub(br, vec_scale(ct[l], x[l]));
            if (!vec_is_zero(br))
                throw Error(ErrorCode::InternalInvariantViolation, "lifted levi basis does not close");
        }
    return x;
}

void certify(const LieAlgebra& g, const LeviDecomposition& ld) {
    const std::size_t d = g.dim();
    const Subspace& levi = ld.levi;
    const Subspace& rad = ld.radical.subspace;
    const Subspace& n = ld.nilpotent_ideal.subspace;
    if (subspace_sum(levi, rad) != Subspace::full(d) || levi.dim() + rad.dim() != d)
        throw Error(ErrorCode::InternalInvariantViolation, "levi and radical do not split the algebra");
    for (std::size_t i = 0; i < levi.dim(); ++i)
        for (std::size_t j = i + 1; j < levi.dim(); ++j)
            if (!levi.contains(g.bracket(levi.basis_vector(i), levi.basis_vector(j))))
                throw Error(ErrorCode::InternalInvariantViolation, "levi subspace is not bracket-closed");
    LieAlgebra s = g.subalgebra(levi);
    if (rank(s.killing_gram()) != s.dim())
        throw Error(ErrorCode::InternalInvariantViolation, "levi subalgebra has degenerate killing form");
    if (!subspace_leq(n, rad))
        throw Error(ErrorCode::InternalInvariantViolation, "nilpotent ideal leaves the radical");
    if (!g.is_ideal(n))
        throw Error(ErrorCode::InternalInvariantViolation, "[g, r] is not an ideal");
    Subspace derived = g.derived_algebra().subspace;
    if (subspace_sum(levi, n) != derived || levi.dim() + n.dim() != derived.dim())
        throw Error(ErrorCode::InternalInvariantViolation, "derived algebra does not split as levi + [g, r]");
}

}  // namespace

LeviDecomposition levi_decomposition(const LieAlgebra& g) {
    const std::size_t d = g.dim();
    Ideal rad = g.solvable_radical();

    Subspace levi;
    if (rad.dim() == d) {
        levi = Subspace(d);
    } else if (rad.dim() == 0) {
        levi = Subspace::full(d);
    } else {
        QuotientAlgebra q = g.quotient(rad);
        std::vector<QVector> x = lift_levi_basis(g, rad, q);
        levi = Subspace::span(x, d);
        if (levi.dim() != q.algebra.dim())
            throw Error(ErrorCode::InternalInvariantViolation, "levi lifts are linearly dependent");
    }

    Subspace n = g.bracket_span(Subspace::full(d), rad.subspace);
    LeviDecomposition ld{std::move(levi), std::move(rad), Ideal{std::move(n), &g}};
    certify(g, ld);
    return ld;
}

}  // namespace liejcd

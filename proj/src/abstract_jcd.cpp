#include "liejcd/abstract_jcd.hpp"

#include <random>
#include <sstream>

#include "liejcd/error.hpp"
#include "liejcd/exact_linalg.hpp"
#include "liejcd/matrix_jcd.hpp"

namespace liejcd {

namespace {

QMatrix columns_from(const std::vector<QVector>& cols, std::size_t height) {
    QMatrix m(height, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < height; ++i) m.at(i, j) = cols[j][i];
    return m;
}

std::string format_vector(const QVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    os << ")";
    return os.str();
}

}  // namespace

std::pair<QVector, QVector> split_against_levi(const LieAlgebra& g, const LeviDecomposition& ld,
                                               const QVector& x) {
    if (x.size() != g.dim()) throw Error(ErrorCode::Validation, "element has the wrong dimension");
    Ideal derived = g.derived_algebra();
    if (!derived.contains(x))
        throw Error(ErrorCode::NotInDerivedAlgebra,
                    "element lies outside the derived algebra; reduction residual " +
                        format_vector(derived.subspace.reduce(x)));

    const Subspace& levi = ld.levi;
    const Subspace& nil = ld.nilpotent_ideal.subspace;
    std::vector<QVector> cols;
    for (std::size_t i = 0; i < levi.dim(); ++i) cols.push_back(levi.basis_vector(i));
    for (std::size_t j = 0; j < nil.dim(); ++j) cols.push_back(nil.basis_vector(j));
    auto coords = solve_linear(columns_from(cols, g.dim()), x);
    if (!coords)
        throw Error(ErrorCode::InternalInvariantViolation,
                    "derived-algebra element does not split against levi + nilpotent ideal");
    QVector a = zero_vector(g.dim()), r = zero_vector(g.dim());
    for (std::size_t i = 0; i < levi.dim(); ++i)
        if (!(*coords)[i].is_zero()) a = vec_add(a, vec_scale((*coords)[i], levi.basis_vector(i)));
    for (std::size_t j = 0; j < nil.dim(); ++j) {
        const Rational& c = (*coords)[levi.dim() + j];
        if (!c.is_zero()) r = vec_add(r, vec_scale(c, nil.basis_vector(j)));
    }
    return {std::move(a), std::move(r)};
}

std::pair<QVector, QVector> jordan_in_levi(const LieAlgebra& g, const LeviDecomposition& ld,
                                           const QVector& a) {
    const Subspace& levi = ld.levi;
    if (!levi.contains(a))
        throw Error(ErrorCode::Validation, "jordan_in_levi input must lie in the levi subalgebra");
    const std::size_t k = levi.dim();
    if (k == 0) return {zero_vector(g.dim()), zero_vector(g.dim())};

    // Realize the element faithfully: the inclusion in matrix mode, ad in
    // structure mode (faithful on the levi subalgebra, whose center is zero).
    // The matrix decomposition of the image stays inside the image of the
    // levi subalgebra, so the semisimple part pulls back.
    QMatrix image = g.matrix_mode() ? g.realize(a) : g.ad(a);
    JordanPair jp = matrix_jordan_chevalley(image);
    std::vector<QVector> cols;
    cols.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        QVector bi = levi.basis_vector(i);
        cols.push_back(g.matrix_mode() ? g.realize(bi).flatten() : g.ad(bi).flatten());
    }
    auto y = solve_linear(columns_from(cols, image.rows() * image.cols()), jp.semisimple.flatten());
    if (!y)
        throw Error(ErrorCode::InternalInvariantViolation,
                    "semisimple part of the image leaves the levi subalgebra");
    QVector s = zero_vector(g.dim());
    for (std::size_t i = 0; i < k; ++i)
        if (!(*y)[i].is_zero()) s = vec_add(s, vec_scale((*y)[i], levi.basis_vector(i)));
    return {s, vec_sub(a, s)};
}

std::pair<Subspace, Subspace> weight_split(const LieAlgebra& g, const LeviDecomposition& ld,
                                           const QVector& s) {
    const Subspace& nil = ld.nilpotent_ideal.subspace;
    const std::size_t nu = nil.dim();
    if (nu == 0) return {Subspace(g.dim()), Subspace(g.dim())};

    // ad(s) restricted to the nilpotent ideal, in the ideal's basis.
    QMatrix m(nu, nu);
    std::vector<QVector> image_rows;
    for (std::size_t j = 0; j < nu; ++j) {
        QVector br = g.bracket(s, nil.basis_vector(j));
        auto coords = nil.coordinates(br);
        if (!coords)
            throw Error(ErrorCode::InternalInvariantViolation,
                        "ad(s) does not preserve the nilpotent ideal");
        for (std::size_t i = 0; i < nu; ++i) m.at(i, j) = (*coords)[i];
        image_rows.push_back(std::move(br));
    }
    Subspace local_kernel = kernel(m);
    std::vector<QVector> kernel_rows;
    for (std::size_t i = 0; i < local_kernel.dim(); ++i)
        kernel_rows.push_back(nil.from_coordinates(local_kernel.basis_vector(i)));
    Subspace n0 = Subspace::span(kernel_rows, g.dim());
    Subspace nstar = Subspace::span(image_rows, g.dim());
    if (n0.dim() + nstar.dim() != nu || subspace_sum(n0, nstar) != nil)
        throw Error(ErrorCode::InternalInvariantViolation,
                    "kernel and image of ad(s) do not split the nilpotent ideal");
    return {std::move(n0), std::move(nstar)};
}

QVector solve_commutator_equation(const LieAlgebra& g, const QVector& x, const QVector& s,
                                  const QVector& r, const Subspace& nstar) {
    QVector rhs = g.bracket(s, r);
    if (!nstar.contains(rhs))
        throw Error(ErrorCode::InternalInvariantViolation, "[s, r] lies outside nstar");
    const std::size_t q = nstar.dim();
    if (q == 0) return zero_vector(g.dim());

    std::vector<QVector> cols;
    cols.reserve(q);
    for (std::size_t k = 0; k < q; ++k) cols.push_back(g.bracket(x, nstar.basis_vector(k)));
    QMatrix system = columns_from(cols, g.dim());
    if (rank(system) != q)
        throw Error(ErrorCode::InternalInvariantViolation,
                    "bracket with x is not injective on nstar");
    auto beta = solve_linear(system, rhs);
    if (!beta)
        throw Error(ErrorCode::InternalInvariantViolation, "commutator equation has no solution");
    return nstar.from_coordinates(*beta);
}

AbstractJordanPair abstract_jordan_chevalley(const LieAlgebra& g, const LeviDecomposition& ld,
                                             const QVector& x) {
    auto [a, r] = split_against_levi(g, ld, x);
    auto [s, n] = jordan_in_levi(g, ld, a);
    auto [n0, nstar] = weight_split(g, ld, s);
    QVector b = solve_commutator_equation(g, x, s, r, nstar);

    QVector semisimple = vec_add(s, b);
    QVector nilpotent = vec_sub(x, semisimple);
    if (!vec_is_zero(g.bracket(semisimple, nilpotent)))
        throw Error(ErrorCode::InternalInvariantViolation, "computed parts do not commute");
    Ideal derived = g.derived_algebra();
    if (!derived.contains(semisimple) || !derived.contains(nilpotent))
        throw Error(ErrorCode::InternalInvariantViolation,
                    "computed parts leave the derived algebra");
    if (g.matrix_mode()) {
        JordanPair oracle = matrix_jordan_chevalley(g.realize(x));
        if (g.realize(semisimple) != oracle.semisimple || g.realize(nilpotent) != oracle.nilpotent)
            throw Error(ErrorCode::InternalInvariantViolation,
                        "abstract decomposition disagrees with the matrix decomposition");
    }

    AbstractJordanPair pair;
    pair.element = x;
    pair.semisimple = std::move(semisimple);
    pair.nilpotent = std::move(nilpotent);
    pair.internals = {std::move(a), std::move(r), std::move(s), std::move(n),
                      std::move(b), std::move(n0), std::move(nstar)};
    return pair;
}

AbstractJordanPair abstract_jordan_chevalley(const LieAlgebra& g, const QVector& x) {
    LeviDecomposition ld = levi_decomposition(g);
    return abstract_jordan_chevalley(g, ld, x);
}

namespace {

QVector random_member(const Subspace& s, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coord(-3, 3);
    QVector v = zero_vector(s.ambient_dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        int c = coord(rng);
        if (c != 0) v = vec_add(v, vec_scale(Rational(c), s.basis_vector(i)));
    }
    return v;
}

}  // namespace

VerifyReport verify_decomposition(const LieAlgebra& g, const AbstractJordanPair& pair,
                                  const std::vector<Representation>& reps, std::size_t samples,
                                  std::uint64_t seed) {
    VerifyReport report;
    const QVector& x = pair.element;
    const QVector& s_part = pair.semisimple;
    const QVector& n_part = pair.nilpotent;
    report.sum_ok = vec_add(s_part, n_part) == x;
    report.commute_ok = vec_is_zero(g.bracket(s_part, n_part));
    Ideal derived = g.derived_algebra();
    report.membership_ok = derived.contains(x) && derived.contains(s_part) && derived.contains(n_part);

    // Project [x, w] onto nstar along n0; the resulting operator on nstar
    // must be invertible, which is what makes b unique.
    const Subspace& n0 = pair.internals.n0;
    const Subspace& nstar = pair.internals.nstar;
    const std::size_t q = nstar.dim();
    if (q == 0) {
        report.projected_operator_invertible = true;
    } else {
        std::vector<QVector> split_cols;
        for (std::size_t i = 0; i < n0.dim(); ++i) split_cols.push_back(n0.basis_vector(i));
        for (std::size_t k = 0; k < q; ++k) split_cols.push_back(nstar.basis_vector(k));
        QMatrix split = columns_from(split_cols, g.dim());
        QMatrix projected(q, q);
        bool ok = true;
        for (std::size_t k = 0; k < q && ok; ++k) {
            auto c = solve_linear(split, g.bracket(x, nstar.basis_vector(k)));
            if (!c) { ok = false; break; }
            for (std::size_t i = 0; i < q; ++i) projected.at(i, k) = (*c)[n0.dim() + i];
        }
        report.projected_operator_invertible = ok && rank(projected) == q;
    }

    Subspace nil = subspace_sum(n0, nstar);
    std::mt19937_64 rng(seed);
    for (const Representation& rep : reps) {
        RepCheckReport rr;
        rr.descriptor = rep.descriptor();
        QMatrix ix = rep.apply(x), is = rep.apply(s_part), in = rep.apply(n_part);
        rr.sum_ok = is + in == ix;
        rr.commute_ok = is * in == in * is;
        rr.nilpotent_ok = is_nilpotent_matrix(in);
        rr.semisimple_ok = is_semisimple_matrix(is);
        rr.nilpotent_sampling_ok = true;
        rr.semisimple_sampling_ok = true;
        for (std::size_t t = 0; t < samples; ++t) {
            QVector b1 = random_member(nil, rng);
            if (!is_nilpotent_matrix(rep.apply(vec_add(pair.internals.n, b1)))) {
                rr.nilpotent_sampling_ok = false;
                break;
            }
        }
        for (std::size_t t = 0; t < samples; ++t) {
            QVector b2 = random_member(nstar, rng);
            if (!is_semisimple_matrix(rep.apply(vec_add(pair.internals.s, b2)))) {
                rr.semisimple_sampling_ok = false;
                break;
            }
        }
        report.reps.push_back(std::move(rr));
    }
    return report;
}

}  // namespace liejcd

#include <doctest.h>

#include <random>

#include "liejcd/error.hpp"
#include "liejcd/exact_linalg.hpp"
#include "liejcd/lie_algebra.hpp"
#include "test_support.hpp"

using namespace liejcd;
using namespace liejcd::testsupport;

TEST_CASE("construction from matrices validates the span") {
    LieAlgebra g = sl2();
    CHECK(g.dim() == 3);
    CHECK(g.matrix_mode());
    CHECK(g.ambient_dim() == 2);

    // {E12, E21} brackets to h outside the span.
    try {
        LieAlgebra::from_matrices({QMatrix::unit(2, 0, 1), QMatrix::unit(2, 1, 0)});
        FAIL("expected NotClosed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotClosed);
        CHECK(e.pair_i == 0);
        CHECK(e.pair_j == 1);
    }

    try {
        LieAlgebra::from_matrices({QMatrix::identity(2), Rational(2) * QMatrix::identity(2)});
        FAIL("expected LinearlyDependentBasis");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LinearlyDependentBasis);
    }

    LieAlgebra abelian = LieAlgebra::from_matrices({QMatrix::unit(2, 0, 0)});
    CHECK(abelian.dim() == 1);
    CHECK(vec_is_zero(abelian.structure(0, 0)));
}

TEST_CASE("construction from structure constants validates the axioms") {
    LieAlgebra h = heisenberg3();
    CHECK(h.dim() == 3);
    CHECK_FALSE(h.matrix_mode());
    CHECK_THROWS_AS(h.ambient_dim(), Error);
    CHECK(h.structure(0, 1) == qv({0, 0, 1}));
    CHECK(h.structure(1, 0) == qv({0, 0, -1}));

    // [e0, e1] = e0, [e0, e2] = e1 violates Jacobi on (0, 1, 2).
    try {
        LieAlgebra::from_structure_constants(3, {{0, 1, qv({1, 0, 0})}, {0, 2, qv({0, 1, 0})}});
        FAIL("expected Validation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Validation);
        CHECK(std::string(e.what()).find("jacobi") != std::string::npos);
    }
}

TEST_CASE("bracket matches sl2 relations") {
    LieAlgebra g = sl2();  // basis order (e, h, f)
    QVector e = qv({1, 0, 0}), h = qv({0, 1, 0}), f = qv({0, 0, 1});
    CHECK(g.bracket(h, e) == vec_scale(Rational(2), e));
    CHECK(g.bracket(h, f) == vec_scale(Rational(-2), f));
    CHECK(g.bracket(e, f) == h);
    CHECK(g.bracket(e, e) == zero_vector(3));
}

TEST_CASE("bracket is bilinear and antisymmetric") {
    LieAlgebra g = gl2();
    std::mt19937_64 rng(67);
    for (int t = 0; t < 20; ++t) {
        QVector x = random_vector(4, rng), y = random_vector(4, rng), z = random_vector(4, rng);
        CHECK(g.bracket(x, y) == vec_scale(Rational(-1), g.bracket(y, x)));
        CHECK(g.bracket(vec_add(x, y), z) == vec_add(g.bracket(x, z), g.bracket(y, z)));
        CHECK(g.bracket(vec_scale(Rational(3, 2), x), y) ==
              vec_scale(Rational(3, 2), g.bracket(x, y)));
        // Jacobi on arbitrary elements, not just basis triples.
        QVector j = vec_add(vec_add(g.bracket(x, g.bracket(y, z)), g.bracket(y, g.bracket(z, x))),
                            g.bracket(z, g.bracket(x, y)));
        CHECK(vec_is_zero(j));
    }
}

TEST_CASE("realization is a homomorphism onto commutators") {
    LieAlgebra g = sl2_semidirect_q2();
    std::mt19937_64 rng(71);
    for (int t = 0; t < 10; ++t) {
        QVector x = random_vector(5, rng), y = random_vector(5, rng);
        CHECK(g.realize(g.bracket(x, y)) == QMatrix::commutator(g.realize(x), g.realize(y)));
    }
}

TEST_CASE("adjoint matrices") {
    LieAlgebra g = sl2();
    CHECK(g.ad(qv({0, 1, 0})) == diag({2, 0, -2}));
    CHECK(g.ad(qv({1, 0, 0})).mul_vec(qv({0, 0, 1})) == qv({0, 1, 0}));  // [e, f] = h

    LieAlgebra h = heisenberg3();
    CHECK(h.ad(qv({0, 0, 1})).is_zero());  // z is central
}

TEST_CASE("derived algebra") {
    CHECK(sl2().derived_algebra().dim() == 3);
    CHECK(sl3().derived_algebra().dim() == 8);
    CHECK(gl2().derived_algebra().dim() == 3);
    CHECK_FALSE(gl2().derived_algebra().contains(qv({1, 0, 0, 1})));
    CHECK(gl2().derived_algebra().contains(qv({1, 0, 0, -1})));

    Ideal db = borel2().derived_algebra();  // basis (h, e): [h, e] = 2e
    CHECK(db.dim() == 1);
    CHECK(db.contains(qv({0, 1})));

    CHECK(LieAlgebra::from_matrices({QMatrix::unit(2, 0, 0)}).derived_algebra().dim() == 0);
}

TEST_CASE("killing form") {
    QMatrix k = sl2().killing_gram();
    QMatrix expected(3, 3);
    expected.at(0, 2) = 4; expected.at(2, 0) = 4; expected.at(1, 1) = 8;
    CHECK(k == expected);

    CHECK(heisenberg3().killing_gram().is_zero());
    CHECK(LieAlgebra::from_matrices({QMatrix::unit(2, 0, 0)}).killing_gram().is_zero());

    // Associativity: k([x, y], z) = k(x, [y, z]).
    LieAlgebra g = gl2();
    QMatrix kg = g.killing_gram();
    CHECK(kg == kg.transpose());
    std::mt19937_64 rng(73);
    auto pair_k = [&](const QVector& a, const QVector& b) {
        Rational acc(0);
        QVector kb = kg.mul_vec(b);
        for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * kb[i];
        return acc;
    };
    for (int t = 0; t < 20; ++t) {
        QVector x = random_vector(4, rng), y = random_vector(4, rng), z = random_vector(4, rng);
        CHECK(pair_k(g.bracket(x, y), z) == pair_k(x, g.bracket(y, z)));
    }
}

TEST_CASE("solvable radical") {
    CHECK(sl2().solvable_radical().dim() == 0);
    CHECK(sl3().solvable_radical().dim() == 0);

    Ideal r = gl2().solvable_radical();
    CHECK(r.dim() == 1);
    CHECK(r.contains(qv({1, 0, 0, 1})));  // the scalars

    CHECK(borel2().solvable_radical().dim() == 2);
    CHECK(heisenberg3().solvable_radical().dim() == 3);

    Ideal rs = sl2_semidirect_q2().solvable_radical();
    CHECK(rs.dim() == 2);
    CHECK(rs.contains(qv({0, 0, 0, 1, 0})));
    CHECK(rs.contains(qv({0, 0, 0, 0, 1})));
}

TEST_CASE("center") {
    CHECK(sl2().center().dim() == 0);
    Ideal z = gl2().center();
    CHECK(z.dim() == 1);
    CHECK(z.contains(qv({1, 0, 0, 1})));
    Ideal hz = heisenberg3().center();
    CHECK(hz.dim() == 1);
    CHECK(hz.contains(qv({0, 0, 1})));
}

TEST_CASE("solvability predicate") {
    CHECK(borel2().is_solvable());
    CHECK(heisenberg3().is_solvable());
    CHECK_FALSE(sl2().is_solvable());
    CHECK_FALSE(gl2().is_solvable());
}

TEST_CASE("bracket span and ideal predicate") {
    LieAlgebra g = sl2_semidirect_q2();
    Subspace full = Subspace::full(5);
    Subspace rad = g.solvable_radical().subspace;
    Subspace n = g.bracket_span(full, rad);
    CHECK(n == rad);  // [g, Q^2] = Q^2 here: the action of sl2 is transitive enough
    CHECK(g.is_ideal(rad));
    CHECK(g.is_ideal(full));
    CHECK(g.is_ideal(Subspace(5)));
    // The levi span (e, h, f) is a subalgebra but not an ideal.
    Subspace levi = Subspace::span({qv({1, 0, 0, 0, 0}), qv({0, 1, 0, 0, 0}),
                                    qv({0, 0, 1, 0, 0})}, 5);
    CHECK_FALSE(g.is_ideal(levi));
}

TEST_CASE("subalgebra construction") {
    LieAlgebra g = gl2();
    Subspace tracefree = Subspace::span({qv({0, 1, 0, 0}), qv({0, 0, 1, 0}),
                                         qv({1, 0, 0, -1})}, 4);
    LieAlgebra s = g.subalgebra(tracefree);
    CHECK(s.dim() == 3);
    CHECK(s.matrix_mode());
    CHECK(rank(s.killing_gram()) == 3);
    // A non-closed subspace is rejected.
    Subspace bad = Subspace::span({qv({0, 1, 0, 0}), qv({0, 0, 1, 0})}, 4);
    CHECK_THROWS_AS(g.subalgebra(bad), Error);
}

TEST_CASE("quotient by an ideal") {
    LieAlgebra g = gl2();
    QuotientAlgebra q = g.quotient(g.solvable_radical());
    CHECK(q.algebra.dim() == 3);
    CHECK_FALSE(q.algebra.matrix_mode());
    CHECK(rank(q.algebra.killing_gram()) == 3);  // gl2 / scalars is simple
    CHECK(q.section.size() == 3);

    LieAlgebra h = heisenberg3();
    QuotientAlgebra qh = h.quotient(h.center());
    CHECK(qh.algebra.dim() == 2);
    CHECK(qh.algebra.killing_gram().is_zero());  // abelian quotient
}

TEST_CASE("lie closure completes a span") {
    std::vector<QMatrix> closed = lie_closure({QMatrix::unit(2, 0, 1), QMatrix::unit(2, 1, 0)});
    CHECK(closed.size() == 3);
    LieAlgebra g = LieAlgebra::from_matrices(closed);  // must now close
    CHECK(g.dim() == 3);
    CHECK(rank(g.killing_gram()) == 3);  // it is sl2

    // Already-closed input keeps its span.
    std::vector<QMatrix> again = lie_closure(closed);
    CHECK(again.size() == 3);

    // Nilpotent generators may close to something solvable.
    std::vector<QMatrix> ut = lie_closure({QMatrix::unit(2, 0, 1), QMatrix::identity(2)});
    CHECK(ut.size() == 2);
}

TEST_CASE("algebra equality") {
    CHECK(sl2() == sl2());
    CHECK_FALSE(sl2() == gl2());
    CHECK_FALSE(heisenberg3() == sl2());
}

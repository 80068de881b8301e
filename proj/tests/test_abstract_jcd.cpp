#include <doctest.h>

#include <random>

#include "liejcd/abstract_jcd.hpp"
#include "liejcd/error.hpp"
#include "liejcd/exact_linalg.hpp"
#include "liejcd/matrix_jcd.hpp"
#include "test_support.hpp"

using namespace liejcd;
using namespace liejcd::testsupport;

TEST_CASE("splitting against the levi subalgebra") {
    LieAlgebra g = sl2_semidirect_q2();
    LeviDecomposition ld = levi_decomposition(g);

    auto [a, r] = split_against_levi(g, ld, qv({0, 1, 0, 1, 0}));  // h + p
    CHECK(a == qv({0, 1, 0, 0, 0}));
    CHECK(r == qv({0, 0, 0, 1, 0}));

    auto [a2, r2] = split_against_levi(g, ld, qv({1, 0, 0, 0, 0}));  // e alone
    CHECK(a2 == qv({1, 0, 0, 0, 0}));
    CHECK(vec_is_zero(r2));

    auto [a3, r3] = split_against_levi(g, ld, qv({0, 0, 0, 2, -1}));  // inside the ideal
    CHECK(vec_is_zero(a3));
    CHECK(r3 == qv({0, 0, 0, 2, -1}));
}

TEST_CASE("elements outside the derived algebra are rejected") {
    LieAlgebra g = gl2();
    LeviDecomposition ld = levi_decomposition(g);
    try {
        split_against_levi(g, ld, qv({1, 0, 0, 1}));
        FAIL("expected NotInDerivedAlgebra");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInDerivedAlgebra);
        CHECK(std::string(e.what()).find("residual") != std::string::npos);
    }
    CHECK_THROWS_AS(abstract_jordan_chevalley(g, qv({1, 0, 0, 1})), Error);
    CHECK_THROWS_AS(abstract_jordan_chevalley(nonperfect_1dim(), qv({1})), Error);
    // A derived-algebra element of the same algebra passes.
    CHECK_NOTHROW(abstract_jordan_chevalley(g, qv({1, 2, 3, -1})));
}

TEST_CASE("jordan decomposition inside the levi subalgebra") {
    LieAlgebra g = sl2();
    LeviDecomposition ld = levi_decomposition(g);
    QVector e = qv({1, 0, 0}), h = qv({0, 1, 0});

    auto [s1, n1] = jordan_in_levi(g, ld, h);
    CHECK(s1 == h);
    CHECK(vec_is_zero(n1));

    auto [s2, n2] = jordan_in_levi(g, ld, e);
    CHECK(vec_is_zero(s2));
    CHECK(n2 == e);

    auto [s3, n3] = jordan_in_levi(g, ld, vec_add(h, e));
    CHECK(s3 == vec_add(h, e));  // regular semisimple: distinct eigenvalues
    CHECK(vec_is_zero(n3));

    CHECK_THROWS_AS(jordan_in_levi(sl2_semidirect_q2(), levi_decomposition(sl2_semidirect_q2()),
                                   qv({0, 0, 0, 1, 0})),
                    Error);  // not in the levi subalgebra
}

TEST_CASE("jordan decomposition in structure mode uses the adjoint") {
    LieAlgebra g = heisenberg3();
    LeviDecomposition ld = levi_decomposition(g);
    // The levi subalgebra is zero; the only levi element is zero.
    auto [s, n] = jordan_in_levi(g, ld, zero_vector(3));
    CHECK(vec_is_zero(s));
    CHECK(vec_is_zero(n));
}

TEST_CASE("weight split of the nilpotent ideal") {
    LieAlgebra g = sl2_semidirect_q2();
    LeviDecomposition ld = levi_decomposition(g);

    // ad(h) acts invertibly on the ideal: the kernel part vanishes.
    auto [n0, nstar] = weight_split(g, ld, qv({0, 1, 0, 0, 0}));
    CHECK(n0.is_zero());
    CHECK(nstar == ld.nilpotent_ideal.subspace);

    // s = 0 centralizes everything.
    auto [z0, zstar] = weight_split(g, ld, zero_vector(5));
    CHECK(z0 == ld.nilpotent_ideal.subspace);
    CHECK(zstar.is_zero());
}

TEST_CASE("commutator equation") {
    LieAlgebra g = sl2_semidirect_q2();
    LeviDecomposition ld = levi_decomposition(g);
    QVector x = qv({0, 1, 0, 1, 0});  // h + p
    auto [a, r] = split_against_levi(g, ld, x);
    auto [s, n] = jordan_in_levi(g, ld, a);
    auto [n0, nstar] = weight_split(g, ld, s);
    QVector b = solve_commutator_equation(g, x, s, r, nstar);
    CHECK(g.bracket(x, b) == g.bracket(s, r));
    CHECK(b == qv({0, 0, 0, 1, 0}));  // [h+p, p] = [h, p] = p exactly
    CHECK(nstar.contains(b));

    // Zero right-hand side forces b = 0 by uniqueness.
    CHECK(vec_is_zero(solve_commutator_equation(g, x, s, zero_vector(5), nstar)));
}

TEST_CASE("worked decompositions") {
    LieAlgebra g = sl2();
    AbstractJordanPair p1 = abstract_jordan_chevalley(g, qv({1, 0, 0}));
    CHECK(vec_is_zero(p1.semisimple));
    CHECK(p1.nilpotent == qv({1, 0, 0}));

    AbstractJordanPair p2 = abstract_jordan_chevalley(g, qv({1, 1, 0}));
    CHECK(p2.semisimple == qv({1, 1, 0}));
    CHECK(vec_is_zero(p2.nilpotent));

    LieAlgebra sd = sl2_semidirect_q2();
    AbstractJordanPair p3 = abstract_jordan_chevalley(sd, qv({0, 1, 0, 1, 0}));
    CHECK(p3.semisimple == qv({0, 1, 0, 1, 0}));  // h + p is semisimple: b recovers p
    CHECK(vec_is_zero(p3.nilpotent));
    CHECK(p3.internals.b == qv({0, 0, 0, 1, 0}));

    AbstractJordanPair p4 = abstract_jordan_chevalley(sd, qv({1, 0, 0, 1, 0}));
    CHECK(vec_is_zero(p4.semisimple));  // e + p is nilpotent
    CHECK(p4.nilpotent == qv({1, 0, 0, 1, 0}));

    LieAlgebra hz = heisenberg3();
    AbstractJordanPair p5 = abstract_jordan_chevalley(hz, qv({0, 0, 3}));
    CHECK(vec_is_zero(p5.semisimple));  // the derived algebra of heisenberg is central
    CHECK(p5.nilpotent == qv({0, 0, 3}));
}

TEST_CASE("genuinely mixed decompositions") {
    // sl3: commuting semisimple and nilpotent summands that the pipeline
    // must separate. x = E12 + diag(1,1,-2) with [diag, E12] = 0.
    LieAlgebra g3 = sl3();
    QVector x3 = qv({1, 0, 0, 0, 0, 0, 1, 2});  // E12 + h1 + 2 h2
    AbstractJordanPair p3 = abstract_jordan_chevalley(g3, x3);
    CHECK(p3.semisimple == qv({0, 0, 0, 0, 0, 0, 1, 2}));
    CHECK(p3.nilpotent == qv({1, 0, 0, 0, 0, 0, 0, 0}));

    // The semidirect fixture with both weight spaces nontrivial:
    // x = h + v + p decomposes as S = h + p, N = v, because the correction
    // b = p pulls the natural component into the semisimple part while the
    // kernel component v stays nilpotent.
    LieAlgebra g = sl2_semidirect_nat_adj();
    QVector x = qv({0, 1, 0, 1, 0, 0, 1, 0});
    AbstractJordanPair p = abstract_jordan_chevalley(g, x);
    CHECK(p.semisimple == qv({0, 1, 0, 1, 0, 0, 0, 0}));
    CHECK(p.nilpotent == qv({0, 0, 0, 0, 0, 0, 1, 0}));
    CHECK(p.internals.b == qv({0, 0, 0, 1, 0, 0, 0, 0}));
    CHECK(p.internals.n0.dim() == 1);
    CHECK(p.internals.nstar.dim() == 4);
    CHECK(p.internals.n0.contains(qv({0, 0, 0, 0, 0, 0, 1, 0})));

    // Random elements of this fixture mix generically; make sure the suite
    // keeps exercising that path.
    LeviDecomposition ld = levi_decomposition(g);
    std::mt19937_64 rng(103);
    int mixed = 0;
    for (int t = 0; t < 20; ++t) {
        QVector y = random_derived_element(g, rng);
        AbstractJordanPair q = abstract_jordan_chevalley(g, ld, y);
        if (!vec_is_zero(q.semisimple) && !vec_is_zero(q.nilpotent)) ++mixed;
    }
    CHECK(mixed >= 10);
}

TEST_CASE("decomposition of zero") {
    for (const NamedFixture& f : all_fixtures()) {
        INFO(f.name);
        AbstractJordanPair p = abstract_jordan_chevalley(f.algebra, zero_vector(f.algebra.dim()));
        CHECK(vec_is_zero(p.semisimple));
        CHECK(vec_is_zero(p.nilpotent));
    }
}

TEST_CASE("decomposition is homogeneous") {
    LieAlgebra g = sl2_semidirect_q2();
    LeviDecomposition ld = levi_decomposition(g);
    std::mt19937_64 rng(89);
    for (int t = 0; t < 10; ++t) {
        QVector x = random_derived_element(g, rng);
        AbstractJordanPair p = abstract_jordan_chevalley(g, ld, x);
        for (Rational lambda : {Rational(3), Rational(-1, 2)}) {
            AbstractJordanPair q = abstract_jordan_chevalley(g, ld, vec_scale(lambda, x));
            CHECK(q.semisimple == vec_scale(lambda, p.semisimple));
            CHECK(q.nilpotent == vec_scale(lambda, p.nilpotent));
        }
    }
}

TEST_CASE("decomposition invariants on random samples") {
    std::mt19937_64 rng(97);
    for (const NamedFixture& f : all_fixtures()) {
        INFO(f.name);
        const LieAlgebra& g = f.algebra;
        LeviDecomposition ld = levi_decomposition(g);
        Subspace derived = g.derived_algebra().subspace;
        for (int t = 0; t < 10; ++t) {
            QVector x = random_derived_element(g, rng);
            AbstractJordanPair p = abstract_jordan_chevalley(g, ld, x);
            CHECK(vec_add(p.semisimple, p.nilpotent) == x);
            CHECK(vec_is_zero(g.bracket(p.semisimple, p.nilpotent)));
            CHECK(derived.contains(p.semisimple));
            CHECK(derived.contains(p.nilpotent));
            if (g.matrix_mode()) {
                JordanPair mp = matrix_jordan_chevalley(g.realize(x));
                CHECK(g.realize(p.semisimple) == mp.semisimple);
                CHECK(g.realize(p.nilpotent) == mp.nilpotent);
            } else {
                CHECK(is_semisimple_matrix(g.ad(p.semisimple)));
                CHECK(is_nilpotent_matrix(g.ad(p.nilpotent)));
            }
        }
    }
}

TEST_CASE("decomposition is independent of the basis ordering") {
    // Reordering the basis changes the radical's echelon section and hence
    // the lifted Levi subalgebra, but uniqueness forces the same (S, N) for
    // the same element. Both algebra modes are covered.
    struct Case {
        LieAlgebra algebra;
        std::vector<std::size_t> perm;
    };
    std::vector<Case> cases;
    cases.push_back({gl2(), {3, 0, 2, 1}});
    cases.push_back({sl2_semidirect_q2(), {4, 2, 0, 3, 1}});
    cases.push_back({sl2_plus_heisenberg(), {5, 3, 1, 0, 4, 2}});
    cases.push_back({sl2_semidirect_nat_adj(), {7, 5, 3, 1, 6, 0, 2, 4}});

    std::mt19937_64 rng(107);
    for (const Case& c : cases) {
        LieAlgebra moved = permuted_copy(c.algebra, c.perm);
        LeviDecomposition ld = levi_decomposition(c.algebra);
        LeviDecomposition ld_moved = levi_decomposition(moved);
        for (int t = 0; t < 10; ++t) {
            QVector x = random_derived_element(c.algebra, rng);
            AbstractJordanPair p = abstract_jordan_chevalley(c.algebra, ld, x);
            AbstractJordanPair q =
                abstract_jordan_chevalley(moved, ld_moved, permute_coords(x, c.perm));
            CHECK(unpermute_coords(q.semisimple, c.perm) == p.semisimple);
            CHECK(unpermute_coords(q.nilpotent, c.perm) == p.nilpotent);
        }
    }
}

TEST_CASE("coordinates are stable under realization conjugation") {
    // Conjugating every basis matrix by a fixed invertible matrix is an
    // isomorphism fixing coordinates, so the abstract parts cannot move.
    LieAlgebra g = sl2_semidirect_q2();
    std::mt19937_64 rng(101);
    QMatrix p = random_invertible(3, rng);
    QMatrix pinv = inverse(p);
    std::vector<QMatrix> conj;
    for (const QMatrix& m : g.realization_basis()) conj.push_back(p * m * pinv);
    LieAlgebra gc = LieAlgebra::from_matrices(conj);

    for (int t = 0; t < 10; ++t) {
        QVector x = random_derived_element(g, rng);
        AbstractJordanPair orig = abstract_jordan_chevalley(g, x);
        AbstractJordanPair moved = abstract_jordan_chevalley(gc, x);
        CHECK(moved.semisimple == orig.semisimple);
        CHECK(moved.nilpotent == orig.nilpotent);
        CHECK(gc.realize(moved.semisimple) == p * g.realize(orig.semisimple) * pinv);
    }
}

TEST_CASE("verification accepts correct pairs") {
    LieAlgebra g = sl2_semidirect_q2();
    AbstractJordanPair p = abstract_jordan_chevalley(g, qv({0, 1, 0, 1, 0}));
    std::vector<Representation> reps = {Representation::adjoint(g), Representation::natural(g),
                                        Representation::parse(g, "tensor(natural,natural)")};
    VerifyReport report = verify_decomposition(g, p, reps);
    CHECK(report.all_ok());
    CHECK(report.sum_ok);
    CHECK(report.commute_ok);
    CHECK(report.membership_ok);
    CHECK(report.projected_operator_invertible);
    REQUIRE(report.reps.size() == 3);
    for (const RepCheckReport& r : report.reps) {
        INFO(r.descriptor);
        CHECK(r.all_ok());
    }
}

TEST_CASE("verification rejects corrupted pairs") {
    LieAlgebra g = sl2();
    AbstractJordanPair p = abstract_jordan_chevalley(g, qv({1, 1, 0}));  // S = h + e, N = 0
    std::vector<Representation> reps = {Representation::natural(g)};

    AbstractJordanPair swapped = p;
    std::swap(swapped.semisimple, swapped.nilpotent);
    VerifyReport r1 = verify_decomposition(g, swapped, reps);
    CHECK_FALSE(r1.all_ok());
    CHECK(r1.sum_ok);  // the sum still matches; the parts are just wrong
    CHECK_FALSE(r1.reps[0].all_ok());

    AbstractJordanPair shifted = p;
    shifted.semisimple = vec_add(shifted.semisimple, qv({1, 0, 0}));
    VerifyReport r2 = verify_decomposition(g, shifted, reps);
    CHECK_FALSE(r2.all_ok());
    CHECK_FALSE(r2.sum_ok);
}

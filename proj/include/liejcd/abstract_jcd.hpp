#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "liejcd/levi.hpp"
#include "liejcd/lie_algebra.hpp"
#include "liejcd/reps.hpp"
#include "liejcd/subspace.hpp"

namespace liejcd {

/// Intermediate data of the decomposition pipeline: x = a + r with a in the
/// levi subalgebra and r in the nilpotent ideal; a = s + n inside the levi
/// subalgebra; n0 and nstar the kernel and image of ad(s) on the nilpotent
/// ideal; b the unique solution of [x, b] = [s, r] in nstar.
struct PipelineInternals {
    QVector a, r, s, n, b;
    Subspace n0, nstar;
};

/// x = semisimple + nilpotent with both parts in the derived algebra,
/// bracket(semisimple, nilpotent) = 0, and every finite-dimensional
/// representation mapping the parts onto the matrix Jordan-Chevalley parts
/// of the image of x.
struct AbstractJordanPair {
    QVector element;
    QVector semisimple;
    QVector nilpotent;
    PipelineInternals internals;
};

/// x = a + r with a in the levi subalgebra, r in the nilpotent ideal.
/// Requires x in the derived algebra; throws NotInDerivedAlgebra with the
/// nonzero reduction residual otherwise.
std::pair<QVector, QVector> split_against_levi(const LieAlgebra& g, const LeviDecomposition& ld,
                                               const QVector& x);

/// Jordan decomposition a = s + n inside the levi subalgebra: the matrix
/// decomposition of the realization (matrix mode) or of ad(a) (structure
/// mode), pulled back through the injective realization of the subalgebra.
std::pair<QVector, QVector> jordan_in_levi(const LieAlgebra& g, const LeviDecomposition& ld,
                                           const QVector& a);

/// Kernel and image of ad(s) restricted to the nilpotent ideal. The two are
/// verified to be complementary inside it.
std::pair<Subspace, Subspace> weight_split(const LieAlgebra& g, const LeviDecomposition& ld,
                                           const QVector& s);

/// The unique b in nstar with [x, b] = [s, r]. Solvability and uniqueness
/// are theorem-guaranteed; violations throw InternalInvariantViolation.
QVector solve_commutator_equation(const LieAlgebra& g, const QVector& x, const QVector& s,
                                  const QVector& r, const Subspace& nstar);

/// Full pipeline with a precomputed Levi decomposition of g.
AbstractJordanPair abstract_jordan_chevalley(const LieAlgebra& g, const LeviDecomposition& ld,
                                             const QVector& x);
/// Full pipeline; computes the Levi decomposition internally.
AbstractJordanPair abstract_jordan_chevalley(const LieAlgebra& g, const QVector& x);

struct RepCheckReport {
    std::string descriptor;
    bool sum_ok = false;
    bool commute_ok = false;
    bool nilpotent_ok = false;
    bool semisimple_ok = false;
    bool nilpotent_sampling_ok = false;   // random b in n: image of n + b nilpotent
    bool semisimple_sampling_ok = false;  // random b in nstar: image of s + b semisimple

    bool all_ok() const {
        return sum_ok && commute_ok && nilpotent_ok && semisimple_ok && nilpotent_sampling_ok &&
               semisimple_sampling_ok;
    }
};

struct VerifyReport {
    bool sum_ok = false;
    bool commute_ok = false;
    bool membership_ok = false;
    bool projected_operator_invertible = false;  // b -> proj_nstar [x, b] on nstar
    std::vector<RepCheckReport> reps;

    bool all_ok() const {
        if (!(sum_ok && commute_ok && membership_ok && projected_operator_invertible)) return false;
        for (const RepCheckReport& r : reps)
            if (!r.all_ok()) return false;
        return true;
    }
};

/// Re-checks a decomposition: algebraic invariants, compatibility under each
/// given representation, and sampled nilpotency/semisimplicity statements
/// over the nilpotent ideal and nstar. Failures are report entries, never
/// exceptions.
VerifyReport verify_decomposition(const LieAlgebra& g, const AbstractJordanPair& pair,
                                  const std::vector<Representation>& reps, std::size_t samples = 20,
                                  std::uint64_t seed = 1);

}  // namespace liejcd

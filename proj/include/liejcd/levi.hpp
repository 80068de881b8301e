#pragma once

#include "liejcd/lie_algebra.hpp"
#include "liejcd/subspace.hpp"

namespace liejcd {

/// g = levi (+) radical as vector spaces, with levi a bracket-closed
/// subalgebra whose own Killing form is nondegenerate, and
/// nilpotent_ideal = [g, radical]. The derived algebra splits as
/// levi (+) nilpotent_ideal.
struct LeviDecomposition {
    Subspace levi;
    Ideal radical;
    Ideal nilpotent_ideal;
};

/// Computes a Levi subalgebra by lifting a basis of g/radical and correcting
/// the lift along the radical's derived series, one linear solve per step so
/// that bracket closure holds modulo the next series member. Deterministic
/// for a fixed basis ordering. All LeviDecomposition invariants are verified
/// before returning; a failure throws InternalInvariantViolation.
LeviDecomposition levi_decomposition(const LieAlgebra& g);

}  // namespace liejcd

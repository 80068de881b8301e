#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include "liejcd/qmatrix.hpp"
#include "liejcd/rational.hpp"
#include "liejcd/subspace.hpp"

namespace liejcd {

class LieAlgebra;

/// Bracket-stable subspace of a parent algebra. The parent pointer is
/// non-owning; keep the algebra alive while the ideal is in use.
struct Ideal {
    Subspace subspace;
    const LieAlgebra* parent = nullptr;

    std::size_t dim() const { return subspace.dim(); }
    bool contains(const QVector& v) const { return subspace.contains(v); }
};

/// Quotient by an ideal, together with the section that maps quotient basis
/// vector l back to the ambient coordinate section[l] (a non-pivot coordinate
/// of the ideal's RREF basis).
struct QuotientAlgebra;

/// Finite-dimensional Lie algebra over Q, stored as structure constants on a
/// fixed basis. Matrix-mode algebras additionally carry the realizing
/// matrices. Immutable after construction; construction validates
/// antisymmetry, the Jacobi identity on all basis triples, and (matrix mode)
/// that commutators of the realization re-expand exactly by the constants.
class LieAlgebra {
public:
    /// Span of linearly independent square matrices, closed under commutator.
    /// Errors: LinearlyDependentBasis; NotClosed with the offending pair.
    static LieAlgebra from_matrices(const std::vector<QMatrix>& mats);

    /// Structure-constant presentation: entries (i, j, c) with i < j give
    /// [b_i, b_j] = c; antisymmetry fills the rest.
    static LieAlgebra from_structure_constants(
        std::size_t dim, const std::vector<std::tuple<std::size_t, std::size_t, QVector>>& brackets);

    std::size_t dim() const { return dim_; }
    bool matrix_mode() const { return !realization_.empty(); }
    std::size_t ambient_dim() const;
    const std::vector<QMatrix>& realization_basis() const { return realization_; }

    /// [b_i, b_j] in basis coordinates.
    const QVector& structure(std::size_t i, std::size_t j) const { return c_[i * dim_ + j]; }

    QVector bracket(const QVector& x, const QVector& y) const;
    /// Matrix of y -> [x, y] in the algebra basis.
    QMatrix ad(const QVector& x) const;
    /// Matrix-mode image of a coordinate vector.
    QMatrix realize(const QVector& x) const;

    Ideal derived_algebra() const;
    /// Symmetric Gram matrix k(i, j) = trace(ad b_i ad b_j).
    QMatrix killing_gram() const;
    /// Killing-orthogonal complement of the derived algebra. Certified: the
    /// result is solvable and the quotient Killing form is nondegenerate.
    Ideal solvable_radical() const;
    Ideal center() const;
    bool is_solvable() const;

    /// Span of [a_i, b_j] over basis pairs of the two subspaces.
    Subspace bracket_span(const Subspace& a, const Subspace& b) const;
    bool is_ideal(const Subspace& s) const;

    /// The subalgebra on a bracket-closed subspace, with structure constants
    /// in the subspace's RREF basis; inherits the realization in matrix mode.
    LieAlgebra subalgebra(const Subspace& s) const;
    QuotientAlgebra quotient(const Ideal& ideal) const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_ && a.realization_ == b.realization_;
    }

private:
    LieAlgebra(std::size_t dim, std::vector<QVector> table, std::vector<QMatrix> realization);
    void validate() const;

    std::size_t dim_ = 0;
    std::vector<QVector> c_;  // c_[i * dim + j] = coordinates of [b_i, b_j]
    std::vector<QMatrix> realization_;
    std::size_t ambient_ = 0;
};

struct QuotientAlgebra {
    LieAlgebra algebra;
    std::vector<std::size_t> section;
};

/// Completes a matrix span to the least Lie-closed span containing it, by
/// iterated adjunction of commutators; returns the canonical RREF basis.
std::vector<QMatrix> lie_closure(const std::vector<QMatrix>& mats);

}  // namespace liejcd

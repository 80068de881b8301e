#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liejcd/qmatrix.hpp"
#include "liejcd/rational.hpp"

namespace liejcd {

/// Rational vector subspace held as a canonical reduced-row-echelon basis.
/// Two subspaces are equal iff their stored bases are equal entrywise.
class Subspace {
public:
    Subspace() = default;
    /// The zero subspace of Q^ambient.
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span_of_rows(const QMatrix& rows);
    static Subspace span(const std::vector<QVector>& vectors, std::size_t ambient);
    static Subspace full(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    /// dim x ambient matrix in RREF, rows are the basis.
    const QMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    QVector basis_vector(std::size_t k) const { return basis_.row(k); }

    bool contains(const QVector& v) const;
    /// Coordinates of v against the RREF basis, or nullopt when v is outside.
    std::optional<QVector> coordinates(const QVector& v) const;
    /// v minus its projection onto this subspace along the non-pivot coordinates;
    /// zero exactly when v is a member. Linear in v.
    QVector reduce(const QVector& v) const;
    /// Rebuild an ambient vector from RREF-basis coordinates.
    QVector from_coordinates(const QVector& coords) const;

    bool is_zero() const { return dim() == 0; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    QMatrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& s1, const Subspace& s2);
Subspace subspace_intersect(const Subspace& s1, const Subspace& s2);
bool subspace_leq(const Subspace& s1, const Subspace& s2);

}  // namespace liejcd

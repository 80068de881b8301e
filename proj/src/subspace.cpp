#include "liejcd/subspace.hpp"

#include "liejcd/error.hpp"
#include "liejcd/exact_linalg.hpp"

namespace liejcd {

Subspace Subspace::span_of_rows(const QMatrix& rows) {
    Subspace s;
    s.ambient_ = rows.cols();
    RrefResult r = rref(rows);
    QMatrix basis(r.rank, rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) basis.at(i, j) = r.reduced.at(i, j);
    s.basis_ = std::move(basis);
    s.pivots_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::span(const std::vector<QVector>& vectors, std::size_t ambient) {
    if (vectors.empty()) return Subspace(ambient);
    for (const auto& v : vectors)
        if (v.size() != ambient) throw Error(ErrorCode::Validation, "span vector length mismatch");
    return span_of_rows(QMatrix::from_rows(vectors));
}

Subspace Subspace::full(std::size_t ambient) { return span_of_rows(QMatrix::identity(ambient)); }

QVector Subspace::reduce(const QVector& v) const {
    if (v.size() != ambient_) throw Error(ErrorCode::Validation, "ambient dimension mismatch");
    QVector r = v;
    for (std::size_t k = 0; k < dim(); ++k) {
        const Rational& c = r[pivots_[k]];
        if (c.is_zero()) continue;
        Rational coeff = c;  // r[pivot_k] zeroed by the subtraction below
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!basis_.at(k, j).is_zero()) r[j] -= coeff * basis_.at(k, j);
    }
    return r;
}

bool Subspace::contains(const QVector& v) const { return vec_is_zero(reduce(v)); }

std::optional<QVector> Subspace::coordinates(const QVector& v) const {
    if (v.size() != ambient_) throw Error(ErrorCode::Validation, "ambient dimension mismatch");
    if (!contains(v)) return std::nullopt;
    QVector c(dim());
    for (std::size_t k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
    return c;
}

QVector Subspace::from_coordinates(const QVector& coords) const {
    if (coords.size() != dim()) throw Error(ErrorCode::Validation, "coordinate length mismatch");
    QVector v(ambient_);
    for (std::size_t k = 0; k < dim(); ++k)
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!basis_.at(k, j).is_zero()) v[j] += coords[k] * basis_.at(k, j);
    return v;
}

Subspace subspace_sum(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient_dim() != s2.ambient_dim())
        throw Error(ErrorCode::Validation, "subspace sum: ambient dimension mismatch");
    return Subspace::span_of_rows(QMatrix::vcat(s1.basis(), s2.basis()));
}

Subspace subspace_intersect(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient_dim() != s2.ambient_dim())
        throw Error(ErrorCode::Validation, "subspace intersect: ambient dimension mismatch");
    // Over Q the dot product is anisotropic, so S = ker(N) for N a basis of
    // ker(basis); stacking both equation sets cuts out the intersection.
    QMatrix n1 = kernel(s1.basis()).basis();
    QMatrix n2 = kernel(s2.basis()).basis();
    return kernel(QMatrix::vcat(n1, n2));
}

bool subspace_leq(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient_dim() != s2.ambient_dim())
        throw Error(ErrorCode::Validation, "subspace comparison: ambient dimension mismatch");
    for (std::size_t k = 0; k < s1.dim(); ++k)
        if (!s2.contains(s1.basis_vector(k))) return false;
    return true;
}

}  // namespace liejcd

#include "liejcd/lie_algebra.hpp"

#include "liejcd/error.hpp"
#include "liejcd/exact_linalg.hpp"

namespace liejcd {

namespace {

/// Columns are the flattened matrices; solving against it expresses a matrix
/// in the span of the family.
QMatrix flattened_columns(const std::vector<QMatrix>& mats) {
    const std::size_t n2 = mats.empty() ? 0 : mats[0].rows() * mats[0].cols();
    QMatrix cols(n2, mats.size());
    for (std::size_t j = 0; j < mats.size(); ++j) {
        QVector f = mats[j].flatten();
        for (std::size_t i = 0; i < n2; ++i) cols.at(i, j) = f[i];
    }
    return cols;
}

void require_square_family(const std::vector<QMatrix>& mats) {
    if (mats.empty()) throw Error(ErrorCode::Validation, "matrix family must be non-empty");
    const std::size_t n = mats[0].rows();
    for (const QMatrix& m : mats)
        if (!m.is_square() || m.rows() != n)
            throw Error(ErrorCode::Validation, "matrix family must be square matrices of equal size");
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<QVector> table, std::vector<QMatrix> realization)
    : dim_(dim), c_(std::move(table)), realization_(std::move(realization)) {
    if (!realization_.empty()) ambient_ = realization_[0].rows();
    validate();
}

void LieAlgebra::validate() const {
    if (c_.size() != dim_ * dim_)
        throw Error(ErrorCode::InternalInvariantViolation, "structure table has wrong shape");
    for (const QVector& v : c_)
        if (v.size() != dim_)
            throw Error(ErrorCode::InternalInvariantViolation, "structure vector has wrong length");
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (structure(i, j) != vec_scale(Rational(-1), structure(j, i)))
                throw Error(ErrorCode::Validation, "structure constants are not antisymmetric");
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = j + 1; k < dim_; ++k) {
                QVector e_i = zero_vector(dim_), e_j = zero_vector(dim_), e_k = zero_vector(dim_);
                e_i[i] = 1; e_j[j] = 1; e_k[k] = 1;
                QVector s = vec_add(vec_add(bracket(e_i, structure(j, k)), bracket(e_j, structure(k, i))),
                                    bracket(e_k, structure(i, j)));
                if (!vec_is_zero(s))
                    throw Error(ErrorCode::Validation,
                                "jacobi identity fails at basis triple (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ", " + std::to_string(k) + ")");
            }
    if (!realization_.empty()) {
        if (realization_.size() != dim_)
            throw Error(ErrorCode::InternalInvariantViolation, "realization size mismatch");
        for (const QMatrix& m : realization_)
            if (!m.is_square() || m.rows() != ambient_)
                throw Error(ErrorCode::InternalInvariantViolation, "realization matrices have mixed sizes");
        if (rank(flattened_columns(realization_)) != dim_)
            throw Error(ErrorCode::LinearlyDependentBasis, "realization matrices are linearly dependent");
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                if (QMatrix::commutator(realization_[i], realization_[j]) != realize(structure(i, j)))
                    throw Error(ErrorCode::InternalInvariantViolation,
                                "structure constants disagree with matrix commutators");
    }
}

LieAlgebra LieAlgebra::from_matrices(const std::vector<QMatrix>& mats) {
    require_square_family(mats);
    const std::size_t d = mats.size();
    QMatrix cols = flattened_columns(mats);
    if (rank(cols) != d)
        throw Error(ErrorCode::LinearlyDependentBasis, "matrix basis is linearly dependent");
    std::vector<QVector> table(d * d, zero_vector(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            QMatrix br = QMatrix::commutator(mats[i], mats[j]);
            auto coords = solve_linear(cols, br.flatten());
            if (!coords) throw_not_closed(i, j);
            table[i * d + j] = *coords;
            table[j * d + i] = vec_scale(Rational(-1), *coords);
        }
    return LieAlgebra(d, std::move(table), mats);
}

LieAlgebra LieAlgebra::from_structure_constants(
    std::size_t dim, const std::vector<std::tuple<std::size_t, std::size_t, QVector>>& brackets) {
    std::vector<QVector> table(dim * dim, zero_vector(dim));
    for (const auto& [i, j, c] : brackets) {
        if (i >= j || j >= dim)
            throw Error(ErrorCode::Validation, "bracket entries must have i < j < dim");
        if (c.size() != dim)
            throw Error(ErrorCode::Validation, "bracket coordinate vector has wrong length");
        table[i * dim + j] = c;
        table[j * dim + i] = vec_scale(Rational(-1), c);
    }
    return LieAlgebra(dim, std::move(table), {});
}

std::size_t LieAlgebra::ambient_dim() const {
    if (!matrix_mode())
        throw Error(ErrorCode::NaturalRequiresMatrixMode, "algebra has no matrix realization");
    return ambient_;
}

QVector LieAlgebra::bracket(const QVector& x, const QVector& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw Error(ErrorCode::Validation, "bracket operands must have the algebra dimension");
    QVector out = zero_vector(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Rational f = x[i] * y[j];
            const QVector& c = structure(i, j);
            for (std::size_t l = 0; l < dim_; ++l)
                if (!c[l].is_zero()) out[l] += f * c[l];
        }
    }
    return out;
}

QMatrix LieAlgebra::ad(const QVector& x) const {
    if (x.size() != dim_) throw Error(ErrorCode::Validation, "ad operand must have the algebra dimension");
    QMatrix a(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        // column j = [x, b_j] = sum_i x_i c(i, j)
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            const QVector& c = structure(i, j);
            for (std::size_t l = 0; l < dim_; ++l)
                if (!c[l].is_zero()) a.at(l, j) += x[i] * c[l];
        }
    }
    return a;
}

QMatrix LieAlgebra::realize(const QVector& x) const {
    if (!matrix_mode())
        throw Error(ErrorCode::NaturalRequiresMatrixMode, "algebra has no matrix realization");
    if (x.size() != dim_) throw Error(ErrorCode::Validation, "realize operand must have the algebra dimension");
    QMatrix m(ambient_, ambient_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        m += x[i] * realization_[i];
    }
    return m;
}

Ideal LieAlgebra::derived_algebra() const {
    std::vector<QVector> rows;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) rows.push_back(structure(i, j));
    return {Subspace::span(rows, dim_), this};
}

QMatrix LieAlgebra::killing_gram() const {
    std::vector<QMatrix> ads;
    ads.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        QVector e = zero_vector(dim_);
        e[i] = 1;
        ads.push_back(ad(e));
    }
    QMatrix k(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j) {
            Rational t(0);
            for (std::size_t p = 0; p < dim_; ++p)
                for (std::size_t q = 0; q < dim_; ++q) {
                    if (ads[i].at(p, q).is_zero() || ads[j].at(q, p).is_zero()) continue;
                    t += ads[i].at(p, q) * ads[j].at(q, p);
                }
            k.at(i, j) = t;
            k.at(j, i) = t;
        }
    return k;
}

Ideal LieAlgebra::solvable_radical() const {
    Ideal derived = derived_algebra();
    // Cartan criterion: the radical is the Killing-orthogonal complement of
    // the derived algebra.
    QMatrix m = derived.subspace.basis() * killing_gram();
    Subspace rad = kernel(m);

    if (!is_ideal(rad))
        throw Error(ErrorCode::InternalInvariantViolation, "computed radical is not an ideal");
    Subspace series = rad;
    for (std::size_t step = 0; step <= dim_ && !series.is_zero(); ++step) {
        Subspace next = bracket_span(series, series);
        if (next == series)
            throw Error(ErrorCode::InternalInvariantViolation, "computed radical is not solvable");
        series = next;
    }
    Ideal rad_ideal{rad, this};
    QuotientAlgebra q = quotient(rad_ideal);
    if (rank(q.algebra.killing_gram()) != q.algebra.dim())
        throw Error(ErrorCode::InternalInvariantViolation,
                    "killing form degenerate on the quotient by the radical");
    return rad_ideal;
}

Ideal LieAlgebra::center() const {
    QMatrix stacked(0, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        QVector e = zero_vector(dim_);
        e[i] = 1;
        stacked = QMatrix::vcat(stacked, ad(e));
    }
    return {kernel(stacked), this};
}

bool LieAlgebra::is_solvable() const {
    Subspace series = Subspace::full(dim_);
    for (std::size_t step = 0; step <= dim_; ++step) {
        if (series.is_zero()) return true;
        Subspace next = bracket_span(series, series);
        if (next == series) return false;
        series = next;
    }
    return series.is_zero();
}

Subspace LieAlgebra::bracket_span(const Subspace& a, const Subspace& b) const {
    if (a.ambient_dim() != dim_ || b.ambient_dim() != dim_)
        throw Error(ErrorCode::Validation, "bracket_span operands live in the wrong space");
    std::vector<QVector> rows;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            rows.push_back(bracket(a.basis_vector(i), b.basis_vector(j)));
    return Subspace::span(rows, dim_);
}

bool LieAlgebra::is_ideal(const Subspace& s) const {
    return subspace_leq(bracket_span(Subspace::full(dim_), s), s);
}

LieAlgebra LieAlgebra::subalgebra(const Subspace& s) const {
    if (s.ambient_dim() != dim_)
        throw Error(ErrorCode::Validation, "subalgebra subspace lives in the wrong space");
    const std::size_t k = s.dim();
    std::vector<QVector> table(k * k, zero_vector(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            auto coords = s.coordinates(bracket(s.basis_vector(i), s.basis_vector(j)));
            if (!coords) throw Error(ErrorCode::Validation, "subspace is not bracket-closed");
            table[i * k + j] = *coords;
            table[j * k + i] = vec_scale(Rational(-1), *coords);
        }
    std::vector<QMatrix> sub_real;
    if (matrix_mode())
        for (std::size_t i = 0; i < k; ++i) sub_real.push_back(realize(s.basis_vector(i)));
    return LieAlgebra(k, std::move(table), std::move(sub_real));
}

QuotientAlgebra LieAlgebra::quotient(const Ideal& ideal) const {
    if (ideal.parent != this) throw Error(ErrorCode::Validation, "ideal belongs to a different algebra");
    if (!is_ideal(ideal.subspace)) throw Error(ErrorCode::Validation, "subspace is not an ideal");
    std::vector<bool> is_pivot(dim_, false);
    for (std::size_t p : ideal.subspace.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> section;
    for (std::size_t c = 0; c < dim_; ++c)
        if (!is_pivot[c]) section.push_back(c);
    const std::size_t k = section.size();
    std::vector<QVector> table(k * k, zero_vector(k));
    for (std::size_t l = 0; l < k; ++l)
        for (std::size_t m = l + 1; m < k; ++m) {
            QVector red = ideal.subspace.reduce(structure(section[l], section[m]));
            QVector c(k);
            for (std::size_t t = 0; t < k; ++t) c[t] = red[section[t]];
            table[m * k + l] = vec_scale(Rational(-1), c);
            table[l * k + m] = std::move(c);
        }
    return {LieAlgebra(k, std::move(table), {}), std::move(section)};
}

std::vector<QMatrix> lie_closure(const std::vector<QMatrix>& mats) {
    require_square_family(mats);
    const std::size_t n = mats[0].rows();
    std::vector<QVector> flats;
    for (const QMatrix& m : mats) flats.push_back(m.flatten());
    Subspace sp = Subspace::span(flats, n * n);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<QMatrix> basis;
        for (std::size_t i = 0; i < sp.dim(); ++i)
            basis.push_back(QMatrix::from_flat(n, n, sp.basis_vector(i)));
        std::vector<QVector> added;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                QVector f = QMatrix::commutator(basis[i], basis[j]).flatten();
                if (!sp.contains(f)) added.push_back(std::move(f));
            }
        if (!added.empty()) {
            for (std::size_t i = 0; i < sp.dim(); ++i) added.push_back(sp.basis_vector(i));
            sp = Subspace::span(added, n * n);
            grew = true;
        }
    }
    std::vector<QMatrix> out;
    for (std::size_t i = 0; i < sp.dim(); ++i)
        out.push_back(QMatrix::from_flat(n, n, sp.basis_vector(i)));
    return out;
}

}  // namespace liejcd

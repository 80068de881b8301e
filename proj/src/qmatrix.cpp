#include "liejcd/qmatrix.hpp"

#include <ostream>

#include "liejcd/error.hpp"

namespace liejcd {

namespace {
void check_same_shape(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::Validation, "matrix shape mismatch");
}
}  // namespace

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    QMatrix m(n, n);
    m.at(i, j) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
    if (rows.empty()) return QMatrix();
    QMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw Error(ErrorCode::Validation, "ragged rows in matrix construction");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QVector QMatrix::row(std::size_t i) const {
    QVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

QVector QMatrix::col(std::size_t j) const {
    QVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void QMatrix::set_row(std::size_t i, const QVector& v) {
    if (v.size() != cols_) throw Error(ErrorCode::Validation, "row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Rational QMatrix::trace() const {
    if (!is_square()) throw Error(ErrorCode::Validation, "trace of non-square matrix");
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool QMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool QMatrix::is_upper_triangular() const {
    if (!is_square()) return false;
    for (std::size_t i = 1; i < rows_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

QVector QMatrix::flatten() const { return e_; }

QMatrix QMatrix::from_flat(std::size_t rows, std::size_t cols, const QVector& flat) {
    if (flat.size() != rows * cols)
        throw Error(ErrorCode::Validation, "flat vector length mismatch");
    QMatrix m(rows, cols);
    m.e_ = flat;
    return m;
}

QMatrix QMatrix::operator-() const {
    QMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
    check_same_shape(*this, o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
    check_same_shape(*this, o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::Validation, "matrix product shape mismatch");
    QMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

QMatrix operator*(const Rational& c, const QMatrix& a) {
    QMatrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = c * a.e_[k];
    return r;
}

QVector QMatrix::mul_vec(const QVector& x) const {
    if (x.size() != cols_) throw Error(ErrorCode::Validation, "matrix-vector shape mismatch");
    QVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * x[j];
    return r;
}

QMatrix QMatrix::commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix QMatrix::kron(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows_; ++k)
                for (std::size_t l = 0; l < b.cols_; ++l)
                    r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

QMatrix QMatrix::hcat(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_) throw Error(ErrorCode::Validation, "hcat row mismatch");
    QMatrix r(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

QMatrix QMatrix::vcat(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ == 0) return b;
    if (b.rows_ == 0) return a;
    if (a.cols_ != b.cols_) throw Error(ErrorCode::Validation, "vcat column mismatch");
    QMatrix r(a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
    return r;
}

QMatrix QMatrix::block_diag(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return r;
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? " [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
        os << "]" << (i + 1 < m.rows() ? "\n" : "");
    }
    return os << "]";
}

}  // namespace liejcd

#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "liejcd/rational.hpp"

namespace liejcd {

/// Dense rational matrix, row-major. Carrier for algebra elements and operators.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<QVector>& rows);
    /// Elementary matrix unit E_ij (1-based nowhere: i, j are 0-based indices).
    static QMatrix unit(std::size_t n, std::size_t i, std::size_t j);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    QVector row(std::size_t i) const;
    QVector col(std::size_t j) const;
    void set_row(std::size_t i, const QVector& v);

    QMatrix transpose() const;
    Rational trace() const;
    bool is_zero() const;
    bool is_upper_triangular() const;
    /// Row-major flattening, used to treat matrices as coordinate vectors.
    QVector flatten() const;
    static QMatrix from_flat(std::size_t rows, std::size_t cols, const QVector& flat);

    QMatrix operator-() const;
    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    friend QMatrix operator+(QMatrix a, const QMatrix& b) { a += b; return a; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { a -= b; return a; }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const Rational& c, const QMatrix& a);
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    QVector mul_vec(const QVector& x) const;
    /// [a, b] = ab - ba.
    static QMatrix commutator(const QMatrix& a, const QMatrix& b);
    /// Kronecker product.
    static QMatrix kron(const QMatrix& a, const QMatrix& b);
    /// Horizontal concatenation [a | b].
    static QMatrix hcat(const QMatrix& a, const QMatrix& b);
    /// Vertical concatenation.
    static QMatrix vcat(const QMatrix& a, const QMatrix& b);
    /// Block-diagonal embedding.
    static QMatrix block_diag(const QMatrix& a, const QMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> e_;
};

std::ostream& operator<<(std::ostream& os, const QMatrix& m);

}  // namespace liejcd

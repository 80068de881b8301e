#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "liejcd/qmatrix.hpp"
#include "liejcd/rational.hpp"

namespace liejcd {

/// Univariate polynomial over the rationals, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient list.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(QVector coeffs);
    QPoly(std::initializer_list<Rational> coeffs);

    static QPoly constant(const Rational& c) { return QPoly(QVector{c}); }
    /// The monomial t.
    static QPoly t() { return QPoly(QVector{Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& leading() const;
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const QVector& coeffs() const { return c_; }
    bool is_monic() const { return !is_zero() && leading().is_one(); }

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const Rational& c, const QPoly& a);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    QPoly derivative() const;
    QPoly make_monic() const;
    Rational eval(const Rational& x) const;
    /// Horner evaluation at a square matrix; constant term contributes c*I.
    QMatrix eval(const QMatrix& a) const;

private:
    void strip();
    QVector c_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<QPoly, QPoly> poly_divmod(const QPoly& num, const QPoly& den);
/// Monic gcd (Euclid); gcd(0, 0) = 0.
QPoly poly_gcd(QPoly a, QPoly b);
QPoly poly_lcm(const QPoly& a, const QPoly& b);
/// Monic polynomial with the same roots as p, each simple: p / gcd(p, p').
QPoly squarefree_part(const QPoly& p);
bool is_squarefree(const QPoly& p);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
QPoly poly_inverse_mod(const QPoly& a, const QPoly& m);
QPoly poly_mod(const QPoly& a, const QPoly& m);
bool poly_divides(const QPoly& d, const QPoly& p);

std::ostream& operator<<(std::ostream& os, const QPoly& p);

}  // namespace liejcd

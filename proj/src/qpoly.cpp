#include "liejcd/qpoly.hpp"

#include <ostream>

#include "liejcd/error.hpp"

namespace liejcd {

QPoly::QPoly(QVector coeffs) : c_(std::move(coeffs)) { strip(); }

QPoly::QPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { strip(); }

void QPoly::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& QPoly::leading() const {
    if (is_zero()) throw Error(ErrorCode::Validation, "leading coefficient of zero polynomial");
    return c_.back();
}

QPoly QPoly::operator-() const {
    QVector r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return QPoly(std::move(r));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    QVector r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    QVector r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return QPoly(std::move(r));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QVector r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(r));
}

QPoly operator*(const Rational& c, const QPoly& a) {
    QVector r(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = c * a.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    QVector r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::make_monic() const {
    if (is_zero()) throw Error(ErrorCode::Validation, "cannot normalize zero polynomial");
    return leading().inv() * *this;
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

QMatrix QPoly::eval(const QMatrix& a) const {
    if (!a.is_square()) throw Error(ErrorCode::Validation, "polynomial evaluation needs a square matrix");
    QMatrix acc(a.rows(), a.cols());
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * a;
        if (!c_[i].is_zero())
            for (std::size_t d = 0; d < a.rows(); ++d) acc.at(d, d) += c_[i];
    }
    return acc;
}

std::pair<QPoly, QPoly> poly_divmod(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw Error(ErrorCode::Validation, "polynomial division by zero");
    QVector rem = num.coeffs();
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) return {QPoly(), num};
    QVector quot(static_cast<std::size_t>(dn - dd) + 1);
    Rational lead_inv = den.leading().inv();
    for (int k = dn - dd; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
        quot[static_cast<std::size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * den.coeff(static_cast<std::size_t>(j));
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly poly_mod(const QPoly& a, const QPoly& m) { return poly_divmod(a, m).second; }

bool poly_divides(const QPoly& d, const QPoly& p) {
    if (d.is_zero()) return p.is_zero();
    return poly_divmod(p, d).second.is_zero();
}

QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.make_monic();
}

QPoly poly_lcm(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QPoly g = poly_gcd(a, b);
    return (poly_divmod(a * b, g).first).make_monic();
}

QPoly squarefree_part(const QPoly& p) {
    if (p.is_zero()) throw Error(ErrorCode::Validation, "squarefree part of zero polynomial");
    if (p.degree() == 0) return QPoly{Rational(1)};
    QPoly g = poly_gcd(p, p.derivative());
    return poly_divmod(p, g).first.make_monic();
}

bool is_squarefree(const QPoly& p) {
    return squarefree_part(p) == p.make_monic();
}

QPoly poly_inverse_mod(const QPoly& a, const QPoly& m) {
    // Extended Euclid on (a mod m, m), tracking only the coefficient of a.
    QPoly r0 = poly_mod(a, m), r1 = m;
    QPoly s0{Rational(1)}, s1;
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(r0, r1);
        QPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0)
        throw Error(ErrorCode::InternalInvariantViolation, "polynomial not invertible modulo m");
    return poly_mod(r0.leading().inv() * s0, m);
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        Rational a = c.abs();
        if (!a.is_one() || i == 0) os << a.str();
        if (i > 0) os << "t";
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os;
}

}  // namespace liejcd

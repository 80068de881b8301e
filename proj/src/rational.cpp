#include "liejcd/rational.hpp"

#include <cctype>
#include <ostream>

#include "liejcd/error.hpp"

namespace liejcd {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error(ErrorCode::Validation, "rational with zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::Validation, "division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw Error(ErrorCode::Validation, "inverse of zero rational");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::from_string(std::string_view s) {
    auto fail = [&] [[noreturn]] () {
        throw Error(ErrorCode::Validation, "bad rational literal: \"" + std::string(s) + "\"");
    };
    // Grammar: -?digits(/digits)?   No whitespace, signs only up front.
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t num_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_start) fail();
    if (i < s.size()) {
        if (s[i] != '/') fail();
        ++i;
        std::size_t den_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_start || i != s.size()) fail();
    }
    mpq_class v;
    if (v.set_str(std::string(s), 10) != 0) fail();
    if (v.get_den() == 0) fail();
    v.canonicalize();
    return Rational(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

QVector vec_add(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::Validation, "vector length mismatch");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVector vec_sub(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::Validation, "vector length mismatch");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVector vec_scale(const Rational& c, const QVector& v) {
    QVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

bool vec_is_zero(const QVector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

QVector zero_vector(std::size_t n) { return QVector(n); }

}  // namespace liejcd

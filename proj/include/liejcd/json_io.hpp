#pragma once

#include <json.hpp>

#include "liejcd/abstract_jcd.hpp"
#include "liejcd/lie_algebra.hpp"
#include "liejcd/matrix_jcd.hpp"
#include "liejcd/qpoly.hpp"

namespace liejcd {

using json = nlohmann::json;

// All numbers travel as exact strings ("3/4", "-2"); no floats anywhere.

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);
json vector_to_json(const QVector& v);
QVector vector_from_json(const json& j);
json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const json& j);
/// Basis rows of the subspace as a list of vectors.
json subspace_to_json(const Subspace& s);
json poly_to_json(const QPoly& p);

/// {"mode":"matrix","n":N,"basis":[matrix,...]} or
/// {"mode":"structure","dim":D,"brackets":[[i,j,coords],...]} with i < j.
json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const json& j);

json report_to_json(const VerifyReport& r);

/// Decomposition certificate. Always carries x, S, N, the two weight-space
/// dimensions and the check report; with_internals adds the pipeline vectors
/// and subspaces, matrix mode adds the realizations of x, S, N.
json certificate_to_json(const LieAlgebra& g, const AbstractJordanPair& pair,
                         const VerifyReport& report, bool with_internals);

struct CertificateData {
    QVector x;
    QVector semisimple;
    QVector nilpotent;
};
CertificateData certificate_from_json(const json& j);

json jordan_pair_to_json(const QMatrix& input, const JordanPair& jp);

}  // namespace liejcd

#include "liejcd/json_io.hpp"

#include "liejcd/error.hpp"

namespace liejcd {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Validation, what); }

std::size_t get_count(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) bad(std::string(key) + " must be a non-negative integer");
    return j[key].get<std::size_t>();
}

}  // namespace

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) bad("numbers must be rational strings like \"3/4\"");
    return Rational::from_string(j.get<std::string>());
}

json vector_to_json(const QVector& v) {
    json a = json::array();
    for (const Rational& r : v) a.push_back(rational_to_json(r));
    return a;
}

QVector vector_from_json(const json& j) {
    if (!j.is_array()) bad("vector must be an array of rational strings");
    QVector v;
    v.reserve(j.size());
    for (const json& e : j) v.push_back(rational_from_json(e));
    return v;
}

json matrix_to_json(const QMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_to_json(m.row(i)));
    return a;
}

QMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
    std::vector<QVector> rows;
    for (const json& r : j) rows.push_back(vector_from_json(r));
    for (const QVector& r : rows)
        if (r.size() != rows[0].size()) bad("matrix rows must have equal length");
    return QMatrix::from_rows(rows);
}

json subspace_to_json(const Subspace& s) {
    json a = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) a.push_back(vector_to_json(s.basis_vector(i)));
    return a;
}

json poly_to_json(const QPoly& p) { return vector_to_json(p.coeffs()); }

json algebra_to_json(const LieAlgebra& g) {
    json j;
    if (g.matrix_mode()) {
        j["mode"] = "matrix";
        j["n"] = g.ambient_dim();
        json basis = json::array();
        for (const QMatrix& m : g.realization_basis()) basis.push_back(matrix_to_json(m));
        j["basis"] = std::move(basis);
    } else {
        j["mode"] = "structure";
        j["dim"] = g.dim();
        json brackets = json::array();
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t k = i + 1; k < g.dim(); ++k) {
                if (vec_is_zero(g.structure(i, k))) continue;
                brackets.push_back(json::array({i, k, vector_to_json(g.structure(i, k))}));
            }
        j["brackets"] = std::move(brackets);
    }
    return j;
}

LieAlgebra algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("mode") || !j["mode"].is_string())
        bad("algebra document must carry a \"mode\" of \"matrix\" or \"structure\"");
    const std::string mode = j["mode"].get<std::string>();
    if (mode == "matrix") {
        std::size_t n = get_count(j, "n");
        if (!j.contains("basis") || !j["basis"].is_array()) bad("matrix-mode algebra needs a \"basis\" array");
        std::vector<QMatrix> mats;
        for (const json& m : j["basis"]) {
            QMatrix mat = matrix_from_json(m);
            if (mat.rows() != n || mat.cols() != n) bad("basis matrices must be n x n");
            mats.push_back(std::move(mat));
        }
        return LieAlgebra::from_matrices(mats);
    }
    if (mode == "structure") {
        std::size_t dim = get_count(j, "dim");
        if (!j.contains("brackets") || !j["brackets"].is_array())
            bad("structure-mode algebra needs a \"brackets\" array");
        std::vector<std::tuple<std::size_t, std::size_t, QVector>> brackets;
        for (const json& b : j["brackets"]) {
            if (!b.is_array() || b.size() != 3 || !b[0].is_number_unsigned() || !b[1].is_number_unsigned())
                bad("bracket entries must be [i, j, coords] with i < j");
            brackets.emplace_back(b[0].get<std::size_t>(), b[1].get<std::size_t>(),
                                  vector_from_json(b[2]));
        }
        return LieAlgebra::from_structure_constants(dim, brackets);
    }
    bad("unknown algebra mode '" + mode + "'");
}

json report_to_json(const VerifyReport& r) {
    json j;
    j["sum"] = r.sum_ok;
    j["commute"] = r.commute_ok;
    j["membership"] = r.membership_ok;
    j["projected_operator_invertible"] = r.projected_operator_invertible;
    json reps = json::array();
    for (const RepCheckReport& rr : r.reps) {
        json e;
        e["descriptor"] = rr.descriptor;
        e["sum"] = rr.sum_ok;
        e["commute"] = rr.commute_ok;
        e["nilpotent_part_nilpotent"] = rr.nilpotent_ok;
        e["semisimple_part_semisimple"] = rr.semisimple_ok;
        e["nilpotent_sampling"] = rr.nilpotent_sampling_ok;
        e["semisimple_sampling"] = rr.semisimple_sampling_ok;
        reps.push_back(std::move(e));
    }
    j["reps"] = std::move(reps);
    j["all_ok"] = r.all_ok();
    return j;
}

json certificate_to_json(const LieAlgebra& g, const AbstractJordanPair& pair,
                         const VerifyReport& report, bool with_internals) {
    json j;
    j["x"] = vector_to_json(pair.element);
    j["S"] = vector_to_json(pair.semisimple);
    j["N"] = vector_to_json(pair.nilpotent);
    j["n0_dim"] = pair.internals.n0.dim();
    j["nstar_dim"] = pair.internals.nstar.dim();
    j["checks"] = report_to_json(report);
    if (with_internals) {
        json in;
        in["a"] = vector_to_json(pair.internals.a);
        in["r"] = vector_to_json(pair.internals.r);
        in["s"] = vector_to_json(pair.internals.s);
        in["n"] = vector_to_json(pair.internals.n);
        in["b"] = vector_to_json(pair.internals.b);
        in["n0_basis"] = subspace_to_json(pair.internals.n0);
        in["nstar_basis"] = subspace_to_json(pair.internals.nstar);
        j["internals"] = std::move(in);
    }
    if (g.matrix_mode()) {
        json re;
        re["x"] = matrix_to_json(g.realize(pair.element));
        re["S"] = matrix_to_json(g.realize(pair.semisimple));
        re["N"] = matrix_to_json(g.realize(pair.nilpotent));
        j["realizations"] = std::move(re);
    }
    return j;
}

CertificateData certificate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("x") || !j.contains("S") || !j.contains("N"))
        bad("certificate must carry \"x\", \"S\" and \"N\"");
    CertificateData c;
    c.x = vector_from_json(j["x"]);
    c.semisimple = vector_from_json(j["S"]);
    c.nilpotent = vector_from_json(j["N"]);
    if (c.x.size() != c.semisimple.size() || c.x.size() != c.nilpotent.size())
        bad("certificate vectors must have equal length");
    return c;
}

json jordan_pair_to_json(const QMatrix& input, const JordanPair& jp) {
    json j;
    j["input"] = matrix_to_json(input);
    j["semisimple"] = matrix_to_json(jp.semisimple);
    j["nilpotent"] = matrix_to_json(jp.nilpotent);
    j["witness_poly"] = poly_to_json(jp.witness_poly);
    return j;
}

}  // namespace liejcd

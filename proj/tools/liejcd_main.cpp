#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "liejcd/error.hpp"
#include "liejcd/json_io.hpp"

namespace {

using namespace liejcd;

// 0 ok, 1 failing verification report, 2 element outside the derived
// algebra, 3 span not bracket-closed, 4 parse or validation error,
// 5 internal invariant violation.
int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::NotInDerivedAlgebra: return 2;
        case ErrorCode::NotClosed: return 3;
        case ErrorCode::InternalInvariantViolation: return 5;
        default: return 4;
    }
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Validation, "cannot open " + path);
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Validation, "invalid JSON in " + path + ": " + e.what());
    }
}

std::vector<Representation> build_reps(const LieAlgebra& g, const std::vector<std::string>& descs) {
    std::vector<Representation> reps;
    reps.push_back(Representation::adjoint(g));
    if (g.matrix_mode()) reps.push_back(Representation::natural(g));
    for (const std::string& d : descs) reps.push_back(Representation::parse(g, d));
    return reps;
}

std::vector<QMatrix> parse_matrix_family(const json& doc) {
    if (!doc.is_object() || doc.value("mode", "") != "matrix")
        throw Error(ErrorCode::Validation, "closure needs a matrix-mode algebra document");
    if (!doc.contains("n") || !doc["n"].is_number_unsigned() || !doc.contains("basis") ||
        !doc["basis"].is_array())
        throw Error(ErrorCode::Validation, "matrix-mode document needs \"n\" and \"basis\"");
    const std::size_t n = doc["n"].get<std::size_t>();
    std::vector<QMatrix> mats;
    for (const json& m : doc["basis"]) {
        QMatrix mat = matrix_from_json(m);
        if (mat.rows() != n || mat.cols() != n)
            throw Error(ErrorCode::Validation, "basis matrices must be n x n");
        mats.push_back(std::move(mat));
    }
    return mats;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Jordan-Chevalley decomposition in the derived algebra of a rational Lie algebra"};
    app.require_subcommand(1);

    std::string algebra_path, element_path, matrix_path, certificate_path;
    std::vector<std::string> rep_descs;
    bool emit_internals = false;
    bool auto_close = false;
    std::size_t samples = 20;
    std::uint64_t seed = 1;

    CLI::App* cmd_mjcd = app.add_subcommand("matrix-jcd", "Decompose a single rational matrix");
    cmd_mjcd->add_option("matrix", matrix_path, "matrix JSON file")->required();

    CLI::App* cmd_dec = app.add_subcommand("decompose", "Decompose an element of the derived algebra");
    cmd_dec->add_option("algebra", algebra_path, "algebra JSON file")->required();
    cmd_dec->add_option("element", element_path, "element JSON file (array of rationals)")->required();
    cmd_dec->add_option("--rep", rep_descs, "extra representation descriptor (repeatable)");
    cmd_dec->add_flag("--emit-internals", emit_internals, "include pipeline internals in the certificate");
    cmd_dec->add_option("--samples", samples, "sampling count for the report checks");
    cmd_dec->add_option("--seed", seed, "sampling seed");

    CLI::App* cmd_ver = app.add_subcommand("verify", "Verify a decomposition certificate");
    cmd_ver->add_option("algebra", algebra_path, "algebra JSON file")->required();
    cmd_ver->add_option("certificate", certificate_path, "certificate JSON file")->required();
    cmd_ver->add_option("--rep", rep_descs, "extra representation descriptor (repeatable)");
    cmd_ver->add_option("--samples", samples, "sampling count for the report checks");
    cmd_ver->add_option("--seed", seed, "sampling seed");

    CLI::App* cmd_rad = app.add_subcommand("radical", "Solvable radical of an algebra");
    cmd_rad->add_option("algebra", algebra_path, "algebra JSON file")->required();

    CLI::App* cmd_levi = app.add_subcommand("levi", "Levi decomposition of an algebra");
    cmd_levi->add_option("algebra", algebra_path, "algebra JSON file")->required();

    CLI::App* cmd_clo = app.add_subcommand("closure", "Check or complete bracket closure of a matrix span");
    cmd_clo->add_option("algebra", algebra_path, "matrix-mode algebra JSON file")->required();
    cmd_clo->add_flag("--auto-close", auto_close, "complete the span instead of failing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 4;
    }

    try {
        if (cmd_mjcd->parsed()) {
            QMatrix m = matrix_from_json(load_json(matrix_path));
            if (!m.is_square()) throw Error(ErrorCode::Validation, "matrix must be square");
            emit(jordan_pair_to_json(m, matrix_jordan_chevalley(m)));
            return 0;
        }
        if (cmd_dec->parsed()) {
            LieAlgebra g = algebra_from_json(load_json(algebra_path));
            QVector x = vector_from_json(load_json(element_path));
            if (x.size() != g.dim())
                throw Error(ErrorCode::Validation, "element length does not match the algebra dimension");
            AbstractJordanPair pair = abstract_jordan_chevalley(g, x);
            VerifyReport report = verify_decomposition(g, pair, build_reps(g, rep_descs), samples, seed);
            emit(certificate_to_json(g, pair, report, emit_internals));
            return report.all_ok() ? 0 : 1;
        }
        if (cmd_ver->parsed()) {
            LieAlgebra g = algebra_from_json(load_json(algebra_path));
            CertificateData cert = certificate_from_json(load_json(certificate_path));
            if (cert.x.size() != g.dim())
                throw Error(ErrorCode::Validation, "certificate vectors do not match the algebra dimension");
            AbstractJordanPair recomputed = abstract_jordan_chevalley(g, cert.x);
            bool matches = recomputed.semisimple == cert.semisimple &&
                           recomputed.nilpotent == cert.nilpotent;
            AbstractJordanPair given;
            given.element = cert.x;
            given.semisimple = cert.semisimple;
            given.nilpotent = cert.nilpotent;
            given.internals = recomputed.internals;
            VerifyReport report = verify_decomposition(g, given, build_reps(g, rep_descs), samples, seed);
            json out = report_to_json(report);
            out["matches_recomputed"] = matches;
            out["all_ok"] = report.all_ok() && matches;
            emit(out);
            return (report.all_ok() && matches) ? 0 : 1;
        }
        if (cmd_rad->parsed()) {
            LieAlgebra g = algebra_from_json(load_json(algebra_path));
            Ideal rad = g.solvable_radical();
            json out;
            out["dim"] = rad.dim();
            out["basis"] = subspace_to_json(rad.subspace);
            emit(out);
            return 0;
        }
        if (cmd_levi->parsed()) {
            LieAlgebra g = algebra_from_json(load_json(algebra_path));
            LeviDecomposition ld = levi_decomposition(g);
            auto part = [](const Subspace& s) {
                json j;
                j["dim"] = s.dim();
                j["basis"] = subspace_to_json(s);
                return j;
            };
            json out;
            out["levi"] = part(ld.levi);
            out["radical"] = part(ld.radical.subspace);
            out["nilpotent_ideal"] = part(ld.nilpotent_ideal.subspace);
            emit(out);
            return 0;
        }
        if (cmd_clo->parsed()) {
            std::vector<QMatrix> mats = parse_matrix_family(load_json(algebra_path));
            if (auto_close) mats = lie_closure(mats);
            emit(algebra_to_json(LieAlgebra::from_matrices(mats)));
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

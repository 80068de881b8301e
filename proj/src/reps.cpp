#include "liejcd/reps.hpp"

#include <cctype>

#include "liejcd/error.hpp"
#include "liejcd/matrix_jcd.hpp"

namespace liejcd {

Representation::Representation(LieAlgebra source, std::vector<QMatrix> images, std::string descriptor,
                               bool internal)
    : source_(std::move(source)), images_(std::move(images)), descriptor_(std::move(descriptor)) {
    if (images_.size() != source_.dim())
        throw Error(ErrorCode::Validation, "representation needs one image per basis element");
    target_dim_ = images_.empty() ? 0 : images_[0].rows();
    for (const QMatrix& m : images_)
        if (!m.is_square() || m.rows() != target_dim_)
            throw Error(ErrorCode::Validation, "representation images must be square of equal size");
    check_homomorphism(internal);
}

void Representation::check_homomorphism(bool internal) const {
    const std::size_t d = source_.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            if (QMatrix::commutator(images_[i], images_[j]) == apply(source_.structure(i, j))) continue;
            std::string msg = "images violate the homomorphism law at basis pair (" +
                              std::to_string(i) + ", " + std::to_string(j) + ")";
            throw Error(internal ? ErrorCode::InternalInvariantViolation : ErrorCode::Validation,
                        std::move(msg));
        }
}

Representation Representation::natural(const LieAlgebra& g) {
    if (!g.matrix_mode())
        throw Error(ErrorCode::NaturalRequiresMatrixMode,
                    "the natural representation needs a matrix realization");
    return Representation(g, g.realization_basis(), "natural", true);
}

Representation Representation::adjoint(const LieAlgebra& g) {
    std::vector<QMatrix> images;
    images.reserve(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) {
        QVector e = zero_vector(g.dim());
        e[i] = 1;
        images.push_back(g.ad(e));
    }
    return Representation(g, std::move(images), "adjoint", true);
}

Representation Representation::dual(const Representation& rho) {
    std::vector<QMatrix> images;
    images.reserve(rho.images_.size());
    for (const QMatrix& m : rho.images_) images.push_back(-m.transpose());
    return Representation(rho.source_, std::move(images), "dual(" + rho.descriptor_ + ")", true);
}

Representation Representation::direct_sum(const Representation& r1, const Representation& r2) {
    if (!(r1.source_ == r2.source_))
        throw Error(ErrorCode::Validation, "direct sum needs representations of the same algebra");
    std::vector<QMatrix> images;
    for (std::size_t i = 0; i < r1.images_.size(); ++i)
        images.push_back(QMatrix::block_diag(r1.images_[i], r2.images_[i]));
    return Representation(r1.source_, std::move(images),
                          "sum(" + r1.descriptor_ + "," + r2.descriptor_ + ")", true);
}

Representation Representation::tensor(const Representation& r1, const Representation& r2) {
    if (!(r1.source_ == r2.source_))
        throw Error(ErrorCode::Validation, "tensor product needs representations of the same algebra");
    QMatrix i1 = QMatrix::identity(r1.target_dim_);
    QMatrix i2 = QMatrix::identity(r2.target_dim_);
    std::vector<QMatrix> images;
    for (std::size_t i = 0; i < r1.images_.size(); ++i)
        images.push_back(QMatrix::kron(r1.images_[i], i2) + QMatrix::kron(i1, r2.images_[i]));
    return Representation(r1.source_, std::move(images),
                          "tensor(" + r1.descriptor_ + "," + r2.descriptor_ + ")", true);
}

Representation Representation::from_images(const LieAlgebra& g, std::vector<QMatrix> images,
                                           std::string descriptor) {
    return Representation(g, std::move(images), std::move(descriptor), false);
}

QMatrix Representation::apply(const QVector& x) const {
    if (x.size() != source_.dim())
        throw Error(ErrorCode::Validation, "apply operand must have the source dimension");
    QMatrix out(target_dim_, target_dim_);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        out += x[i] * images_[i];
    }
    return out;
}

bool Representation::check_compatibility(const QVector& x, const QVector& s, const QVector& n) const {
    QMatrix ix = apply(x), is = apply(s), in = apply(n);
    if (!(is + in == ix)) return false;
    if (!(is * in == in * is)) return false;
    if (!is_nilpotent_matrix(in)) return false;
    return is_semisimple_matrix(is);
}

namespace {

/// Recursive-descent parser for the descriptor mini-language.
class DescriptorParser {
public:
    DescriptorParser(const LieAlgebra& g, std::string_view text) : g_(g), text_(text) {}

    Representation run() {
        Representation rep = expr();
        skip_spaces();
        if (pos_ != text_.size())
            throw Error(ErrorCode::Validation, "trailing input after representation descriptor");
        return rep;
    }

private:
    Representation expr() {
        std::string name = identifier();
        if (name == "natural") return Representation::natural(g_);
        if (name == "adjoint") return Representation::adjoint(g_);
        if (name == "dual") {
            expect('(');
            Representation inner = expr();
            expect(')');
            return Representation::dual(inner);
        }
        if (name == "sum" || name == "tensor") {
            expect('(');
            Representation lhs = expr();
            expect(',');
            Representation rhs = expr();
            expect(')');
            return name == "sum" ? Representation::direct_sum(lhs, rhs)
                                 : Representation::tensor(lhs, rhs);
        }
        throw Error(ErrorCode::Validation, "unknown representation constructor '" + name + "'");
    }

    std::string identifier() {
        skip_spaces();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_)
            throw Error(ErrorCode::Validation, "expected a representation constructor name");
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_spaces();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw Error(ErrorCode::Validation,
                        std::string("expected '") + c + "' in representation descriptor");
        ++pos_;
    }

    void skip_spaces() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const LieAlgebra& g_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Representation Representation::parse(const LieAlgebra& g, std::string_view descriptor) {
    return DescriptorParser(g, descriptor).run();
}

}  // namespace liejcd

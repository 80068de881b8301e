#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "liejcd/lie_algebra.hpp"
#include "liejcd/qmatrix.hpp"

namespace liejcd {

/// Finite-dimensional representation of a Lie algebra, stored as one target
/// matrix per source basis element. Every constructor verifies the
/// homomorphism law image([b_i, b_j]) = [image(b_i), image(b_j)] on all basis
/// pairs. Holds its own copy of the source algebra.
class Representation {
public:
    /// The inclusion into gl(n); matrix mode only.
    static Representation natural(const LieAlgebra& g);
    static Representation adjoint(const LieAlgebra& g);
    /// x -> -image(x)^T on the dual space.
    static Representation dual(const Representation& rho);
    static Representation direct_sum(const Representation& r1, const Representation& r2);
    /// Kronecker sum: x -> image1(x) (x) I + I (x) image2(x).
    static Representation tensor(const Representation& r1, const Representation& r2);
    /// Hand-supplied images; failing the homomorphism check is a Validation
    /// error here, an internal error in the named constructors.
    static Representation from_images(const LieAlgebra& g, std::vector<QMatrix> images,
                                      std::string descriptor);

    /// Descriptor mini-language:
    ///   natural | adjoint | dual(D) | sum(D1, D2) | tensor(D1, D2)
    static Representation parse(const LieAlgebra& g, std::string_view descriptor);

    std::size_t source_dim() const { return source_.dim(); }
    std::size_t target_dim() const { return target_dim_; }
    const std::string& descriptor() const { return descriptor_; }
    const LieAlgebra& source() const { return source_; }
    const QMatrix& image(std::size_t i) const { return images_[i]; }

    /// Linear extension to arbitrary coordinate vectors.
    QMatrix apply(const QVector& x) const;

    /// True iff (apply(S), apply(N)) is the matrix Jordan-Chevalley
    /// decomposition of apply(x): images sum to apply(x), commute, apply(S)
    /// has squarefree minimal polynomial and apply(N) is nilpotent.
    bool check_compatibility(const QVector& x, const QVector& s, const QVector& n) const;

private:
    Representation(LieAlgebra source, std::vector<QMatrix> images, std::string descriptor,
                   bool internal);
    void check_homomorphism(bool internal) const;

    LieAlgebra source_;
    std::size_t target_dim_ = 0;
    std::vector<QMatrix> images_;
    std::string descriptor_;
};

}  // namespace liejcd

#pragma once

#include "ideal.hpp"

namespace rankring {

/// Compression of the corner ring eRe onto a full matrix ring of side rank(e).
/// B holds a column basis of im(e); Bplus is the unique left inverse of B that
/// kills ker(e), so that B * Bplus = e and compress/lift are mutually inverse
/// algebra isomorphisms between eRe and M_r(K).
class Corner {
public:
    explicit Corner(const Idempotent& e) : e_(e), b_(column_space_basis(e.mat())), bplus_(e.mat().field(), 0, 0) {
        if (e.rank() == 0) throw precondition_error("corner of the zero idempotent");
        Mat ker = kernel_basis(e.mat());
        Mat t = b_.hstack(ker);
        Mat tinv = *t.inverse();
        bplus_ = tinv.top_rows(b_.cols());
    }

    const Idempotent& idem() const { return e_; }
    size_t side() const { return b_.cols(); }
    size_t ambient() const { return e_.n(); }
    Field field() const { return e_.mat().field(); }

    /// x in eRe -> its matrix over the corner.
    Mat compress(const Mat& x) const { return bplus_ * x * b_; }
    /// Corner matrix -> element of eRe.
    Mat lift(const Mat& m) const { return b_ * m * bplus_; }
    /// Corner matrix -> element of Gamma_R(e): lift plus identity off the corner.
    Mat lift_unit(const Mat& m) const {
        return lift(m) + (Mat::identity(field(), ambient()) - e_.mat());
    }
    /// Member of Gamma_R(e) -> corner matrix.
    Mat compress_unit(const Mat& g) const { return compress(g * e_.mat()); }

    /// Subspace of im(e) -> its coordinate subspace in the corner.
    RightIdeal compress_ideal(const RightIdeal& v) const { return RightIdeal::span(bplus_ * v.basis()); }
    RightIdeal lift_ideal(const RightIdeal& v) const { return RightIdeal::span(b_ * v.basis()); }
    Idempotent compress_idem(const Idempotent& f) const { return Idempotent(compress(f.mat())); }
    Idempotent lift_idem(const Idempotent& f) const { return Idempotent(lift(f.mat())); }

private:
    Idempotent e_;
    Mat b_;
    Mat bplus_;
};

/// Membership in Gamma_R(e) = GL(R) ^ (eRe + 1-e): commutes with e and acts as
/// the identity on the complement.
inline bool in_gamma(const Mat& g, const Idempotent& e) {
    if (!g.is_invertible()) return false;
    Mat one = Mat::identity(g.field(), g.side());
    Mat c = one - e.mat();
    return g * e.mat() == e.mat() * g && g * c == c;
}

}  // namespace rankring

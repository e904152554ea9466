#pragma once

#include <utility>

#include "corner.hpp"

namespace rankring {

class Involution {
public:
    explicit Involution(Mat m) : m_(std::move(m)) {
        if (!(m_ * m_).is_identity()) throw precondition_error("matrix is not an involution");
    }
    static Involution one(Field f, size_t n) { return Involution(Mat::identity(f, n)); }
    const Mat& mat() const { return m_; }
    size_t n() const { return m_.side(); }
    friend bool operator==(const Involution& a, const Involution& b) { return a.m_ == b.m_; }

private:
    Mat m_;
};

class TwoNilpotent {
public:
    explicit TwoNilpotent(Mat m) : m_(std::move(m)) {
        if (!(m_ * m_).is_zero()) throw precondition_error("matrix does not square to zero");
    }
    const Mat& mat() const { return m_; }
    size_t n() const { return m_.side(); }

private:
    Mat m_;
};

// ---- two-sided rank normal form ---------------------------------------------

namespace detail {

// Invertible (U, V) with U*A*V = diag(I_r, 0).
inline std::pair<Mat, Mat> rank_normal_form(const Mat& a) {
    Field f = a.field();
    size_t n = a.side();
    // Row reduce with the row operations recorded on an identity block.
    std::vector<size_t> piv;
    Mat aug = a.hstack(Mat::identity(f, n)).rref(&piv);
    std::vector<size_t> row_piv;
    for (size_t c : piv)
        if (c < n) row_piv.push_back(c);
    size_t r = row_piv.size();
    Mat u(f, n, n), rr(f, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            rr.set(i, j, aug.at(i, j));
            u.set(i, j, aug.at(i, n + j));
        }
    // Column side: permute pivots to the front, then clear the free columns.
    std::vector<size_t> order = row_piv;
    std::vector<bool> used(n, false);
    for (size_t c : row_piv) used[c] = true;
    for (size_t c = 0; c < n; ++c)
        if (!used[c]) order.push_back(c);
    Mat perm(f, n, n);
    for (size_t j = 0; j < n; ++j) perm.set(order[j], j, Scalar::of(f, 1));
    Mat rp = rr * perm;  // [I_r, B; 0, 0]
    Mat elim = Mat::identity(f, n);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = r; j < n; ++j) elim.set(i, j, -rp.at(i, j));
    return {u, perm * elim};
}

}  // namespace detail

/// Invertible (U, V) with B = U*A*V; requires equal ranks.
inline std::pair<Mat, Mat> rank_factorize(const Mat& a, const Mat& b) {
    if (a.field() != b.field() || a.side() != b.side()) throw mismatch_error("rank_factorize: shape mismatch");
    if (a.rank() != b.rank()) throw precondition_error("rank_factorize: rank mismatch");
    auto [ua, va] = detail::rank_normal_form(a);
    auto [ub, vb] = detail::rank_normal_form(b);
    Mat u = *ub.inverse() * ua;
    Mat v = va * *vb.inverse();
    if (!(u * a * v == b)) throw error("rank_factorize: verification failed");
    return {u, v};
}

// ---- conjugacy ---------------------------------------------------------------

/// g (invertible) with g*e*g^{-1} = f; maps an image+kernel basis of e to one
/// of f.  Requires equal ranks.
inline Mat conjugate_idempotents(const Idempotent& e, const Idempotent& f) {
    if (e.mat().field() != f.mat().field() || e.n() != f.n())
        throw mismatch_error("conjugate_idempotents: shape mismatch");
    if (e.rank() != f.rank()) throw precondition_error("conjugate_idempotents: rank mismatch");
    Mat te = column_space_basis(e.mat()).hstack(kernel_basis(e.mat()));
    Mat tf = column_space_basis(f.mat()).hstack(kernel_basis(f.mat()));
    Mat g = tf * *te.inverse();
    if (!(g * e.mat() == f.mat() * g)) throw error("conjugate_idempotents: verification failed");
    return g;
}

/// g with g*a*g^{-1} = b for 2-nilpotents of equal rank, built from a
/// two-sided factorization b = u*a*v and partial isometries between the
/// kernel flags of a and b.
inline Mat conjugate_nilpotents(const TwoNilpotent& a, const TwoNilpotent& b) {
    Field k = a.mat().field();
    size_t n = a.n();
    if (k != b.mat().field() || n != b.n()) throw mismatch_error("conjugate_nilpotents: shape mismatch");
    if (a.mat().rank() != b.mat().rank()) throw precondition_error("conjugate_nilpotents: rank mismatch");
    if (a.mat().is_zero()) return Mat::identity(k, n);

    auto [u, v] = rank_factorize(a.mat(), b.mat());  // b = u a v
    Mat vinv = *v.inverse();

    Idempotent f = idempotent_generator(r_ann(a.mat()));  // im(f) = ker(a)
    // ker(b) = v^{-1} ker(a), so v^{-1} f v generates rAnn(b).
    Idempotent ftil(vinv * f.mat() * v);
    Idempotent e = sub_idempotent(ideal_of(a.mat()), f);       // e <= f, eR = aR
    Idempotent etil = sub_idempotent(ideal_of(b.mat()), ftil); // etil <= ftil, etil R = bR

    Mat fe = f.mat() - e.mat();
    Mat fetil = ftil.mat() - etil.mat();
    auto [w, wt] = rank_factorize(fe, fetil);  // fetil = w fe wt

    Mat one = Mat::identity(k, n);
    Mat g = vinv * (one - f.mat()) + w * fe + u * e.mat();
    if (!g.is_invertible()) throw error("conjugate_nilpotents: constructed g is singular");
    if (!(g * a.mat() == b.mat() * g)) throw error("conjugate_nilpotents: verification failed");
    return g;
}

// ---- involution correspondences ----------------------------------------------

inline Idempotent involution_to_idempotent(const Involution& u) {
    Field f = u.mat().field();
    if (f.characteristic() == 2) throw precondition_error("idempotent correspondence needs characteristic != 2");
    Scalar half = Scalar::of(f, 2).inverse();
    Mat one = Mat::identity(f, u.n());
    return Idempotent((one + u.mat()).scaled(half));
}
inline Involution idempotent_to_involution(const Idempotent& e) {
    Field f = e.mat().field();
    if (f.characteristic() == 2) throw precondition_error("idempotent correspondence needs characteristic != 2");
    Mat one = Mat::identity(f, e.n());
    return Involution(e.mat().scaled(Scalar::of(f, 2)) - one);
}
inline TwoNilpotent involution_to_nilpotent(const Involution& u) {
    Field f = u.mat().field();
    if (f.characteristic() != 2) throw precondition_error("nilpotent correspondence needs characteristic 2");
    return TwoNilpotent(Mat::identity(f, u.n()) + u.mat());
}
inline Involution nilpotent_to_involution(const TwoNilpotent& x) {
    Field f = x.mat().field();
    if (f.characteristic() != 2) throw precondition_error("nilpotent correspondence needs characteristic 2");
    return Involution(Mat::identity(f, x.n()) + x.mat());
}

/// g with g*a*g^{-1} = b; requires rk(1-a) = rk(1-b).  Routed through the
/// correspondence matching the characteristic.
inline Mat conjugate_involutions(const Involution& a, const Involution& b) {
    Field f = a.mat().field();
    size_t n = a.n();
    Mat one = Mat::identity(f, n);
    if ((one - a.mat()).rank() != (one - b.mat()).rank())
        throw precondition_error("conjugate_involutions: rank distance mismatch");
    Mat g = f.characteristic() == 2
                ? conjugate_nilpotents(involution_to_nilpotent(a), involution_to_nilpotent(b))
                : conjugate_idempotents(involution_to_idempotent(a), involution_to_idempotent(b));
    if (!(g * a.mat() == b.mat() * g)) throw error("conjugate_involutions: verification failed");
    return g;
}

// ---- involution splits ---------------------------------------------------------

namespace detail {

/// Deterministic sub-idempotent of e of a given rank (initial segment of the
/// canonical image basis).
inline Idempotent ranked_sub_idempotent(const Idempotent& e, size_t rank) {
    if (rank > e.rank()) throw precondition_error("sub-idempotent rank too large");
    Mat b = column_space_basis(e.mat());
    std::vector<size_t> idx;
    for (size_t j = 0; j < rank; ++j) idx.push_back(j);
    return sub_idempotent(RightIdeal::span(b.columns(idx)), e);
}

inline std::pair<Involution, Involution> split_involution_odd_char(const Involution& a) {
    Field k = a.mat().field();
    size_t n = a.n();
    Idempotent e = involution_to_idempotent(a);
    size_t re = e.rank();
    if (re % 2 != 0 || (n - re) % 2 != 0)
        throw rank_not_representable("half-rank split needs rk(e) and n-rk(e) even");
    Idempotent f = ranked_sub_idempotent(e, re / 2);
    Idempotent fp = ranked_sub_idempotent(e.complement(), (n - re) / 2);
    Mat gm = e.mat() - f.mat() + fp.mat();
    Mat hm = Mat::identity(k, n) - f.mat() - fp.mat();
    Involution g = idempotent_to_involution(Idempotent(gm));
    Involution h = idempotent_to_involution(Idempotent(hm));
    return {g, h};
}

/// Characteristic 2: factors 1+w and 1+w+b with w*b = b*w = w*w = 0 and
/// rk(w) = rk(w+b) = n/4.  w copies b on half its image rows, shares one row
/// when rk(b) is odd, and pairs up fresh kernel vectors for the rest.
inline std::pair<Involution, Involution> split_involution_char2(const Involution& a) {
    Field k = a.mat().field();
    size_t n = a.n();
    Mat one = Mat::identity(k, n);
    Mat b = one + a.mat();
    if (!(b * b).is_zero()) throw error("split: 1+a must square to zero in characteristic 2");
    size_t r = b.rank();
    if (n % 4 != 0) throw rank_not_representable("quarter-rank split needs 4 | n");
    size_t q = n / 4;
    if ((r + 1) / 2 > q)
        throw rank_not_representable("quarter-rank split infeasible: ceil(rk(b)/2) exceeds n/4");

    // Adapted basis: images U, preimages V (b*V = U), free kernel directions Z.
    Mat u = column_space_basis(b);
    Mat v = *solve_right(b, u);
    Mat ker = kernel_basis(b);
    Mat acc = u;
    Mat z(k, n, 0);
    for (size_t j = 0; j < ker.cols(); ++j) {
        Mat cand = ker.column(j);
        Mat trial = acc.hstack(cand);
        if (trial.rank() == acc.cols() + 1) {
            acc = trial;
            z = z.hstack(cand);
        }
    }
    size_t c = r / 2, s = r % 2, kp = q - c - s;
    Mat basis = v.hstack(u).hstack(z);   // columns: V_0..V_{r-1}, U_0..U_{r-1}, Z_0..
    const size_t z_off = 2 * r;          // basis column of Z_0
    Mat images(k, n, n);                 // column j = w(basis column j)
    for (size_t i = 0; i < c; ++i)       // copy rows of b: V_i -> U_i
        for (size_t row = 0; row < n; ++row) images.set(row, i, u.at(row, i));
    if (s)                               // shared row: Z_0 -> U_c
        for (size_t row = 0; row < n; ++row) images.set(row, z_off, u.at(row, c));
    for (size_t j = 0; j < kp; ++j) {    // fresh pairs: Z_{s+2j+1} -> Z_{s+2j}
        size_t src = z_off + s + 2 * j + 1;
        for (size_t row = 0; row < n; ++row) images.set(row, src, z.at(row, s + 2 * j));
    }
    Mat w = images * *basis.inverse();

    if (!(w * b).is_zero() || !(b * w).is_zero() || !(w * w).is_zero() || w.rank() != q || (w + b).rank() != q)
        throw error("split: constructed factor violates its invariants");
    return {Involution(one + w), Involution(one + w + b)};
}

}  // namespace detail

/// (g, h) with g*h = a and rk(1-g) = rk(1-h) equal to 1/2 (char != 2) or 1/4
/// (char 2).  Divisibility failures raise rank_not_representable.
inline std::pair<Involution, Involution> split_involution(const Involution& a) {
    auto [g, h] = a.mat().field().characteristic() == 2 ? detail::split_involution_char2(a)
                                                        : detail::split_involution_odd_char(a);
    if (!(g.mat() * h.mat() == a.mat())) throw error("split_involution: product mismatch");
    return {g, h};
}

// ---- Boolean embedding ---------------------------------------------------------

/// phi(x) = a*x + x*a^{-1} + 1 - x - a*x*a^{-1}; a group embedding of the
/// idempotents below e (under symmetric difference) into the units.
inline Mat boolean_embed(const Idempotent& e, const Mat& a, const Idempotent& x) {
    Field f = e.mat().field();
    size_t n = e.n();
    auto ainv = a.inverse();
    if (!ainv) throw precondition_error("boolean_embed: a must be invertible");
    Idempotent conj(a * e.mat() * *ainv);
    if (!idempotent_orthogonal(e, conj)) throw precondition_error("boolean_embed: e not orthogonal to a e a^{-1}");
    if (!idempotent_leq(x, e)) throw precondition_error("boolean_embed: x must lie below e");
    Mat one = Mat::identity(f, n);
    Mat phi = a * x.mat() + x.mat() * *ainv + one - x.mat() - a * x.mat() * *ainv;
    if (!(phi * phi).is_identity()) throw error("boolean_embed: image does not square to one");
    return phi;
}

// ---- structured involutions for the decomposition pipeline ---------------------

/// Partial isometry units between orthogonal equal-rank idempotents:
/// s[i][j] maps im(e_j) onto im(e_i) and kills every other summand.
inline Mat partial_isometry(const Idempotent& from, const Idempotent& to) {
    if (from.rank() != to.rank()) throw precondition_error("partial_isometry: rank mismatch");
    Mat bf = column_space_basis(from.mat());
    Mat kf = kernel_basis(from.mat());
    Mat tinv = *bf.hstack(kf).inverse();
    Mat bfplus = tinv.top_rows(bf.cols());
    return column_space_basis(to.mat()) * bfplus;
}

/// Involution u with u^2 = 1, u*e1*u = e2 and determinant one; e1, e2
/// orthogonal of normalized rank 1/3.
inline Involution swap_involution(const Idempotent& e1, const Idempotent& e2) {
    Field f = e1.mat().field();
    size_t n = e1.n();
    if (n % 3 != 0) throw rank_not_representable("swap involution needs 3 | n");
    if (e1.rank() != n / 3 || e2.rank() != n / 3)
        throw precondition_error("swap involution: idempotents must have normalized rank 1/3");
    if (!idempotent_orthogonal(e1, e2)) throw precondition_error("swap involution: idempotents must be orthogonal");
    Mat e3 = Mat::identity(f, n) - e1.mat() - e2.mat();
    Idempotent third(e3);
    Mat s12 = partial_isometry(e2, e1);
    Mat s21 = partial_isometry(e1, e2);
    Mat um = s12 + s21 - e3;
    Involution u(um);
    if (!(um * e1.mat() * um == e2.mat())) throw error("swap involution: conjugation check failed");
    if (!um.det().is_one()) throw error("swap involution: determinant is not one");
    return u;
}

/// Involution v supported on e+f with v*f*v <= e and v(e+f) of determinant one
/// in the corner; requires e, f nonzero orthogonal with rk(e) = 2 rk(f).
inline Involution shift_involution(const Idempotent& e, const Idempotent& f) {
    Field k = e.mat().field();
    size_t n = e.n();
    if (f.rank() == 0 || e.rank() == 0) throw precondition_error("shift involution: idempotents must be nonzero");
    if (e.rank() != 2 * f.rank()) throw precondition_error("shift involution: need rk(e) = 2 rk(f)");
    if (!idempotent_orthogonal(e, f)) throw precondition_error("shift involution: e and f must be orthogonal");
    Idempotent ep = detail::ranked_sub_idempotent(e, f.rank());
    Idempotent support(e.mat() + f.mat());
    Corner corner(support);
    Involution u = swap_involution(corner.compress_idem(f), corner.compress_idem(ep));
    Mat v = corner.lift(u.mat()) + (Mat::identity(k, n) - support.mat());
    Involution vi(v);
    Mat vfv = v * f.mat() * v;
    if (!idempotent_leq(Idempotent(vfv), e)) throw error("shift involution: v f v is not below e");
    return vi;
}

}  // namespace rankring

#pragma once

#include <vector>

#include "matrix.hpp"

namespace rankring {

/// Principal right ideal of M_n(K): the matrices whose column space lies in a
/// fixed subspace V of K^n.  Stored as the canonical reduced-column-echelon
/// basis of V, so ideal equality is representation equality.
class RightIdeal {
public:
    static RightIdeal zero(Field f, size_t n) { return RightIdeal(f, n, Mat(f, n, 0)); }
    static RightIdeal full(Field f, size_t n) { return RightIdeal(f, n, Mat::identity(f, n)); }
    /// Column space of an arbitrary generator matrix (n x anything).
    static RightIdeal span(const Mat& columns) {
        return RightIdeal(columns.field(), columns.rows(), column_space_basis(columns));
    }

    Field field() const { return f_; }
    size_t n() const { return n_; }
    size_t dim() const { return basis_.cols(); }
    const Mat& basis() const { return basis_; }

    mpq_class delta() const {
        mpq_class q(static_cast<long>(dim()), static_cast<long>(n_));
        q.canonicalize();
        return q;
    }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == n_; }

    friend bool operator==(const RightIdeal& a, const RightIdeal& b) {
        return a.f_ == b.f_ && a.n_ == b.n_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const RightIdeal& a, const RightIdeal& b) { return !(a == b); }

    bool contains(const RightIdeal& o) const {
        if (o.dim() > dim()) return false;
        return sum_basis(o).cols() == dim();
    }
    bool contains_vector(const Mat& v) const {
        if (v.rows() != n_ || v.cols() != 1) throw mismatch_error("column vector expected");
        if (v.is_zero()) return true;
        return column_space_basis(basis_.hstack(v)).cols() == dim();
    }

private:
    RightIdeal(Field f, size_t n, Mat basis) : f_(f), n_(n), basis_(std::move(basis)) {}
    Mat sum_basis(const RightIdeal& o) const { return column_space_basis(basis_.hstack(o.basis_)); }
    friend RightIdeal sum(const RightIdeal&, const RightIdeal&);
    friend RightIdeal intersect(const RightIdeal&, const RightIdeal&);

    Field f_;
    size_t n_;
    Mat basis_;
};

/// Principal left ideal: matrices with row space inside a fixed row space.
/// Canonical reduced-row-echelon basis, one row per basis vector.
class LeftIdeal {
public:
    static LeftIdeal zero(Field f, size_t n) { return LeftIdeal(f, n, Mat(f, 0, n)); }
    static LeftIdeal full(Field f, size_t n) { return LeftIdeal(f, n, Mat::identity(f, n)); }
    static LeftIdeal span(const Mat& rows) {
        return LeftIdeal(rows.field(), rows.cols(), row_space_basis(rows));
    }

    Field field() const { return f_; }
    size_t n() const { return n_; }
    size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }

    mpq_class delta() const {
        mpq_class q(static_cast<long>(dim()), static_cast<long>(n_));
        q.canonicalize();
        return q;
    }

    friend bool operator==(const LeftIdeal& a, const LeftIdeal& b) {
        return a.f_ == b.f_ && a.n_ == b.n_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const LeftIdeal& a, const LeftIdeal& b) { return !(a == b); }

private:
    LeftIdeal(Field f, size_t n, Mat basis) : f_(f), n_(n), basis_(std::move(basis)) {}
    Field f_;
    size_t n_;
    Mat basis_;
};

/// Matrix with e*e = e, checked at construction.
class Idempotent {
public:
    explicit Idempotent(Mat m) : m_(std::move(m)) {
        if (!(m_ * m_ == m_)) throw precondition_error("matrix is not idempotent");
    }
    static Idempotent zero(Field f, size_t n) { return Idempotent(Mat::zero(f, n)); }
    static Idempotent one(Field f, size_t n) { return Idempotent(Mat::identity(f, n)); }

    const Mat& mat() const { return m_; }
    size_t n() const { return m_.side(); }
    size_t rank() const { return m_.rank(); }
    mpq_class normalized_rank() const { return rankring::normalized_rank(m_); }

    Idempotent complement() const { return Idempotent(Mat::identity(m_.field(), m_.side()) - m_); }

    friend bool operator==(const Idempotent& a, const Idempotent& b) { return a.m_ == b.m_; }
    friend bool operator!=(const Idempotent& a, const Idempotent& b) { return !(a == b); }

private:
    Mat m_;
};

inline bool idempotent_leq(const Idempotent& e, const Idempotent& f) {
    return e.mat() * f.mat() == e.mat() && f.mat() * e.mat() == e.mat();
}
inline bool idempotent_orthogonal(const Idempotent& e, const Idempotent& f) {
    return (e.mat() * f.mat()).is_zero() && (f.mat() * e.mat()).is_zero();
}

// ---- ideals of matrices, annihilators -------------------------------------

inline RightIdeal ideal_of(const Mat& a) { return RightIdeal::span(a); }
inline LeftIdeal left_ideal_of(const Mat& a) { return LeftIdeal::span(a); }

/// rAnn(a) = { m : a*m = 0 }: column spaces inside ker(a).
inline RightIdeal r_ann(const Mat& a) { return RightIdeal::span(kernel_basis(a)); }
/// lAnn(a) = { m : m*a = 0 }: row spaces inside the left kernel of a.
inline LeftIdeal l_ann(const Mat& a) { return LeftIdeal::span(kernel_basis(a.transpose()).transpose()); }

/// Annihilator of a left ideal Ra: depends only on the row space.
inline RightIdeal r_ann(const LeftIdeal& l) { return RightIdeal::span(kernel_basis(l.basis())); }
/// Annihilator of a right ideal aR: depends only on the column space.
inline LeftIdeal l_ann(const RightIdeal& i) {
    return LeftIdeal::span(kernel_basis(i.basis().transpose()).transpose());
}

// ---- lattice operations ----------------------------------------------------

inline void check_compatible(const RightIdeal& a, const RightIdeal& b) {
    if (a.field() != b.field() || a.n() != b.n()) throw mismatch_error("ideal field/dimension mismatch");
}

inline RightIdeal sum(const RightIdeal& a, const RightIdeal& b) {
    check_compatible(a, b);
    return RightIdeal::span(a.basis().hstack(b.basis()));
}

inline RightIdeal intersect(const RightIdeal& a, const RightIdeal& b) {
    check_compatible(a, b);
    if (a.is_zero() || b.is_zero()) return RightIdeal::zero(a.field(), a.n());
    // Kernel of [A | B] yields the compatible coordinate pairs.
    Mat k = kernel_basis(a.basis().hstack(b.basis()));
    Mat coords(a.field(), a.dim(), k.cols());
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < k.cols(); ++j) coords.set(i, j, k.at(i, j));
    return RightIdeal::span(a.basis() * coords);
}

inline mpq_class delta(const RightIdeal& i) { return i.delta(); }

/// Independence via the prefix criterion: (I_1 v ... v I_i) ^ I_{i+1} = 0.
inline bool is_independent(const std::vector<RightIdeal>& ideals) {
    if (ideals.empty()) return true;
    size_t dim_sum = ideals[0].dim();
    RightIdeal acc = ideals[0];
    for (size_t i = 1; i < ideals.size(); ++i) {
        check_compatible(acc, ideals[i]);
        acc = sum(acc, ideals[i]);
        dim_sum += ideals[i].dim();
        if (acc.dim() != dim_sum) return false;
    }
    return true;
}

/// x' with x <= x', x' ^ y = 0, x' v y = z; extension vectors are drawn from
/// z's canonical basis in index order.
inline RightIdeal relative_complement(const RightIdeal& x, const RightIdeal& y, const RightIdeal& z) {
    check_compatible(x, y);
    check_compatible(x, z);
    if (!intersect(x, y).is_zero()) throw precondition_error("relative complement: x ^ y != 0");
    RightIdeal xy = sum(x, y);
    if (!z.contains(xy)) throw precondition_error("relative complement: x v y not below z");
    Mat acc = xy.basis();
    Mat ext = x.basis();
    size_t current = acc.cols();
    for (size_t j = 0; j < z.basis().cols() && current < z.dim(); ++j) {
        Mat cand = z.basis().column(j);
        Mat trial = acc.hstack(cand);
        if (trial.rank() == current + 1) {
            acc = trial;
            ext = ext.hstack(cand);
            ++current;
        }
    }
    return RightIdeal::span(ext);
}

// ---- idempotents from ideals -----------------------------------------------

/// Deterministic generator: project onto the canonical basis along the
/// coordinate subspace spanned by the non-pivot coordinates.
inline Idempotent idempotent_generator(const RightIdeal& i) {
    Field f = i.field();
    size_t n = i.n();
    const Mat& b = i.basis();
    size_t r = b.cols();
    // Pivot rows of the column-echelon basis carry an identity pattern.
    Mat sel(f, r, n);
    size_t row = 0;
    for (size_t j = 0; j < r; ++j) {
        while (row < n && b.at(row, j).is_zero()) ++row;
        sel.set(j, row, Scalar::of(f, 1));
        ++row;
    }
    return Idempotent(b * sel);
}

/// Generator of a left ideal: e with Re equal to the given row space.
inline Idempotent idempotent_generator(const LeftIdeal& l) {
    RightIdeal tr = RightIdeal::span(l.basis().transpose());
    return Idempotent(idempotent_generator(tr).mat().transpose());
}

/// f with lower <= f <= upper and im(f) = V.  Requires im(lower) <= V <=
/// im(upper).  The kernel is ker(upper) plus a complement of V chosen inside
/// ker(lower) ^ im(upper), extended in canonical basis order.
inline Idempotent idempotent_between(const Idempotent& lower, const Idempotent& upper, const RightIdeal& v) {
    Field f = v.field();
    size_t n = v.n();
    if (!idempotent_leq(lower, upper)) throw precondition_error("idempotent_between: lower is not below upper");
    RightIdeal im_lower = ideal_of(lower.mat());
    RightIdeal im_upper = ideal_of(upper.mat());
    if (!v.contains(im_lower) || !im_upper.contains(v))
        throw precondition_error("idempotent_between: target space out of range");
    // W = ker(lower) ^ im(upper), the admissible complement directions.
    RightIdeal w = intersect(r_ann(lower.mat()), im_upper);
    Mat acc = v.basis();
    Mat compl_cols(f, n, 0);
    size_t cur = acc.cols();
    for (size_t j = 0; j < w.basis().cols() && cur < im_upper.dim(); ++j) {
        Mat cand = w.basis().column(j);
        Mat trial = acc.hstack(cand);
        if (trial.rank() == cur + 1) {
            acc = trial;
            compl_cols = compl_cols.hstack(cand);
            ++cur;
        }
    }
    if (cur != im_upper.dim()) throw error("idempotent_between: complement extension failed");
    Mat ker_upper = kernel_basis(upper.mat());
    Mat t = v.basis().hstack(compl_cols).hstack(ker_upper);
    Mat tinv = *t.inverse();
    Mat proj(f, n, n);
    for (size_t c = 0; c < v.dim(); ++c)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                proj.set(i, j, proj.at(i, j) + v.basis().at(i, c) * tinv.at(c, j));
    return Idempotent(proj);
}

/// f <= e with im(f) = V (V inside im(e)).
inline Idempotent sub_idempotent(const RightIdeal& v, const Idempotent& e) {
    return idempotent_between(Idempotent::zero(v.field(), v.n()), e, v);
}

/// f with e <= f <= e2 and normalized rank exactly t (t*n integral).
inline Idempotent interpolate_idempotent(const Idempotent& e, const Idempotent& e2, const mpq_class& t) {
    Field f = e.mat().field();
    size_t n = e.n();
    if (!idempotent_leq(e, e2)) throw precondition_error("interpolate: e not below e'");
    mpq_class tn = t * static_cast<long>(n);
    if (tn.get_den() != 1)
        throw rank_not_representable("rank " + t.get_str() + " is not a multiple of 1/" + std::to_string(n));
    long target = tn.get_num().get_si();
    if (target < static_cast<long>(e.rank()) || target > static_cast<long>(e2.rank()))
        throw precondition_error("interpolate: target rank outside [rk e, rk e']");
    RightIdeal im_e = ideal_of(e.mat());
    RightIdeal w = intersect(r_ann(e.mat()), ideal_of(e2.mat()));
    Mat v = im_e.basis();
    size_t cur = v.cols();
    for (size_t j = 0; j < w.basis().cols() && cur < static_cast<size_t>(target); ++j) {
        Mat cand = w.basis().column(j);
        Mat trial = v.hstack(cand);
        if (trial.rank() == cur + 1) {
            v = trial;
            ++cur;
        }
    }
    if (cur != static_cast<size_t>(target)) throw error("interpolate: extension failed");
    return idempotent_between(e, e2, RightIdeal::span(v));
}

/// Pairwise orthogonal e_1..e_t with e_1 = e and rk(e_k) = 2^-k; needs
/// rk(e) = 1/2 and 2^t | n.
inline std::vector<Idempotent> dyadic_chain(const Idempotent& e, unsigned depth) {
    Field f = e.mat().field();
    size_t n = e.n();
    if (depth == 0) throw precondition_error("dyadic chain: depth must be positive");
    if (e.normalized_rank() != mpq_class(1, 2)) throw precondition_error("dyadic chain: rk(e) must be 1/2");
    if ((n >> depth) << depth != n || (n >> depth) == 0)
        throw rank_not_representable("dyadic chain: 2^depth must divide n");
    Idempotent onee = Idempotent::one(f, n);
    std::vector<Idempotent> chain;  // f_k, rank (2^k - 1)/2^k
    chain.push_back(e);
    for (unsigned k = 2; k <= depth; ++k) {
        mpq_class t(static_cast<long>((1l << k) - 1), static_cast<long>(1l << k));
        t.canonicalize();
        chain.push_back(interpolate_idempotent(chain.back(), onee, t));
    }
    std::vector<Idempotent> out;
    Mat prev = Mat::zero(f, n);
    for (unsigned k = 0; k < depth; ++k) {
        out.push_back(Idempotent(chain[k].mat() - prev));
        prev = chain[k].mat();
    }
    return out;
}

/// b with b*a = f; requires rAnn(a) inside (1-f)R, i.e. ker(a) <= ker(f).
inline Mat left_quotient(const Mat& a, const Idempotent& f) {
    Mat ker = kernel_basis(a);
    Mat img = f.mat() * ker;
    for (size_t j = 0; j < img.cols(); ++j) {
        bool zero = true;
        for (size_t i = 0; i < img.rows(); ++i)
            if (!img.at(i, j).is_zero()) zero = false;
        if (!zero) {
            std::string witness;
            for (size_t i = 0; i < ker.rows(); ++i) witness += ker.at(i, j).to_string() + (i + 1 < ker.rows() ? "," : "");
            throw precondition_error("left_quotient: rAnn(a) not contained in (1-f)R; witness kernel vector (" +
                                     witness + ")");
        }
    }
    auto b = solve_left(a, f.mat());
    if (!b) throw error("left_quotient: solve failed despite kernel inclusion");
    return *b;
}

}  // namespace rankring

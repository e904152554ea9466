#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace rankring {

namespace detail {

struct FpOps {
    uint64_t p;
    using E = uint64_t;
    E zero() const { return 0; }
    E one() const { return 1 % p; }
    bool is_zero(const E& a) const { return a == 0; }
    E add(const E& a, const E& b) const { return (a + b) % p; }
    E sub(const E& a, const E& b) const { return (a + p - b) % p; }
    E mul(const E& a, const E& b) const { return (a * b) % p; }
    E neg(const E& a) const { return (p - a % p) % p; }
    E inv(const E& a) const { return inv_mod(a, p); }
};

struct QOps {
    using E = mpq_class;
    E zero() const { return E(0); }
    E one() const { return E(1); }
    bool is_zero(const E& a) const { return a == 0; }
    E add(const E& a, const E& b) const { return E(a + b); }
    E sub(const E& a, const E& b) const { return E(a - b); }
    E mul(const E& a, const E& b) const { return E(a * b); }
    E neg(const E& a) const { return E(-a); }
    E inv(const E& a) const {
        if (a == 0) throw error("division by zero in Q");
        return E(1 / a);
    }
};

// In-place Gauss-Jordan with deterministic first-nonzero pivoting.
// Returns the pivot column indices in order.
template <class Ops>
std::vector<size_t> rref_inplace(const Ops& K, std::vector<typename Ops::E>& a, size_t rows, size_t cols) {
    std::vector<size_t> pivots;
    size_t r = 0;
    auto at = [&](size_t i, size_t j) -> typename Ops::E& { return a[i * cols + j]; };
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (!K.is_zero(at(i, c))) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        if (sel != r)
            for (size_t j = 0; j < cols; ++j) std::swap(at(sel, j), at(r, j));
        auto piv_inv = K.inv(at(r, c));
        for (size_t j = c; j < cols; ++j) at(r, j) = K.mul(at(r, j), piv_inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || K.is_zero(at(i, c))) continue;
            auto factor = at(i, c);
            for (size_t j = c; j < cols; ++j) at(i, j) = K.sub(at(i, j), K.mul(factor, at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class Ops>
std::vector<typename Ops::E> mat_mul(const Ops& K, const std::vector<typename Ops::E>& a,
                                     const std::vector<typename Ops::E>& b, size_t m, size_t n, size_t k) {
    std::vector<typename Ops::E> c(m * k, K.zero());
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) {
            const auto& aij = a[i * n + j];
            if (K.is_zero(aij)) continue;
            for (size_t l = 0; l < k; ++l) c[i * k + l] = K.add(c[i * k + l], K.mul(aij, b[j * k + l]));
        }
    return c;
}

}  // namespace detail

/// Dense exact matrix over F_p or Q.  Square at the public API surfaces that
/// model ring elements; rectangular internally (bases, solves).
class Mat {
public:
    Mat(Field f, size_t rows, size_t cols) : f_(f), rows_(rows), cols_(cols) {
        if (f.is_prime_field())
            fe_.assign(rows * cols, 0);
        else
            qe_.assign(rows * cols, mpq_class(0));
    }

    static Mat identity(Field f, size_t n) {
        Mat m(f, n, n);
        for (size_t i = 0; i < n; ++i) m.set(i, i, Scalar::of(f, 1));
        return m;
    }
    static Mat zero(Field f, size_t n) { return Mat(f, n, n); }

    /// Row-major integer literals, reduced into the field.
    static Mat of(Field f, size_t rows, size_t cols, std::initializer_list<long> entries) {
        if (entries.size() != rows * cols) throw mismatch_error("entry count mismatch");
        Mat m(f, rows, cols);
        size_t idx = 0;
        for (long v : entries) {
            m.set(idx / cols, idx % cols, Scalar::of(f, v));
            ++idx;
        }
        return m;
    }

    Field field() const { return f_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    size_t side() const {
        if (!is_square()) throw mismatch_error("square matrix required");
        return rows_;
    }

    Scalar at(size_t i, size_t j) const {
        assert(i < rows_ && j < cols_);
        if (f_.is_prime_field()) {
            Scalar s(f_);
            s = Scalar::of(f_, static_cast<long>(fe_[i * cols_ + j]));
            return s;
        }
        return Scalar::of(f_, qe_[i * cols_ + j]);
    }
    void set(size_t i, size_t j, const Scalar& v) {
        assert(i < rows_ && j < cols_);
        if (v.field() != f_) throw mismatch_error("field mismatch in matrix entry");
        if (f_.is_prime_field())
            fe_[i * cols_ + j] = v.residue();
        else
            qe_[i * cols_ + j] = v.rational();
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.f_ != b.f_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        return a.f_.is_prime_field() ? a.fe_ == b.fe_ : a.qe_ == b.qe_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    bool is_zero() const {
        if (f_.is_prime_field()) {
            for (auto e : fe_)
                if (e) return false;
        } else {
            for (const auto& e : qe_)
                if (e != 0) return false;
        }
        return true;
    }
    bool is_identity() const { return is_square() && *this == identity(f_, rows_); }

    Mat operator+(const Mat& o) const {
        check_same_shape(o);
        Mat r(f_, rows_, cols_);
        if (f_.is_prime_field()) {
            detail::FpOps K{f_.p()};
            for (size_t i = 0; i < fe_.size(); ++i) r.fe_[i] = K.add(fe_[i], o.fe_[i]);
        } else {
            detail::QOps K;
            for (size_t i = 0; i < qe_.size(); ++i) r.qe_[i] = K.add(qe_[i], o.qe_[i]);
        }
        return r;
    }
    Mat operator-(const Mat& o) const {
        check_same_shape(o);
        Mat r(f_, rows_, cols_);
        if (f_.is_prime_field()) {
            detail::FpOps K{f_.p()};
            for (size_t i = 0; i < fe_.size(); ++i) r.fe_[i] = K.sub(fe_[i], o.fe_[i]);
        } else {
            detail::QOps K;
            for (size_t i = 0; i < qe_.size(); ++i) r.qe_[i] = K.sub(qe_[i], o.qe_[i]);
        }
        return r;
    }
    Mat operator-() const {
        Mat r(f_, rows_, cols_);
        if (f_.is_prime_field()) {
            detail::FpOps K{f_.p()};
            for (size_t i = 0; i < fe_.size(); ++i) r.fe_[i] = K.neg(fe_[i]);
        } else {
            detail::QOps K;
            for (size_t i = 0; i < qe_.size(); ++i) r.qe_[i] = K.neg(qe_[i]);
        }
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (f_ != o.f_) throw mismatch_error("field mismatch in matrix product");
        if (cols_ != o.rows_) throw mismatch_error("shape mismatch in matrix product");
        Mat r(f_, rows_, o.cols_);
        if (f_.is_prime_field())
            r.fe_ = detail::mat_mul(detail::FpOps{f_.p()}, fe_, o.fe_, rows_, cols_, o.cols_);
        else
            r.qe_ = detail::mat_mul(detail::QOps{}, qe_, o.qe_, rows_, cols_, o.cols_);
        return r;
    }
    Mat scaled(const Scalar& c) const {
        Mat r(f_, rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j) * c);
        return r;
    }

    Mat transpose() const {
        Mat r(f_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
        return r;
    }

    Mat columns(const std::vector<size_t>& idx) const {
        Mat r(f_, rows_, idx.size());
        for (size_t j = 0; j < idx.size(); ++j)
            for (size_t i = 0; i < rows_; ++i) r.set(i, j, at(i, idx[j]));
        return r;
    }
    Mat top_rows(size_t k) const {
        Mat r(f_, k, cols_);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
        return r;
    }
    Mat hstack(const Mat& o) const {
        if (rows_ != o.rows_ || f_ != o.f_) throw mismatch_error("hstack shape mismatch");
        Mat r(f_, rows_, cols_ + o.cols_);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
            for (size_t j = 0; j < o.cols_; ++j) r.set(i, cols_ + j, o.at(i, j));
        }
        return r;
    }
    Mat column(size_t j) const { return columns({j}); }

    /// Reduced row echelon form; pivot column indices appended to *pivots.
    Mat rref(std::vector<size_t>* pivots = nullptr) const {
        Mat r(*this);
        std::vector<size_t> piv;
        if (f_.is_prime_field())
            piv = detail::rref_inplace(detail::FpOps{f_.p()}, r.fe_, rows_, cols_);
        else
            piv = detail::rref_inplace(detail::QOps{}, r.qe_, rows_, cols_);
        if (pivots) *pivots = std::move(piv);
        return r;
    }

    size_t rank() const {
        std::vector<size_t> piv;
        rref(&piv);
        return piv.size();
    }

    Scalar det() const {
        size_t n = side();
        // Plain elimination with division; the field makes it exact.
        Mat a(*this);
        Scalar d = Scalar::of(f_, 1);
        size_t r = 0;
        for (size_t c = 0; c < n; ++c) {
            size_t sel = n;
            for (size_t i = r; i < n; ++i)
                if (!a.at(i, c).is_zero()) {
                    sel = i;
                    break;
                }
            if (sel == n) return Scalar::of(f_, 0);
            if (sel != r) {
                for (size_t j = 0; j < n; ++j) {
                    Scalar t = a.at(sel, j);
                    a.set(sel, j, a.at(r, j));
                    a.set(r, j, t);
                }
                d = -d;
            }
            Scalar piv = a.at(r, c);
            d = d * piv;
            Scalar pinv = piv.inverse();
            for (size_t i = r + 1; i < n; ++i) {
                Scalar fct = a.at(i, c) * pinv;
                if (fct.is_zero()) continue;
                for (size_t j = c; j < n; ++j) a.set(i, j, a.at(i, j) - fct * a.at(r, j));
            }
            ++r;
        }
        return d;
    }

    std::optional<Mat> inverse() const {
        size_t n = side();
        std::vector<size_t> piv;
        Mat aug = hstack(identity(f_, n)).rref(&piv);
        if (piv.size() != n || piv.back() >= n) return std::nullopt;
        Mat inv(f_, n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) inv.set(i, j, aug.at(i, n + j));
        return inv;
    }
    bool is_invertible() const { return is_square() && rank() == rows_; }

    Mat pow(uint64_t e) const {
        Mat base(*this), r = identity(f_, side());
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < rows_; ++i) {
            s += i == 0 ? "[" : " ";
            for (size_t j = 0; j < cols_; ++j) {
                s += at(i, j).to_string();
                if (j + 1 < cols_) s += " ";
            }
            s += i + 1 < rows_ ? "\n" : "]";
        }
        return s;
    }

private:
    void check_same_shape(const Mat& o) const {
        if (f_ != o.f_) throw mismatch_error("field mismatch");
        if (rows_ != o.rows_ || cols_ != o.cols_) throw mismatch_error("shape mismatch");
    }
    Field f_;
    size_t rows_, cols_;
    std::vector<uint64_t> fe_;
    std::vector<mpq_class> qe_;
};

inline mpq_class normalized_rank(const Mat& a) {
    mpq_class q(static_cast<long>(a.rank()), static_cast<long>(a.side()));
    q.canonicalize();
    return q;
}

inline mpq_class rank_distance(const Mat& a, const Mat& b) { return normalized_rank(a - b); }

/// Canonical basis of the right kernel {v : Av = 0}, as columns.
inline Mat kernel_basis(const Mat& a) {
    std::vector<size_t> piv;
    Mat r = a.rref(&piv);
    std::vector<bool> is_piv(a.cols(), false);
    for (size_t c : piv) is_piv[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < a.cols(); ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    Mat k(a.field(), a.cols(), free_cols.size());
    for (size_t j = 0; j < free_cols.size(); ++j) {
        size_t fc = free_cols[j];
        k.set(fc, j, Scalar::of(a.field(), 1));
        for (size_t i = 0; i < piv.size(); ++i) k.set(piv[i], j, -r.at(i, fc));
    }
    return k;
}

/// Canonical reduced-column-echelon basis of the column space.
inline Mat column_space_basis(const Mat& a) {
    std::vector<size_t> piv;
    Mat r = a.transpose().rref(&piv);
    Mat b(a.field(), a.rows(), piv.size());
    for (size_t i = 0; i < piv.size(); ++i)
        for (size_t j = 0; j < a.rows(); ++j) b.set(j, i, r.at(i, j));
    return b;
}

/// Canonical reduced-row-echelon basis of the row space (rows of the result).
inline Mat row_space_basis(const Mat& a) {
    std::vector<size_t> piv;
    Mat r = a.rref(&piv);
    return r.top_rows(piv.size());
}

/// Particular solution of AX = B (free variables zero), or nullopt.
inline std::optional<Mat> solve_right(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw mismatch_error("solve shape mismatch");
    std::vector<size_t> piv;
    Mat r = a.hstack(b).rref(&piv);
    size_t ra = 0;
    for (size_t c : piv)
        if (c < a.cols()) ++ra;
    if (ra != piv.size()) return std::nullopt;  // pivot in the B block: inconsistent
    Mat x(a.field(), a.cols(), b.cols());
    for (size_t i = 0; i < piv.size(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) x.set(piv[i], j, r.at(i, a.cols() + j));
    return x;
}

/// Particular solution of XA = B, or nullopt.
inline std::optional<Mat> solve_left(const Mat& a, const Mat& b) {
    auto xt = solve_right(a.transpose(), b.transpose());
    if (!xt) return std::nullopt;
    return xt->transpose();
}

/// A = P * Q with P of full column rank and Q of full row rank (rank r).
inline std::pair<Mat, Mat> rank_factorization(const Mat& a) {
    std::vector<size_t> piv;
    Mat r = a.rref(&piv);
    return {a.columns(piv), r.top_rows(piv.size())};
}

/// Quasi-inverse: B with ABA = A and BAB = B, from a rank factorization.
inline Mat quasi_inverse(const Mat& a) {
    size_t n = a.side();
    if (a.rank() == 0) return Mat::zero(a.field(), n);
    auto [p, q] = rank_factorization(a);
    size_t r = p.cols();
    Mat ir = Mat::identity(a.field(), r);
    Mat qr = *solve_right(q, ir);  // Q * qr = I_r
    Mat pl = *solve_left(p, ir);   // pl * P = I_r
    return qr * pl;
}

}  // namespace rankring

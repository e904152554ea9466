#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace rankring {

/// Dense univariate polynomial over the field, coefficients low to high,
/// trailing coefficient nonzero unless the polynomial is zero.
class Poly {
public:
    explicit Poly(Field f) : f_(f) {}

    static Poly zero(Field f) { return Poly(f); }
    static Poly constant(const Scalar& c) {
        Poly p(c.field());
        if (!c.is_zero()) p.c_.push_back(c);
        return p;
    }
    static Poly one(Field f) { return constant(Scalar::of(f, 1)); }
    static Poly X(Field f) { return of(f, {0, 1}); }
    static Poly of(Field f, std::initializer_list<long> coeffs_low_to_high) {
        Poly p(f);
        for (long v : coeffs_low_to_high) p.c_.push_back(Scalar::of(f, v));
        p.trim();
        return p;
    }
    static Poly from_coeffs(Field f, std::vector<Scalar> coeffs) {
        Poly p(f);
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    Field field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    /// Degree of a nonzero polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Scalar coeff(size_t i) const { return i < c_.size() ? c_[i] : Scalar::of(f_, 0); }
    Scalar leading() const {
        if (is_zero()) throw error("zero polynomial has no leading coefficient");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back().is_one(); }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.f_ != b.f_ || a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator+(const Poly& o) const {
        check(o);
        Poly r(f_);
        size_t n = std::max(c_.size(), o.c_.size());
        for (size_t i = 0; i < n; ++i) r.c_.push_back(coeff(i) + o.coeff(i));
        r.trim();
        return r;
    }
    Poly operator-(const Poly& o) const {
        check(o);
        Poly r(f_);
        size_t n = std::max(c_.size(), o.c_.size());
        for (size_t i = 0; i < n; ++i) r.c_.push_back(coeff(i) - o.coeff(i));
        r.trim();
        return r;
    }
    Poly operator-() const {
        Poly r(f_);
        for (const auto& c : c_) r.c_.push_back(-c);
        return r;
    }
    Poly operator*(const Poly& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return zero(f_);
        Poly r(f_);
        r.c_.assign(c_.size() + o.c_.size() - 1, Scalar::of(f_, 0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        }
        r.trim();
        return r;
    }
    Poly scaled(const Scalar& s) const {
        Poly r(f_);
        for (const auto& c : c_) r.c_.push_back(c * s);
        r.trim();
        return r;
    }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        check(d);
        if (d.is_zero()) throw error("polynomial division by zero");
        Poly q(f_), r(*this);
        if (r.degree() < d.degree()) return {q, r};
        q.c_.assign(r.c_.size() - d.c_.size() + 1, Scalar::of(f_, 0));
        Scalar lead_inv = d.leading().inverse();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            size_t shift = r.c_.size() - d.c_.size();
            Scalar c = r.leading() * lead_inv;
            q.c_[shift] = c;
            for (size_t i = 0; i < d.c_.size(); ++i) r.c_[shift + i] = r.c_[shift + i] - c * d.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(leading().inverse());
    }

    Poly derivative() const {
        Poly r(f_);
        for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * Scalar::of(f_, static_cast<long>(i)));
        r.trim();
        return r;
    }

    Scalar eval(const Scalar& x) const {
        Scalar acc = Scalar::of(f_, 0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    Mat eval(const Mat& a) const {
        size_t n = a.side();
        Mat acc = Mat::zero(f_, n);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * a + Mat::identity(f_, n).scaled(c_[i]);
        return acc;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (i == 0 || !c_[i].is_one()) s += c_[i].to_string();
            if (i > 0) {
                if (!c_[i].is_one()) s += "*";
                s += "X";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void check(const Poly& o) const {
        if (f_ != o.f_) throw mismatch_error("field mismatch in polynomial arithmetic");
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    Field f_;
    std::vector<Scalar> c_;
};

inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

inline Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
    return ((a * b) / gcd(a, b)).monic();
}

/// Monic minimal polynomial of a vector v under A: least k with A^k v dependent
/// on the earlier Krylov vectors.
inline Poly vector_min_poly(const Mat& a, const Mat& v) {
    Field f = a.field();
    size_t n = a.side();
    Mat krylov = v;  // n x (k) columns v, Av, ...
    Mat w = v;
    for (size_t k = 1; k <= n + 1; ++k) {
        w = a * w;
        if (auto x = solve_right(krylov, w)) {
            std::vector<Scalar> cs;
            for (size_t i = 0; i < k; ++i) cs.push_back(-x->at(i, 0));
            cs.push_back(Scalar::of(f, 1));
            return Poly::from_coeffs(f, cs);
        }
        krylov = krylov.hstack(w);
    }
    throw error("vector minimal polynomial not found");  // unreachable
}

/// Monic generator of {f : f(A) = 0}.
inline Poly minimal_polynomial(const Mat& a) {
    Field f = a.field();
    size_t n = a.side();
    Poly m = Poly::one(f);
    for (size_t i = 0; i < n; ++i) {
        Mat e(f, n, 1);
        e.set(i, 0, Scalar::of(f, 1));
        m = lcm(m, vector_min_poly(a, e));
        if (m.degree() == static_cast<int>(n)) break;
    }
    return m.monic();
}

/// det(X*I - A), computed fraction-free over K[X] (Bareiss).
inline Poly char_poly(const Mat& a) {
    Field f = a.field();
    size_t n = a.side();
    std::vector<Poly> m(n * n, Poly::zero(f));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Poly e = Poly::constant(-a.at(i, j));
            if (i == j) e = e + Poly::X(f);
            m[i * n + j] = e;
        }
    bool neg = false;
    Poly prev = Poly::one(f);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k * n + k].is_zero()) {
            size_t sel = n;
            for (size_t i = k + 1; i < n; ++i)
                if (!m[i * n + k].is_zero()) {
                    sel = i;
                    break;
                }
            if (sel == n) return Poly::zero(f);  // cannot happen for X*I - A
            for (size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[sel * n + j]);
            neg = !neg;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
                m[i * n + j] = num / prev;  // exact in an integral domain
            }
        prev = m[k * n + k];
    }
    Poly d = m[(n - 1) * n + (n - 1)];
    return neg ? -d : d;
}

/// Invariant factors d_1 | d_2 | ... | d_n of X*I - A (Smith form over K[X]),
/// monic, units included.  Equality of these lists is exactly similarity.
inline std::vector<Poly> invariant_factors(const Mat& a) {
    Field f = a.field();
    size_t n = a.side();
    std::vector<Poly> m(n * n, Poly::zero(f));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Poly e = Poly::constant(-a.at(i, j));
            if (i == j) e = e + Poly::X(f);
            m[i * n + j] = e;
        }
    auto at = [&](size_t i, size_t j) -> Poly& { return m[i * n + j]; };
    std::vector<Poly> d;
    for (size_t t = 0; t < n; ++t) {
        // Find a nonzero entry of minimal degree in the trailing block.
        bool nonzero = true;
        while (nonzero) {
            int best = -1;
            size_t bi = t, bj = t;
            for (size_t i = t; i < n; ++i)
                for (size_t j = t; j < n; ++j)
                    if (!at(i, j).is_zero() && (best < 0 || at(i, j).degree() < best)) {
                        best = at(i, j).degree();
                        bi = i;
                        bj = j;
                    }
            if (best < 0) {
                nonzero = false;
                break;
            }
            if (bi != t)
                for (size_t j = t; j < n; ++j) std::swap(at(t, j), at(bi, j));
            if (bj != t)
                for (size_t i = t; i < n; ++i) std::swap(at(i, t), at(i, bj));
            bool clean = true;
            for (size_t i = t + 1; i < n; ++i) {
                if (at(i, t).is_zero()) continue;
                auto [q, r] = at(i, t).divmod(at(t, t));
                for (size_t j = t; j < n; ++j) at(i, j) = at(i, j) - q * at(t, j);
                if (!r.is_zero()) clean = false;
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (at(t, j).is_zero()) continue;
                auto [q, r] = at(t, j).divmod(at(t, t));
                for (size_t i = t; i < n; ++i) at(i, j) = at(i, j) - at(i, t) * q;
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;
            bool row_col_zero = true;
            for (size_t i = t + 1; i < n && row_col_zero; ++i)
                if (!at(i, t).is_zero()) row_col_zero = false;
            for (size_t j = t + 1; j < n && row_col_zero; ++j)
                if (!at(t, j).is_zero()) row_col_zero = false;
            if (!row_col_zero) continue;
            // Enforce divisibility of the remaining block by the pivot.
            bool divides = true;
            for (size_t i = t + 1; i < n && divides; ++i)
                for (size_t j = t + 1; j < n && divides; ++j)
                    if (!(at(i, j) % at(t, t)).is_zero()) {
                        for (size_t l = t; l < n; ++l) at(t, l) = at(t, l) + at(i, l);
                        divides = false;
                    }
            if (divides) break;
        }
        if (!nonzero) {
            for (size_t r = t; r < n; ++r) d.push_back(Poly::zero(f));
            break;
        }
        d.push_back(at(t, t).monic());
    }
    return d;
}

/// Rational-canonical-form equality: same invariant factor lists.
inline bool similar(const Mat& a, const Mat& b) {
    if (a.field() != b.field() || a.side() != b.side()) return false;
    return invariant_factors(a) == invariant_factors(b);
}

}  // namespace rankring

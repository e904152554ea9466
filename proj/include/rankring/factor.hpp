#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "polynomial.hpp"

namespace rankring {

namespace detail {

// Canonical order on monic polynomials: by degree, then coefficients high to low.
inline bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        Scalar x = a.coeff(static_cast<size_t>(i)), y = b.coeff(static_cast<size_t>(i));
        if (x != y) {
            if (a.field().is_prime_field()) return x.residue() < y.residue();
            return x.rational() < y.rational();
        }
    }
    return false;
}

inline Poly pth_root(const Poly& g) {
    // g'(X) = 0 over F_p forces g in K[X^p]; p-th roots of F_p coefficients
    // are the coefficients themselves.
    Field f = g.field();
    uint32_t p = f.p();
    std::vector<Scalar> cs;
    for (int i = 0; i <= g.degree(); i += static_cast<int>(p)) cs.push_back(g.coeff(static_cast<size_t>(i)));
    return Poly::from_coeffs(f, cs);
}

inline Poly xq_mod(const Poly& f, uint64_t q) {
    // X^q mod f by square-and-multiply on residues.
    Field k = f.field();
    Poly base = Poly::X(k) % f;
    Poly acc = Poly::one(k);
    while (q) {
        if (q & 1) acc = (acc * base) % f;
        base = (base * base) % f;
        q >>= 1;
    }
    return acc;
}

// Berlekamp splitting of a monic squarefree polynomial over F_p.
inline void berlekamp_squarefree(const Poly& f, std::vector<Poly>& out) {
    Field k = f.field();
    uint32_t p = k.p();
    int d = f.degree();
    if (d <= 1) {
        out.push_back(f);
        return;
    }
    // Frobenius matrix on K[X]/(f): column i = coeffs of X^{ip} mod f.
    Mat m(k, static_cast<size_t>(d), static_cast<size_t>(d));
    Poly xp = xq_mod(f, p);
    Poly pow = Poly::one(k);
    for (int i = 0; i < d; ++i) {
        for (int r = 0; r < d; ++r) m.set(static_cast<size_t>(r), static_cast<size_t>(i), pow.coeff(static_cast<size_t>(r)));
        pow = (pow * xp) % f;
    }
    Mat ker = kernel_basis(m - Mat::identity(k, static_cast<size_t>(d)));
    size_t r = ker.cols();  // number of irreducible factors
    if (r == 1) {
        out.push_back(f);
        return;
    }
    std::vector<Poly> work{f};
    for (size_t b = 0; b < ker.cols() && work.size() < r; ++b) {
        std::vector<Scalar> vc;
        for (int i = 0; i < d; ++i) vc.push_back(ker.at(static_cast<size_t>(i), b));
        Poly v = Poly::from_coeffs(k, vc);
        if (v.degree() <= 0) continue;
        std::vector<Poly> next;
        for (const Poly& u : work) {
            if (u.degree() == 1) {
                next.push_back(u);
                continue;
            }
            std::vector<Poly> pieces;
            Poly rest = u;
            for (uint32_t c = 0; c < p && rest.degree() > 0; ++c) {
                Poly g = gcd(rest, (v - Poly::constant(Scalar::of(k, static_cast<long>(c)))) % u);
                if (g.degree() > 0 && g.degree() < rest.degree()) {
                    pieces.push_back(g);
                    rest = rest / g;
                } else if (g.degree() == rest.degree()) {
                    break;
                }
            }
            if (rest.degree() > 0) pieces.push_back(rest.monic());
            for (auto& piece : pieces) next.push_back(piece.monic());
        }
        work = std::move(next);
    }
    for (auto& u : work) out.push_back(u);
}

}  // namespace detail

/// Monic irreducible factors with multiplicities; the product times the leading
/// coefficient reproduces the input exactly.  Prime fields only.
inline std::vector<std::pair<Poly, unsigned>> poly_factor(const Poly& f) {
    if (f.field().is_rationals()) throw unsupported_field("factorization over Q is unsupported");
    if (f.is_zero()) throw precondition_error("cannot factor the zero polynomial");

    std::map<std::vector<uint64_t>, std::pair<Poly, unsigned>> acc;
    auto add = [&](const Poly& q, unsigned mult) {
        std::vector<uint64_t> key;
        for (int i = 0; i <= q.degree(); ++i) key.push_back(q.coeff(static_cast<size_t>(i)).residue());
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, std::make_pair(q, mult));
        else
            it->second.second += mult;
    };

    // Recursive squarefree reduction: split off gcd(f, f'), take p-th roots
    // when the derivative vanishes, Berlekamp on the squarefree parts.
    struct Rec {
        std::function<void(const Poly&, unsigned)> run;
    } rec;
    rec.run = [&](const Poly& g, unsigned mult) {
        Poly h = g.monic();
        if (h.degree() < 1) return;
        Poly d = h.derivative();
        if (d.is_zero()) {
            rec.run(detail::pth_root(h), mult * h.field().p());
            return;
        }
        Poly c = gcd(h, d);
        if (c.is_one()) {
            std::vector<Poly> irr;
            detail::berlekamp_squarefree(h, irr);
            for (const auto& q : irr) add(q.monic(), mult);
            return;
        }
        rec.run(c, mult);
        rec.run(h / c, mult);
    };
    rec.run(f, 1);

    std::vector<std::pair<Poly, unsigned>> out;
    for (auto& [key, v] : acc) out.push_back(v);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return detail::poly_less(a.first, b.first); });
    return out;
}

}  // namespace rankring

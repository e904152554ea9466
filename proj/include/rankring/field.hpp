#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace rankring {

// Error hierarchy shared across the library.  CLI exit codes key off these:
// precondition_error -> 2, budget_exhausted -> 3, anything else -> 1.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precondition_error : error {
    using error::error;
};
struct rank_not_representable : precondition_error {
    using precondition_error::precondition_error;
};
struct unsupported_field : precondition_error {
    using precondition_error::precondition_error;
};
struct mismatch_error : precondition_error {
    using precondition_error::precondition_error;
};
struct enumeration_guard_error : precondition_error {
    using precondition_error::precondition_error;
};
struct budget_exhausted : error {
    uint64_t attempts;
    explicit budget_exhausted(uint64_t n)
        : error("search budget exhausted after " + std::to_string(n) + " attempts"), attempts(n) {}
};

namespace detail {

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

/// Coefficient field: F_p for a prime p < 2^16, or the rationals.
class Field {
public:
    enum class Kind : uint8_t { prime, rationals };

    static Field fp(uint32_t p) {
        if (p >= (1u << 16)) throw precondition_error("prime modulus must be < 2^16");
        if (!detail::is_prime_u32(p)) throw precondition_error("modulus " + std::to_string(p) + " is not prime");
        return Field(Kind::prime, p);
    }
    static Field rationals() { return Field(Kind::rationals, 0); }

    Kind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == Kind::prime; }
    bool is_rationals() const { return kind_ == Kind::rationals; }
    uint32_t p() const { return p_; }
    uint32_t characteristic() const { return is_prime_field() ? p_ : 0; }

    friend bool operator==(const Field& a, const Field& b) { return a.kind_ == b.kind_ && a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

    std::string to_string() const { return is_prime_field() ? "F" + std::to_string(p_) : "Q"; }

private:
    Field(Kind k, uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    uint32_t p_;
};

namespace detail {

inline uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

inline uint64_t inv_mod(uint64_t a, uint64_t p) {
    if (a == 0) throw error("division by zero in F_p");
    return pow_mod(a, p - 2, p);  // p prime
}

}  // namespace detail

/// Exact field element: least nonnegative residue mod p, or a reduced fraction.
class Scalar {
public:
    explicit Scalar(Field f) : f_(f), r_(0) {}

    static Scalar of(Field f, long v) {
        Scalar s(f);
        if (f.is_prime_field()) {
            long p = static_cast<long>(f.p());
            long m = ((v % p) + p) % p;
            s.r_ = static_cast<uint64_t>(m);
        } else {
            s.q_ = v;
        }
        return s;
    }
    static Scalar of(Field f, const mpq_class& v) {
        if (!f.is_rationals()) throw mismatch_error("rational literal used with a prime field");
        Scalar s(f);
        s.q_ = v;
        s.q_.canonicalize();
        return s;
    }

    Field field() const { return f_; }
    bool is_zero() const { return f_.is_prime_field() ? r_ == 0 : q_ == 0; }
    bool is_one() const { return f_.is_prime_field() ? r_ == 1 % f_.p() : q_ == 1; }

    uint64_t residue() const { return r_; }
    const mpq_class& rational() const { return q_; }

    Scalar operator+(const Scalar& o) const {
        check(o);
        Scalar s(f_);
        if (f_.is_prime_field())
            s.r_ = (r_ + o.r_) % f_.p();
        else {
            s.q_ = q_ + o.q_;
            s.q_.canonicalize();
        }
        return s;
    }
    Scalar operator-(const Scalar& o) const {
        check(o);
        Scalar s(f_);
        if (f_.is_prime_field())
            s.r_ = (r_ + f_.p() - o.r_) % f_.p();
        else {
            s.q_ = q_ - o.q_;
            s.q_.canonicalize();
        }
        return s;
    }
    Scalar operator*(const Scalar& o) const {
        check(o);
        Scalar s(f_);
        if (f_.is_prime_field())
            s.r_ = (r_ * o.r_) % f_.p();
        else {
            s.q_ = q_ * o.q_;
            s.q_.canonicalize();
        }
        return s;
    }
    Scalar operator-() const {
        Scalar s(f_);
        if (f_.is_prime_field())
            s.r_ = (f_.p() - r_) % f_.p();
        else
            s.q_ = -q_;
        return s;
    }
    Scalar inverse() const {
        Scalar s(f_);
        if (f_.is_prime_field())
            s.r_ = detail::inv_mod(r_, f_.p());
        else {
            if (q_ == 0) throw error("division by zero in Q");
            s.q_ = 1 / q_;
            s.q_.canonicalize();
        }
        return s;
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        a.check(b);
        return a.f_.is_prime_field() ? a.r_ == b.r_ : a.q_ == b.q_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical text form: residue for F_p; "num" or "num/den" for Q.
    std::string to_string() const {
        if (f_.is_prime_field()) return std::to_string(r_);
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_str();
    }

private:
    void check(const Scalar& o) const {
        if (f_ != o.f_) throw mismatch_error("field mismatch in scalar arithmetic");
    }
    Field f_;
    uint64_t r_;
    mpq_class q_;
};

}  // namespace rankring

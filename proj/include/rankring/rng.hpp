#pragma once

#include <cstdint>

#include "matrix.hpp"

namespace rankring {

/// Deterministic generator (splitmix64).  Every randomized operation takes one
/// of these explicitly; identical seeds replay identical outputs.
class RandomSource {
public:
    explicit RandomSource(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Uniform-enough value in [0, bound); reduction by mod, documented as part
    /// of the fixed algorithm.
    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

    Scalar scalar(Field f) {
        if (f.is_prime_field()) return Scalar::of(f, static_cast<long>(below(f.p())));
        // Small rationals: numerator in [-9, 9], denominator in [1, 9].
        long num = static_cast<long>(below(19)) - 9;
        long den = static_cast<long>(below(9)) + 1;
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar::of(f, q);
    }

    Mat matrix(Field f, size_t rows, size_t cols) {
        Mat m(f, rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) m.set(i, j, scalar(f));
        return m;
    }
    Mat square(Field f, size_t n) { return matrix(f, n, n); }

    Mat invertible(Field f, size_t n) {
        for (int tries = 0; tries < 1000; ++tries) {
            Mat m = square(f, n);
            if (m.is_invertible()) return m;
        }
        throw error("failed to sample an invertible matrix");
    }

    /// Determinant-one sample: invertible draw with one row rescaled.
    Mat special_linear(Field f, size_t n) {
        Mat m = invertible(f, n);
        Scalar dinv = m.det().inverse();
        for (size_t j = 0; j < n; ++j) m.set(0, j, m.at(0, j) * dinv);
        return m;
    }

private:
    uint64_t state_;
};

}  // namespace rankring

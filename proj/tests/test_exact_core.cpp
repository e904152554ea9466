#include <catch2/catch_amalgamated.hpp>

#include "rankring/factor.hpp"
#include "rankring/matrix.hpp"
#include "rankring/polynomial.hpp"
#include "rankring/rng.hpp"

using namespace rankring;

namespace {

Mat companion(const Poly& p) {
    // Companion matrix of a monic polynomial, the test-side oracle for
    // minimal polynomials.
    Field f = p.field();
    size_t n = static_cast<size_t>(p.degree());
    Mat c(f, n, n);
    for (size_t i = 1; i < n; ++i) c.set(i, i - 1, Scalar::of(f, 1));
    for (size_t i = 0; i < n; ++i) c.set(i, n - 1, -p.coeff(i));
    return c;
}

}  // namespace

TEST_CASE("rank and normalized rank") {
    Field f5 = Field::fp(5);
    CHECK(Mat::identity(f5, 3).rank() == 3);
    CHECK(normalized_rank(Mat::identity(f5, 3)) == mpq_class(1));

    Field f2 = Field::fp(2);
    Mat e12 = Mat::of(f2, 2, 2, {0, 1, 0, 0});
    CHECK(e12.rank() == 1);
    CHECK(normalized_rank(e12) == mpq_class(1, 2));

    Field q = Field::rationals();
    CHECK(Mat::zero(q, 4).rank() == 0);
    CHECK(normalized_rank(Mat::zero(q, 4)) == 0);
}

TEST_CASE("invertibility is full rank") {
    RandomSource rng(11);
    Field f3 = Field::fp(3);
    for (int t = 0; t < 50; ++t) {
        Mat a = rng.square(f3, 4);
        CHECK(a.is_invertible() == (normalized_rank(a) == 1));
        if (auto inv = a.inverse()) CHECK((a * *inv).is_identity());
    }
}

TEST_CASE("quasi-inverse") {
    Field f3 = Field::fp(3);
    Mat d = Mat::of(f3, 2, 2, {1, 0, 0, 0});
    CHECK(quasi_inverse(d) == d);

    Field f2 = Field::fp(2);
    Mat a = Mat::of(f2, 2, 2, {0, 1, 0, 0});
    Mat b = quasi_inverse(a);
    CHECK(b == Mat::of(f2, 2, 2, {0, 0, 1, 0}));
    CHECK(a * b * a == a);
    CHECK(b * a * b == b);

    RandomSource rng(7);
    Field f5 = Field::fp(5);
    Mat g = rng.invertible(f5, 3);
    CHECK(quasi_inverse(g) == *g.inverse());
}

TEST_CASE("quasi-inverse laws on random matrices") {
    RandomSource rng(23);
    for (Field f : {Field::fp(2), Field::fp(5), Field::rationals()}) {
        for (int t = 0; t < 40; ++t) {
            Mat a = rng.square(f, 4);
            Mat b = quasi_inverse(a);
            CHECK(a * b * a == a);
            CHECK(b * a * b == b);
            CHECK(b.rank() == a.rank());
            Mat ab = a * b, ba = b * a;
            CHECK(ab * ab == ab);
            CHECK(ba * ba == ba);
        }
    }
}

TEST_CASE("rank distance") {
    Field f5 = Field::fp(5);
    RandomSource rng(3);
    Mat a = rng.square(f5, 4);
    CHECK(rank_distance(a, a) == 0);

    Mat one = Mat::identity(f5, 3);
    Mat d = Mat::of(f5, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0});
    CHECK(rank_distance(one, d) == mpq_class(1, 3));

    for (int t = 0; t < 200; ++t) {
        Mat x = rng.square(f5, 4), y = rng.square(f5, 4), z = rng.square(f5, 4);
        CHECK(rank_distance(x, z) <= rank_distance(x, y) + rank_distance(y, z));
    }
}

TEST_CASE("rank subadditivity and product bound") {
    RandomSource rng(5);
    for (Field f : {Field::fp(2), Field::fp(3), Field::rationals()}) {
        for (int t = 0; t < 60; ++t) {
            Mat a = rng.square(f, 4), b = rng.square(f, 4);
            CHECK(normalized_rank(a + b) <= normalized_rank(a) + normalized_rank(b));
            mpq_class pr = normalized_rank(a * b);
            CHECK(pr <= normalized_rank(a));
            CHECK(pr <= normalized_rank(b));
        }
    }
}

TEST_CASE("minimal polynomial") {
    Field f3 = Field::fp(3);
    CHECK(minimal_polynomial(Mat::identity(f3, 3)) == Poly::of(f3, {-1, 1}));

    Field f2 = Field::fp(2);
    Mat e12 = Mat::of(f2, 2, 2, {0, 1, 0, 0});
    CHECK(minimal_polynomial(e12) == Poly::of(f2, {0, 0, 1}));

    Poly p = Poly::of(f3, {1, 0, 1});  // X^2 + 1
    CHECK(minimal_polynomial(companion(p)) == p);
}

TEST_CASE("minimal polynomial divides the characteristic polynomial") {
    RandomSource rng(17);
    for (Field f : {Field::fp(2), Field::fp(5), Field::rationals()}) {
        for (int t = 0; t < 25; ++t) {
            Mat a = rng.square(f, 4);
            Poly mp = minimal_polynomial(a);
            Poly cp = char_poly(a);
            CHECK((cp % mp).is_zero());
            CHECK(mp.eval(a).is_zero());
            CHECK(cp.degree() == 4);
        }
    }
}

TEST_CASE("invariant factors characterize similarity") {
    Field f3 = Field::fp(3);
    RandomSource rng(29);
    Mat a = rng.square(f3, 4);
    Mat g = rng.invertible(f3, 4);
    Mat b = g * a * *g.inverse();
    CHECK(similar(a, b));
    Poly prod = Poly::one(f3);
    for (const Poly& d : invariant_factors(a)) prod = prod * d;
    CHECK(prod == char_poly(a).monic());
}

TEST_CASE("polynomial factorization") {
    Field f3 = Field::fp(3);
    auto fs = poly_factor(Poly::of(f3, {-1, 0, 1}));  // X^2 - 1 = (X+1)(X+2) over F_3
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].second == 1);
    CHECK(fs[1].second == 1);
    CHECK(fs[0].first * fs[1].first == Poly::of(f3, {-1, 0, 1}));

    Field f2 = Field::fp(2);
    auto fs2 = poly_factor(Poly::of(f2, {0, 0, 1}));  // X^2
    REQUIRE(fs2.size() == 1);
    CHECK(fs2[0].first == Poly::X(f2));
    CHECK(fs2[0].second == 2);
}

TEST_CASE("X^4+X+1 over F_2 is irreducible") {
    Field f2 = Field::fp(2);
    Poly p = Poly::of(f2, {1, 1, 0, 0, 1});
    // Brute-force oracle: no monic divisor of degree 1 or 2.
    for (int d = 1; d <= 2; ++d) {
        for (int mask = 0; mask < (1 << d); ++mask) {
            std::vector<Scalar> cs;
            for (int i = 0; i < d; ++i) cs.push_back(Scalar::of(f2, (mask >> i) & 1));
            cs.push_back(Scalar::of(f2, 1));
            Poly q = Poly::from_coeffs(f2, cs);
            CHECK_FALSE((p % q).is_zero());
        }
    }
    auto fs = poly_factor(p);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].first == p);
    CHECK(fs[0].second == 1);
}

TEST_CASE("factorization reassembles exactly") {
    RandomSource rng(41);
    for (uint32_t p : {2u, 3u, 5u}) {
        Field f = Field::fp(p);
        for (int t = 0; t < 30; ++t) {
            std::vector<Scalar> cs;
            size_t deg = 1 + rng.below(6);
            for (size_t i = 0; i < deg; ++i) cs.push_back(rng.scalar(f));
            cs.push_back(Scalar::of(f, 1 + static_cast<long>(rng.below(p - 1 ? p - 1 : 1))));
            Poly q = Poly::from_coeffs(f, cs);
            if (q.is_zero()) continue;
            Poly prod = Poly::constant(q.leading());
            for (auto& [irr, mult] : poly_factor(q)) {
                CHECK(irr.is_monic());
                for (unsigned k = 0; k < mult; ++k) prod = prod * irr;
            }
            CHECK(prod == q);
        }
    }
}

TEST_CASE("factorization rejects rationals and zero") {
    Field q = Field::rationals();
    CHECK_THROWS_AS(poly_factor(Poly::of(q, {1, 1})), unsupported_field);
    CHECK_THROWS_AS(poly_factor(Poly::zero(Field::fp(3))), precondition_error);
}

TEST_CASE("deterministic rng replay") {
    RandomSource a(99), b(99);
    Field f7 = Field::fp(7);
    CHECK(a.square(f7, 3) == b.square(f7, 3));
    CHECK(a.next() == b.next());
}

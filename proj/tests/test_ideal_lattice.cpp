#include <catch2/catch_amalgamated.hpp>

#include "rankring/ideal.hpp"
#include "rankring/rng.hpp"

using namespace rankring;

TEST_CASE("ideal_of and idempotent_generator") {
    Field f2 = Field::fp(2);
    CHECK(ideal_of(Mat::zero(f2, 2)) == RightIdeal::zero(f2, 2));
    CHECK(idempotent_generator(RightIdeal::zero(f2, 2)).mat().is_zero());

    CHECK(ideal_of(Mat::identity(f2, 2)) == RightIdeal::full(f2, 2));
    CHECK(idempotent_generator(RightIdeal::full(f2, 2)).mat().is_identity());

    Mat a = Mat::of(f2, 2, 2, {1, 1, 0, 0});
    RightIdeal i = ideal_of(a);
    CHECK(i.dim() == 1);
    CHECK(i.basis() == Mat::of(f2, 2, 1, {1, 0}));
    Idempotent e = idempotent_generator(i);
    CHECK(e.mat() * e.mat() == e.mat());
    CHECK(ideal_of(e.mat()) == i);
    CHECK(e.mat() == Mat::of(f2, 2, 2, {1, 0, 0, 0}));
}

TEST_CASE("round trip ideal -> generator -> ideal") {
    RandomSource rng(13);
    for (Field f : {Field::fp(3), Field::rationals()}) {
        for (int t = 0; t < 40; ++t) {
            Mat a = rng.square(f, 5);
            RightIdeal i = ideal_of(a);
            Idempotent e = idempotent_generator(i);
            CHECK(ideal_of(e.mat()) == i);
            CHECK(e.rank() == i.dim());
        }
    }
}

TEST_CASE("annihilators") {
    Field f3 = Field::fp(3);
    RandomSource rng(19);
    Mat g = rng.invertible(f3, 3);
    CHECK(r_ann(g) == RightIdeal::zero(f3, 3));

    Mat d = Mat::of(f3, 2, 2, {1, 0, 0, 0});
    CHECK(r_ann(d).basis() == Mat::of(f3, 2, 1, {0, 1}));

    for (int t = 0; t < 60; ++t) {
        Mat a = rng.square(f3, 4);
        mpq_class nr(static_cast<long>(a.rank()), 4);
        nr.canonicalize();
        CHECK(r_ann(a).delta() + nr == 1);
    }
}

TEST_CASE("annihilator duality is an order-reversing bijection") {
    RandomSource rng(31);
    Field f2 = Field::fp(2);
    for (int t = 0; t < 60; ++t) {
        Mat a = rng.square(f2, 5);
        RightIdeal i = ideal_of(a);
        CHECK(r_ann(l_ann(i)) == i);
        LeftIdeal li = left_ideal_of(a);
        CHECK(l_ann(r_ann(li)) == li);
        // e -> 1 - e realizes the bijection on generators.
        Idempotent e = idempotent_generator(i);
        CHECK(l_ann(i) == left_ideal_of(Mat::identity(f2, 5) - e.mat()));
    }
}

TEST_CASE("lattice sum, intersection, dimension") {
    Field f2 = Field::fp(2);
    RandomSource rng(7);
    Mat a = rng.square(f2, 4);
    RightIdeal i = ideal_of(a);
    CHECK(sum(i, RightIdeal::zero(f2, 4)) == i);
    CHECK(intersect(i, RightIdeal::full(f2, 4)) == i);

    Field f5 = Field::fp(5);
    RightIdeal l1 = RightIdeal::span(Mat::of(f5, 2, 1, {1, 0}));
    RightIdeal l2 = RightIdeal::span(Mat::of(f5, 2, 1, {1, 1}));
    CHECK(sum(l1, l2).is_full());
    CHECK(intersect(l1, l2).is_zero());

    for (int t = 0; t < 80; ++t) {
        RightIdeal x = ideal_of(rng.square(f2, 5));
        RightIdeal y = ideal_of(rng.square(f2, 5));
        CHECK(delta(sum(x, y)) + delta(intersect(x, y)) == delta(x) + delta(y));
    }
}

TEST_CASE("independence") {
    Field f3 = Field::fp(3);
    std::vector<RightIdeal> axes;
    for (int i = 0; i < 3; ++i) {
        Mat v(f3, 3, 1);
        v.set(static_cast<size_t>(i), 0, Scalar::of(f3, 1));
        axes.push_back(RightIdeal::span(v));
    }
    CHECK(is_independent(axes));
    CHECK_FALSE(is_independent({axes[0], axes[0]}));

    RandomSource rng(3);
    for (int t = 0; t < 40; ++t) {
        std::vector<RightIdeal> tri;
        size_t dims = 0;
        for (int j = 0; j < 3; ++j) {
            RightIdeal i = ideal_of(rng.square(f3, 4));
            dims += i.dim();
            tri.push_back(i);
        }
        if (dims > 4) CHECK_FALSE(is_independent(tri));
    }
}

TEST_CASE("relative complement") {
    Field f2 = Field::fp(2);
    RightIdeal x0 = RightIdeal::zero(f2, 3);
    CHECK(relative_complement(x0, x0, RightIdeal::full(f2, 3)).is_full());

    Field f5 = Field::fp(5);
    RightIdeal x = RightIdeal::span(Mat::of(f5, 3, 1, {1, 0, 0}));
    RightIdeal y = RightIdeal::span(Mat::of(f5, 3, 1, {0, 1, 0}));
    RightIdeal z = RightIdeal::full(f5, 3);
    RightIdeal xp = relative_complement(x, y, z);
    CHECK(xp == RightIdeal::span(Mat::of(f5, 3, 2, {1, 0, 0, 0, 0, 1})));
    CHECK(xp.contains(x));
    CHECK(intersect(xp, y).is_zero());
    CHECK(sum(xp, y) == z);

    CHECK_THROWS_AS(relative_complement(x, x, z), precondition_error);
}

TEST_CASE("relative complement identities on random inputs") {
    Field f3 = Field::fp(3);
    RandomSource rng(111);
    for (int t = 0; t < 60; ++t) {
        RightIdeal x = ideal_of(rng.square(f3, 5));
        RightIdeal y = relative_complement(RightIdeal::zero(f3, 5), x, RightIdeal::full(f3, 5));
        RightIdeal z = RightIdeal::full(f3, 5);
        RightIdeal xp = relative_complement(x, y, z);
        CHECK(xp.contains(x));
        CHECK(intersect(xp, y).is_zero());
        CHECK(sum(xp, y) == z);
    }
}

TEST_CASE("idempotent interpolation") {
    Field f5 = Field::fp(5);
    Idempotent zero = Idempotent::zero(f5, 4), one = Idempotent::one(f5, 4);
    Idempotent e = Idempotent(Mat::of(f5, 4, 4, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(interpolate_idempotent(e, one, e.normalized_rank()) == e);

    Idempotent f = interpolate_idempotent(zero, one, mpq_class(1, 2));
    CHECK(f.mat() == Mat::of(f5, 4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));

    CHECK_THROWS_AS(interpolate_idempotent(zero, one, mpq_class(1, 3)), rank_not_representable);
}

TEST_CASE("interpolation respects order on random pairs") {
    Field f3 = Field::fp(3);
    RandomSource rng(5);
    for (int t = 0; t < 30; ++t) {
        Idempotent e = idempotent_generator(ideal_of(rng.square(f3, 6)));
        Idempotent one = Idempotent::one(f3, 6);
        for (long k = static_cast<long>(e.rank()); k <= 6; ++k) {
            mpq_class tq(k, 6);
            tq.canonicalize();
            Idempotent f = interpolate_idempotent(e, one, tq);
            CHECK(idempotent_leq(e, f));
            CHECK(f.rank() == static_cast<size_t>(k));
        }
    }
}

TEST_CASE("dyadic chain") {
    Field f3 = Field::fp(3);
    Mat em(f3, 8, 8);
    for (size_t i = 0; i < 4; ++i) em.set(i, i, Scalar::of(f3, 1));
    Idempotent e(em);
    auto chain = dyadic_chain(e, 3);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0] == e);
    CHECK(chain[0].rank() == 4);
    CHECK(chain[1].rank() == 2);
    CHECK(chain[2].rank() == 1);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) CHECK(idempotent_orthogonal(chain[i], chain[j]));

    auto single = dyadic_chain(e, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == e);

    Mat e4(f3, 4, 4);
    e4.set(0, 0, Scalar::of(f3, 1));
    e4.set(1, 1, Scalar::of(f3, 1));
    CHECK_THROWS_AS(dyadic_chain(Idempotent(e4), 3), rank_not_representable);
}

TEST_CASE("left quotient") {
    Field f5 = Field::fp(5);
    RandomSource rng(2);
    Mat a = rng.invertible(f5, 3);
    Mat b = left_quotient(a, Idempotent::one(f5, 3));
    CHECK(b == *a.inverse());

    Mat d = Mat::of(f5, 2, 2, {1, 0, 0, 0});
    CHECK(left_quotient(d, Idempotent(d)) == d);

    Field f3 = Field::fp(3);
    Mat nil = Mat::of(f3, 2, 2, {0, 1, 0, 0});
    Idempotent f(Mat::of(f3, 2, 2, {1, 0, 0, 0}));
    Mat q = left_quotient(nil, f);
    CHECK(q * nil == f.mat());

    // ker(nil) = span(e1) is not inside ker(1) = 0.
    CHECK_THROWS_AS(left_quotient(nil, Idempotent::one(f3, 2)), precondition_error);
}

TEST_CASE("orthogonal idempotents add ranks") {
    Field f3 = Field::fp(3);
    RandomSource rng(77);
    for (int t = 0; t < 40; ++t) {
        Mat g = rng.invertible(f3, 5);
        Mat ginv = *g.inverse();
        Mat e(f3, 5, 5), f(f3, 5, 5);
        e.set(0, 0, Scalar::of(f3, 1));
        e.set(1, 1, Scalar::of(f3, 1));
        f.set(2, 2, Scalar::of(f3, 1));
        Idempotent ge(g * e * ginv), gf(g * f * ginv);
        CHECK(idempotent_orthogonal(ge, gf));
        CHECK((ge.mat() + gf.mat()).rank() == ge.rank() + gf.rank());
    }
}

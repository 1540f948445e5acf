#include <doctest.h>

#include "helpers.hpp"

using namespace qt;

TEST_CASE("field specs") {
    CHECK(FieldSpec::parse("rational") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("prime:101").p == 101);
    CHECK(FieldSpec::parse("prime:32749").to_string() == "prime:32749");
    CHECK_THROWS_AS(FieldSpec::parse("prime:100"), Error);
    CHECK_THROWS_AS(FieldSpec::parse("real"), Error);
    CHECK(parse_rational("-3/4") == mpq_class(-3, 4));
    CHECK(parse_rational("6/8") == mpq_class(3, 4));
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);

    PrimeField gf(7);
    CHECK(gf.from_int(-1) == 6);
    CHECK(gf.mul(gf.inv(3), 3) == 1);
    CHECK(gf.parse("3/2") == gf.mul(3, gf.inv(2)));
}

TEST_CASE("rank") {
    Rationals q;
    CHECK(rank(Mat<Rationals>::identity(q, 3)) == 3);
    CHECK(rank(ints(q, {{1, 2}, {2, 4}})) == 1);
    PrimeField gf2(2);
    CHECK(rank(ints(gf2, {{1, 1}, {1, 1}})) == 1);
    // singular mod 5 only
    CHECK(rank(ints(q, {{1, 2}, {3, 1}})) == 2);
    CHECK(rank(ints(PrimeField(5), {{1, 2}, {3, 1}})) == 1);
}

TEST_CASE("kernel_basis") {
    Rationals q;
    auto z = kernel_basis(Mat<Rationals>(q, 2, 3));
    CHECK(z.dim() == 3);
    auto k = kernel_basis(ints(q, {{1, 2}, {2, 4}}));
    REQUIRE(k.dim() == 1);
    CHECK(k.basis.at(0, 0) == -2);
    CHECK(k.basis.at(0, 1) == 1);
    CHECK(kernel_basis(Mat<Rationals>::identity(q, 4)).dim() == 0);
}

TEST_CASE("solve") {
    Rationals q;
    DenseVec<Rationals> b = {mpq_class(3), mpq_class(-1, 2)};
    auto x = solve(Mat<Rationals>::identity(q, 2), b);
    REQUIRE(x);
    CHECK(*x == b);

    auto m = ints(q, {{1, 2}, {2, 4}});
    auto y = solve(m, {mpq_class(1), mpq_class(2)});
    REQUIRE(y);
    CHECK(m.apply(*y) == DenseVec<Rationals>{mpq_class(1), mpq_class(2)});
    CHECK_FALSE(solve(m, {mpq_class(1), mpq_class(0)}));
    CHECK_THROWS_AS(solve(m, {mpq_class(1)}), Error);
}

TEST_CASE("quotient") {
    Rationals q;
    auto full = quotient(3, Subspace<Rationals>{3, Mat<Rationals>::identity(q, 3)});
    CHECK(full.representatives.dim() == 0);

    auto none = quotient(2, Subspace<Rationals>{2, Mat<Rationals>(q, 0, 2)});
    CHECK(none.representatives.dim() == 2);
    CHECK(none.projection == Mat<Rationals>::identity(q, 2));

    auto line = quotient(2, Subspace<Rationals>{2, ints(q, {{1, 1}})});
    CHECK(line.representatives.dim() == 1);
    CHECK(line.projection.apply(DenseVec<Rationals>{mpq_class(1), mpq_class(1)}) == DenseVec<Rationals>{mpq_class(0)});
    CHECK(line.projection * line.representatives.basis.transpose() == Mat<Rationals>::identity(q, 1));
}

TEST_CASE("cohomology") {
    Rationals q;
    CHECK(cohomology(Mat<Rationals>(q, 3, 0), Mat<Rationals>(q, 0, 3)).dim == 3);
    CHECK(cohomology(Mat<Rationals>(q, 2, 0), Mat<Rationals>::identity(q, 2)).dim == 0);
    CHECK(cohomology(ints(q, {{1}, {0}}), ints(q, {{0, 1}})).dim == 0);
    CHECK_THROWS_AS(cohomology(ints(q, {{1}, {1}}), ints(q, {{0, 1}})), Error);
    try {
        cohomology(ints(q, {{1}, {1}}), ints(q, {{0, 1}}));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ComplexBroken);
    }
}

TEST_CASE("inverse") {
    Rationals q;
    auto m = ints(q, {{2, 1}, {1, 1}});
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(*inv * m == Mat<Rationals>::identity(q, 2));
    CHECK_FALSE(inverse(ints(q, {{1, 2}, {2, 4}})));
}

template <class F>
void linalg_properties(const F& f, std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < 40; ++t) {
        std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
        // low-rank products exercise dependent rows
        auto m = random_mat(f, r, 2, rng) * random_mat(f, 2, c, rng);
        if (t % 2) m = random_mat(f, r, c, rng);
        auto k = kernel_basis(m);
        CHECK(rank(m) + k.dim() == c);
        CHECK((m * k.basis.transpose()).is_zero());

        auto sub = image_basis(random_mat(f, c, 1 + rng.below(4), rng));
        auto qr = quotient(c, sub);
        CHECK(qr.representatives.dim() + sub.dim() == c);
        CHECK((qr.projection * sub.basis.transpose()).is_zero());

        // change of basis in the middle of a complex keeps cohomology dims
        std::size_t n = 1 + rng.below(5);
        auto din = random_mat(f, n, 1 + rng.below(3), rng);
        auto ann = kernel_basis(din.transpose()).basis;  // rows annihilate the image
        auto dout = ann.block(0, 0, rng.below(ann.rows() + 1), n);
        std::size_t h = cohomology(din, dout).dim;
        Mat<F> g;
        do {
            g = random_mat(f, n, n, rng);
        } while (rank(g) != n);
        auto gi = *inverse(g);
        CHECK(cohomology(g * din, dout * gi).dim == h);
        CHECK(h == n - rank(din) - rank(dout));
    }
}

TEST_CASE("property: rank-nullity, quotient and cohomology invariance") {
    linalg_properties(Rationals{}, 1);
    linalg_properties(PrimeField(101), 2);
    linalg_properties(PrimeField(2), 3);
}

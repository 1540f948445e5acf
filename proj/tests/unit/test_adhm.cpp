#include <doctest.h>

#include "adhm.hpp"
#include "ext_engine.hpp"
#include "helpers.hpp"

using namespace qt;

namespace {

using H = std::array<std::size_t, 3>;
const Rationals Q;

ADHMInstance<Rationals> inst(std::vector<std::vector<long long>> x, std::vector<std::vector<long long>> y) {
    ADHMInstance<Rationals> a;
    a.field = Q;
    a.n = x.size();
    a.X = {ints(Q, x)};
    a.Y = {ints(Q, y)};
    return a;
}

}  // namespace

TEST_CASE("check_adhm") {
    CHECK(check_adhm(inst({{0, 0}, {0, 0}}, {{0, 0}, {0, 0}})));
    CHECK(check_adhm(inst({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}})));
    CHECK_FALSE(check_adhm(inst({{0, 1}, {0, 0}}, {{0, 0}, {1, 0}})));

    auto wide = inst({{0, 1}, {0, 0}}, {{0, 0}, {1, 0}});
    wide.Y = {ints(Q, {{0, 0, 0}, {1, 0, 0}})};
    CHECK_ERROR_CODE(check_adhm(wide), ErrorCode::ShapeMismatch);

    // higher rank: every X_j must commute with every Y_l
    auto r = inst({{0, 1}, {0, 0}}, {{0, 0}, {0, 0}});
    r.X.push_back(ints(Q, {{1, 0}, {0, 1}}));
    r.Y.push_back(ints(Q, {{0, 2}, {0, 0}}));
    CHECK(check_adhm(r));
    r.Y.push_back(ints(Q, {{0, 0}, {1, 0}}));
    CHECK_FALSE(check_adhm(r));
}

TEST_CASE("ext_adhm") {
    auto origin = adhm_point(Q, 0, 0);
    CHECK(ext_adhm(origin, origin) == H{1, 2, 1});
    CHECK(ext_adhm(origin, adhm_point(Q, 1, 0)) == H{0, 0, 0});

    auto jj = inst({{0, 1}, {0, 0}}, {{0, 0}, {0, 0}});
    auto h = ext_adhm(jj, jj);
    CHECK(static_cast<long long>(h[0]) - static_cast<long long>(h[1]) + static_cast<long long>(h[2]) == 0);

    auto bad = inst({{0, 1}, {0, 0}}, {{0, 0}, {1, 0}});
    CHECK_ERROR_CODE(ext_adhm(bad, jj), ErrorCode::NotCommuting);
    auto rank2 = jj;
    rank2.X.push_back(rank2.X[0]);
    CHECK_ERROR_CODE(ext_adhm(rank2, jj), ErrorCode::UnsupportedRank);

    auto c = adhm_complex(jj, jj);
    CHECK((c.d1 * c.d0).is_zero());
    CHECK(c.d0.cols() == 4);
    CHECK(c.d0.rows() == 8);
    CHECK(c.d1.rows() == 4);
}

TEST_CASE("serre_check and euler_char") {
    auto origin = adhm_point(Q, 0, 0);
    auto p = adhm_point(Q, 2, -1);
    CHECK(serre_check(origin, origin));
    CHECK(serre_check(origin, p));
    CHECK(euler_char(origin, origin) == 0);
    CHECK(euler_char(origin, p) == 0);
}

TEST_CASE("doubled Jordan helpers") {
    auto q = doubled_jordan();
    CHECK(q.num_vertices() == 1);
    CHECK(q.num_arrows() == 2);
    auto e = expand_twist(q, adhm_twist(2, 3));
    CHECK(e.num_arrows() == 5);
    CHECK(expand_twist(q, adhm_twist(1, 1)) == q);

    auto a = random_commuting_instance(Q, 3, 11);
    auto rep = adhm_representation(a);
    CHECK(rep.dims == std::vector<std::size_t>{3});
    CHECK(rep.maps[0] == a.X[0]);
    CHECK(rep.maps[1] == a.Y[0]);
}

template <class F>
void adhm_properties(const F& f, std::uint64_t seed) {
    Rng rng(seed);
    const Quiver q = doubled_jordan();
    // k[x,y]/(x^3, y^3) holds every nilpotent pair with n <= 3
    auto trunc = model({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}},
                       {{{"1", "x y"}, {"-1", "y x"}}, {{"1", "x x x"}}, {{"1", "y y y"}}}, f);
    for (int t = 0; t < 8; ++t) {
        bool nil = t % 2 == 0;
        std::size_t top = nil ? 3 : 5;
        auto V = random_commuting_instance(f, 1 + rng.below(top), rng.next(), nil);
        auto W = random_commuting_instance(f, 1 + rng.below(top), rng.next(), nil);
        REQUIRE(check_adhm(V));
        auto h = ext_adhm(V, W);
        CHECK(serre_check(V, W));
        CHECK(euler_char(V, W) == 0);
        CHECK(h[0] == hom_basis(q, adhm_representation(V), adhm_representation(W)).dim());
        if (nil) {
            auto RV = adhm_representation(V), RW = adhm_representation(W);
            CHECK(check_relations(q, RV, trunc.relations()));
            CHECK(ext_dims(trunc, RV, RW, 1).dims[0] == h[0]);
        }
    }
}

TEST_CASE("property: duality, Euler characteristic and Hom cross-check") {
    adhm_properties(Q, 1);
    adhm_properties(PrimeField(101), 2);
}

#include <doctest.h>

#include "ext_engine.hpp"
#include "helpers.hpp"
#include "resolution_oracle.hpp"

using namespace qt;

namespace {

template <class F>
const CheckResult& find_check(const CoresolutionReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return c;
    FAIL("missing check " << name);
    return r.checks.front();
}

using Dims = std::vector<std::size_t>;

}  // namespace

TEST_CASE("coresolution terms") {
    auto j = jordan_x2();
    auto S = simple_module(j.quiver(), j.field(), 0);
    auto seg = coresolution(j, S, 4);
    REQUIRE(seg.terms.size() == 6);
    for (const auto& t : seg.terms) CHECK(t.module.total_dim() == 2);
    CHECK(seg.augmentation.rows() == 2);
    CHECK(seg.augmentation.cols() == 1);
    CHECK(verify_coresolution(j, seg, S).ok());

    auto zero = zero_representation(j.quiver(), j.field());
    auto z = coresolution(j, zero, 3);
    for (const auto& t : z.terms) CHECK(t.module.total_dim() == 0);
    CHECK(verify_coresolution(j, z, zero).ok());

    auto point = model({"1"}, {}, {});
    Representation<Rationals> W{Rationals{}, {3}, {}};
    auto ps = coresolution(point, W, 3);
    CHECK(ps.terms[0].module.total_dim() == 3);
    for (std::size_t p = 1; p < ps.terms.size(); ++p) CHECK(ps.terms[p].module.total_dim() == 0);
    CHECK(verify_coresolution(point, ps, W).ok());
}

TEST_CASE("connecting maps") {
    auto k = kronecker();
    auto W = simple_module(k.quiver(), k.field(), 1);
    auto sl = slices_for(k, 1);
    auto c = connecting_matrix(k, sl[0], sl[1], W);
    CHECK(c.partial.rows() == 0);
    CHECK(c.partial.cols() == 0);

    auto j = jordan_x2();
    auto S = simple_module(j.quiver(), j.field(), 0);
    auto js = slices_for(j, 1);
    auto d = connecting_matrix(j, js[0], js[1], S);
    CHECK(d.partial.rows() == 1);
    CHECK(d.partial.cols() == 1);
    CHECK(rank(d.partial) == 1);
    auto r1 = connecting_matrix(j, js[0], js[1], S, true, 7);
    auto r2 = connecting_matrix(j, js[0], js[1], S, true, 8);
    CHECK(r1.odd_differential == d.odd_differential);
    CHECK(r2.odd_differential == d.odd_differential);
}

TEST_CASE("verify_coresolution reports a corrupted differential") {
    auto j = jordan_x2();
    auto S = simple_module(j.quiver(), j.field(), 0);
    auto seg = coresolution(j, S, 3);
    auto& d1 = seg.differentials[1];
    d1.set(0, 0, d1.field().add(d1.at(0, 0), d1.field().one()));
    auto rep = verify_coresolution(j, seg, S);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(find_check<Rationals>(rep, "d_squared_zero").ok);
    CHECK(find_check<Rationals>(rep, "augmentation_injective").ok);
}

TEST_CASE("ext_dims") {
    auto j = jordan_x2();
    auto S = simple_module(j.quiver(), j.field(), 0);
    CHECK(ext_dims(j, S, S, 4).dims == Dims{1, 1, 1, 1, 1});

    auto c = comm_nilpotent();
    auto Sc = simple_module(c.quiver(), c.field(), 0);
    CHECK(ext_dims(c, Sc, Sc, 2).dims == Dims{1, 2, 3});

    auto L = regular(c);
    CHECK(ext_dims(c, L, L, 3).dims == Dims{4, 0, 0, 0});

    auto a3 = a3_zero();
    auto s = [&](std::uint32_t i) { return simple_module(a3.quiver(), a3.field(), i); };
    CHECK(ext_dims(a3, s(0), s(1), 3).dims == Dims{0, 1, 0, 0});
    CHECK(ext_dims(a3, s(0), s(2), 3).dims == Dims{0, 0, 1, 0});
    CHECK(ext_dims(a3, s(1), s(0), 3).dims == Dims{0, 0, 0, 0});
}

TEST_CASE("ext_hereditary") {
    auto k = kronecker();
    auto S1 = simple_module(k.quiver(), k.field(), 0), S2 = simple_module(k.quiver(), k.field(), 1);
    CHECK(ext_hereditary(k, S1, S2) == std::pair<std::size_t, std::size_t>{0, 2});
    CHECK(ext_hereditary(k, S1, zero_representation(k.quiver(), k.field())) == std::pair<std::size_t, std::size_t>{0, 0});
    auto j = jordan_x2();
    auto Sj = simple_module(j.quiver(), j.field(), 0);
    CHECK_ERROR_CODE(ext_hereditary(j, Sj, Sj), ErrorCode::HasRelations);

    // k[x] is not finite dimensional, so its (2, 2) is read off γ directly
    Quiver jq({"1"}, Arrows{{"x", "1", "1"}});
    Representation<Rationals> V{Rationals{}, {2}, {ints(Rationals{}, {{0, 1}, {0, 0}})}};
    auto g = gamma_matrix(jq, V, V);
    CHECK(g.cols() - rank(g) == 2);
    CHECK(g.rows() - rank(g) == 2);
}

TEST_CASE("spectral_page") {
    auto j = jordan_x2();
    auto S = simple_module(j.quiver(), j.field(), 0);
    auto page = spectral_page(j, S, S, 3);
    REQUIRE(page.size() == 4);
    for (std::size_t p = 0; p < 4; ++p) {
        CHECK(page[p][0] == 1);
        for (std::size_t q = 1; q < 4; ++q) CHECK(page[p][q] == 0);
    }

    auto k = kronecker();
    Rng rng(3);
    auto V = random_rep(k.quiver(), k.field(), {2, 1}, rng);
    auto W = random_rep(k.quiver(), k.field(), {1, 2}, rng);
    auto kp = spectral_page(k, V, W, 3);
    CHECK(kp[0][2] == 0);
    CHECK(kp[0][3] == 0);

    auto zp = spectral_page(j, S, zero_representation(j.quiver(), j.field()), 2);
    for (const auto& row : zp)
        for (auto v : row) CHECK(v == 0);
}

TEST_CASE("euler_form") {
    Quiver k({"1", "2"}, Arrows{{"a", "1", "2"}, {"b", "1", "2"}});
    CHECK(euler_form(k, {1, 0}, {0, 1}) == -2);
    CHECK(euler_form(k, {2, 1}, {1, 3}) == 2 + 3 - 12);
}

template <class F>
void engine_properties(const AlgebraModel<F>& m, std::uint64_t seed, std::size_t P = 3) {
    const Quiver& q = m.quiver();
    Rng rng(seed);
    for (int t = 0; t < 4; ++t) {
        auto V = random_module(m, 1 + rng.below(2), rng.below(3), rng.next());
        auto W = random_module(m, 1, rng.below(3), rng.next());
        CoresolutionOptions opts;
        auto seg = coresolution(m, W, P, opts);
        CHECK(verify_coresolution(m, seg, W).ok());
        auto e = ext_from_segment(m, seg, V);
        CHECK(e.dims == ext_dims_oracle(m, V, W, P));
        CHECK(e.dims[0] == hom_basis(q, V, W).dim());

        opts.random_complement = true;
        opts.seed = rng.next();
        auto rseg = coresolution(m, W, P, opts);
        for (std::size_t p = 1; p < seg.differentials.size(); p += 2)
            CHECK(rseg.differentials[p] == seg.differentials[p]);

        auto V2 = random_base_change(q, V, rng.next());
        auto W2 = random_base_change(q, W, rng.next());
        CHECK(ext_dims(m, V2, W2, P).dims == e.dims);

        if (m.relations().empty()) {
            auto [h0, h1] = ext_hereditary(m, V, W);
            CHECK(e.dims[0] == h0);
            CHECK(e.dims[1] == h1);
            for (std::size_t p = 2; p <= P; ++p) CHECK(e.dims[p] == 0);
        }
    }
}

TEST_CASE("property: engine equals oracle, complements, functoriality") {
    engine_properties(jordan_x2(), 1);
    engine_properties(comm_nilpotent(PrimeField(101)), 2);
    engine_properties(a3_zero(), 3);
    engine_properties(kronecker(), 4);
    engine_properties(model({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}},
                            {{{"1", "b a"}}, {{"1", "c b"}}}),
                      5);
    engine_properties(model({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}}, {{{"1", "x x"}}, {{"1", "x y"}}, {{"1", "y y"}}},
                            PrimeField(32749)),
                      6);
}

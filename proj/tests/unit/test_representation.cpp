#include <doctest.h>

#include "helpers.hpp"

using namespace qt;

namespace {

const Rationals Q;

Representation<Rationals> jordan_rep(const Mat<Rationals>& x) {
    return {Q, {x.rows()}, {x}};
}

Mat<Rationals> J2() { return ints(Q, {{0, 1}, {0, 0}}); }

Quiver doubled() { return Quiver({"1"}, Arrows{{"x", "1", "1"}, {"y", "1", "1"}}); }

RelationSet<Rationals> commutator(const Quiver& q) {
    return bind_relations(q, relation_spec(q, {{{"1", "x y"}, {"-1", "y x"}}}), Q);
}

}  // namespace

TEST_CASE("to_module_form") {
    Quiver jq({"1"}, Arrows{{"x", "1", "1"}});
    auto z = to_module_form(jq, zero_representation(jq, Q));
    CHECK(z.total_dim() == 0);

    auto m = to_module_form(jq, jordan_rep(J2()));
    CHECK(m.total_dim() == 2);
    CHECK(m.actions[0] == J2());
    CHECK(m.projectors[0] == Mat<Rationals>::identity(Q, 2));

    auto k = kronecker();
    auto s1 = to_module_form(k.quiver(), simple_module(k.quiver(), Q, 0));
    CHECK(s1.total_dim() == 1);
    CHECK(s1.actions[0].is_zero());
    CHECK(s1.actions[1].is_zero());

    Representation<Rationals> bad{Q, {2}, {ints(Q, {{1, 0}})}};
    CHECK_ERROR_CODE(to_module_form(jq, bad), ErrorCode::ShapeMismatch);
}

TEST_CASE("to_representation") {
    Quiver q({"1", "2"}, Arrows{{"a", "1", "2"}});
    Representation<Rationals> r{Q, {1, 1}, {ints(Q, {{7}})}};
    auto mf = to_module_form(q, r);
    CHECK(mf.actions[0] == ints(Q, {{0, 0}, {7, 0}}));
    CHECK(to_representation(q, mf) == r);

    auto broken = mf;
    broken.projectors[1] = Mat<Rationals>(Q, 2, 2);
    CHECK_ERROR_CODE(to_representation(q, broken), ErrorCode::BlockInconsistency);

    auto leaky = mf;
    leaky.actions[0] = ints(Q, {{0, 1}, {7, 0}});
    CHECK_ERROR_CODE(to_representation(q, leaky), ErrorCode::BlockInconsistency);
}

TEST_CASE("check_relations") {
    auto q = doubled();
    auto rels = commutator(q);
    Representation<Rationals> comm{Q, {2}, {J2(), J2() * J2() + J2()}};
    CHECK(check_relations(q, comm, rels));
    Representation<Rationals> jt{Q, {2}, {J2(), J2().transpose()}};
    CHECK_FALSE(check_relations(q, jt, rels));
    CHECK(violated_relations(q, jt, rels) == std::vector<std::size_t>{0});
    CHECK(check_relations(q, jt, RelationSet<Rationals>{}));
}

TEST_CASE("gamma_matrix and hom_basis") {
    Quiver jq({"1"}, Arrows{{"x", "1", "1"}});
    auto zero = zero_representation(jq, Q);
    auto g0 = gamma_matrix(jq, zero, zero);
    CHECK(g0.rows() == 0);
    CHECK(g0.cols() == 0);

    auto V = jordan_rep(J2());
    auto g = gamma_matrix(jq, V, V);
    CHECK(g.rows() == 4);
    CHECK(g.cols() == 4);
    CHECK(kernel_basis(g).dim() == 2);
    CHECK(hom_basis(jq, V, V).dim() == 2);

    auto k = kronecker();
    auto S1 = simple_module(k.quiver(), Q, 0), S2 = simple_module(k.quiver(), Q, 1);
    auto gk = gamma_matrix(k.quiver(), S1, S2);
    CHECK(gk.cols() == 0);
    CHECK(gk.rows() == 2);
    CHECK(hom_basis(k.quiver(), S1, S2).dim() == 0);
    CHECK(hom_basis(k.quiver(), S1, S1).dim() == 1);
}

TEST_CASE("random_module") {
    auto j = jordan_x2();
    auto free2 = random_module(j, 2, 0, 5);
    CHECK(free2.dims == std::vector<std::size_t>{4});

    auto a3 = a3_zero();
    auto f3 = random_module(a3, 3, 0, 1);
    for (std::uint32_t i = 0; i < 3; ++i) {
        std::size_t at_i = 0;
        for (const auto& b : a3.basis()) at_i += b.target == i;
        CHECK(f3.dims[i] == 3 * at_i);
    }

    CHECK(random_module(a3, 2, 2, 9) == random_module(a3, 2, 2, 9));
    CHECK(random_module(j, 1, 1, 3).dims == std::vector<std::size_t>{1});
    CHECK_ERROR_CODE(random_module(j, 0, 0, 1), ErrorCode::InvalidArgument);
}

template <class F>
void representation_properties(const AlgebraModel<F>& m, std::uint64_t seed) {
    const Quiver& q = m.quiver();
    Rng rng(seed);
    for (int t = 0; t < 6; ++t) {
        auto V = random_base_change(q, random_module(m, 1 + rng.below(2), rng.below(3), rng.next()), rng.next());
        auto W = random_base_change(q, random_module(m, 1 + rng.below(2), rng.below(3), rng.next()), rng.next());
        CHECK(check_relations(q, V, m.relations()));

        // F∘G and G∘F
        auto mf = to_module_form(q, V);
        CHECK(to_representation(q, mf) == V);
        CHECK(to_module_form(q, to_representation(q, mf)) == mf);

        // each basis element of Hom intertwines every arrow
        auto H = hom_basis(q, V, W);
        for (std::size_t r = 0; r < H.dim(); ++r) {
            auto comps = hom_components(V, W, H.basis.row(r));
            for (std::size_t a = 0; a < q.num_arrows(); ++a) {
                const Arrow& arr = q.arrow(a);
                CHECK(comps[arr.head] * V.maps[a] == W.maps[a] * comps[arr.tail]);
            }
        }
        auto V2 = random_base_change(q, V, rng.next());
        auto W2 = random_base_change(q, W, rng.next());
        CHECK(hom_basis(q, V2, W2).dim() == H.dim());

        // generator check agrees with annihilation of random ideal elements
        std::size_t D = m.nilpotency_index() + 2;
        CHECK(ideal_elements_annihilate(q, mf, m.relations(), D, 20, rng));
        auto raw = random_rep(q, m.field(), V.dims, rng);
        CHECK(check_relations(q, raw, m.relations()) ==
              ideal_elements_annihilate(q, to_module_form(q, raw), m.relations(), D, 20, rng));
    }
}

TEST_CASE("property: functors, Hom and relation checks") {
    representation_properties(jordan_x2(), 1);
    representation_properties(comm_nilpotent(), 2);
    representation_properties(a3_zero(PrimeField(101)), 3);
    representation_properties(model({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}},
                                    {{{"1", "a b a"}}, {{"1", "b a b"}}}),
                              4);
}

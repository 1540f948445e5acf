#include <doctest.h>

#include "helpers.hpp"

using namespace qt;

namespace {

Quiver jordan_quiver() { return Quiver({"1"}, Arrows{{"x", "1", "1"}}); }
Quiver kronecker_quiver() { return Quiver({"1", "2"}, Arrows{{"a", "1", "2"}, {"b", "1", "2"}}); }

template <class F>
SparseVec<F> times_basis(const AlgebraModel<F>& m, const SparseVec<F>& x, std::size_t k, bool left) {
    const F& f = m.field();
    std::vector<typename F::value_type> acc(m.dim(), f.zero());
    for (const auto& e : x)
        for (const auto& t : left ? m.multiply(k, e.col) : m.multiply(e.col, k)) f.add_mul(acc[t.col], e.val, t.val);
    return sparse_from_dense(f, acc);
}

}  // namespace

TEST_CASE("quiver validation and words") {
    CHECK_ERROR_CODE(Quiver({}, Arrows{}), ErrorCode::SchemaViolation);
    CHECK_ERROR_CODE(Quiver({"1"}, Arrows{{"x", "1", "2"}}), ErrorCode::SchemaViolation);
    CHECK_ERROR_CODE(Quiver({"1", "1"}, Arrows{}), ErrorCode::SchemaViolation);

    Quiver a3({"1", "2", "3"}, Arrows{{"a", "1", "2"}, {"b", "2", "3"}});
    Word w = a3.parse_word("b a");
    CHECK(a3.composable(w));
    CHECK(a3.word_source(w) == 0);  // a is applied first
    CHECK(a3.word_target(w) == 2);
    CHECK_FALSE(a3.composable(a3.parse_word("a b")));
    CHECK(a3.word_name(w) == "b a");
}

TEST_CASE("expand_twist") {
    auto k = kronecker_quiver();
    CHECK(expand_twist(k, Twist::trivial(k)) == k);

    Twist t;
    t.basis["a"] = {"a1", "a2"};
    t.basis["b"] = {"b"};
    auto e = expand_twist(k, t);
    CHECK(e.num_vertices() == 2);
    CHECK(e.num_arrows() == 3);
    for (const auto& arr : e.arrows()) {
        CHECK(arr.tail == 0);
        CHECK(arr.head == 1);
    }

    auto dj = expand_twist(Quiver({"1"}, Arrows{{"x", "1", "1"}, {"y", "1", "1"}}), [] {
        Twist t;
        t.basis["x"] = {"x1", "x2"};
        t.basis["y"] = {"y1", "y2", "y3"};
        return t;
    }());
    CHECK(dj.num_vertices() == 1);
    CHECK(dj.num_arrows() == 5);

    Twist missing;
    missing.basis["a"] = {"a"};
    CHECK_ERROR_CODE(expand_twist(k, missing), ErrorCode::MissingTwistEntry);
}

TEST_CASE("enumerate_paths") {
    auto k = kronecker_quiver();
    auto e0 = enumerate_paths(k, 0);
    REQUIRE(e0.size() == 2);
    CHECK(e0[0].word.empty());
    CHECK(e0[1].source == 1);
    CHECK(enumerate_paths(k, 2).empty());
    CHECK(enumerate_paths(k, 1).size() == 2);

    auto j3 = enumerate_paths(jordan_quiver(), 3);
    REQUIRE(j3.size() == 1);
    CHECK(j3[0].word == Word{0, 0, 0});
    CHECK(count_paths(Quiver({"1"}, Arrows{{"x", "1", "1"}, {"y", "1", "1"}}), 5) == 32);
}

TEST_CASE("relation validation") {
    Quiver q({"1", "2"}, Arrows{{"x", "1", "1"}, {"a", "1", "2"}});
    Rationals f;
    CHECK_ERROR_CODE(bind_relations(q, relation_spec(q, {{{"1", "x x"}, {"1", "x x x"}}}), f),
                     ErrorCode::InhomogeneousRelation);
    CHECK_ERROR_CODE(bind_relations(q, relation_spec(q, {{{"1", "x x"}, {"1", "a x"}}}), f),
                     ErrorCode::NonParallelRelation);
    CHECK_ERROR_CODE(bind_relations(q, relation_spec(q, {{{"1", "x"}}}), f), ErrorCode::InvalidRelation);
    CHECK_ERROR_CODE(bind_relations(q, relation_spec(q, {{{"1", "x a"}}}), f), ErrorCode::InvalidRelation);
    // like terms merge; a relation that cancels is dropped
    auto rs = bind_relations(q, relation_spec(q, {{{"1", "x x"}, {"-1", "x x"}}, {{"2", "a x"}, {"1", "a x"}}}), f);
    REQUIRE(rs.generators.size() == 1);
    CHECK(rs.generators[0].terms[0].coeff == 3);
}

TEST_CASE("build_algebra") {
    auto j = jordan_x2();
    CHECK(j.dim() == 2);
    CHECK(j.nilpotency_index() == 2);

    auto c = comm_nilpotent();
    CHECK(c.dim() == 4);
    CHECK(c.nilpotency_index() == 3);
    CHECK(c.degree_dim(0) == 1);
    CHECK(c.degree_dim(1) == 2);
    CHECK(c.degree_dim(2) == 1);

    CHECK_ERROR_CODE(model({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}}, {{{"1", "x y"}, {"-1", "y x"}}}),
                     ErrorCode::NotAdmissible);
    CHECK_ERROR_CODE(model({"1"}, {{"x", "1", "1"}}, {}), ErrorCode::NotAdmissible);

    auto k = kronecker();
    CHECK(k.dim() == 4);
    CHECK(k.nilpotency_index() == 2);
}

TEST_CASE("ideal_graded_piece") {
    auto j = jordan_x2();
    CHECK(ideal_graded_piece(j, 1, 2).dim() == 1);
    CHECK(ideal_graded_piece(j, 2, 4).dim() == 1);
    CHECK(ideal_graded_piece(j, 2, 3).dim() == 0);
    CHECK(ideal_graded_piece(j, 0, 1).dim() == 1);

    // commutator plus cubes, so the algebra is finite; degree 2 only sees the commutator
    auto m = model({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}},
                   {{{"1", "x y"}, {"-1", "y x"}}, {{"1", "x x x"}}, {{"1", "y y y"}}});
    auto k2 = ideal_graded_piece(m, 1, 2);
    REQUIRE(k2.dim() == 1);
    CHECK(k2.basis.row(0).size() == 2);
    CHECK(m.dim() == 9);
}

TEST_CASE("associated_graded") {
    auto j = jordan_x2();
    auto a0 = associated_graded(j, 0);
    CHECK(a0.dim() == j.dim());

    auto a1 = associated_graded(j, 1);
    CHECK(a1.dim() == 2);
    CHECK(a1.cutoff() == 4);
    CHECK(a1.degree_dims()[2] == 1);
    CHECK(a1.degree_dims()[3] == 1);

    auto a2 = associated_graded(j, 2);
    CHECK(a2.dim() == 2);
    CHECK(a2.cutoff() == 7);
    CHECK(a2.degree_dims()[4] == 1);
    CHECK(a2.degree_dims()[5] == 1);
    CHECK(a2.margin().ok);

    SliceOptions tight;
    tight.degree_budget = 3;
    CHECK_ERROR_CODE(associated_graded(j, 2, tight), ErrorCode::CutoffExceeded);
}

template <class F>
void algebra_properties(const AlgebraModel<F>& m) {
    const F& f = m.field();
    const Quiver& q = m.quiver();
    const std::size_t nv = q.num_vertices();
    for (std::size_t d = 0; d < m.nilpotency_index(); ++d)
        CHECK(count_paths(q, d) == ideal_graded_piece(m, 1, d).dim() + m.degree_dim(d));

    // associativity on all triples
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            auto ij = m.multiply(i, j);
            for (std::size_t k = 0; k < m.dim(); ++k)
                CHECK(times_basis(m, ij, k, false) == times_basis(m, m.multiply(j, k), i, true));
        }

    Mat<F> sum(f, m.dim(), m.dim());
    for (std::size_t i = 0; i < nv; ++i) sum = sum + m.left_idempotent(i);
    CHECK(sum == Mat<F>::identity(f, m.dim()));

    for (std::size_t p = 0; p <= 2; ++p) {
        auto s = associated_graded(m, p);
        CHECK(s.margin().ok);
        const std::size_t n = s.dim();
        Mat<F> ls(f, n, n), rs(f, n, n);
        for (std::size_t i = 0; i < nv; ++i) {
            ls = ls + s.left_projector(i);
            rs = rs + s.right_projector(i);
            for (std::size_t j = 0; j < nv; ++j) {
                auto pp = s.left_projector(i) * s.left_projector(j);
                CHECK(pp == (i == j ? s.left_projector(i) : Mat<F>(f, n, n)));
            }
        }
        CHECK(ls == Mat<F>::identity(f, n));
        CHECK(rs == Mat<F>::identity(f, n));
        for (std::size_t a = 0; a < q.num_arrows(); ++a) {
            for (std::size_t b = 0; b < q.num_arrows(); ++b)
                CHECK(s.left_action(a) * s.right_action(b) == s.right_action(b) * s.left_action(a));
            for (std::uint32_t i = 0; i < nv; ++i) {
                if (i != q.arrow(a).head) CHECK((s.left_projector(i) * s.left_action(a)).is_zero());
                if (i != q.arrow(a).tail) CHECK((s.left_action(a) * s.left_projector(i)).is_zero());
                if (i != q.arrow(a).tail) CHECK((s.right_projector(i) * s.right_action(a)).is_zero());
            }
        }
        // lift then project is the identity
        for (std::size_t k = 0; k < n; ++k) {
            const auto& el = s.elements()[k];
            CHECK(s.project(el.degree, el.block, s.lift(k)) == SparseVec<F>{{static_cast<std::uint32_t>(k), f.one()}});
        }
    }
}

TEST_CASE("property: algebra and slice axioms") {
    algebra_properties(jordan_x2());
    algebra_properties(comm_nilpotent());
    algebra_properties(a3_zero());
    algebra_properties(kronecker(PrimeField(101)));
    algebra_properties(model({"1", "2"}, {{"x", "1", "1"}, {"a", "1", "2"}, {"b", "2", "1"}},
                             {{{"1", "x x"}}, {{"1", "a x"}}, {{"1", "b a"}}}, PrimeField(32749)));
    algebra_properties(model({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "1", "2"}, {"c", "2", "3"}},
                             {{{"1", "c a"}, {"-1", "c b"}}}));
}

#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <doctest.h>

#include "algebra.hpp"
#include "random.hpp"
#include "representation.hpp"
#include "../support/random_input.hpp"

/** Expects expr to throw quivext::Error with the given code. */
#define CHECK_ERROR_CODE(expr, expected)                     \
    do {                                                     \
        bool thrown_ = false;                                \
        try {                                                \
            (void)(expr);                                    \
        } catch (const quivext::Error& e_) {                 \
            thrown_ = true;                                  \
            CHECK(e_.code() == (expected));                  \
        }                                                    \
        CHECK_MESSAGE(thrown_, "expected " #expected);       \
    } while (0)

namespace qt {

using namespace quivext;

using Arrows = std::vector<std::tuple<std::string, std::string, std::string>>;
using Rels = std::vector<std::vector<std::pair<std::string, std::string>>>;  // (coeff, word)

inline RelationSpec relation_spec(const Quiver& expanded, const Rels& rels) {
    RelationSpec spec;
    for (const auto& rel : rels) {
        std::vector<RelationTermSpec> terms;
        for (const auto& [c, w] : rel) terms.push_back({c, expanded.parse_word(w)});
        spec.generators.push_back(std::move(terms));
    }
    return spec;
}

template <class F = Rationals>
AlgebraModel<F> model(std::vector<std::string> vertices, const Arrows& arrows, const Rels& rels, const F& f = F(),
                      const std::optional<Twist>& twist = std::nullopt) {
    Quiver q(std::move(vertices), arrows);
    Twist t = twist ? *twist : Twist::trivial(q);
    return build_algebra(q, t, relation_spec(expand_twist(q, t), rels), f);
}

template <class F = Rationals>
AlgebraModel<F> jordan_x2(const F& f = F()) {
    return model({"1"}, {{"x", "1", "1"}}, {{{"1", "x x"}}}, f);
}

template <class F = Rationals>
AlgebraModel<F> comm_nilpotent(const F& f = F()) {
    return model({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}},
                 {{{"1", "x y"}, {"-1", "y x"}}, {{"1", "x x"}}, {{"1", "y y"}}}, f);
}

template <class F = Rationals>
AlgebraModel<F> kronecker(const F& f = F()) {
    return model({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}, {}, f);
}

template <class F = Rationals>
AlgebraModel<F> a3_zero(const F& f = F()) {
    return model({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}, {{{"1", "b a"}}}, f);
}

template <class F>
Mat<F> ints(const F& f, const std::vector<std::vector<long long>>& rows) {
    return Mat<F>::from_ints(f, rows);
}

/** The algebra Λ as a left module over itself. */
template <class F>
Representation<F> regular(const AlgebraModel<F>& m) {
    return free_module(m, 1);
}

}  // namespace qt

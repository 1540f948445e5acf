// Regenerates tests/corpus: one problem file per instance plus expected.json
// holding resolution-oracle dimensions over the rationals.
//
//   quivext_make_corpus OUTDIR

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ext_engine.hpp"
#include "problem.hpp"
#include "resolution_oracle.hpp"

using namespace quivext;

namespace {

constexpr std::size_t kDegree = 4;
constexpr std::size_t kMaxVertexDim = 4;

struct AlgebraDef {
    std::string name;
    std::vector<std::string> vertices;
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    std::optional<Twist> twist;
    std::vector<std::vector<std::pair<std::string, std::string>>> relations;  // (coeff, word)
};

/** Module recipe: simple at a vertex, or a randomized quotient of Λ^g. */
struct ModuleDef {
    int simple = -1;
    std::size_t generators = 1, relators = 1;
    std::uint64_t seed = 1;
};

struct InstanceDef {
    std::string algebra;
    std::string field;
    ModuleDef V, W;
};

std::vector<AlgebraDef> algebras() {
    using R = std::vector<std::vector<std::pair<std::string, std::string>>>;
    std::vector<AlgebraDef> out;
    out.push_back({"jordan_x2", {"1"}, {{"x", "1", "1"}}, std::nullopt, R{{{"1", "x x"}}}});
    out.push_back({"jordan_x3", {"1"}, {{"x", "1", "1"}}, std::nullopt, R{{{"1", "x x x"}}}});
    out.push_back({"commutative_nilpotent", {"1"}, {{"x", "1", "1"}, {"y", "1", "1"}}, std::nullopt,
                   R{{{"1", "x y"}, {"-1", "y x"}}, {{"1", "x x"}}, {{"1", "y y"}}}});
    out.push_back({"quantum_plane", {"1"}, {{"x", "1", "1"}, {"y", "1", "1"}}, std::nullopt,
                   R{{{"1", "x y"}, {"-2", "y x"}}, {{"1", "x x"}}, {{"1", "y y"}}}});
    out.push_back({"monomial_loops", {"1"}, {{"x", "1", "1"}, {"y", "1", "1"}}, std::nullopt,
                   R{{{"1", "x x"}}, {{"1", "x y"}}, {{"1", "y y"}}}});
    out.push_back({"a3_zero_relation", {"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}, std::nullopt, R{{{"1", "b a"}}}});
    out.push_back({"kronecker", {"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}, std::nullopt, R{}});
    out.push_back({"cyclic3_two_zero", {"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}}, std::nullopt,
                   R{{{"1", "b a"}}, {{"1", "c b"}}}});
    out.push_back({"cyclic3_radical_square_zero", {"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}},
                   std::nullopt, R{{{"1", "b a"}}, {{"1", "c b"}}, {{"1", "a c"}}}});
    out.push_back({"two_cycle_length3", {"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}, std::nullopt,
                   R{{{"1", "a b a"}}, {{"1", "b a b"}}}});
    out.push_back({"loop_and_arrow", {"1", "2"}, {{"x", "1", "1"}, {"a", "1", "2"}}, std::nullopt,
                   R{{{"1", "x x"}}, {{"1", "a x"}}}});
    out.push_back({"loop_and_cycle", {"1", "2"}, {{"x", "1", "1"}, {"a", "1", "2"}, {"b", "2", "1"}}, std::nullopt,
                   R{{{"1", "x x"}}, {{"1", "a x"}}, {{"1", "b a"}}}});
    out.push_back({"commutativity", {"1", "2", "3"}, {{"a", "1", "2"}, {"b", "1", "2"}, {"c", "2", "3"}}, std::nullopt,
                   R{{{"1", "c a"}, {"-1", "c b"}}}});
    Twist tw;
    tw.basis["m"] = {"m1", "m2"};
    tw.basis["c"] = {"c"};
    out.push_back({"twisted_kronecker_tail", {"1", "2", "3"}, {{"m", "1", "2"}, {"c", "2", "3"}}, tw,
                   R{{{"1", "c m1"}}}});
    return out;
}

std::vector<InstanceDef> instances() {
    auto simple = [](int v) { return ModuleDef{v, 0, 0, 0}; };
    auto quo = [](std::size_t g, std::size_t r, std::uint64_t s) { return ModuleDef{-1, g, r, s}; };
    return {
        {"jordan_x2", "rational", simple(0), simple(0)},
        {"jordan_x2", "prime:101", quo(2, 1, 11), quo(2, 1, 12)},
        {"jordan_x3", "rational", quo(1, 1, 3), quo(2, 1, 4)},
        {"jordan_x3", "prime:101", simple(0), quo(1, 1, 5)},
        {"commutative_nilpotent", "rational", simple(0), simple(0)},
        {"commutative_nilpotent", "prime:101", quo(1, 1, 7), quo(1, 2, 8)},
        {"quantum_plane", "rational", quo(1, 1, 9), simple(0)},
        {"quantum_plane", "prime:101", quo(1, 1, 21), quo(1, 1, 22)},
        {"monomial_loops", "rational", simple(0), quo(1, 1, 13)},
        {"monomial_loops", "prime:101", quo(1, 2, 14), quo(1, 1, 15)},
        {"a3_zero_relation", "rational", quo(2, 1, 16), quo(2, 1, 17)},
        {"a3_zero_relation", "prime:101", simple(0), quo(3, 1, 18)},
        {"kronecker", "rational", quo(1, 1, 19), quo(2, 2, 20)},
        {"kronecker", "prime:101", simple(0), simple(1)},
        {"cyclic3_two_zero", "rational", quo(1, 0, 23), quo(2, 1, 24)},
        {"cyclic3_two_zero", "prime:101", quo(2, 2, 25), simple(2)},
        {"cyclic3_radical_square_zero", "rational", quo(2, 1, 26), quo(2, 1, 27)},
        {"two_cycle_length3", "rational", quo(1, 1, 28), quo(2, 2, 29)},
        {"two_cycle_length3", "prime:101", simple(1), quo(1, 1, 30)},
        {"loop_and_arrow", "rational", quo(1, 1, 31), quo(2, 2, 32)},
        {"loop_and_cycle", "rational", quo(1, 1, 33), quo(1, 1, 34)},
        {"loop_and_cycle", "prime:101", quo(2, 2, 35), simple(1)},
        {"commutativity", "rational", quo(1, 0, 36), quo(2, 1, 37)},
        {"commutativity", "prime:101", quo(1, 1, 38), simple(2)},
        {"twisted_kronecker_tail", "rational", quo(1, 1, 39), quo(2, 2, 40)},
    };
}

bool small_enough(const Representation<Rationals>& m) {
    std::size_t total = 0;
    for (auto d : m.dims) {
        if (d > kMaxVertexDim) return false;
        total += d;
    }
    return total > 0;
}

/** Entries must reduce modulo the primes used in the tests. */
bool reducible(const Representation<Rationals>& m) {
    for (const auto& a : m.maps)
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (const auto& e : a.row(r)) {
                mpz_class den = e.val.get_den();
                if (den % 101 == 0 || den % 32749 == 0) return false;
            }
    return true;
}

Representation<Rationals> make_module(const AlgebraModel<Rationals>& model, const ModuleDef& d) {
    if (d.simple >= 0) return simple_module(model.quiver(), model.field(), static_cast<std::uint32_t>(d.simple));
    // More relators are allowed when Λ^g is too large to cut down with the requested number.
    for (std::uint64_t attempt = 0;; ++attempt) {
        const std::uint64_t s = d.seed + 1000 * attempt;
        auto m = random_module(model, d.generators, d.relators + attempt / 20, s);
        if (!small_enough(m)) continue;
        m = random_base_change(model.quiver(), m, s);
        if (reducible(m)) return m;
    }
}

RepresentationText to_text(const std::string& name, const Representation<Rationals>& m) {
    RepresentationText t;
    t.name = name;
    t.dims = m.dims;
    for (const auto& a : m.maps) {
        if (a.is_zero()) {
            t.maps.emplace_back(std::nullopt);
            continue;
        }
        MatrixText mt{a.rows(), a.cols(), {}};
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c) mt.entries.push_back(a.at(r, c).get_str());
        t.maps.emplace_back(std::move(mt));
    }
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: quivext_make_corpus OUTDIR\n";
        return 1;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    auto defs = algebras();
    nlohmann::ordered_json expected = nlohmann::ordered_json::object();
    int k = 0;
    for (const auto& inst : instances()) {
        const auto& a = *std::find_if(defs.begin(), defs.end(), [&](const AlgebraDef& d) { return d.name == inst.algebra; });
        Problem p;
        p.field = FieldSpec::parse(inst.field);
        p.quiver = Quiver(a.vertices, a.arrows);
        p.twist = a.twist;
        p.expanded = a.twist ? expand_twist(p.quiver, *a.twist) : p.quiver;
        for (const auto& rel : a.relations) {
            std::vector<RelationTermSpec> terms;
            for (const auto& [c, w] : rel) terms.push_back({c, p.expanded.parse_word(w)});
            p.relations.generators.push_back(std::move(terms));
        }
        auto model = build_algebra(p.quiver, a.twist ? *a.twist : Twist::trivial(p.quiver), p.relations, Rationals{});
        auto V = make_module(model, inst.V);
        auto W = make_module(model, inst.W);
        p.representations = {to_text("V", V), to_text("W", W)};
        p.options.max_degree = kDegree;
        p.options.seed = static_cast<std::uint64_t>(100 + k);
        p.queries = {{"V", "W"}};

        char name[64];
        std::snprintf(name, sizeof name, "%02d_%s", ++k, inst.algebra.c_str());
        std::ofstream(dir / (std::string(name) + ".json")) << canonical_json(p).dump(2) << "\n";
        auto dims = ext_dims_oracle(model, V, W, kDegree);
        expected[name] = dims;
        std::cout << name << "  V " << nlohmann::json(V.dims).dump() << "  W " << nlohmann::json(W.dims).dump()
                  << "  oracle " << nlohmann::json(dims).dump() << std::endl;
    }
    std::ofstream(dir / "expected.json") << expected.dump(2) << "\n";
    return 0;
}

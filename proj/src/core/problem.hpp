#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "field.hpp"
#include "quiver.hpp"
#include "representation.hpp"

namespace quivext {

/** Row-major scalars kept as canonical rational text, so a file can be run over any field. */
struct MatrixText {
    std::size_t rows = 0, cols = 0;
    std::vector<std::string> entries;
    bool operator==(const MatrixText&) const = default;
};

struct RepresentationText {
    std::string name;
    std::vector<std::size_t> dims;                 // per vertex
    std::vector<std::optional<MatrixText>> maps;   // per expanded arrow; absent means zero
    bool operator==(const RepresentationText&) const = default;
};

struct AdhmText {
    std::string name;
    std::size_t n = 0;
    std::vector<MatrixText> X, Y;
    bool operator==(const AdhmText&) const = default;
};

struct Query {
    std::string V, W;
    bool operator==(const Query&) const = default;
};

struct ProblemOptions {
    std::size_t max_degree = 3;  // Ext degree P
    std::size_t margin = 0;
    std::uint64_t seed = 1;
    std::size_t nilpotency_bound = 16;
    bool operator==(const ProblemOptions&) const = default;
};

struct Problem {
    FieldSpec field;
    Quiver quiver;
    std::optional<Twist> twist;
    Quiver expanded;
    RelationSpec relations;  // coefficients in canonical rational text
    std::vector<RepresentationText> representations;
    std::vector<AdhmText> adhm;
    ProblemOptions options;
    std::vector<Query> queries;
};

/**
 * Parses and validates a problem document. Syntax errors raise ParseError
 * with line and column; structural errors raise SchemaViolation (or the
 * relation/twist codes) naming the offending field.
 */
Problem parse_problem(std::string_view text);
Problem load_problem(const std::string& path);

/** Normalized document: fixed key order, canonical scalars, explicit defaults. */
nlohmann::ordered_json canonical_json(const Problem& p);

struct RunOverrides {
    std::optional<FieldSpec> field;
    std::optional<std::size_t> max_degree, margin;
    std::optional<std::uint64_t> seed;
};

void apply_overrides(Problem& p, const RunOverrides& o);

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"check", "hom", "ext", "oracle", "coresolve", "adhm", "serre"};
    return names;
}

struct Report {
    std::string command;
    int exit_code = 0;  // 0 ok, 2 a mathematical property failed
    nlohmann::ordered_json body;
};

/** Runs one command. Errors propagate as quivext::Error. */
Report run_command(const std::string& command, const Problem& p);

enum class OutputMode { table, json };

/** Byte-stable rendering of a report. */
std::string format_output(const Report& r, OutputMode mode);

/** The problem's algebra and named representations bound to a field. */
template <class F>
AlgebraModel<F> problem_algebra(const Problem& p, const F& f);
template <class F>
Representation<F> problem_representation(const Problem& p, const std::string& name, const F& f);

/** Direct queries used by the C API. */
std::vector<std::size_t> problem_ext_dims(const Problem& p, const std::string& V, const std::string& W);
std::vector<std::size_t> problem_oracle_dims(const Problem& p, const std::string& V, const std::string& W);
std::size_t problem_hom_dim(const Problem& p, const std::string& V, const std::string& W);
std::vector<std::size_t> problem_adhm_ext(const Problem& p, const std::string& V, const std::string& W);

}  // namespace quivext

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"

namespace quivext {

/**
 * A path as a list of arrow indices. The word [a, b] is a∘b: b is applied
 * first, so the path starts at tail(b) and ends at head(a).
 */
using Word = std::vector<std::uint32_t>;

inline constexpr std::uint32_t kNone = 0xffffffffu;

struct Arrow {
    std::string name;
    std::uint32_t tail = 0;
    std::uint32_t head = 0;
};

class Quiver {
public:
    Quiver() = default;
    /** Arrows given as (name, tail label, head label). */
    Quiver(std::vector<std::string> vertices,
           const std::vector<std::tuple<std::string, std::string, std::string>>& arrows);
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(std::size_t a) const { return arrows_[a]; }

    std::optional<std::uint32_t> find_vertex(const std::string& name) const;
    std::optional<std::uint32_t> find_arrow(const std::string& name) const;
    std::uint32_t vertex_index(const std::string& name) const;
    std::uint32_t arrow_index(const std::string& name) const;

    bool composable(const Word& w) const;
    /** Endpoints of a nonempty composable word. */
    std::uint32_t word_source(const Word& w) const { return arrows_[w.back()].tail; }
    std::uint32_t word_target(const Word& w) const { return arrows_[w.front()].head; }
    /** Space-separated arrow names; "e_<vertex>" is not accepted here. */
    Word parse_word(const std::string& text) const;
    std::string word_name(const Word& w) const;

    bool operator==(const Quiver& o) const;

private:
    void validate();

    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

/** Per-arrow basis names of M_α; the rank is the number of names. */
struct Twist {
    std::map<std::string, std::vector<std::string>> basis;

    /** Every arrow gets rank 1 with its own name as the basis symbol. */
    static Twist trivial(const Quiver& q);
    std::size_t rank(const std::string& arrow) const;
};

/** Replaces each arrow α by r_α parallel arrows named by the twist basis. */
Quiver expand_twist(const Quiver& q, const Twist& t);

/** A path with explicit endpoints, so trivial paths e_i stay distinguishable. */
struct Path {
    Word word;
    std::uint32_t source = 0;
    std::uint32_t target = 0;
};

/** All composable words of length d, optionally filtered by endpoints. */
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t d,
                                  std::optional<std::uint32_t> src = std::nullopt,
                                  std::optional<std::uint32_t> tgt = std::nullopt);

/** Number of paths of length d (saturating at 2^64 - 1). */
std::uint64_t count_paths(const Quiver& q, std::size_t d);

/** Relation data before it is bound to a field. Words index expanded arrows. */
struct RelationTermSpec {
    std::string coeff;
    Word word;
};
struct RelationSpec {
    std::vector<std::vector<RelationTermSpec>> generators;
};

/**
 * Paths of the quiver grouped by degree and by block (target, source), with
 * tables for multiplying a path by an arrow on either side. Block ids are
 * target * n + source. Grows on demand.
 */
class PathTable {
public:
    explicit PathTable(Quiver q, std::size_t path_budget = 4'000'000);

    const Quiver& quiver() const { return q_; }
    std::size_t num_vertices() const { return nv_; }
    std::size_t num_blocks() const { return nv_ * nv_; }
    std::size_t block_id(std::uint32_t target, std::uint32_t source) const { return target * nv_ + source; }
    std::uint32_t block_target(std::size_t b) const { return static_cast<std::uint32_t>(b / nv_); }
    std::uint32_t block_source(std::size_t b) const { return static_cast<std::uint32_t>(b % nv_); }

    /** Ensures paths of every degree <= d are enumerated. */
    void extend_to(std::size_t d);
    std::size_t max_degree() const { return degrees_.size() - 1; }
    std::size_t block_size(std::size_t d, std::size_t b) const { return degrees_[d].first[b].size(); }
    std::size_t degree_size(std::size_t d) const;

    /** a · path, in block (head(a), source); kNone unless tail(a) is the path's target. Needs d < max_degree. */
    std::uint32_t prepend(std::size_t d, std::size_t b, std::uint32_t i, std::uint32_t a) const {
        return degrees_[d].prepend[b][static_cast<std::size_t>(i) * na_ + a];
    }
    /** path · a, in block (target, tail(a)); kNone unless head(a) is the path's source. Needs d < max_degree. */
    std::uint32_t append(std::size_t d, std::size_t b, std::uint32_t i, std::uint32_t a) const {
        return degrees_[d].append[b][static_cast<std::size_t>(i) * na_ + a];
    }
    /** u·v for u = (d1, b1, i1), v = (d2, b2, i2); needs d1 + d2 <= max_degree. */
    std::uint32_t concat(std::size_t d1, std::size_t b1, std::uint32_t i1, std::size_t d2, std::size_t b2,
                         std::uint32_t i2) const;
    Word word(std::size_t d, std::size_t b, std::uint32_t i) const;
    std::uint32_t first_arrow(std::size_t d, std::size_t b, std::uint32_t i) const { return degrees_[d].first[b][i]; }
    /** (block, local index) of a nonempty composable word, extending the table as needed. */
    std::pair<std::size_t, std::uint32_t> locate(const Word& w);

private:
    struct Degree {
        std::vector<std::vector<std::uint32_t>> first;  // per block, leftmost arrow
        std::vector<std::vector<std::uint32_t>> rest;   // per block, index of the remaining path
        std::vector<std::vector<std::uint32_t>> prepend;
        std::vector<std::vector<std::uint32_t>> append;
    };
    void grow();

    Quiver q_;
    std::size_t nv_, na_;
    std::size_t budget_;
    std::vector<Degree> degrees_;
};

}  // namespace quivext

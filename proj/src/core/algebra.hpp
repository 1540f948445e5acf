#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <vector>

#include "exact_linalg.hpp"
#include "quiver.hpp"

namespace quivext {

template <class F>
struct RelationTerm {
    typename F::value_type coeff;
    Word word;
};

/** A length-homogeneous combination of parallel paths. */
template <class F>
struct Relation {
    std::vector<RelationTerm<F>> terms;
    std::uint32_t source = 0;
    std::uint32_t target = 0;
    std::size_t length = 0;
};

template <class F>
struct RelationSet {
    std::vector<Relation<F>> generators;

    bool empty() const { return generators.empty(); }
    std::size_t max_length() const;
    std::size_t min_length() const;
};

/**
 * Validates and binds relation data to a field. Like terms are merged and
 * relations that cancel completely are dropped.
 */
template <class F>
RelationSet<F> bind_relations(const Quiver& expanded, const RelationSpec& spec, const F& field);

/**
 * Degree d, block b slice of the filtration K^0 ⊇ K^1 ⊇ ... of the path
 * span. Rows of level p span a complement of (K^{p+1})_d in (K^p)_d; they
 * are zero at the pivots of deeper levels and of the other rows of their
 * own level. Level p_lo is represented by unit vectors at non-pivot
 * columns, and (K^{p_lo})_d is the whole block.
 */
template <class F>
struct Flag {
    std::size_t dim = 0;
    std::size_t p_lo = 0;
    std::vector<std::uint32_t> complement;
    std::vector<SparseVec<F>> rows;  // deepest level first
    std::vector<std::uint32_t> pivots;
    std::vector<std::pair<std::size_t, std::size_t>> ranges;  // level p_lo+1+k -> rows [first, second)

    std::size_t p_hi() const { return p_lo + ranges.size(); }
    std::size_t level_dim(std::size_t p) const;
    /** dim (K^p)_d in this block. */
    std::size_t ideal_dim(std::size_t p) const;
    /** Offset of level p inside the flag coordinate vector. */
    std::size_t level_offset(std::size_t p) const;
    /** Level of the basis vector at a flag coordinate index. */
    std::size_t level_of_index(std::size_t idx) const;
    SparseVec<F> level_vector(std::size_t p, std::size_t k, const F& f) const;
    /**
     * Coordinates of x over the flag basis: complement first, then rows in
     * storage order.
     */
    SparseVec<F> coordinates(const SparseVec<F>& x, const F& f) const;
    /** Level-p part of coordinates(x), re-indexed from 0. */
    SparseVec<F> level_coordinates(const SparseVec<F>& coords, std::size_t p) const;
};

template <class F>
struct Generator {
    std::size_t block = 0;
    std::uint32_t source = 0;
    std::uint32_t target = 0;
    std::size_t length = 0;
    SparseVec<F> vec;  // over the paths of degree `length` in `block`
};

/**
 * Lazily computed flags of the powers of the relation ideal. Degrees are
 * filled in increasing order. Once the nilpotency index N is known,
 * (K^p)_d is taken to be the full path span for d >= pN, because K
 * contains every path of length N.
 */
template <class F>
class IdealFiltration {
public:
    IdealFiltration(std::shared_ptr<PathTable> paths, const F& field, std::vector<Generator<F>> gens);

    const F& field() const { return f_; }
    PathTable& paths() { return *paths_; }
    const std::vector<Generator<F>>& generators() const { return gens_; }
    std::size_t min_length() const { return m_min_; }
    std::size_t nilpotency() const { return n_; }
    void set_nilpotency(std::size_t n) { n_ = n; }

    void ensure(std::size_t d);
    std::size_t computed_degree() const { return flags_.size(); }
    const Flag<F>& flag(std::size_t d, std::size_t b);

    /** Rank of the product spanning set of (K^p)_d in block b, computed without the containment shortcut at d. */
    std::size_t generic_rank(std::size_t p, std::size_t d, std::size_t b);

private:
    void compute_degree(std::size_t d);
    template <class Sink>
    void span_products(std::size_t p, std::size_t d, std::size_t b, Sink&& sink);

    std::shared_ptr<PathTable> paths_;
    F f_;
    std::vector<Generator<F>> gens_;
    std::size_t m_min_ = 0;
    std::size_t n_ = 0;
    std::deque<std::vector<Flag<F>>> flags_;
    std::recursive_mutex mutex_;
};

struct BuildOptions {
    /** Largest degree searched for the nilpotency index. */
    std::size_t max_degree = 16;
    std::size_t path_budget = 400'000;
};

/** A basis element of Λ: the class of a standard-monomial path. */
struct BasisPath {
    std::uint32_t degree = 0;
    std::uint32_t block = 0;
    std::uint32_t target = 0;
    std::uint32_t source = 0;
    std::uint32_t column = 0;  // path index inside its block
    Word word;
};

/** Λ = kQ/K together with its graded bases and multiplication tables. */
template <class F>
class AlgebraModel {
public:
    const Quiver& quiver() const { return quiver_; }
    const F& field() const { return f_; }
    const RelationSet<F>& relations() const { return rels_; }
    std::size_t nilpotency_index() const { return n_; }
    std::size_t max_relation_length() const { return rels_.max_length(); }
    std::size_t min_relation_length() const { return rels_.min_length(); }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisPath>& basis() const { return basis_; }
    std::size_t degree_dim(std::size_t d) const;

    /** Column j is a·(basis j) in basis coordinates. */
    const Mat<F>& left_mult(std::size_t a) const { return left_[a]; }
    /** Column j is (basis j)·a. */
    const Mat<F>& right_mult(std::size_t a) const { return right_[a]; }
    const Mat<F>& left_idempotent(std::size_t i) const { return left_e_[i]; }
    const Mat<F>& right_idempotent(std::size_t i) const { return right_e_[i]; }

    /** Product of basis elements i and j in basis coordinates. */
    SparseVec<F> multiply(std::size_t i, std::size_t j) const;
    /** Class in Λ of the path (d, block, column). */
    SparseVec<F> reduce_path(std::size_t d, std::size_t block, std::uint32_t column) const;
    std::size_t basis_index(std::size_t d, std::size_t block, std::uint32_t column_rank) const;

    IdealFiltration<F>& filtration() const { return *filtration_; }
    std::shared_ptr<IdealFiltration<F>> filtration_ptr() const { return filtration_; }
    PathTable& paths() const { return filtration_->paths(); }

private:
    template <class G>
    friend AlgebraModel<G> build_algebra(const Quiver&, const Twist&, const RelationSpec&, const G&,
                                         const BuildOptions&);

    Quiver quiver_;
    F f_;
    RelationSet<F> rels_;
    std::size_t n_ = 0;
    std::vector<BasisPath> basis_;
    std::vector<std::vector<std::size_t>> offsets_;  // [degree][block] -> first basis index
    std::vector<Mat<F>> left_, right_, left_e_, right_e_;
    std::shared_ptr<IdealFiltration<F>> filtration_;
};

template <class F>
AlgebraModel<F> build_algebra(const Quiver& q, const Twist& t, const RelationSpec& r, const F& field,
                              const BuildOptions& opts = {});

/** (K^p)_d as a subspace of the degree-d path span (blocks concatenated in block order). */
template <class F>
Subspace<F> ideal_graded_piece(const AlgebraModel<F>& model, std::size_t p, std::size_t d);

struct SliceElement {
    std::uint32_t degree = 0;
    std::uint32_t block = 0;
    std::uint32_t target = 0;
    std::uint32_t source = 0;
    std::uint32_t index = 0;  // position inside the level of its flag
};

struct MarginReport {
    std::size_t first_degree = 0;
    std::size_t last_degree = 0;
    std::size_t blocks_exhaustive = 0;
    std::size_t blocks_by_containment = 0;
    bool ok = true;
};

struct SliceOptions {
    std::size_t margin = 0;
    /** Margin degrees with at most this many paths are re-checked without the containment shortcut. */
    std::size_t exhaustive_limit = 512;
    std::size_t degree_budget = 96;
};

/**
 * A^p = K^p / K^{p+1}, graded by path length, as a Λ-bimodule. Element
 * order: degree, then block, then position in the flag level.
 */
template <class F>
class GradedSlice {
public:
    std::size_t power() const { return p_; }
    std::size_t cutoff() const { return cutoff_; }
    std::size_t dim() const { return elements_.size(); }
    const std::vector<SliceElement>& elements() const { return elements_; }
    const std::vector<std::size_t>& degree_dims() const { return degree_dims_; }
    /** Highest degree carrying elements; higher degrees vanish by containment. */
    std::size_t top_degree() const { return top_; }

    const Mat<F>& left_action(std::size_t a) const { return left_[a]; }
    const Mat<F>& right_action(std::size_t a) const { return right_[a]; }
    const Mat<F>& left_projector(std::size_t i) const { return left_e_[i]; }
    const Mat<F>& right_projector(std::size_t i) const { return right_e_[i]; }
    const MarginReport& margin() const { return margin_; }

    /** Lift of element k as a vector over the paths of its block. */
    SparseVec<F> lift(std::size_t k) const;
    /** A^p coordinates of x ∈ (K^p)_d, block b. */
    SparseVec<F> project(std::size_t d, std::size_t b, const SparseVec<F>& x) const;
    /** Global index of the k-th level element of (d, b). */
    std::size_t element_index(std::size_t d, std::size_t b, std::size_t k) const { return offsets_[d][b] + k; }
    std::size_t block_count(std::size_t d, std::size_t b) const;

    IdealFiltration<F>& filtration() const { return *filtration_; }

private:
    template <class G>
    friend GradedSlice<G> associated_graded(const AlgebraModel<G>&, std::size_t, const SliceOptions&);

    F f_;
    std::size_t p_ = 0, cutoff_ = 0, top_ = 0;
    std::vector<SliceElement> elements_;
    std::vector<std::size_t> degree_dims_;
    std::vector<std::vector<std::size_t>> offsets_;  // [degree][block], size top_+2 with a sentinel row
    std::vector<Mat<F>> left_, right_, left_e_, right_e_;
    MarginReport margin_;
    std::shared_ptr<IdealFiltration<F>> filtration_;
};

template <class F>
GradedSlice<F> associated_graded(const AlgebraModel<F>& model, std::size_t p, const SliceOptions& opts = {});

extern template class IdealFiltration<Rationals>;
extern template class IdealFiltration<PrimeField>;
extern template class AlgebraModel<Rationals>;
extern template class AlgebraModel<PrimeField>;
extern template class GradedSlice<Rationals>;
extern template class GradedSlice<PrimeField>;

}  // namespace quivext

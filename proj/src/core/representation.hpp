#pragma once

#include <cstdint>
#include <vector>

#include "algebra.hpp"

namespace quivext {

/** Per-vertex spaces and one matrix n_{h(a)} x n_{t(a)} per expanded arrow. */
template <class F>
struct Representation {
    F field;
    std::vector<std::size_t> dims;
    std::vector<Mat<F>> maps;

    std::size_t total_dim() const;
    bool operator==(const Representation& o) const { return dims == o.dims && maps == o.maps; }
};

/** The same data as one space V = ⊕ V_i with idempotents and arrow actions. */
template <class F>
struct ModuleForm {
    F field;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> offsets;  // size = vertices + 1
    std::vector<Mat<F>> projectors;
    std::vector<Mat<F>> actions;

    std::size_t total_dim() const { return offsets.empty() ? 0 : offsets.back(); }
    bool operator==(const ModuleForm& o) const {
        return dims == o.dims && projectors == o.projectors && actions == o.actions;
    }
};

template <class F>
Representation<F> zero_representation(const Quiver& q, const F& f);

/** Throws ShapeMismatch when a map has the wrong shape. */
template <class F>
void validate_shapes(const Quiver& q, const Representation<F>& rep);

template <class F>
ModuleForm<F> to_module_form(const Quiver& q, const Representation<F>& rep);

/** Throws BlockInconsistency when projectors or actions leave their blocks. */
template <class F>
Representation<F> to_representation(const Quiver& q, const ModuleForm<F>& mf);

/** ρ(word): V_{source} -> V_{target}; the empty word at vertex v is the identity. */
template <class F>
Mat<F> path_matrix(const Quiver& q, const Representation<F>& rep, const Word& w, std::uint32_t vertex);

/** Indices of the relations that do not evaluate to zero. */
template <class F>
std::vector<std::size_t> violated_relations(const Quiver& q, const Representation<F>& rep, const RelationSet<F>& rels);

template <class F>
bool check_relations(const Quiver& q, const Representation<F>& rep, const RelationSet<F>& rels) {
    return violated_relations(q, rep, rels).empty();
}

/**
 * γ_{V,W}: ⊕_i Hom(V_i, W_i) -> ⊕_a Hom(V_{t(a)}, W_{h(a)}), f ↦ f_h ρ_V(a) − ρ_W(a) f_t.
 * Coordinate (i, r, c) of Hom(V_i, W_i) sits at hom_offset(i) + r * n_{V_i} + c.
 */
template <class F>
Mat<F> gamma_matrix(const Quiver& q, const Representation<F>& V, const Representation<F>& W);

/** Offsets of the blocks Hom(V_i, W_i) inside the domain of γ. */
std::vector<std::size_t> hom_offsets(const std::vector<std::size_t>& vdims, const std::vector<std::size_t>& wdims);

/** Basis of Hom_Λ(V, W) = ker γ_{V,W}; optionally the free column of each basis vector. */
template <class F>
Subspace<F> hom_basis(const Quiver& q, const Representation<F>& V, const Representation<F>& W,
                      std::vector<std::uint32_t>* free_columns = nullptr);

/** Splits a Hom coordinate vector into its per-vertex matrices W_i x V_i. */
template <class F>
std::vector<Mat<F>> hom_components(const Representation<F>& V, const Representation<F>& W, const SparseVec<F>& f);

/** Λ^g as a left module. */
template <class F>
Representation<F> free_module(const AlgebraModel<F>& model, std::size_t generators);

/**
 * Λ^g modulo the submodule generated by `relators` random elements, each
 * homogeneous of degree >= 1 and supported at one vertex. Deterministic in seed.
 */
template <class F>
Representation<F> random_module(const AlgebraModel<F>& model, std::size_t generators, std::size_t relators,
                                std::uint64_t seed);

/** Action of the Λ-basis element k on the whole space (sparse, dim x dim). */
template <class F>
Mat<F> basis_action(const AlgebraModel<F>& model, const Representation<F>& rep, std::size_t k);

/** Simple module at vertex i. */
template <class F>
Representation<F> simple_module(const Quiver& q, const F& f, std::uint32_t i);

/** Conjugates every map by random invertible per-vertex matrices. */
template <class F>
Representation<F> random_base_change(const Quiver& q, const Representation<F>& rep, std::uint64_t seed);

}  // namespace quivext

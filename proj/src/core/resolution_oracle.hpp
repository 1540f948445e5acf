#pragma once

#include <cstdint>
#include <vector>

#include "representation.hpp"

namespace quivext {

/**
 * One step P -> M of a minimal projective resolution. P = ⊕_k Λe_{i_k};
 * its basis is (k, λ) for Λ-basis elements λ with source i_k, grouped by
 * the target vertex of λ.
 */
template <class F>
struct ResolutionStep {
    std::vector<std::size_t> multiplicities;  // μ_i per vertex
    std::vector<std::uint32_t> generator_vertex;
    std::vector<SparseVec<F>> generator_images;  // in local coordinates of M at the generator's vertex
    Representation<F> cover;
    std::vector<Mat<F>> surjection;  // per vertex: M_v x P_v
    Representation<F> kernel;
    std::vector<Mat<F>> kernel_inclusion;  // per vertex: P_v x K_v (columns are kernel basis vectors)
    /** local[k][λ] = index of (k, λ) inside P at target(λ); unused entries are kNone. */
    std::vector<std::vector<std::uint32_t>> local;
};

template <class F>
ResolutionStep<F> projective_cover(const AlgebraModel<F>& model, const Representation<F>& M);

/** Minimal resolution steps 0..steps-1 of M. */
template <class F>
std::vector<ResolutionStep<F>> minimal_resolution(const AlgebraModel<F>& model, const Representation<F>& M,
                                                  std::size_t steps);

/** dim Ext^p(V, W) for p = 0..P from Hom_Λ(P_•, W), using Hom_Λ(Λe_i, W) = e_i W. */
template <class F>
std::vector<std::size_t> ext_dims_oracle(const AlgebraModel<F>& model, const Representation<F>& V,
                                         const Representation<F>& W, std::size_t P);

}  // namespace quivext

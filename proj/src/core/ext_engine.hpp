#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "representation.hpp"

namespace quivext {

/**
 * Slot bookkeeping for a coresolution term built on A^q. Even terms have
 * one summand per vertex i, Hom_k(e_i A^q, W_i); odd terms one per arrow a,
 * Hom_k(e_{t(a)} A^q, W_{h(a)}). Slot (s, ξ, w) belongs to the vertex
 * block of source(ξ), because Λ acts through the right action on A^q.
 */
struct TermLayout {
    bool odd = false;
    std::size_t q = 0;
    std::vector<std::uint32_t> slice_vertex;  // per summand: required target of ξ
    std::vector<std::uint32_t> w_vertex;      // per summand: vertex of W
    std::vector<std::vector<std::int64_t>> base;  // [summand][ξ] -> global slot of w = 0, or -1
    std::vector<std::size_t> offsets;             // vertex blocks, size nv + 1
    std::size_t dim() const { return offsets.empty() ? 0 : offsets.back(); }
};

template <class F>
struct CoresolutionTerm {
    TermLayout layout;
    Representation<F> module;  // Λ-structure by (af)(s) = f(sa)
};

struct CoresolutionOptions {
    SliceOptions slice;
    /** Build the odd differentials from a random complement of K^{q+1} in K^q instead of the flag one. */
    bool random_complement = false;
    std::uint64_t seed = 1;
};

/** Terms C^0 .. C^{P+1}, differentials d_0 .. d_P and the augmentation W -> C^0. */
template <class F>
struct CoresolutionSegment {
    std::size_t length = 0;  // P
    std::vector<CoresolutionTerm<F>> terms;
    std::vector<Mat<F>> differentials;  // d_p: C^p -> C^{p+1}, shape dim C^{p+1} x dim C^p
    Mat<F> augmentation;                // dim C^0 x dim W
    std::vector<Mat<F>> connecting;     // ∂ for q = 0, 1, ... with 2q + 1 <= P
};

/** Slices A^0 .. A^Q needed for a segment of length P. */
template <class F>
std::vector<GradedSlice<F>> slices_for(const AlgebraModel<F>& model, std::size_t P, const SliceOptions& opts = {});

template <class F>
CoresolutionSegment<F> coresolution(const AlgebraModel<F>& model, const Representation<F>& W, std::size_t P,
                                    const CoresolutionOptions& opts = {});

/** Same, reusing precomputed slices (at least slices_for(model, P)). */
template <class F>
CoresolutionSegment<F> coresolution(const AlgebraModel<F>& model, const std::vector<GradedSlice<F>>& slices,
                                    const Representation<F>& W, std::size_t P, const CoresolutionOptions& opts = {});

template <class F>
struct ConnectingMap {
    Mat<F> partial;           // ∂: Hom_Λ(A^{q+1}, W) -> coker γ_{A^q,W} in the chosen bases
    Mat<F> odd_differential;  // ι ∂^{-1} π_c: C^{2q+1} -> C^{2q+2}
};

/** ∂ for slices A^q, A^{q+1}; throws SingularConnectingMap unless it is square and invertible. */
template <class F>
ConnectingMap<F> connecting_matrix(const AlgebraModel<F>& model, const GradedSlice<F>& Aq, const GradedSlice<F>& Aq1,
                                   const Representation<F>& W, bool random_complement = false, std::uint64_t seed = 1);

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct CoresolutionReport {
    std::vector<CheckResult> checks;  // augmentation injective, image = ker d_0, d d = 0, exactness, linearity, injective terms
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

template <class F>
CoresolutionReport verify_coresolution(const AlgebraModel<F>& model, const CoresolutionSegment<F>& seg,
                                       const Representation<F>& W);

template <class F>
struct ExtResult {
    std::vector<std::size_t> dims;                    // h^0 .. h^P
    std::vector<std::size_t> hom_dims;                // dim Hom_Λ(V, C^p), p = 0 .. P+1
    std::vector<Subspace<F>> representatives;         // cocycles in Hom_Λ(V, C^p) coordinates
};

template <class F>
ExtResult<F> ext_from_segment(const AlgebraModel<F>& model, const CoresolutionSegment<F>& seg,
                              const Representation<F>& V);

template <class F>
ExtResult<F> ext_dims(const AlgebraModel<F>& model, const Representation<F>& V, const Representation<F>& W,
                      std::size_t P, const CoresolutionOptions& opts = {});

/** (dim ker γ, dim coker γ); throws HasRelations when the model has relations. */
template <class F>
std::pair<std::size_t, std::size_t> ext_hereditary(const AlgebraModel<F>& model, const Representation<F>& V,
                                                   const Representation<F>& W);

/** E_1^{p,q} for 0 <= p, q <= P; only the row q = 0 is nonzero over a field. */
template <class F>
std::vector<std::vector<std::size_t>> spectral_page(const AlgebraModel<F>& model, const Representation<F>& V,
                                                    const Representation<F>& W, std::size_t P,
                                                    const CoresolutionOptions& opts = {});

/** Euler form Σ n_i m_i − Σ_a n_{t(a)} m_{h(a)}. */
long long euler_form(const Quiver& q, const std::vector<std::size_t>& n, const std::vector<std::size_t>& m);

}  // namespace quivext

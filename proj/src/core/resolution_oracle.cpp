#include "resolution_oracle.hpp"

#include <map>

namespace quivext {

template <class F>
ResolutionStep<F> projective_cover(const AlgebraModel<F>& model, const Representation<F>& M) {
    const Quiver& q = model.quiver();
    const F& f = model.field();
    const std::size_t nv = q.num_vertices();
    validate_shapes(q, M);
    ResolutionStep<F> st;
    st.multiplicities.assign(nv, 0);

    // Top of M: complement of the radical (sum of arrow images) at each vertex.
    for (std::uint32_t v = 0; v < nv; ++v) {
        std::vector<SparseVec<F>> rad;
        for (std::size_t a = 0; a < q.num_arrows(); ++a) {
            if (q.arrow(a).head != v) continue;
            Mat<F> t = M.maps[a].transpose();
            for (std::size_t c = 0; c < t.rows(); ++c)
                if (!t.row(c).empty()) rad.push_back(t.row(c));
        }
        Subspace<F> img = {M.dims[v], Mat<F>::from_rows(f, M.dims[v], std::move(rad))};
        auto quo = quotient(M.dims[v], img);
        for (std::size_t r = 0; r < quo.representatives.dim(); ++r) {
            st.generator_vertex.push_back(v);
            st.generator_images.push_back(quo.representatives.basis.row(r));
            ++st.multiplicities[v];
        }
    }

    const std::size_t ng = st.generator_vertex.size();
    const auto& basis = model.basis();
    st.local.assign(ng, std::vector<std::uint32_t>(model.dim(), kNone));
    st.cover.field = f;
    st.cover.dims.assign(nv, 0);
    for (std::uint32_t v = 0; v < nv; ++v)
        for (std::size_t k = 0; k < ng; ++k)
            for (std::size_t j = 0; j < model.dim(); ++j)
                if (basis[j].source == st.generator_vertex[k] && basis[j].target == v)
                    st.local[k][j] = static_cast<std::uint32_t>(st.cover.dims[v]++);

    // Left action on P comes from left multiplication in Λ.
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& arr = q.arrow(a);
        Mat<F> m(f, st.cover.dims[arr.head], st.cover.dims[arr.tail]);
        const Mat<F> lt = model.left_mult(a).transpose();
        for (std::size_t k = 0; k < ng; ++k)
            for (std::size_t j = 0; j < model.dim(); ++j) {
                if (st.local[k][j] == kNone || basis[j].target != arr.tail) continue;
                for (const auto& e : lt.row(j)) m.set(st.local[k][e.col], st.local[k][j], e.val);
            }
        st.cover.maps.push_back(std::move(m));
    }

    // Surjection (k, λ) ↦ ρ_M(λ) m_k, one block per vertex.
    std::vector<std::vector<SparseVec<F>>> cols(nv);
    for (std::uint32_t v = 0; v < nv; ++v) cols[v].resize(st.cover.dims[v]);
    for (std::size_t k = 0; k < ng; ++k) {
        const std::uint32_t i = st.generator_vertex[k];
        for (std::size_t j = 0; j < model.dim(); ++j) {
            if (st.local[k][j] == kNone) continue;
            Mat<F> rho = path_matrix(q, M, basis[j].word, i);
            cols[basis[j].target][st.local[k][j]] = rho.apply(st.generator_images[k]);
        }
    }
    for (std::uint32_t v = 0; v < nv; ++v) {
        std::vector<SparseVec<F>> rows(M.dims[v]);
        for (std::size_t c = 0; c < cols[v].size(); ++c)
            for (const auto& e : cols[v][c]) rows[e.col].push_back({static_cast<std::uint32_t>(c), e.val});
        st.surjection.push_back(Mat<F>::from_rows(f, st.cover.dims[v], std::move(rows)));
    }

    // Kernel, one block per vertex; RREF bases give coordinates at the free columns.
    std::vector<std::vector<std::uint32_t>> free(nv);
    st.kernel.field = f;
    for (std::uint32_t v = 0; v < nv; ++v) {
        auto ker = kernel_basis(st.surjection[v], &free[v]);
        st.kernel.dims.push_back(ker.dim());
        st.kernel_inclusion.push_back(ker.basis.transpose());
    }
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& arr = q.arrow(a);
        Mat<F> m(f, st.kernel.dims[arr.head], st.kernel.dims[arr.tail]);
        const Mat<F> zt = st.kernel_inclusion[arr.tail].transpose();  // rows = kernel vectors
        std::vector<int> slot(st.cover.dims[arr.head], -1);
        for (std::size_t r = 0; r < free[arr.head].size(); ++r) slot[free[arr.head][r]] = static_cast<int>(r);
        for (std::size_t c = 0; c < zt.rows(); ++c) {
            auto img = st.cover.maps[a].apply(zt.row(c));
            for (const auto& e : img)
                if (slot[e.col] >= 0) m.set(static_cast<std::size_t>(slot[e.col]), c, e.val);
        }
        st.kernel.maps.push_back(std::move(m));
    }
    return st;
}

template <class F>
std::vector<ResolutionStep<F>> minimal_resolution(const AlgebraModel<F>& model, const Representation<F>& M,
                                                  std::size_t steps) {
    std::vector<ResolutionStep<F>> out;
    const Representation<F>* cur = &M;
    for (std::size_t s = 0; s < steps; ++s) {
        out.push_back(projective_cover(model, *cur));
        cur = &out.back().kernel;
    }
    return out;
}

namespace {

/** Matrix of Hom(P_p, W) -> Hom(P_{p+1}, W), φ ↦ φ ∘ ∂_{p+1}. */
template <class F>
Mat<F> hom_differential(const AlgebraModel<F>& model, const ResolutionStep<F>& lower, const ResolutionStep<F>& upper,
                        const Representation<F>& W, std::map<std::size_t, Mat<F>>& rho_cache) {
    const Quiver& q = model.quiver();
    const F& f = model.field();
    const auto& basis = model.basis();
    std::vector<std::size_t> in_off(1, 0), out_off(1, 0);
    for (auto v : lower.generator_vertex) in_off.push_back(in_off.back() + W.dims[v]);
    for (auto v : upper.generator_vertex) out_off.push_back(out_off.back() + W.dims[v]);

    // inverse of lower.local: (vertex, local index) -> (k, λ)
    const std::size_t nv = q.num_vertices();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> owner(nv);
    for (std::uint32_t v = 0; v < nv; ++v) owner[v].resize(lower.cover.dims[v]);
    for (std::size_t k = 0; k < lower.local.size(); ++k)
        for (std::size_t j = 0; j < model.dim(); ++j)
            if (lower.local[k][j] != kNone) owner[basis[j].target][lower.local[k][j]] = {k, j};

    Mat<F> out(f, out_off.back(), in_off.back());
    for (std::size_t l = 0; l < upper.generator_vertex.size(); ++l) {
        const std::uint32_t v = upper.generator_vertex[l];
        // image of generator l in P_p at vertex v
        SparseVec<F> img = lower.kernel_inclusion[v].apply(upper.generator_images[l]);
        for (const auto& e : img) {
            auto [k, j] = owner[v][e.col];
            auto it = rho_cache.find(j);
            if (it == rho_cache.end())
                it = rho_cache.emplace(j, path_matrix(q, W, basis[j].word, basis[j].source)).first;
            out.add_block(out_off[l], in_off[k], it->second.scaled(e.val));
        }
    }
    return out;
}

}  // namespace

template <class F>
std::vector<std::size_t> ext_dims_oracle(const AlgebraModel<F>& model, const Representation<F>& V,
                                         const Representation<F>& W, std::size_t P) {
    const F& f = model.field();
    validate_shapes(model.quiver(), W);
    auto res = minimal_resolution(model, V, P + 2);
    std::map<std::size_t, Mat<F>> cache;
    std::vector<Mat<F>> delta;
    for (std::size_t p = 0; p <= P; ++p) delta.push_back(hom_differential(model, res[p], res[p + 1], W, cache));
    std::vector<std::size_t> dims;
    for (std::size_t p = 0; p <= P; ++p) {
        Mat<F> in = p == 0 ? Mat<F>(f, delta[0].cols(), 0) : delta[p - 1];
        dims.push_back(cohomology(in, delta[p]).dim);
    }
    return dims;
}

#define QUIVEXT_INSTANTIATE(F)                                                                                    \
    template ResolutionStep<F> projective_cover<F>(const AlgebraModel<F>&, const Representation<F>&);             \
    template std::vector<ResolutionStep<F>> minimal_resolution<F>(const AlgebraModel<F>&, const Representation<F>&, \
                                                                  std::size_t);                                   \
    template std::vector<std::size_t> ext_dims_oracle<F>(const AlgebraModel<F>&, const Representation<F>&,        \
                                                         const Representation<F>&, std::size_t);

QUIVEXT_INSTANTIATE(Rationals)
QUIVEXT_INSTANTIATE(PrimeField)

}  // namespace quivext

#include "representation.hpp"

#include "random.hpp"

namespace quivext {

template <class F>
std::size_t Representation<F>::total_dim() const {
    std::size_t n = 0;
    for (auto d : dims) n += d;
    return n;
}

template <class F>
Representation<F> zero_representation(const Quiver& q, const F& f) {
    Representation<F> r;
    r.field = f;
    r.dims.assign(q.num_vertices(), 0);
    for (std::size_t a = 0; a < q.num_arrows(); ++a) r.maps.emplace_back(f, 0, 0);
    return r;
}

template <class F>
void validate_shapes(const Quiver& q, const Representation<F>& rep) {
    if (rep.dims.size() != q.num_vertices())
        fail(ErrorCode::ShapeMismatch, "representation has " + std::to_string(rep.dims.size()) + " vertex spaces, quiver has " +
                                           std::to_string(q.num_vertices()));
    if (rep.maps.size() != q.num_arrows())
        fail(ErrorCode::ShapeMismatch, "representation has " + std::to_string(rep.maps.size()) + " maps, quiver has " +
                                           std::to_string(q.num_arrows()) + " arrows");
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& arr = q.arrow(a);
        const Mat<F>& m = rep.maps[a];
        if (m.rows() != rep.dims[arr.head] || m.cols() != rep.dims[arr.tail])
            fail(ErrorCode::ShapeMismatch, "map of arrow '" + arr.name + "' is " + std::to_string(m.rows()) + "x" +
                                               std::to_string(m.cols()) + ", expected " +
                                               std::to_string(rep.dims[arr.head]) + "x" +
                                               std::to_string(rep.dims[arr.tail]));
    }
}

template <class F>
ModuleForm<F> to_module_form(const Quiver& q, const Representation<F>& rep) {
    validate_shapes(q, rep);
    const F& f = rep.field;
    ModuleForm<F> mf;
    mf.field = f;
    mf.dims = rep.dims;
    mf.offsets.assign(1, 0);
    for (auto d : rep.dims) mf.offsets.push_back(mf.offsets.back() + d);
    std::size_t n = mf.total_dim();
    for (std::size_t i = 0; i < rep.dims.size(); ++i) {
        Mat<F> e(f, n, n);
        for (std::size_t k = mf.offsets[i]; k < mf.offsets[i + 1]; ++k) e.set(k, k, f.one());
        mf.projectors.push_back(std::move(e));
    }
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        Mat<F> act(f, n, n);
        act.add_block(mf.offsets[q.arrow(a).head], mf.offsets[q.arrow(a).tail], rep.maps[a]);
        mf.actions.push_back(std::move(act));
    }
    return mf;
}

template <class F>
Representation<F> to_representation(const Quiver& q, const ModuleForm<F>& mf) {
    const std::size_t nv = q.num_vertices();
    if (mf.dims.size() != nv || mf.projectors.size() != nv || mf.offsets.size() != nv + 1 ||
        mf.actions.size() != q.num_arrows())
        fail(ErrorCode::BlockInconsistency, "module form does not match the quiver");
    std::size_t n = mf.total_dim();
    for (std::size_t i = 0; i < nv; ++i)
        if (mf.offsets[i + 1] - mf.offsets[i] != mf.dims[i])
            fail(ErrorCode::BlockInconsistency, "block offsets disagree with dimensions");
    for (std::size_t i = 0; i < nv; ++i) {
        const Mat<F>& e = mf.projectors[i];
        if (e.rows() != n || e.cols() != n) fail(ErrorCode::BlockInconsistency, "projector has the wrong shape");
        for (std::size_t r = 0; r < n; ++r) {
            const auto& row = e.row(r);
            bool inside = r >= mf.offsets[i] && r < mf.offsets[i + 1];
            bool ok = inside ? (row.size() == 1 && row[0].col == r && e.field().is_one(row[0].val)) : row.empty();
            if (!ok)
                fail(ErrorCode::BlockInconsistency,
                     "projector e_" + q.vertices()[i] + " is not the identity on its block and zero elsewhere");
        }
    }
    Representation<F> rep;
    rep.field = mf.field;
    rep.dims = mf.dims;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& arr = q.arrow(a);
        const Mat<F>& act = mf.actions[a];
        if (act.rows() != n || act.cols() != n) fail(ErrorCode::BlockInconsistency, "action has the wrong shape");
        std::size_t h0 = mf.offsets[arr.head], h1 = mf.offsets[arr.head + 1];
        std::size_t t0 = mf.offsets[arr.tail], t1 = mf.offsets[arr.tail + 1];
        for (std::size_t r = 0; r < n; ++r)
            for (const auto& en : act.row(r))
                if (r < h0 || r >= h1 || en.col < t0 || en.col >= t1)
                    fail(ErrorCode::BlockInconsistency, "action of arrow '" + arr.name + "' leaks outside its block");
        rep.maps.push_back(act.block(h0, t0, h1 - h0, t1 - t0));
    }
    return rep;
}

template <class F>
Mat<F> path_matrix(const Quiver& q, const Representation<F>& rep, const Word& w, std::uint32_t vertex) {
    const F& f = rep.field;
    if (w.empty()) return Mat<F>::identity(f, rep.dims[vertex]);
    Mat<F> m = rep.maps[w.back()];
    for (std::size_t k = w.size() - 1; k-- > 0;) m = rep.maps[w[k]] * m;
    (void)q;
    return m;
}

template <class F>
std::vector<std::size_t> violated_relations(const Quiver& q, const Representation<F>& rep, const RelationSet<F>& rels) {
    validate_shapes(q, rep);
    std::vector<std::size_t> bad;
    for (std::size_t g = 0; g < rels.generators.size(); ++g) {
        const Relation<F>& rel = rels.generators[g];
        const F& f = rep.field;
        Mat<F> sum(f, rep.dims[rel.target], rep.dims[rel.source]);
        for (const auto& t : rel.terms) sum = sum + path_matrix(q, rep, t.word, rel.source).scaled(t.coeff);
        if (!sum.is_zero()) bad.push_back(g);
    }
    return bad;
}

std::vector<std::size_t> hom_offsets(const std::vector<std::size_t>& vdims, const std::vector<std::size_t>& wdims) {
    std::vector<std::size_t> off(1, 0);
    for (std::size_t i = 0; i < vdims.size(); ++i) off.push_back(off.back() + vdims[i] * wdims[i]);
    return off;
}

template <class F>
Mat<F> gamma_matrix(const Quiver& q, const Representation<F>& V, const Representation<F>& W) {
    validate_shapes(q, V);
    validate_shapes(q, W);
    const F& f = V.field;
    auto dom = hom_offsets(V.dims, W.dims);
    std::vector<SparseVec<F>> rows;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const std::uint32_t h = q.arrow(a).head, t = q.arrow(a).tail;
        const std::size_t nvh = V.dims[h], nvt = V.dims[t];
        const Mat<F> Va_t = V.maps[a].transpose();  // row c = column c of ρ_V(a)
        const Mat<F>& Wa = W.maps[a];
        for (std::size_t r = 0; r < W.dims[h]; ++r)
            for (std::size_t c = 0; c < nvt; ++c) {
                SparseVec<F> row;
                // (f_h ρ_V(a))[r, c] = Σ_k f_h[r, k] ρ_V(a)[k, c]
                for (const auto& e : Va_t.row(c))
                    row.push_back({static_cast<std::uint32_t>(dom[h] + r * nvh + e.col), e.val});
                // −(ρ_W(a) f_t)[r, c] = −Σ_k ρ_W(a)[r, k] f_t[k, c]
                for (const auto& e : Wa.row(r))
                    row.push_back({static_cast<std::uint32_t>(dom[t] + e.col * nvt + c), f.neg(e.val)});
                std::sort(row.begin(), row.end(), [](const Entry<F>& x, const Entry<F>& y) { return x.col < y.col; });
                // merge the h == t overlaps
                SparseVec<F> merged;
                for (auto& e : row) {
                    if (!merged.empty() && merged.back().col == e.col)
                        f.add_assign(merged.back().val, e.val);
                    else
                        merged.push_back(e);
                    if (f.is_zero(merged.back().val)) merged.pop_back();
                }
                rows.push_back(std::move(merged));
            }
    }
    return Mat<F>::from_rows(f, dom.back(), std::move(rows));
}

template <class F>
Subspace<F> hom_basis(const Quiver& q, const Representation<F>& V, const Representation<F>& W,
                      std::vector<std::uint32_t>* free_columns) {
    return kernel_basis(gamma_matrix(q, V, W), free_columns);
}

template <class F>
std::vector<Mat<F>> hom_components(const Representation<F>& V, const Representation<F>& W, const SparseVec<F>& fv) {
    const F& f = V.field;
    auto off = hom_offsets(V.dims, W.dims);
    std::vector<Mat<F>> out;
    for (std::size_t i = 0; i < V.dims.size(); ++i) out.emplace_back(f, W.dims[i], V.dims[i]);
    for (const auto& e : fv) {
        std::size_t i = 0;
        while (e.col >= off[i + 1]) ++i;
        std::size_t local = e.col - off[i];
        out[i].set(local / V.dims[i], local % V.dims[i], e.val);
    }
    return out;
}

namespace {

/** Λ^g with basis (generator, basis element) grouped by the target vertex of the element. */
template <class F>
struct FreeLayout {
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::uint32_t>> local;  // [gen][basis elt] -> index inside its vertex block
    std::size_t gens = 0;

    FreeLayout(const AlgebraModel<F>& model, std::size_t g) : gens(g) {
        dims.assign(model.quiver().num_vertices(), 0);
        local.assign(g, std::vector<std::uint32_t>(model.dim()));
        for (std::uint32_t v = 0; v < dims.size(); ++v)
            for (std::size_t k = 0; k < g; ++k)
                for (std::size_t j = 0; j < model.dim(); ++j)
                    if (model.basis()[j].target == v) local[k][j] = static_cast<std::uint32_t>(dims[v]++);
    }
};

template <class F>
Representation<F> free_rep(const AlgebraModel<F>& model, const FreeLayout<F>& lay) {
    const Quiver& q = model.quiver();
    const F& f = model.field();
    Representation<F> rep;
    rep.field = f;
    rep.dims = lay.dims;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& arr = q.arrow(a);
        Mat<F> m(f, lay.dims[arr.head], lay.dims[arr.tail]);
        const Mat<F> lt = model.left_mult(a).transpose();  // row j = a · basis_j
        for (std::size_t k = 0; k < lay.gens; ++k)
            for (std::size_t j = 0; j < model.dim(); ++j) {
                if (model.basis()[j].target != arr.tail) continue;
                for (const auto& e : lt.row(j)) m.set(lay.local[k][e.col], lay.local[k][j], e.val);
            }
        rep.maps.push_back(std::move(m));
    }
    return rep;
}

}  // namespace

template <class F>
Representation<F> free_module(const AlgebraModel<F>& model, std::size_t generators) {
    FreeLayout<F> lay(model, generators);
    return free_rep(model, lay);
}

template <class F>
Representation<F> random_module(const AlgebraModel<F>& model, std::size_t generators, std::size_t relators,
                                std::uint64_t seed) {
    if (generators == 0) fail(ErrorCode::InvalidArgument, "random_module needs at least one generator");
    const Quiver& q = model.quiver();
    const F& f = model.field();
    const std::size_t nv = q.num_vertices();
    FreeLayout<F> lay(model, generators);
    Representation<F> free = free_rep(model, lay);
    Rng rng(seed);

    // Submodule generated by the relators: per-vertex echelon bases closed under arrows.
    std::vector<Echelon<F>> sub;
    for (std::uint32_t v = 0; v < nv; ++v) sub.emplace_back(f, lay.dims[v]);
    std::vector<std::pair<std::uint32_t, SparseVec<F>>> queue;
    const std::size_t top = model.nilpotency_index();
    for (std::size_t r = 0; r < relators && top > 1; ++r) {
        std::size_t d = 1 + rng.below(top - 1);
        // pick a vertex that carries degree-d elements
        std::vector<std::uint32_t> verts;
        for (std::uint32_t v = 0; v < nv; ++v)
            for (const auto& b : model.basis())
                if (b.degree == d && b.target == v) {
                    verts.push_back(v);
                    break;
                }
        if (verts.empty()) continue;
        std::uint32_t v = verts[rng.below(verts.size())];
        auto& acc = scratch_accumulator(f, lay.dims[v]);
        for (std::size_t k = 0; k < generators; ++k)
            for (std::size_t j = 0; j < model.dim(); ++j) {
                const BasisPath& b = model.basis()[j];
                if (b.degree != d || b.target != v) continue;
                long long c = rng.symmetric(3);
                if (c != 0) acc.add(lay.local[k][j], f.from_int(c));
            }
        auto vec = acc.take();
        if (!vec.empty()) queue.emplace_back(v, std::move(vec));
    }
    while (!queue.empty()) {
        auto [v, vec] = std::move(queue.back());
        queue.pop_back();
        if (!sub[v].insert(vec)) continue;
        for (std::size_t a = 0; a < q.num_arrows(); ++a) {
            if (q.arrow(a).tail != v) continue;
            auto img = free.maps[a].apply(vec);
            if (!img.empty()) queue.emplace_back(q.arrow(a).head, std::move(img));
        }
    }

    // Quotient per vertex.
    std::vector<QuotientResult<F>> quo;
    Representation<F> rep;
    rep.field = f;
    for (std::uint32_t v = 0; v < nv; ++v) {
        std::vector<SparseVec<F>> rows(sub[v].rows().begin(), sub[v].rows().end());
        Subspace<F> s{lay.dims[v], Mat<F>::from_rows(f, lay.dims[v], std::move(rows))};
        quo.push_back(quotient(lay.dims[v], s));
        rep.dims.push_back(quo.back().representatives.dim());
    }
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& arr = q.arrow(a);
        Mat<F> m(f, rep.dims[arr.head], rep.dims[arr.tail]);
        const auto& reps = quo[arr.tail].representatives.basis;
        for (std::size_t c = 0; c < reps.rows(); ++c) {
            auto img = quo[arr.head].projection.apply(free.maps[a].apply(reps.row(c)));
            for (const auto& e : img) m.set(e.col, c, e.val);
        }
        rep.maps.push_back(std::move(m));
    }
    return rep;
}

template <class F>
Mat<F> basis_action(const AlgebraModel<F>& model, const Representation<F>& rep, std::size_t k) {
    const Quiver& q = model.quiver();
    const BasisPath& b = model.basis()[k];
    const F& f = model.field();
    std::vector<std::size_t> off(1, 0);
    for (auto d : rep.dims) off.push_back(off.back() + d);
    Mat<F> out(f, off.back(), off.back());
    Mat<F> block = path_matrix(q, rep, b.word, b.source);
    out.add_block(off[b.target], off[b.source], block);
    return out;
}

template <class F>
Representation<F> simple_module(const Quiver& q, const F& f, std::uint32_t i) {
    Representation<F> r = zero_representation(q, f);
    r.dims[i] = 1;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) r.maps[a] = Mat<F>(f, r.dims[q.arrow(a).head], r.dims[q.arrow(a).tail]);
    return r;
}

template <class F>
Representation<F> random_base_change(const Quiver& q, const Representation<F>& rep, std::uint64_t seed) {
    validate_shapes(q, rep);
    const F& f = rep.field;
    Rng rng(seed);
    std::vector<Mat<F>> g, ginv;
    for (auto n : rep.dims) {
        // unit lower times unit upper triangular: always invertible
        Mat<F> lo = Mat<F>::identity(f, n), up = Mat<F>::identity(f, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < r; ++c) {
                lo.set(r, c, f.from_int(rng.symmetric(2)));
                up.set(c, r, f.from_int(rng.symmetric(2)));
            }
        Mat<F> m = lo * up;
        auto inv = inverse(m);
        g.push_back(m);
        ginv.push_back(*inv);
    }
    Representation<F> out;
    out.field = f;
    out.dims = rep.dims;
    for (std::size_t a = 0; a < q.num_arrows(); ++a)
        out.maps.push_back(g[q.arrow(a).head] * rep.maps[a] * ginv[q.arrow(a).tail]);
    return out;
}

#define QUIVEXT_INSTANTIATE(F)                                                                                     \
    template struct Representation<F>;                                                                             \
    template Representation<F> zero_representation<F>(const Quiver&, const F&);                                    \
    template void validate_shapes<F>(const Quiver&, const Representation<F>&);                                     \
    template ModuleForm<F> to_module_form<F>(const Quiver&, const Representation<F>&);                             \
    template Representation<F> to_representation<F>(const Quiver&, const ModuleForm<F>&);                          \
    template Mat<F> path_matrix<F>(const Quiver&, const Representation<F>&, const Word&, std::uint32_t);           \
    template std::vector<std::size_t> violated_relations<F>(const Quiver&, const Representation<F>&,               \
                                                            const RelationSet<F>&);                                \
    template Mat<F> gamma_matrix<F>(const Quiver&, const Representation<F>&, const Representation<F>&);            \
    template Subspace<F> hom_basis<F>(const Quiver&, const Representation<F>&, const Representation<F>&,           \
                                      std::vector<std::uint32_t>*);                                                \
    template std::vector<Mat<F>> hom_components<F>(const Representation<F>&, const Representation<F>&,             \
                                                   const SparseVec<F>&);                                           \
    template Representation<F> free_module<F>(const AlgebraModel<F>&, std::size_t);                                \
    template Representation<F> random_module<F>(const AlgebraModel<F>&, std::size_t, std::size_t, std::uint64_t);  \
    template Mat<F> basis_action<F>(const AlgebraModel<F>&, const Representation<F>&, std::size_t);                \
    template Representation<F> simple_module<F>(const Quiver&, const F&, std::uint32_t);                           \
    template Representation<F> random_base_change<F>(const Quiver&, const Representation<F>&, std::uint64_t);

QUIVEXT_INSTANTIATE(Rationals)
QUIVEXT_INSTANTIATE(PrimeField)

}  // namespace quivext

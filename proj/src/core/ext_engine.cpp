#include "ext_engine.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "random.hpp"
#include "resolution_oracle.hpp"

namespace quivext {

namespace {

template <class F>
void sort_merge(const F& f, SparseVec<F>& row) {
    std::sort(row.begin(), row.end(), [](const Entry<F>& x, const Entry<F>& y) { return x.col < y.col; });
    SparseVec<F> out;
    out.reserve(row.size());
    for (auto& e : row) {
        if (!out.empty() && out.back().col == e.col)
            f.add_assign(out.back().val, e.val);
        else
            out.push_back(std::move(e));
        if (f.is_zero(out.back().val)) out.pop_back();
    }
    row = std::move(out);
}

std::vector<std::size_t> prefix_offsets(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> off(1, 0);
    for (auto d : dims) off.push_back(off.back() + d);
    return off;
}

template <class F>
TermLayout make_layout(const Quiver& q, const GradedSlice<F>& A, const std::vector<std::size_t>& wdims, bool odd) {
    TermLayout L;
    L.odd = odd;
    L.q = A.power();
    if (!odd) {
        for (std::uint32_t i = 0; i < q.num_vertices(); ++i) {
            L.slice_vertex.push_back(i);
            L.w_vertex.push_back(i);
        }
    } else {
        for (const auto& a : q.arrows()) {
            L.slice_vertex.push_back(a.tail);
            L.w_vertex.push_back(a.head);
        }
    }
    const auto& el = A.elements();
    L.base.assign(L.slice_vertex.size(), std::vector<std::int64_t>(el.size(), -1));
    std::size_t cur = 0;
    for (std::uint32_t v = 0; v < q.num_vertices(); ++v) {
        L.offsets.push_back(cur);
        for (std::size_t s = 0; s < L.slice_vertex.size(); ++s)
            for (std::size_t x = 0; x < el.size(); ++x)
                if (el[x].source == v && el[x].target == L.slice_vertex[s]) {
                    L.base[s][x] = static_cast<std::int64_t>(cur);
                    cur += wdims[L.w_vertex[s]];
                }
    }
    L.offsets.push_back(cur);
    return L;
}

/** Λ-module structure (af)(s) = f(sa) on a term. */
template <class F>
Representation<F> term_module(const Quiver& q, const GradedSlice<F>& A, const TermLayout& L,
                              const std::vector<std::size_t>& wdims, const F& f) {
    Representation<F> rep;
    rep.field = f;
    for (std::uint32_t v = 0; v < q.num_vertices(); ++v) rep.dims.push_back(L.offsets[v + 1] - L.offsets[v]);
    const auto& el = A.elements();
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const std::uint32_t h = q.arrow(a).head, t = q.arrow(a).tail;
        std::vector<SparseVec<F>> rows(rep.dims[h]);
        const Mat<F> rt = A.right_action(a).transpose();  // row ξ: ξ·a
        for (std::size_t x = 0; x < el.size(); ++x) {
            if (el[x].source != h || rt.row(x).empty()) continue;
            for (std::size_t s = 0; s < L.base.size(); ++s) {
                if (L.base[s][x] < 0) continue;
                const std::size_t nw = wdims[L.w_vertex[s]];
                for (std::size_t w = 0; w < nw; ++w) {
                    auto& row = rows[static_cast<std::size_t>(L.base[s][x]) + w - L.offsets[h]];
                    for (const auto& e : rt.row(x))
                        row.push_back({static_cast<std::uint32_t>(L.base[s][e.col] + static_cast<std::int64_t>(w) -
                                                                  static_cast<std::int64_t>(L.offsets[t])),
                                       e.val});
                }
            }
        }
        for (auto& r : rows) sort_merge(f, r);
        rep.maps.push_back(Mat<F>::from_rows(f, rep.dims[t], std::move(rows)));
    }
    return rep;
}

/** γ_{A^q,W}: C^{2q} -> C^{2q+1}. */
template <class F>
Mat<F> gamma_term(const Quiver& q, const GradedSlice<F>& A, const TermLayout& even, const TermLayout& odd,
                  const Representation<F>& W) {
    const F& f = W.field;
    std::vector<SparseVec<F>> rows(odd.dim());
    const auto& el = A.elements();
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const std::uint32_t h = q.arrow(a).head, t = q.arrow(a).tail;
        const Mat<F> lt = A.left_action(a).transpose();  // row ξ: a·ξ
        const Mat<F>& Wa = W.maps[a];
        for (std::size_t x = 0; x < el.size(); ++x) {
            if (odd.base[a][x] < 0) continue;
            for (std::size_t w2 = 0; w2 < W.dims[h]; ++w2) {
                auto& row = rows[static_cast<std::size_t>(odd.base[a][x]) + w2];
                for (const auto& e : lt.row(x))
                    row.push_back({static_cast<std::uint32_t>(even.base[h][e.col] + static_cast<std::int64_t>(w2)), e.val});
                for (const auto& e : Wa.row(w2))
                    row.push_back({static_cast<std::uint32_t>(even.base[t][x] + e.col), f.neg(e.val)});
                sort_merge(f, row);
            }
        }
    }
    return Mat<F>::from_rows(f, even.dim(), std::move(rows));
}

/** W -> C^0, w ↦ (λ ↦ λw). */
template <class F>
Mat<F> augmentation_matrix(const AlgebraModel<F>& model, const GradedSlice<F>& A0, const TermLayout& L,
                           const Representation<F>& W) {
    const Quiver& q = model.quiver();
    const F& f = W.field;
    PathTable& pt = model.paths();
    auto woff = prefix_offsets(W.dims);
    std::vector<SparseVec<F>> rows(L.dim());
    const auto& el = A0.elements();
    for (std::size_t x = 0; x < el.size(); ++x) {
        const SliceElement& s = el[x];
        if (W.dims[s.target] == 0 || W.dims[s.source] == 0) continue;
        Mat<F> rho(f, W.dims[s.target], W.dims[s.source]);
        for (const auto& e : A0.lift(x))
            rho = rho + path_matrix(q, W, pt.word(s.degree, s.block, e.col), s.source).scaled(e.val);
        for (std::size_t w2 = 0; w2 < W.dims[s.target]; ++w2) {
            auto& row = rows[static_cast<std::size_t>(L.base[s.target][x]) + w2];
            for (const auto& e : rho.row(w2)) row.push_back({static_cast<std::uint32_t>(woff[s.source] + e.col), e.val});
        }
    }
    return Mat<F>::from_rows(f, woff.back(), std::move(rows));
}

/** a · v for a path vector v of degree d in block b. */
template <class F>
SparseVec<F> prepend_vec(PathTable& pt, std::size_t d, std::size_t b, std::uint32_t a, const SparseVec<F>& v) {
    SparseVec<F> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back({pt.prepend(d, b, e.col, a), e.val});
    std::sort(out.begin(), out.end(), [](const Entry<F>& x, const Entry<F>& y) { return x.col < y.col; });
    return out;
}

/**
 * Degreewise complement C' of K^{q+1} in K^q: level-q flag vectors plus
 * random elements of K^{q+1}. Splits vectors of K^q along C' ⊕ K^{q+1}.
 */
template <class F>
class RandomComplement {
public:
    RandomComplement(IdealFiltration<F>& filt, std::size_t q, std::uint64_t seed) : filt_(filt), q_(q), seed_(seed) {}

    /** Lift of the k-th level-q vector of (d, b) into C'. */
    SparseVec<F> lift(std::size_t d, std::size_t b, std::size_t k) { return piece(d, b).cprime[k]; }

    /** K^{q+1}-component of y ∈ (K^q)_d along C'. */
    SparseVec<F> ideal_part(std::size_t d, std::size_t b, const SparseVec<F>& y) {
        Piece& p = piece(d, b);
        auto coords = p.coord->coordinates(y);
        if (!coords) fail(ErrorCode::SingularConnectingMap, "internal: vector outside K^q while splitting");
        const F& f = filt_.field();
        Accumulator<F> acc(f, p.dim);
        for (const auto& e : *coords)
            if (e.col >= p.cprime.size()) acc.scatter(p.kfam[e.col - p.cprime.size()], e.val);
        return acc.take();
    }

private:
    struct Piece {
        std::size_t dim = 0;
        std::vector<SparseVec<F>> cprime, kfam;
        std::unique_ptr<Coordinatizer<F>> coord;
    };

    Piece& piece(std::size_t d, std::size_t b) {
        auto key = std::make_pair(d, b);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        const F& f = filt_.field();
        const Flag<F>& fl = filt_.flag(d, b);
        Piece p;
        p.dim = fl.dim;
        const std::size_t q1 = q_ + 1;
        if (q1 <= fl.p_lo) {
            for (std::uint32_t c = 0; c < fl.dim; ++c) p.kfam.push_back({{c, f.one()}});
        } else if (q1 <= fl.p_hi()) {
            for (std::size_t r = 0; r < fl.ranges[q1 - fl.p_lo - 1].second; ++r) p.kfam.push_back(fl.rows[r]);
        }
        Rng rng(seed_ ^ (0x9e3779b97f4a7c15ull * (q_ + 1)) ^ (0xbf58476d1ce4e5b9ull * (d + 1)) ^
                (0x94d049bb133111ebull * (b + 1)));
        const std::size_t nq = fl.level_dim(q_);
        for (std::size_t k = 0; k < nq; ++k) {
            SparseVec<F> v = fl.level_vector(q_, k, f);
            if (!p.kfam.empty())
                for (int t = 0; t < 3; ++t) {
                    const auto& kv = p.kfam[rng.below(p.kfam.size())];
                    v = sparse_axpy(f, v, f.from_int(rng.nonzero(3)), kv);
                }
            p.cprime.push_back(std::move(v));
        }
        std::vector<SparseVec<F>> fam = p.cprime;
        fam.insert(fam.end(), p.kfam.begin(), p.kfam.end());
        p.coord = std::make_unique<Coordinatizer<F>>(f, fl.dim, fam);
        return cache_.emplace(key, std::move(p)).first->second;
    }

    IdealFiltration<F>& filt_;
    std::size_t q_;
    std::uint64_t seed_;
    std::map<std::pair<std::size_t, std::size_t>, Piece> cache_;
};

/**
 * Snake map S: C^{2q+2} -> C^{2q+1}, g ↦ (ξ ↦ G(a·ξ') − a·G(ξ')) where G
 * extends g by zero on the chosen complement and ξ' is the lift of ξ in it.
 */
template <class F>
Mat<F> snake_matrix(const AlgebraModel<F>& model, const GradedSlice<F>& Aq, const GradedSlice<F>& Aq1,
                    const TermLayout& odd_q, const TermLayout& even_q1, const Representation<F>& W, bool random,
                    std::uint64_t seed) {
    const Quiver& q = model.quiver();
    const F& f = W.field;
    PathTable& pt = model.paths();
    std::optional<RandomComplement<F>> rc;
    if (random) rc.emplace(Aq.filtration(), Aq.power(), seed);
    std::vector<SparseVec<F>> rows(odd_q.dim());
    const auto& el = Aq.elements();
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const std::uint32_t h = q.arrow(a).head;
        if (W.dims[h] == 0) continue;
        for (std::size_t x = 0; x < el.size(); ++x) {
            if (odd_q.base[a][x] < 0) continue;
            const SliceElement& s = el[x];
            const std::size_t b2 = pt.block_id(h, s.source);
            SparseVec<F> coords;
            if (!rc) {
                coords = Aq1.project(s.degree + 1, b2, prepend_vec(pt, s.degree, s.block, static_cast<std::uint32_t>(a), Aq.lift(x)));
            } else {
                SparseVec<F> lift = rc->lift(s.degree, s.block, s.index);
                SparseVec<F> y = prepend_vec(pt, s.degree, s.block, static_cast<std::uint32_t>(a), lift);
                coords = Aq1.project(s.degree + 1, b2, rc->ideal_part(s.degree + 1, b2, y));
            }
            for (std::size_t w2 = 0; w2 < W.dims[h]; ++w2) {
                auto& row = rows[static_cast<std::size_t>(odd_q.base[a][x]) + w2];
                for (const auto& e : coords)
                    row.push_back({static_cast<std::uint32_t>(even_q1.base[h][e.col] + static_cast<std::int64_t>(w2)), e.val});
                sort_merge(f, row);
            }
        }
    }
    return Mat<F>::from_rows(f, even_q1.dim(), std::move(rows));
}

template <class F>
ConnectingMap<F> connecting_from(const AlgebraModel<F>& model, const GradedSlice<F>& Aq, const GradedSlice<F>& Aq1,
                                 const TermLayout& odd_q, const TermLayout& even_q1, const Mat<F>& gamma_q,
                                 const Mat<F>& gamma_q1, const Representation<F>& W, bool random, std::uint64_t seed) {
    const F& f = W.field;
    auto quo = quotient(odd_q.dim(), image_basis(gamma_q));
    Mat<F> iota = kernel_basis(gamma_q1).basis.transpose();
    Mat<F> S = snake_matrix(model, Aq, Aq1, odd_q, even_q1, W, random, seed);
    ConnectingMap<F> out;
    out.partial = quo.projection * (S * iota);
    const std::string where = "connecting map for q = " + std::to_string(Aq.power());
    if (out.partial.rows() != out.partial.cols())
        fail(ErrorCode::SingularConnectingMap, where + " is " + std::to_string(out.partial.rows()) + "x" +
                                                   std::to_string(out.partial.cols()) + ", not square");
    auto inv = inverse(out.partial);
    if (!inv) fail(ErrorCode::SingularConnectingMap, where + " is singular");
    out.odd_differential = iota * (*inv * quo.projection);
    (void)f;
    return out;
}

}  // namespace

template <class F>
std::vector<GradedSlice<F>> slices_for(const AlgebraModel<F>& model, std::size_t P, const SliceOptions& opts) {
    std::vector<GradedSlice<F>> out;
    for (std::size_t q = 0; q <= (P + 1) / 2; ++q) out.push_back(associated_graded(model, q, opts));
    return out;
}

template <class F>
ConnectingMap<F> connecting_matrix(const AlgebraModel<F>& model, const GradedSlice<F>& Aq, const GradedSlice<F>& Aq1,
                                   const Representation<F>& W, bool random_complement, std::uint64_t seed) {
    const Quiver& q = model.quiver();
    validate_shapes(q, W);
    TermLayout even_q = make_layout(q, Aq, W.dims, false), odd_q = make_layout(q, Aq, W.dims, true);
    TermLayout even_q1 = make_layout(q, Aq1, W.dims, false), odd_q1 = make_layout(q, Aq1, W.dims, true);
    Mat<F> g0 = gamma_term(q, Aq, even_q, odd_q, W);
    Mat<F> g1 = gamma_term(q, Aq1, even_q1, odd_q1, W);
    return connecting_from(model, Aq, Aq1, odd_q, even_q1, g0, g1, W, random_complement, seed);
}

template <class F>
CoresolutionSegment<F> coresolution(const AlgebraModel<F>& model, const std::vector<GradedSlice<F>>& slices,
                                    const Representation<F>& W, std::size_t P, const CoresolutionOptions& opts) {
    const Quiver& q = model.quiver();
    validate_shapes(q, W);
    const std::size_t Q = (P + 1) / 2;
    if (slices.size() < Q + 1) fail(ErrorCode::InvalidArgument, "coresolution needs slices A^0 .. A^" + std::to_string(Q));
    CoresolutionSegment<F> seg;
    seg.length = P;
    // layouts for indices 0 .. 2Q + 1 (one past what the odd differential needs)
    std::vector<TermLayout> lay;
    for (std::size_t k = 0; k <= Q; ++k) {
        lay.push_back(make_layout(q, slices[k], W.dims, false));
        lay.push_back(make_layout(q, slices[k], W.dims, true));
    }
    std::vector<Mat<F>> gam;
    for (std::size_t k = 0; k <= Q; ++k) gam.push_back(gamma_term(q, slices[k], lay[2 * k], lay[2 * k + 1], W));
    for (std::size_t p = 0; p <= P + 1; ++p) {
        const auto& A = slices[p / 2];
        seg.terms.push_back({lay[p], term_module(q, A, lay[p], W.dims, W.field)});
    }
    seg.augmentation = augmentation_matrix(model, slices[0], lay[0], W);
    for (std::size_t p = 0; p <= P; ++p) {
        if (p % 2 == 0) {
            seg.differentials.push_back(gam[p / 2]);
        } else {
            std::size_t k = p / 2;
            auto cm = connecting_from(model, slices[k], slices[k + 1], lay[p], lay[p + 1], gam[k], gam[k + 1], W,
                                      opts.random_complement, opts.seed);
            seg.connecting.push_back(std::move(cm.partial));
            seg.differentials.push_back(std::move(cm.odd_differential));
        }
    }
    return seg;
}

template <class F>
CoresolutionSegment<F> coresolution(const AlgebraModel<F>& model, const Representation<F>& W, std::size_t P,
                                    const CoresolutionOptions& opts) {
    return coresolution(model, slices_for(model, P, opts.slice), W, P, opts);
}

template <class F>
CoresolutionReport verify_coresolution(const AlgebraModel<F>& model, const CoresolutionSegment<F>& seg,
                                       const Representation<F>& W) {
    const Quiver& q = model.quiver();
    const F& f = model.field();
    CoresolutionReport rep;
    auto run = [&](const std::string& name, auto&& body) {
        CheckResult c;
        c.name = name;
        try {
            c.detail = body();
            c.ok = c.detail.empty();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = e.what();
        }
        rep.checks.push_back(std::move(c));
    };
    const std::size_t P = seg.length;
    const std::size_t wdim = W.total_dim();
    std::vector<std::size_t> ranks;
    for (const auto& d : seg.differentials) ranks.push_back(rank(d));
    auto dimC = [&](std::size_t p) { return seg.terms[p].layout.dim(); };

    run("augmentation_injective", [&]() -> std::string {
        std::size_t r = rank(seg.augmentation);
        return r == wdim ? "" : "rank " + std::to_string(r) + " < dim W = " + std::to_string(wdim);
    });
    run("augmentation_image_is_kernel", [&]() -> std::string {
        if (seg.differentials.empty()) return "no differentials";
        if (!(seg.differentials[0] * seg.augmentation).is_zero()) return "d0 * augmentation != 0";
        std::size_t k = dimC(0) - ranks[0];
        return k == wdim ? "" : "dim ker d0 = " + std::to_string(k) + " != dim W = " + std::to_string(wdim);
    });
    run("d_squared_zero", [&]() -> std::string {
        for (std::size_t p = 0; p + 1 < seg.differentials.size(); ++p)
            if (!(seg.differentials[p + 1] * seg.differentials[p]).is_zero())
                return "d" + std::to_string(p + 1) + " * d" + std::to_string(p) + " != 0";
        return "";
    });
    run("exactness", [&]() -> std::string {
        for (std::size_t p = 1; p <= P && p < seg.differentials.size(); ++p)
            if (ranks[p - 1] + ranks[p] != dimC(p))
                return "not exact at C^" + std::to_string(p) + ": rank d" + std::to_string(p - 1) + " = " +
                       std::to_string(ranks[p - 1]) + ", dim ker d" + std::to_string(p) + " = " +
                       std::to_string(dimC(p) - ranks[p]);
        return "";
    });
    run("lambda_linearity", [&]() -> std::string {
        auto check = [&](const Mat<F>& d, const Representation<F>& src, const Representation<F>& dst,
                         const std::string& what) -> std::string {
            auto ms = to_module_form(q, src), md = to_module_form(q, dst);
            for (std::size_t i = 0; i < q.num_vertices(); ++i)
                if (!(d * ms.projectors[i] == md.projectors[i] * d))
                    return what + " does not commute with e_" + q.vertices()[i];
            for (std::size_t a = 0; a < q.num_arrows(); ++a)
                if (!(d * ms.actions[a] == md.actions[a] * d))
                    return what + " does not commute with arrow '" + q.arrow(a).name + "'";
            return "";
        };
        auto s = check(seg.augmentation, W, seg.terms[0].module, "augmentation");
        if (!s.empty()) return s;
        for (std::size_t p = 0; p < seg.differentials.size(); ++p) {
            s = check(seg.differentials[p], seg.terms[p].module, seg.terms[p + 1].module, "d" + std::to_string(p));
            if (!s.empty()) return s;
        }
        return "";
    });
    run("injective_terms", [&]() -> std::string {
        for (std::size_t p = 0; p < seg.terms.size(); ++p)
            for (std::uint32_t i = 0; i < q.num_vertices(); ++i) {
                auto S = simple_module(q, f, i);
                auto d = ext_dims_oracle(model, S, seg.terms[p].module, 1);
                if (d[1] != 0)
                    return "Ext^1(S_" + q.vertices()[i] + ", C^" + std::to_string(p) + ") = " + std::to_string(d[1]);
            }
        return "";
    });
    return rep;
}

template <class F>
ExtResult<F> ext_from_segment(const AlgebraModel<F>& model, const CoresolutionSegment<F>& seg,
                              const Representation<F>& V) {
    const Quiver& q = model.quiver();
    const F& f = model.field();
    validate_shapes(q, V);
    const std::size_t P = seg.length;
    std::vector<Subspace<F>> hom;
    std::vector<std::vector<std::uint32_t>> free;
    ExtResult<F> out;
    for (std::size_t p = 0; p <= P + 1; ++p) {
        free.emplace_back();
        hom.push_back(hom_basis(q, V, seg.terms[p].module, &free.back()));
        out.hom_dims.push_back(hom.back().dim());
    }
    // δ_p: Hom(V, C^p) -> Hom(V, C^{p+1}), f ↦ d_p ∘ f, in kernel-basis coordinates.
    std::vector<Mat<F>> delta;
    for (std::size_t p = 0; p <= P; ++p) {
        const auto& Cp = seg.terms[p].module;
        const auto& Cq = seg.terms[p + 1].module;
        auto in_off = hom_offsets(V.dims, Cp.dims), out_off = hom_offsets(V.dims, Cq.dims);
        auto cp_off = prefix_offsets(Cp.dims), cq_off = prefix_offsets(Cq.dims);
        const Mat<F> dT = seg.differentials[p].transpose();
        std::vector<int> slot(out_off.back(), -1);
        for (std::size_t t = 0; t < free[p + 1].size(); ++t) slot[free[p + 1][t]] = static_cast<int>(t);
        Accumulator<F> acc(f, out_off.back());
        std::vector<SparseVec<F>> cols;
        for (std::size_t r = 0; r < hom[p].dim(); ++r) {
            for (const auto& e : hom[p].basis.row(r)) {
                std::size_t i = static_cast<std::size_t>(std::upper_bound(in_off.begin(), in_off.end(), e.col) - in_off.begin()) - 1;
                const std::size_t nvi = V.dims[i];
                const std::size_t local = e.col - in_off[i];
                const std::size_t row = local / nvi, c = local % nvi;
                for (const auto& de : dT.row(cp_off[i] + row)) {
                    if (de.col < cq_off[i] || de.col >= cq_off[i + 1])
                        fail(ErrorCode::ComplexBroken, "differential d" + std::to_string(p) + " mixes vertex blocks");
                    acc.add_mul(static_cast<std::uint32_t>(out_off[i] + (de.col - cq_off[i]) * nvi + c), de.val, e.val);
                }
            }
            SparseVec<F> img = acc.take(), coords;
            for (const auto& e : img)
                if (slot[e.col] >= 0) coords.push_back({static_cast<std::uint32_t>(slot[e.col]), e.val});
            std::sort(coords.begin(), coords.end(), [](const Entry<F>& x, const Entry<F>& y) { return x.col < y.col; });
            cols.push_back(std::move(coords));
        }
        std::vector<SparseVec<F>> rows(hom[p + 1].dim());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& e : cols[c]) rows[e.col].push_back({static_cast<std::uint32_t>(c), e.val});
        delta.push_back(Mat<F>::from_rows(f, hom[p].dim(), std::move(rows)));
    }
    for (std::size_t p = 0; p <= P; ++p) {
        Mat<F> in = p == 0 ? Mat<F>(f, hom[0].dim(), 0) : delta[p - 1];
        auto h = cohomology(in, delta[p]);
        out.dims.push_back(h.dim);
        out.representatives.push_back(std::move(h.representatives));
    }
    return out;
}

template <class F>
ExtResult<F> ext_dims(const AlgebraModel<F>& model, const Representation<F>& V, const Representation<F>& W,
                      std::size_t P, const CoresolutionOptions& opts) {
    auto seg = coresolution(model, W, P, opts);
    return ext_from_segment(model, seg, V);
}

template <class F>
std::pair<std::size_t, std::size_t> ext_hereditary(const AlgebraModel<F>& model, const Representation<F>& V,
                                                   const Representation<F>& W) {
    if (!model.relations().empty())
        fail(ErrorCode::HasRelations, "the hereditary formula needs an empty relation set");
    Mat<F> g = gamma_matrix(model.quiver(), V, W);
    std::size_t r = rank(g);
    return {g.cols() - r, g.rows() - r};
}

template <class F>
std::vector<std::vector<std::size_t>> spectral_page(const AlgebraModel<F>& model, const Representation<F>& V,
                                                    const Representation<F>& W, std::size_t P,
                                                    const CoresolutionOptions& opts) {
    auto res = ext_dims(model, V, W, P, opts);
    std::vector<std::vector<std::size_t>> page(P + 1, std::vector<std::size_t>(P + 1, 0));
    for (std::size_t p = 0; p <= P; ++p) page[p][0] = res.hom_dims[p];
    return page;
}

long long euler_form(const Quiver& q, const std::vector<std::size_t>& n, const std::vector<std::size_t>& m) {
    long long s = 0;
    for (std::size_t i = 0; i < q.num_vertices(); ++i) s += static_cast<long long>(n[i] * m[i]);
    for (const auto& a : q.arrows()) s -= static_cast<long long>(n[a.tail] * m[a.head]);
    return s;
}

#define QUIVEXT_INSTANTIATE(F)                                                                                     \
    template std::vector<GradedSlice<F>> slices_for<F>(const AlgebraModel<F>&, std::size_t, const SliceOptions&);  \
    template CoresolutionSegment<F> coresolution<F>(const AlgebraModel<F>&, const Representation<F>&, std::size_t, \
                                                    const CoresolutionOptions&);                                   \
    template CoresolutionSegment<F> coresolution<F>(const AlgebraModel<F>&, const std::vector<GradedSlice<F>>&,    \
                                                    const Representation<F>&, std::size_t,                         \
                                                    const CoresolutionOptions&);                                   \
    template ConnectingMap<F> connecting_matrix<F>(const AlgebraModel<F>&, const GradedSlice<F>&,                  \
                                                   const GradedSlice<F>&, const Representation<F>&, bool,          \
                                                   std::uint64_t);                                                 \
    template CoresolutionReport verify_coresolution<F>(const AlgebraModel<F>&, const CoresolutionSegment<F>&,      \
                                                       const Representation<F>&);                                  \
    template ExtResult<F> ext_from_segment<F>(const AlgebraModel<F>&, const CoresolutionSegment<F>&,               \
                                              const Representation<F>&);                                           \
    template ExtResult<F> ext_dims<F>(const AlgebraModel<F>&, const Representation<F>&, const Representation<F>&,  \
                                      std::size_t, const CoresolutionOptions&);                                    \
    template std::pair<std::size_t, std::size_t> ext_hereditary<F>(const AlgebraModel<F>&, const Representation<F>&, \
                                                                   const Representation<F>&);                      \
    template std::vector<std::vector<std::size_t>> spectral_page<F>(const AlgebraModel<F>&, const Representation<F>&, \
                                                                    const Representation<F>&, std::size_t,         \
                                                                    const CoresolutionOptions&);

QUIVEXT_INSTANTIATE(Rationals)
QUIVEXT_INSTANTIATE(PrimeField)

}  // namespace quivext

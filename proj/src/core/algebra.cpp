#include "algebra.hpp"

#include <algorithm>
#include <map>

namespace quivext {

template <class F>
std::size_t RelationSet<F>::max_length() const {
    std::size_t m = 0;
    for (const auto& g : generators) m = std::max(m, g.length);
    return m;
}

template <class F>
std::size_t RelationSet<F>::min_length() const {
    std::size_t m = 0;
    for (const auto& g : generators) m = (m == 0) ? g.length : std::min(m, g.length);
    return m;
}

template <class F>
RelationSet<F> bind_relations(const Quiver& q, const RelationSpec& spec, const F& f) {
    RelationSet<F> out;
    for (std::size_t g = 0; g < spec.generators.size(); ++g) {
        const auto& terms = spec.generators[g];
        std::string where = "relation " + std::to_string(g);
        if (terms.empty()) fail(ErrorCode::InvalidRelation, where + " has no terms");
        for (const auto& t : terms) {
            if (t.word.empty()) fail(ErrorCode::InvalidRelation, where + " contains an empty word");
            for (auto a : t.word)
                if (a >= q.num_arrows()) fail(ErrorCode::InvalidRelation, where + " references an unknown arrow");
            if (!q.composable(t.word))
                fail(ErrorCode::InvalidRelation, where + ": word '" + q.word_name(t.word) + "' is not composable");
        }
        std::size_t len = terms.front().word.size();
        for (const auto& t : terms)
            if (t.word.size() != len)
                fail(ErrorCode::InhomogeneousRelation, where + " mixes words of lengths " + std::to_string(len) +
                                                           " and " + std::to_string(t.word.size()));
        if (len < 2) fail(ErrorCode::InvalidRelation, where + " has words of length < 2");
        std::uint32_t src = q.word_source(terms.front().word), tgt = q.word_target(terms.front().word);
        for (const auto& t : terms)
            if (q.word_source(t.word) != src || q.word_target(t.word) != tgt)
                fail(ErrorCode::NonParallelRelation, where + " mixes paths with different endpoints");
        std::map<Word, typename F::value_type> merged;
        for (const auto& t : terms) {
            auto c = f.parse(t.coeff);
            auto it = merged.find(t.word);
            if (it == merged.end())
                merged.emplace(t.word, c);
            else
                f.add_assign(it->second, c);
        }
        Relation<F> rel;
        rel.source = src;
        rel.target = tgt;
        rel.length = len;
        for (auto& [w, c] : merged)
            if (!f.is_zero(c)) rel.terms.push_back({c, w});
        if (!rel.terms.empty()) out.generators.push_back(std::move(rel));
    }
    return out;
}

// ---------------------------------------------------------------- Flag

template <class F>
std::size_t Flag<F>::level_dim(std::size_t p) const {
    if (p < p_lo || p > p_hi()) return 0;
    if (p == p_lo) return complement.size();
    const auto& r = ranges[p - p_lo - 1];
    return r.second - r.first;
}

template <class F>
std::size_t Flag<F>::ideal_dim(std::size_t p) const {
    if (p <= p_lo) return dim;
    std::size_t n = 0;
    for (std::size_t l = p; l <= p_hi(); ++l) n += level_dim(l);
    return n;
}

template <class F>
std::size_t Flag<F>::level_offset(std::size_t p) const {
    if (p <= p_lo) return 0;
    return complement.size() + ranges[p - p_lo - 1].first;
}

template <class F>
std::size_t Flag<F>::level_of_index(std::size_t idx) const {
    if (idx < complement.size()) return p_lo;
    std::size_t r = idx - complement.size();
    for (std::size_t k = 0; k < ranges.size(); ++k)
        if (r >= ranges[k].first && r < ranges[k].second) return p_lo + 1 + k;
    fail(ErrorCode::InvalidArgument, "flag index out of range");
}

template <class F>
SparseVec<F> Flag<F>::level_vector(std::size_t p, std::size_t k, const F& f) const {
    if (p == p_lo) return {{complement[k], f.one()}};
    return rows[ranges[p - p_lo - 1].first + k];
}

template <class F>
SparseVec<F> Flag<F>::coordinates(const SparseVec<F>& x, const F& f) const {
    auto& acc = scratch_accumulator(f, dim);
    acc.scatter(x);
    SparseVec<F> row_part;
    const std::uint32_t c = static_cast<std::uint32_t>(complement.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::uint32_t piv = pivots[r];
        if (!acc.nonzero(piv)) continue;
        auto coef = acc.get(piv);
        for (const auto& e : rows[r]) acc.sub_mul(e.col, coef, e.val);
        row_part.push_back({c + static_cast<std::uint32_t>(r), coef});
    }
    SparseVec<F> out;
    for (std::uint32_t k = 0; k < c; ++k)
        if (acc.nonzero(complement[k])) out.push_back({k, acc.get(complement[k])});
    acc.clear();
    out.insert(out.end(), row_part.begin(), row_part.end());
    return out;
}

template <class F>
SparseVec<F> Flag<F>::level_coordinates(const SparseVec<F>& coords, std::size_t p) const {
    SparseVec<F> out;
    std::size_t n = level_dim(p);
    if (n == 0) return out;
    std::size_t off = level_offset(p);
    for (const auto& e : coords)
        if (e.col >= off && e.col < off + n) out.push_back({static_cast<std::uint32_t>(e.col - off), e.val});
    return out;
}

// ---------------------------------------------------------------- IdealFiltration

template <class F>
IdealFiltration<F>::IdealFiltration(std::shared_ptr<PathTable> paths, const F& field, std::vector<Generator<F>> gens)
    : paths_(std::move(paths)), f_(field), gens_(std::move(gens)) {
    for (const auto& g : gens_) m_min_ = (m_min_ == 0) ? g.length : std::min(m_min_, g.length);
}

template <class F>
void IdealFiltration<F>::ensure(std::size_t d) {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    while (flags_.size() <= d) compute_degree(flags_.size());
}

template <class F>
const Flag<F>& IdealFiltration<F>::flag(std::size_t d, std::size_t b) {
    ensure(d);
    return flags_[d][b];
}

template <class F>
template <class Sink>
void IdealFiltration<F>::span_products(std::size_t p, std::size_t d, std::size_t b, Sink&& sink) {
    PathTable& pt = *paths_;
    const std::uint32_t t = pt.block_target(b), s = pt.block_source(b);
    auto& acc = scratch_accumulator(f_, pt.block_size(d, b));
    for (const auto& g : gens_) {
        if (g.length > d) continue;
        const std::size_t xb = pt.block_id(t, g.target);
        const std::size_t vb = pt.block_id(g.source, s);
        const std::size_t gvb = pt.block_id(g.target, s);
        const std::size_t d1_min = (p - 1) * m_min_;
        for (std::size_t d1 = d1_min; d1 + g.length <= d; ++d1) {
            const std::size_t d2 = d - d1 - g.length;
            const std::size_t nvpaths = pt.block_size(d2, vb);
            const std::size_t nx = pt.block_size(d1, xb);
            if (nvpaths == 0 || nx == 0) continue;
            // Rows spanning (K^{p-1})_{d1} in block xb; nullptr means the whole block.
            const Flag<F>* xf = nullptr;
            std::size_t xrows = nx;
            if (p >= 2) {
                const Flag<F>& fl = flags_[d1][xb];
                if (p - 1 > fl.p_lo) {
                    if (p - 1 > fl.p_hi()) continue;
                    xf = &fl;
                    xrows = fl.ranges[p - 1 - fl.p_lo - 1].second;
                    if (xrows == 0) continue;
                }
            }
            SparseVec<F> gv;
            for (std::uint32_t j = 0; j < nvpaths; ++j) {
                gv.clear();
                for (const auto& e : g.vec)
                    gv.push_back({pt.concat(g.length, g.block, e.col, d2, vb, j), e.val});
                std::sort(gv.begin(), gv.end(), [](const Entry<F>& a, const Entry<F>& c) { return a.col < c.col; });
                for (std::size_t x = 0; x < xrows; ++x) {
                    if (xf) {
                        for (const auto& u : xf->rows[x])
                            for (const auto& e : gv)
                                acc.add_mul(pt.concat(d1, xb, u.col, g.length + d2, gvb, e.col), u.val, e.val);
                    } else {
                        for (const auto& e : gv)
                            acc.add(pt.concat(d1, xb, static_cast<std::uint32_t>(x), g.length + d2, gvb, e.col), e.val);
                    }
                    auto v = acc.take();
                    if (!v.empty() && !sink(v)) return;
                }
            }
        }
    }
}

template <class F>
void IdealFiltration<F>::compute_degree(std::size_t d) {
    PathTable& pt = *paths_;
    pt.extend_to(d + 1);
    const std::size_t p_lo = n_ ? d / n_ : 0;
    const std::size_t p_hi = m_min_ ? std::max(p_lo, d / m_min_) : p_lo;
    std::vector<Flag<F>> level(pt.num_blocks());
    for (std::size_t b = 0; b < pt.num_blocks(); ++b) {
        Flag<F>& fl = level[b];
        fl.dim = pt.block_size(d, b);
        fl.p_lo = p_lo;
        fl.ranges.assign(p_hi - p_lo, {0, 0});
        if (fl.dim == 0) continue;
        Echelon<F> e(f_, fl.dim);
        for (std::size_t p = p_hi; p > p_lo; --p) {
            std::size_t start = e.rank();
            if (!e.full())
                span_products(p, d, b, [&](const SparseVec<F>& v) {
                    e.insert(v);
                    return !e.full();
                });
            e.back_reduce(start, e.rank());
            fl.ranges[p - p_lo - 1] = {start, e.rank()};
        }
        fl.rows = e.rows();
        fl.pivots = e.pivots();
        for (std::uint32_t c = 0; c < fl.dim; ++c)
            if (e.row_of_pivot(c) < 0) fl.complement.push_back(c);
    }
    flags_.push_back(std::move(level));
}

template <class F>
std::size_t IdealFiltration<F>::generic_rank(std::size_t p, std::size_t d, std::size_t b) {
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    if (p == 0) {
        paths_->extend_to(d);
        return paths_->block_size(d, b);
    }
    if (m_min_ == 0 || d < m_min_) return 0;
    ensure(d - m_min_);
    paths_->extend_to(d);
    Echelon<F> e(f_, paths_->block_size(d, b));
    if (e.ambient() == 0) return 0;
    span_products(p, d, b, [&](const SparseVec<F>& v) {
        e.insert(v);
        return !e.full();
    });
    return e.rank();
}

// ---------------------------------------------------------------- AlgebraModel

namespace {

/**
 * Λ is infinite-dimensional when some closed walk c has no relation word
 * occurring inside any power of c: then no c^k lies in K.
 */
template <class F>
void reject_free_cycles(const Quiver& q, const RelationSet<F>& rels) {
    PathTable table(q);
    std::size_t maxlen = std::max<std::size_t>(rels.max_length(), 1);
    for (std::size_t len = 1; len <= q.num_vertices(); ++len) {
        table.extend_to(len);
        for (std::uint32_t v = 0; v < q.num_vertices(); ++v) {
            std::size_t b = table.block_id(v, v);
            for (std::uint32_t i = 0; i < table.block_size(len, b); ++i) {
                Word c = table.word(len, b, i);
                Word power;
                while (power.size() < maxlen + len) power.insert(power.end(), c.begin(), c.end());
                bool hit = false;
                for (const auto& g : rels.generators) {
                    for (const auto& t : g.terms)
                        if (std::search(power.begin(), power.end(), t.word.begin(), t.word.end()) != power.end()) {
                            hit = true;
                            break;
                        }
                    if (hit) break;
                }
                if (!hit)
                    fail(ErrorCode::NotAdmissible, "the cycle '" + q.word_name(c) +
                                                       "' avoids every relation, so its powers never vanish");
            }
        }
    }
}

template <class F>
Mat<F> columns_to_mat(const F& f, std::size_t nrows, const std::vector<SparseVec<F>>& columns) {
    std::vector<SparseVec<F>> rows(nrows);
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& e : columns[j]) rows[e.col].push_back({static_cast<std::uint32_t>(j), e.val});
    return Mat<F>::from_rows(f, columns.size(), std::move(rows));
}

template <class F>
Mat<F> diagonal_mask(const F& f, const std::vector<bool>& on) {
    Mat<F> m(f, on.size(), on.size());
    for (std::size_t i = 0; i < on.size(); ++i)
        if (on[i]) m.set(i, i, f.one());
    return m;
}

}  // namespace

template <class F>
std::size_t AlgebraModel<F>::degree_dim(std::size_t d) const {
    if (d >= n_) return 0;
    return offsets_[d + 1][0] - offsets_[d][0];
}

template <class F>
std::size_t AlgebraModel<F>::basis_index(std::size_t d, std::size_t block, std::uint32_t column_rank) const {
    return offsets_[d][block] + column_rank;
}

template <class F>
SparseVec<F> AlgebraModel<F>::reduce_path(std::size_t d, std::size_t block, std::uint32_t column) const {
    if (d >= n_) return {};
    const Flag<F>& fl = filtration_->flag(d, block);
    auto coords = fl.coordinates({{column, f_.one()}}, f_);
    SparseVec<F> out;
    for (const auto& e : fl.level_coordinates(coords, 0))
        out.push_back({static_cast<std::uint32_t>(offsets_[d][block] + e.col), e.val});
    return out;
}

template <class F>
SparseVec<F> AlgebraModel<F>::multiply(std::size_t i, std::size_t j) const {
    const BasisPath& u = basis_[i];
    const BasisPath& v = basis_[j];
    if (u.source != v.target) return {};
    std::size_t d = u.degree + v.degree;
    if (d >= n_) return {};
    PathTable& pt = paths();
    std::uint32_t idx = pt.concat(u.degree, u.block, u.column, v.degree, v.block, v.column);
    return reduce_path(d, pt.block_id(u.target, v.source), idx);
}

template <class F>
AlgebraModel<F> build_algebra(const Quiver& q, const Twist& t, const RelationSpec& r, const F& field,
                              const BuildOptions& opts) {
    AlgebraModel<F> m;
    m.quiver_ = expand_twist(q, t);
    m.f_ = field;
    m.rels_ = bind_relations(m.quiver_, r, field);
    reject_free_cycles(m.quiver_, m.rels_);

    auto paths = std::make_shared<PathTable>(m.quiver_, opts.path_budget);
    std::vector<Generator<F>> gens;
    for (const auto& rel : m.rels_.generators) {
        Generator<F> g;
        g.source = rel.source;
        g.target = rel.target;
        g.length = rel.length;
        g.block = paths->block_id(rel.target, rel.source);
        for (const auto& term : rel.terms) g.vec.push_back({paths->locate(term.word).second, term.coeff});
        std::sort(g.vec.begin(), g.vec.end(), [](const Entry<F>& a, const Entry<F>& b) { return a.col < b.col; });
        gens.push_back(std::move(g));
    }
    m.filtration_ = std::make_shared<IdealFiltration<F>>(paths, field, std::move(gens));
    IdealFiltration<F>& filt = *m.filtration_;

    std::size_t n = 0;
    bool found = false;
    try {
        for (std::size_t d = 0; d <= opts.max_degree && !found; ++d) {
            filt.ensure(d);
            bool vanishes = true;
            for (std::size_t b = 0; b < paths->num_blocks(); ++b)
                if (!filt.flag(d, b).complement.empty()) vanishes = false;
            if (vanishes) {
                n = d;
                found = true;
            }
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::CutoffExceeded) throw;
        fail(ErrorCode::NotAdmissible, std::string("no nilpotency index found: ") + e.what());
    }
    if (!found)
        fail(ErrorCode::NotAdmissible,
             "quotient does not vanish up to degree " + std::to_string(opts.max_degree) + "; the ideal is not admissible");
    filt.set_nilpotency(n);
    m.n_ = n;

    const std::size_t nb = paths->num_blocks();
    m.offsets_.assign(n + 1, std::vector<std::size_t>(nb, 0));
    for (std::size_t d = 0; d < n; ++d)
        for (std::size_t b = 0; b < nb; ++b) {
            m.offsets_[d][b] = m.basis_.size();
            const Flag<F>& fl = filt.flag(d, b);
            for (auto col : fl.complement)
                m.basis_.push_back({static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(b), paths->block_target(b),
                                    paths->block_source(b), col, paths->word(d, b, col)});
        }
    for (std::size_t b = 0; b < nb; ++b) m.offsets_[n][b] = m.basis_.size();

    const std::size_t dim = m.basis_.size();
    const std::size_t na = m.quiver_.num_arrows();
    for (std::size_t a = 0; a < na; ++a) {
        const Arrow& arr = m.quiver_.arrow(a);
        std::vector<SparseVec<F>> lcols(dim), rcols(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            const BasisPath& u = m.basis_[j];
            if (u.degree + 1 >= n) continue;
            if (u.target == arr.tail) {
                auto idx = paths->prepend(u.degree, u.block, u.column, static_cast<std::uint32_t>(a));
                lcols[j] = m.reduce_path(u.degree + 1, paths->block_id(arr.head, u.source), idx);
            }
            if (u.source == arr.head) {
                auto idx = paths->append(u.degree, u.block, u.column, static_cast<std::uint32_t>(a));
                rcols[j] = m.reduce_path(u.degree + 1, paths->block_id(u.target, arr.tail), idx);
            }
        }
        m.left_.push_back(columns_to_mat(field, dim, lcols));
        m.right_.push_back(columns_to_mat(field, dim, rcols));
    }
    for (std::uint32_t i = 0; i < m.quiver_.num_vertices(); ++i) {
        std::vector<bool> lt(dim), rt(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            lt[j] = m.basis_[j].target == i;
            rt[j] = m.basis_[j].source == i;
        }
        m.left_e_.push_back(diagonal_mask(field, lt));
        m.right_e_.push_back(diagonal_mask(field, rt));
    }
    return m;
}

template <class F>
Subspace<F> ideal_graded_piece(const AlgebraModel<F>& model, std::size_t p, std::size_t d) {
    IdealFiltration<F>& filt = model.filtration();
    PathTable& pt = model.paths();
    filt.ensure(d);
    const F& f = model.field();
    std::vector<SparseVec<F>> rows;
    std::size_t offset = 0;
    for (std::size_t b = 0; b < pt.num_blocks(); ++b) {
        const Flag<F>& fl = filt.flag(d, b);
        auto shifted = [&](const SparseVec<F>& v) {
            SparseVec<F> out;
            for (const auto& e : v) out.push_back({static_cast<std::uint32_t>(e.col + offset), e.val});
            return out;
        };
        if (p <= fl.p_lo) {
            for (std::uint32_t c = 0; c < fl.dim; ++c) rows.push_back(shifted({{c, f.one()}}));
        } else if (p <= fl.p_hi()) {
            for (std::size_t r = 0; r < fl.ranges[p - fl.p_lo - 1].second; ++r) rows.push_back(shifted(fl.rows[r]));
        }
        offset += fl.dim;
    }
    return {offset, Mat<F>::from_rows(f, offset, std::move(rows))};
}

// ---------------------------------------------------------------- GradedSlice

template <class F>
SparseVec<F> GradedSlice<F>::lift(std::size_t k) const {
    const SliceElement& el = elements_[k];
    return filtration_->flag(el.degree, el.block).level_vector(p_, el.index, f_);
}

template <class F>
SparseVec<F> GradedSlice<F>::project(std::size_t d, std::size_t b, const SparseVec<F>& x) const {
    if (d > top_ || x.empty()) return {};
    const Flag<F>& fl = filtration_->flag(d, b);
    auto coords = fl.coordinates(x, f_);
    SparseVec<F> out;
    for (const auto& e : fl.level_coordinates(coords, p_))
        out.push_back({static_cast<std::uint32_t>(offsets_[d][b] + e.col), e.val});
    return out;
}

template <class F>
std::size_t GradedSlice<F>::block_count(std::size_t d, std::size_t b) const {
    if (d > top_) return 0;
    std::size_t next = (b + 1 < offsets_[d].size()) ? offsets_[d][b + 1] : offsets_[d + 1][0];
    return next - offsets_[d][b];
}

template <class F>
GradedSlice<F> associated_graded(const AlgebraModel<F>& model, std::size_t p, const SliceOptions& opts) {
    GradedSlice<F> sl;
    const F& f = model.field();
    sl.f_ = f;
    sl.p_ = p;
    sl.filtration_ = model.filtration_ptr();
    IdealFiltration<F>& filt = *sl.filtration_;
    PathTable& pt = model.paths();
    const std::size_t n = model.nilpotency_index();
    const std::size_t m = model.max_relation_length();
    sl.cutoff_ = (p + 1) * (n - 1) + p * m;
    sl.top_ = std::min(sl.cutoff_, (p + 1) * n - 1);
    if (sl.top_ + 1 > opts.degree_budget)
        fail(ErrorCode::CutoffExceeded, "A^" + std::to_string(p) + " needs degree " + std::to_string(sl.top_ + 1) +
                                            ", beyond the degree budget " + std::to_string(opts.degree_budget));
    filt.ensure(sl.top_);

    const std::size_t nb = pt.num_blocks();
    sl.degree_dims_.assign(sl.cutoff_ + 1, 0);
    sl.offsets_.assign(sl.top_ + 2, std::vector<std::size_t>(nb, 0));
    for (std::size_t d = 0; d <= sl.top_; ++d)
        for (std::size_t b = 0; b < nb; ++b) {
            sl.offsets_[d][b] = sl.elements_.size();
            const Flag<F>& fl = filt.flag(d, b);
            std::size_t cnt = fl.level_dim(p);
            for (std::size_t k = 0; k < cnt; ++k)
                sl.elements_.push_back({static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(b), pt.block_target(b),
                                        pt.block_source(b), static_cast<std::uint32_t>(k)});
            sl.degree_dims_[d] += cnt;
        }
    for (std::size_t b = 0; b < nb; ++b) sl.offsets_[sl.top_ + 1][b] = sl.elements_.size();

    const std::size_t dim = sl.elements_.size();
    // Images must stay inside K^p: coordinates below level p signal a broken filtration.
    auto checked_project = [&](std::size_t d, std::size_t b, const SparseVec<F>& x) {
        const Flag<F>& fl = filt.flag(d, b);
        auto coords = fl.coordinates(x, f);
        for (const auto& e : coords)
            if (fl.level_of_index(e.col) < p)
                fail(ErrorCode::CutoffExceeded, "internal: product left the ideal power K^" + std::to_string(p));
        SparseVec<F> out;
        for (const auto& e : fl.level_coordinates(coords, p))
            out.push_back({static_cast<std::uint32_t>(sl.offsets_[d][b] + e.col), e.val});
        return out;
    };
    for (std::size_t a = 0; a < model.quiver().num_arrows(); ++a) {
        const Arrow& arr = model.quiver().arrow(a);
        std::vector<SparseVec<F>> lcols(dim), rcols(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            const SliceElement& el = sl.elements_[j];
            if (el.degree + 1 > sl.top_) continue;
            SparseVec<F> lift = sl.lift(j);
            if (el.target == arr.tail) {
                SparseVec<F> img;
                for (const auto& e : lift)
                    img.push_back({pt.prepend(el.degree, el.block, e.col, static_cast<std::uint32_t>(a)), e.val});
                std::sort(img.begin(), img.end(), [](const Entry<F>& x, const Entry<F>& y) { return x.col < y.col; });
                lcols[j] = checked_project(el.degree + 1, pt.block_id(arr.head, el.source), img);
            }
            if (el.source == arr.head) {
                SparseVec<F> img;
                for (const auto& e : lift)
                    img.push_back({pt.append(el.degree, el.block, e.col, static_cast<std::uint32_t>(a)), e.val});
                std::sort(img.begin(), img.end(), [](const Entry<F>& x, const Entry<F>& y) { return x.col < y.col; });
                rcols[j] = checked_project(el.degree + 1, pt.block_id(el.target, arr.tail), img);
            }
        }
        sl.left_.push_back(columns_to_mat(f, dim, lcols));
        sl.right_.push_back(columns_to_mat(f, dim, rcols));
    }
    for (std::uint32_t i = 0; i < model.quiver().num_vertices(); ++i) {
        std::vector<bool> lt(dim), rt(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            lt[j] = sl.elements_[j].target == i;
            rt[j] = sl.elements_[j].source == i;
        }
        sl.left_e_.push_back(diagonal_mask(f, lt));
        sl.right_e_.push_back(diagonal_mask(f, rt));
    }

    // Emptiness margin: (K^p)_d = (K^{p+1})_d just above the cutoff.
    MarginReport& mr = sl.margin_;
    mr.first_degree = sl.cutoff_ + 1;
    mr.last_degree = sl.cutoff_ + m + opts.margin;
    for (std::size_t d = mr.first_degree; d <= mr.last_degree; ++d) {
        bool small = count_paths(model.quiver(), d) <= opts.exhaustive_limit;
        for (std::size_t b = 0; b < nb; ++b) {
            if (!small) {
                // Both pieces are full: d > cutoff >= (p+1)N - 1 and K ⊇ paths of length N.
                if (d < (p + 1) * n) mr.ok = false;
                ++mr.blocks_by_containment;
                continue;
            }
            pt.extend_to(d);
            std::size_t full = pt.block_size(d, b);
            if (full == 0) continue;
            ++mr.blocks_exhaustive;
            if (filt.generic_rank(p + 1, d, b) != full) mr.ok = false;
        }
    }
    if (!mr.ok)
        fail(ErrorCode::CutoffExceeded,
             "emptiness margin failed for A^" + std::to_string(p) + " above degree " + std::to_string(sl.cutoff_));
    return sl;
}

#define QUIVEXT_INSTANTIATE(F)                                                                                      \
    template struct RelationSet<F>;                                                                                 \
    template struct Flag<F>;                                                                                        \
    template RelationSet<F> bind_relations<F>(const Quiver&, const RelationSpec&, const F&);                        \
    template AlgebraModel<F> build_algebra<F>(const Quiver&, const Twist&, const RelationSpec&, const F&,           \
                                              const BuildOptions&);                                                 \
    template Subspace<F> ideal_graded_piece<F>(const AlgebraModel<F>&, std::size_t, std::size_t);                   \
    template GradedSlice<F> associated_graded<F>(const AlgebraModel<F>&, std::size_t, const SliceOptions&);

QUIVEXT_INSTANTIATE(Rationals)
QUIVEXT_INSTANTIATE(PrimeField)

template class IdealFiltration<Rationals>;
template class IdealFiltration<PrimeField>;
template class AlgebraModel<Rationals>;
template class AlgebraModel<PrimeField>;
template class GradedSlice<Rationals>;
template class GradedSlice<PrimeField>;

}  // namespace quivext

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace quivext {

template <class F>
struct Entry {
    std::uint32_t col;
    typename F::value_type val;
    bool operator==(const Entry&) const = default;
};

/** Sorted by column, no explicit zeros. */
template <class F>
using SparseVec = std::vector<Entry<F>>;

template <class F>
using DenseVec = std::vector<typename F::value_type>;

/**
 * Dense scratch vector that remembers which slots were written, so clearing
 * and gathering cost only the touched positions.
 */
template <class F>
class Accumulator {
public:
    using V = typename F::value_type;

    explicit Accumulator(const F& f = F(), std::size_t n = 0) : f_(f) { reserve(n); }

    /** Switches the field; only valid while the accumulator is clear. */
    void rebind(const F& f) { f_ = f; }

    void reserve(std::size_t n) {
        if (vals_.size() < n) {
            vals_.resize(n, f_.zero());
            used_.resize(n, 0);
        }
    }
    bool used(std::uint32_t c) const { return used_[c] != 0; }
    const V& get(std::uint32_t c) const { return vals_[c]; }
    bool nonzero(std::uint32_t c) const { return used_[c] && !f_.is_zero(vals_[c]); }

    /** Returns true when c was untouched before the call. */
    bool add(std::uint32_t c, const V& v) {
        if (!used_[c]) {
            mark(c);
            vals_[c] = v;
            return true;
        }
        f_.add_assign(vals_[c], v);
        return false;
    }
    bool add_mul(std::uint32_t c, const V& a, const V& x) {
        bool fresh = !used_[c];
        if (fresh) mark(c);
        f_.add_mul(vals_[c], a, x);
        return fresh;
    }
    bool sub_mul(std::uint32_t c, const V& a, const V& x) {
        bool fresh = !used_[c];
        if (fresh) mark(c);
        f_.sub_mul(vals_[c], a, x);
        return fresh;
    }
    void scatter(const SparseVec<F>& v, const V& scale) {
        for (const auto& e : v) add_mul(e.col, scale, e.val);
    }
    void scatter(const SparseVec<F>& v) {
        for (const auto& e : v) add(e.col, e.val);
    }

    const std::vector<std::uint32_t>& touched() const { return list_; }

    /** Gathers the nonzero entries in column order and resets. */
    SparseVec<F> take() {
        std::sort(list_.begin(), list_.end());
        SparseVec<F> out;
        out.reserve(list_.size());
        for (auto c : list_) {
            if (!f_.is_zero(vals_[c])) out.push_back({c, vals_[c]});
            vals_[c] = f_.zero();
            used_[c] = 0;
        }
        list_.clear();
        return out;
    }
    void clear() {
        for (auto c : list_) {
            vals_[c] = f_.zero();
            used_[c] = 0;
        }
        list_.clear();
    }

private:
    void mark(std::uint32_t c) {
        used_[c] = 1;
        vals_[c] = f_.zero();
        list_.push_back(c);
    }

    F f_;
    std::vector<V> vals_;
    std::vector<std::uint8_t> used_;
    std::vector<std::uint32_t> list_;
};

/** Per-thread scratch accumulator; callers must not nest uses. */
template <class F>
Accumulator<F>& scratch_accumulator(const F& f, std::size_t n) {
    thread_local Accumulator<F> acc;
    acc.rebind(f);
    acc.reserve(n);
    return acc;
}

template <class F>
SparseVec<F> sparse_from_dense(const F& f, const DenseVec<F>& v) {
    SparseVec<F> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!f.is_zero(v[i])) out.push_back({static_cast<std::uint32_t>(i), v[i]});
    return out;
}

template <class F>
DenseVec<F> dense_from_sparse(const F& f, const SparseVec<F>& v, std::size_t n) {
    DenseVec<F> out(n, f.zero());
    for (const auto& e : v) out[e.col] = e.val;
    return out;
}

/** y + a*x for sorted sparse vectors. */
template <class F>
SparseVec<F> sparse_axpy(const F& f, const SparseVec<F>& y, const typename F::value_type& a,
                         const SparseVec<F>& x) {
    SparseVec<F> out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].col < x[j].col)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].col < y[i].col) {
            auto v = f.mul(a, x[j].val);
            if (!f.is_zero(v)) out.push_back({x[j].col, v});
            ++j;
        } else {
            auto v = y[i].val;
            f.add_mul(v, a, x[j].val);
            if (!f.is_zero(v)) out.push_back({y[i].col, v});
            ++i;
            ++j;
        }
    }
    return out;
}

template <class F>
bool sparse_equal(const F& f, const SparseVec<F>& a, const SparseVec<F>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].col != b[i].col || !f.equal(a[i].val, b[i].val)) return false;
    return true;
}

/**
 * Exact matrix over F. Rows are stored sparsely; the interface is that of a
 * dense rows x cols array.
 */
template <class F>
class Mat {
public:
    using value_type = typename F::value_type;

    explicit Mat(const F& f = F(), std::size_t rows = 0, std::size_t cols = 0)
        : f_(f), cols_(cols), rows_(rows) {}

    static Mat identity(const F& f, std::size_t n) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({static_cast<std::uint32_t>(i), f.one()});
        return m;
    }
    static Mat from_dense(const F& f, std::size_t rows, std::size_t cols,
                          const std::vector<value_type>& row_major) {
        if (row_major.size() != rows * cols)
            fail(ErrorCode::ShapeMismatch, "entry count does not match matrix shape");
        Mat m(f, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                const auto& v = row_major[r * cols + c];
                if (!f.is_zero(v)) m.rows_[r].push_back({static_cast<std::uint32_t>(c), v});
            }
        return m;
    }
    static Mat from_ints(const F& f, const std::vector<std::vector<long long>>& rows) {
        std::size_t nc = rows.empty() ? 0 : rows.front().size();
        Mat m(f, rows.size(), nc);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != nc) fail(ErrorCode::ShapeMismatch, "ragged matrix literal");
            for (std::size_t c = 0; c < nc; ++c) m.set(r, c, f.from_int(rows[r][c]));
        }
        return m;
    }
    static Mat from_rows(const F& f, std::size_t cols, std::vector<SparseVec<F>> rows) {
        Mat m(f, 0, cols);
        m.rows_ = std::move(rows);
        return m;
    }

    const F& field() const { return f_; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_.empty() || cols_ == 0; }

    const SparseVec<F>& row(std::size_t r) const { return rows_[r]; }
    void set_row(std::size_t r, SparseVec<F> v) { rows_[r] = std::move(v); }
    void append_row(SparseVec<F> v) { rows_.push_back(std::move(v)); }

    value_type at(std::size_t r, std::size_t c) const {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry<F>& e, std::size_t col) { return e.col < col; });
        return (it != row.end() && it->col == c) ? it->val : f_.zero();
    }
    void set(std::size_t r, std::size_t c, const value_type& v) {
        auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry<F>& e, std::size_t col) { return e.col < col; });
        if (it != row.end() && it->col == c) {
            if (f_.is_zero(v))
                row.erase(it);
            else
                it->val = v;
        } else if (!f_.is_zero(v)) {
            row.insert(it, {static_cast<std::uint32_t>(c), v});
        }
    }
    void add_to(std::size_t r, std::size_t c, const value_type& v) {
        set(r, c, f_.add(at(r, c), v));
    }

    std::vector<value_type> to_dense() const {
        std::vector<value_type> out(rows() * cols_, f_.zero());
        for (std::size_t r = 0; r < rows(); ++r)
            for (const auto& e : rows_[r]) out[r * cols_ + e.col] = e.val;
        return out;
    }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& r : rows_) n += r.size();
        return n;
    }
    bool is_zero() const {
        for (const auto& r : rows_)
            if (!r.empty()) return false;
        return true;
    }
    bool operator==(const Mat& o) const {
        if (rows() != o.rows() || cols_ != o.cols_) return false;
        for (std::size_t r = 0; r < rows(); ++r)
            if (!sparse_equal(f_, rows_[r], o.rows_[r])) return false;
        return true;
    }

    Mat transpose() const {
        std::vector<std::size_t> counts(cols_, 0);
        for (const auto& r : rows_)
            for (const auto& e : r) ++counts[e.col];
        Mat t(f_, cols_, rows());
        for (std::size_t c = 0; c < cols_; ++c) t.rows_[c].reserve(counts[c]);
        for (std::size_t r = 0; r < rows(); ++r)
            for (const auto& e : rows_[r]) t.rows_[e.col].push_back({static_cast<std::uint32_t>(r), e.val});
        return t;
    }

    Mat operator*(const Mat& b) const {
        if (cols_ != b.rows()) fail(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
        Mat out(f_, rows(), b.cols());
        Accumulator<F> acc(f_, b.cols());
        for (std::size_t r = 0; r < rows(); ++r) {
            for (const auto& e : rows_[r]) acc.scatter(b.rows_[e.col], e.val);
            out.rows_[r] = acc.take();
        }
        return out;
    }
    Mat operator+(const Mat& b) const { return combine(b, f_.one()); }
    Mat operator-(const Mat& b) const { return combine(b, f_.neg(f_.one())); }
    Mat scaled(const value_type& a) const {
        Mat out(f_, rows(), cols_);
        if (f_.is_zero(a)) return out;
        for (std::size_t r = 0; r < rows(); ++r) {
            out.rows_[r] = rows_[r];
            for (auto& e : out.rows_[r]) f_.mul_assign(e.val, a);
        }
        return out;
    }

    /** this * v for a sparse column vector v. */
    SparseVec<F> apply(const SparseVec<F>& v) const {
        Accumulator<F> acc(f_, rows());
        DenseVec<F> dv = dense_from_sparse(f_, v, cols_);
        for (std::size_t r = 0; r < rows(); ++r) {
            value_type s = f_.zero();
            for (const auto& e : rows_[r]) f_.add_mul(s, e.val, dv[e.col]);
            if (!f_.is_zero(s)) acc.add(static_cast<std::uint32_t>(r), s);
        }
        return acc.take();
    }
    DenseVec<F> apply(const DenseVec<F>& v) const {
        if (v.size() != cols_) fail(ErrorCode::ShapeMismatch, "vector length mismatch");
        DenseVec<F> out(rows(), f_.zero());
        for (std::size_t r = 0; r < rows(); ++r)
            for (const auto& e : rows_[r]) f_.add_mul(out[r], e.val, v[e.col]);
        return out;
    }

    /** Sub-block [r0, r0+nr) x [c0, c0+nc). */
    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Mat out(f_, nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (const auto& e : rows_[r0 + r])
                if (e.col >= c0 && e.col < c0 + nc)
                    out.rows_[r].push_back({static_cast<std::uint32_t>(e.col - c0), e.val});
        return out;
    }
    /** Adds b into this at offset (r0, c0). */
    void add_block(std::size_t r0, std::size_t c0, const Mat& b) {
        for (std::size_t r = 0; r < b.rows(); ++r) {
            SparseVec<F> shifted;
            shifted.reserve(b.rows_[r].size());
            for (const auto& e : b.rows_[r]) shifted.push_back({static_cast<std::uint32_t>(e.col + c0), e.val});
            rows_[r0 + r] = sparse_axpy(f_, rows_[r0 + r], f_.one(), shifted);
        }
    }

private:
    Mat combine(const Mat& b, const value_type& s) const {
        if (rows() != b.rows() || cols_ != b.cols_) fail(ErrorCode::ShapeMismatch, "matrix sum shape mismatch");
        Mat out(f_, rows(), cols_);
        for (std::size_t r = 0; r < rows(); ++r) out.rows_[r] = sparse_axpy(f_, rows_[r], s, b.rows_[r]);
        return out;
    }

    F f_;
    std::size_t cols_;
    std::vector<SparseVec<F>> rows_;
};

/** Row space of `basis` inside k^ambient_dim; rows are independent. */
template <class F>
struct Subspace {
    std::size_t ambient_dim = 0;
    Mat<F> basis;

    std::size_t dim() const { return basis.rows(); }
};

/**
 * Incremental row echelon basis. Every stored row has leading coefficient 1
 * at its pivot and is zero at the pivots of all rows inserted before it.
 * With tracking enabled each row also records itself as a combination of
 * the inserted inputs. Not thread-safe (uses internal scratch space).
 */
template <class F>
class Echelon {
public:
    using V = typename F::value_type;

    explicit Echelon(const F& f, std::size_t ambient, bool track = false)
        : f_(f), ambient_(ambient), track_(track), row_of_col_(ambient, -1), acc_(f, ambient), tacc_(f) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == ambient_; }
    std::size_t inputs() const { return inputs_; }
    const std::vector<SparseVec<F>>& rows() const { return rows_; }
    const std::vector<std::uint32_t>& pivots() const { return pivots_; }
    int row_of_pivot(std::uint32_t col) const { return row_of_col_[col]; }
    const SparseVec<F>& tracking(std::size_t r) const { return track_rows_[r]; }

    /**
     * Eliminates every pivot column from v. If coeffs is given it receives
     * the multiple of each row that was subtracted, as (row index, value).
     */
    SparseVec<F> reduce(const SparseVec<F>& v, std::vector<std::pair<std::size_t, V>>* coeffs = nullptr) const {
        acc_.scatter(v);
        std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
        for (const auto& e : v) heap.push(e.col);
        SparseVec<F> residual;
        while (!heap.empty()) {
            std::uint32_t c = heap.top();
            heap.pop();
            if (!acc_.nonzero(c)) continue;
            int r = row_of_col_[c];
            if (r < 0) {
                residual.push_back({c, acc_.get(c)});
                continue;
            }
            V coef = acc_.get(c);
            for (const auto& e : rows_[static_cast<std::size_t>(r)])
                if (acc_.sub_mul(e.col, coef, e.val)) heap.push(e.col);
            if (coeffs) coeffs->emplace_back(static_cast<std::size_t>(r), coef);
        }
        acc_.clear();
        return residual;
    }

    bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

    /** Returns true if v was independent of the current rows (and stores it). */
    bool insert(const SparseVec<F>& v) {
        std::size_t input = inputs_++;
        if (!track_) {
            auto res = reduce(v);
            if (res.empty()) return false;
            push_row(std::move(res), {});
            return true;
        }
        std::vector<std::pair<std::size_t, V>> coeffs;
        auto res = reduce(v, &coeffs);
        tacc_.reserve(inputs_);
        tacc_.add(static_cast<std::uint32_t>(input), f_.one());
        for (const auto& [r, c] : coeffs)
            for (const auto& e : track_rows_[r]) tacc_.sub_mul(e.col, c, e.val);
        auto combo = tacc_.take();
        if (res.empty()) {
            last_dependency_ = std::move(combo);
            return false;
        }
        push_row(std::move(res), std::move(combo));
        return true;
    }

    /** With tracking: the relation among inputs found by the last dependent insert. */
    const SparseVec<F>& last_dependency() const { return last_dependency_; }

    /** With tracking: coefficients over the inputs reproducing v, if v is in the span. */
    std::optional<SparseVec<F>> express(const SparseVec<F>& v) const {
        std::vector<std::pair<std::size_t, V>> coeffs;
        if (!reduce(v, &coeffs).empty()) return std::nullopt;
        tacc_.reserve(inputs_);
        for (const auto& [r, c] : coeffs)
            for (const auto& e : track_rows_[r]) tacc_.add_mul(e.col, c, e.val);
        return tacc_.take();
    }

    /** Coordinates of v over the stored rows, if v is in their span. */
    std::optional<SparseVec<F>> row_coordinates(const SparseVec<F>& v) const {
        std::vector<std::pair<std::size_t, V>> coeffs;
        if (!reduce(v, &coeffs).empty()) return std::nullopt;
        tacc_.reserve(rows_.size());
        for (const auto& [r, c] : coeffs) tacc_.add(static_cast<std::uint32_t>(r), c);
        return tacc_.take();
    }

    /** Brings the rows to reduced echelon form (zero at every other pivot). */
    void make_reduced() { back_reduce(0, rows_.size()); }

    /** Reduces the rows in [begin, end) against each other's pivots. */
    void back_reduce(std::size_t begin, std::size_t end) {
        std::vector<std::size_t> order;
        for (std::size_t r = begin; r < end; ++r) order.push_back(r);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
        for (std::size_t r : order) {
            auto& row = rows_[r];
            std::vector<std::pair<std::size_t, V>> hits;
            for (const auto& e : row) {
                if (e.col == pivots_[r]) continue;
                int s = row_of_col_[e.col];
                if (s >= 0 && static_cast<std::size_t>(s) >= begin && static_cast<std::size_t>(s) < end)
                    hits.emplace_back(static_cast<std::size_t>(s), e.val);
            }
            if (hits.empty()) continue;
            acc_.scatter(row);
            for (const auto& [s, c] : hits)
                for (const auto& e : rows_[s]) acc_.sub_mul(e.col, c, e.val);
            row = acc_.take();
            if (track_) {
                tacc_.reserve(inputs_);
                tacc_.scatter(track_rows_[r]);
                for (const auto& [s, c] : hits)
                    for (const auto& e : track_rows_[s]) tacc_.sub_mul(e.col, c, e.val);
                track_rows_[r] = tacc_.take();
            }
        }
    }

private:
    void push_row(SparseVec<F> res, SparseVec<F> combo) {
        V lead = res.front().val;
        if (!f_.is_one(lead)) {
            V inv = f_.inv(lead);
            for (auto& e : res) f_.mul_assign(e.val, inv);
            for (auto& e : combo) f_.mul_assign(e.val, inv);
        }
        std::uint32_t piv = res.front().col;
        row_of_col_[piv] = static_cast<int>(rows_.size());
        pivots_.push_back(piv);
        rows_.push_back(std::move(res));
        if (track_) track_rows_.push_back(std::move(combo));
    }

    F f_;
    std::size_t ambient_;
    bool track_;
    std::size_t inputs_ = 0;
    std::vector<SparseVec<F>> rows_;
    std::vector<SparseVec<F>> track_rows_;
    std::vector<std::uint32_t> pivots_;
    std::vector<int> row_of_col_;
    SparseVec<F> last_dependency_;
    mutable Accumulator<F> acc_;
    mutable Accumulator<F> tacc_;
};

template <class F>
std::size_t rank(const Mat<F>& m) {
    Echelon<F> e(m.field(), m.cols());
    for (std::size_t r = 0; r < m.rows() && !e.full(); ++r) e.insert(m.row(r));
    return e.rank();
}

/**
 * Rows span {v : m v = 0}: one vector per non-pivot column c of the RREF of
 * m, equal to 1 at c and 0 at the other non-pivot columns. The coordinates
 * of a kernel element are therefore its entries at free_columns.
 */
template <class F>
Subspace<F> kernel_basis(const Mat<F>& m, std::vector<std::uint32_t>* free_columns = nullptr) {
    const F& f = m.field();
    Echelon<F> e(f, m.cols());
    for (std::size_t r = 0; r < m.rows() && !e.full(); ++r) e.insert(m.row(r));
    e.make_reduced();
    std::vector<std::vector<Entry<F>>> extra(m.cols());
    for (std::size_t r = 0; r < e.rank(); ++r) {
        std::uint32_t piv = e.pivots()[r];
        for (const auto& en : e.rows()[r])
            if (en.col != piv) extra[en.col].push_back({piv, f.neg(en.val)});
    }
    std::vector<SparseVec<F>> ker;
    for (std::uint32_t c = 0; c < m.cols(); ++c) {
        if (e.row_of_pivot(c) >= 0) continue;
        if (free_columns) free_columns->push_back(c);
        SparseVec<F> v = std::move(extra[c]);
        v.push_back({c, f.one()});
        std::sort(v.begin(), v.end(), [](const Entry<F>& a, const Entry<F>& b) { return a.col < b.col; });
        ker.push_back(std::move(v));
    }
    return {m.cols(), Mat<F>::from_rows(f, m.cols(), std::move(ker))};
}

/** Some x with m x = target, or nothing when target is outside the image. */
template <class F>
std::optional<DenseVec<F>> solve(const Mat<F>& m, const DenseVec<F>& target) {
    if (target.size() != m.rows()) fail(ErrorCode::ShapeMismatch, "solve: target length differs from row count");
    Mat<F> t = m.transpose();
    Echelon<F> e(m.field(), m.rows(), true);
    for (std::size_t c = 0; c < t.rows(); ++c) e.insert(t.row(c));
    auto x = e.express(sparse_from_dense(m.field(), target));
    if (!x) return std::nullopt;
    return dense_from_sparse(m.field(), *x, m.cols());
}

/**
 * Expresses vectors in the span of a fixed family. Built once, queried many
 * times; coordinates refer to the family's order.
 */
template <class F>
class Coordinatizer {
public:
    Coordinatizer(const F& f, std::size_t ambient, const std::vector<SparseVec<F>>& family)
        : e_(f, ambient, true), count_(family.size()) {
        for (const auto& v : family) e_.insert(v);
    }
    std::size_t rank() const { return e_.rank(); }
    std::size_t count() const { return count_; }
    std::optional<SparseVec<F>> coordinates(const SparseVec<F>& v) const { return e_.express(v); }

private:
    Echelon<F> e_;
    std::size_t count_;
};

template <class F>
struct QuotientResult {
    Subspace<F> representatives;
    Mat<F> projection;
};

template <class F>
QuotientResult<F> quotient(std::size_t ambient_dim, const Subspace<F>& sub) {
    if (sub.ambient_dim != ambient_dim) fail(ErrorCode::ShapeMismatch, "quotient: ambient dimension mismatch");
    const F& f = sub.basis.field();
    Echelon<F> e(f, ambient_dim);
    for (std::size_t r = 0; r < sub.basis.rows(); ++r) e.insert(sub.basis.row(r));
    e.make_reduced();
    std::vector<int> free_index(ambient_dim, -1);
    std::vector<SparseVec<F>> reps;
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (e.row_of_pivot(static_cast<std::uint32_t>(c)) < 0) {
            free_index[c] = static_cast<int>(reps.size());
            reps.push_back({{static_cast<std::uint32_t>(c), f.one()}});
        }
    Mat<F> proj(f, reps.size(), ambient_dim);
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (free_index[c] >= 0) proj.set(static_cast<std::size_t>(free_index[c]), c, f.one());
    for (std::size_t r = 0; r < e.rank(); ++r) {
        std::uint32_t piv = e.pivots()[r];
        for (const auto& en : e.rows()[r])
            if (en.col != piv) proj.set(static_cast<std::size_t>(free_index[en.col]), piv, f.neg(en.val));
    }
    return {{ambient_dim, Mat<F>::from_rows(f, ambient_dim, std::move(reps))}, std::move(proj)};
}

template <class F>
struct CohomologyResult {
    std::size_t dim = 0;
    Subspace<F> representatives;
};

/** Cohomology at the middle of  . --d_in--> . --d_out--> . */
template <class F>
CohomologyResult<F> cohomology(const Mat<F>& d_in, const Mat<F>& d_out) {
    if (d_out.cols() != d_in.rows()) fail(ErrorCode::ShapeMismatch, "cohomology: composable shapes required");
    if (!(d_out * d_in).is_zero()) fail(ErrorCode::ComplexBroken, "d_out * d_in is not zero");
    const F& f = d_in.field();
    std::size_t n = d_in.rows();
    Echelon<F> e(f, n);
    Mat<F> cols = d_in.transpose();
    for (std::size_t c = 0; c < cols.rows() && !e.full(); ++c) e.insert(cols.row(c));
    auto z = kernel_basis(d_out);
    std::vector<SparseVec<F>> reps;
    for (std::size_t r = 0; r < z.dim(); ++r)
        if (e.insert(z.basis.row(r))) reps.push_back(z.basis.row(r));
    CohomologyResult<F> out;
    out.dim = reps.size();
    out.representatives = {n, Mat<F>::from_rows(f, n, std::move(reps))};
    return out;
}

/** Inverse of a square matrix, or nothing when it is singular. */
template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& m) {
    if (m.rows() != m.cols()) fail(ErrorCode::ShapeMismatch, "inverse: matrix is not square");
    const F& f = m.field();
    Echelon<F> e(f, m.cols(), true);
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (!e.insert(m.row(r))) return std::nullopt;
    e.make_reduced();
    std::vector<SparseVec<F>> rows(m.rows());
    for (std::size_t r = 0; r < e.rank(); ++r) rows[e.pivots()[r]] = e.tracking(r);
    return Mat<F>::from_rows(f, m.rows(), std::move(rows));
}

/** Column space of m as a subspace of k^rows. */
template <class F>
Subspace<F> image_basis(const Mat<F>& m) {
    Mat<F> t = m.transpose();
    Echelon<F> e(m.field(), m.rows());
    std::vector<SparseVec<F>> basis;
    for (std::size_t c = 0; c < t.rows(); ++c)
        if (e.insert(t.row(c))) basis.push_back(t.row(c));
    return {m.rows(), Mat<F>::from_rows(m.field(), m.rows(), std::move(basis))};
}

extern template class Mat<Rationals>;
extern template class Mat<PrimeField>;
extern template class Echelon<Rationals>;
extern template class Echelon<PrimeField>;

}  // namespace quivext

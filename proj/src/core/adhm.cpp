#include "adhm.hpp"

#include "random.hpp"

namespace quivext {

namespace {

template <class F>
void check_shapes(const ADHMInstance<F>& inst) {
    for (const auto* list : {&inst.X, &inst.Y})
        for (const auto& m : *list)
            if (m.rows() != inst.n || m.cols() != inst.n)
                fail(ErrorCode::ShapeMismatch, "ADHM matrices must be " + std::to_string(inst.n) + "x" +
                                                   std::to_string(inst.n));
}

template <class F>
void require_rank_one(const ADHMInstance<F>& inst, const char* which) {
    if (inst.r1() != 1 || inst.r2() != 1)
        fail(ErrorCode::UnsupportedRank, std::string("Ext is implemented for rank (1,1) only; ") + which + " has rank (" +
                                             std::to_string(inst.r1()) + "," + std::to_string(inst.r2()) + ")");
    if (!check_adhm(inst)) fail(ErrorCode::NotCommuting, std::string(which) + ": X and Y do not commute");
}

/** Matrix of f ↦ A_W f − f A_V on m x n matrices stored row-major. */
template <class F>
Mat<F> commutator_operator(const F& f, const Mat<F>& aw, const Mat<F>& av) {
    const std::size_t m = aw.rows(), n = av.rows();
    const Mat<F> avt = av.transpose();
    std::vector<SparseVec<F>> rows(m * n);
    Accumulator<F> acc(f, m * n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            for (const auto& e : aw.row(r)) acc.add(static_cast<std::uint32_t>(e.col * n + c), e.val);
            for (const auto& e : avt.row(c)) acc.add(static_cast<std::uint32_t>(r * n + e.col), f.neg(e.val));
            rows[r * n + c] = acc.take();
        }
    return Mat<F>::from_rows(f, m * n, std::move(rows));
}

template <class F>
Mat<F> stack(const F& f, const Mat<F>& top, const Mat<F>& bottom) {
    std::vector<SparseVec<F>> rows;
    for (std::size_t r = 0; r < top.rows(); ++r) rows.push_back(top.row(r));
    for (std::size_t r = 0; r < bottom.rows(); ++r) rows.push_back(bottom.row(r));
    return Mat<F>::from_rows(f, top.cols(), std::move(rows));
}

template <class F>
Mat<F> side_by_side(const F& f, const Mat<F>& left, const Mat<F>& right) {
    Mat<F> out(f, left.rows(), left.cols() + right.cols());
    out.add_block(0, 0, left);
    out.add_block(0, left.cols(), right);
    return out;
}

}  // namespace

template <class F>
bool check_adhm(const ADHMInstance<F>& inst) {
    check_shapes(inst);
    for (const auto& x : inst.X)
        for (const auto& y : inst.Y)
            if (!(x * y == y * x)) return false;
    return true;
}

template <class F>
ADHMComplex<F> adhm_complex(const ADHMInstance<F>& V, const ADHMInstance<F>& W) {
    require_rank_one(V, "V");
    require_rank_one(W, "W");
    const F& f = V.field;
    Mat<F> ox = commutator_operator(f, W.X[0], V.X[0]);
    Mat<F> oy = commutator_operator(f, W.Y[0], V.Y[0]);
    return {stack(f, ox, oy), side_by_side(f, oy, ox.scaled(f.neg(f.one())))};
}

template <class F>
std::array<std::size_t, 3> ext_adhm(const ADHMInstance<F>& V, const ADHMInstance<F>& W) {
    auto cx = adhm_complex(V, W);
    const std::size_t h = V.n * W.n;
    const std::size_t r0 = rank(cx.d0), r1 = rank(cx.d1);
    return {h - r0, 2 * h - r1 - r0, h - r1};
}

template <class F>
bool serre_check(const ADHMInstance<F>& V, const ADHMInstance<F>& W) {
    auto a = ext_adhm(V, W), b = ext_adhm(W, V);
    return a[0] == b[2] && a[1] == b[1] && a[2] == b[0];
}

template <class F>
long long euler_char(const ADHMInstance<F>& V, const ADHMInstance<F>& W) {
    auto h = ext_adhm(V, W);
    return static_cast<long long>(h[0]) - static_cast<long long>(h[1]) + static_cast<long long>(h[2]);
}

template <class F>
ADHMInstance<F> adhm_point(const F& f, long long x, long long y) {
    ADHMInstance<F> p;
    p.field = f;
    p.n = 1;
    p.X.push_back(Mat<F>::from_ints(f, {{x}}));
    p.Y.push_back(Mat<F>::from_ints(f, {{y}}));
    return p;
}

template <class F>
ADHMInstance<F> random_commuting_instance(const F& f, std::size_t n, std::uint64_t seed, bool nilpotent) {
    Rng rng(seed);
    Mat<F> a(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = nilpotent ? r + 1 : 0; c < n; ++c) a.set(r, c, f.from_int(rng.symmetric(2)));
    const std::size_t deg = 1 + rng.below(3);
    Mat<F> y = nilpotent ? Mat<F>(f, n, n) : Mat<F>::identity(f, n).scaled(f.from_int(rng.symmetric(2)));
    Mat<F> power = Mat<F>::identity(f, n);
    for (std::size_t k = 1; k <= deg; ++k) {
        power = power * a;
        y = y + power.scaled(f.from_int(rng.symmetric(2)));
    }
    ADHMInstance<F> inst;
    inst.field = f;
    inst.n = n;
    inst.X.push_back(std::move(a));
    inst.Y.push_back(std::move(y));
    return inst;
}

Quiver doubled_jordan() { return Quiver({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}}); }

Twist adhm_twist(std::size_t r1, std::size_t r2) {
    Twist t;
    auto names = [](const std::string& base, std::size_t r) {
        std::vector<std::string> out;
        if (r == 1) return std::vector<std::string>{base};
        for (std::size_t k = 1; k <= r; ++k) out.push_back(base + std::to_string(k));
        return out;
    };
    t.basis["x"] = names("x", r1);
    t.basis["y"] = names("y", r2);
    return t;
}

template <class F>
Representation<F> adhm_representation(const ADHMInstance<F>& inst) {
    check_shapes(inst);
    Representation<F> rep;
    rep.field = inst.field;
    rep.dims = {inst.n};
    rep.maps = inst.X;
    rep.maps.insert(rep.maps.end(), inst.Y.begin(), inst.Y.end());
    return rep;
}

#define QUIVEXT_INSTANTIATE(F)                                                                              \
    template bool check_adhm<F>(const ADHMInstance<F>&);                                                    \
    template ADHMComplex<F> adhm_complex<F>(const ADHMInstance<F>&, const ADHMInstance<F>&);                \
    template std::array<std::size_t, 3> ext_adhm<F>(const ADHMInstance<F>&, const ADHMInstance<F>&);       \
    template bool serre_check<F>(const ADHMInstance<F>&, const ADHMInstance<F>&);                           \
    template long long euler_char<F>(const ADHMInstance<F>&, const ADHMInstance<F>&);                       \
    template ADHMInstance<F> adhm_point<F>(const F&, long long, long long);                                 \
    template ADHMInstance<F> random_commuting_instance<F>(const F&, std::size_t, std::uint64_t, bool);      \
    template Representation<F> adhm_representation<F>(const ADHMInstance<F>&);

QUIVEXT_INSTANTIATE(Rationals)
QUIVEXT_INSTANTIATE(PrimeField)

}  // namespace quivext

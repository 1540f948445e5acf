#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "representation.hpp"

namespace quivext {

/**
 * Data on the doubled Jordan quiver (one vertex, loops x and y) twisted to
 * r1 = |X| copies of x and r2 = |Y| copies of y, all n x n.
 */
template <class F>
struct ADHMInstance {
    F field;
    std::size_t n = 0;
    std::vector<Mat<F>> X, Y;

    std::size_t r1() const { return X.size(); }
    std::size_t r2() const { return Y.size(); }
};

/** True iff [X_j, Y_l] = 0 for every j, l. Throws ShapeMismatch on non n x n matrices. */
template <class F>
bool check_adhm(const ADHMInstance<F>& inst);

/** The three-term complex Hom(V,W) -> Hom(V,W)^2 -> Hom(V,W). */
template <class F>
struct ADHMComplex {
    Mat<F> d0;  // f ↦ (X_W f − f X_V, Y_W f − f Y_V)
    Mat<F> d1;  // (a, b) ↦ (Y_W a − a Y_V) − (X_W b − b X_V)
};

template <class F>
ADHMComplex<F> adhm_complex(const ADHMInstance<F>& V, const ADHMInstance<F>& W);

/** (h^0, h^1, h^2); higher Ext vanishes because the complex has three terms. */
template <class F>
std::array<std::size_t, 3> ext_adhm(const ADHMInstance<F>& V, const ADHMInstance<F>& W);

/** h^p(V,W) = h^{2-p}(W,V) for p = 0, 1, 2. */
template <class F>
bool serre_check(const ADHMInstance<F>& V, const ADHMInstance<F>& W);

template <class F>
long long euler_char(const ADHMInstance<F>& V, const ADHMInstance<F>& W);

/** One-dimensional module at the point (x, y). */
template <class F>
ADHMInstance<F> adhm_point(const F& f, long long x, long long y);

/**
 * Rank-(1,1) pair (A, q(A)) with A random with entries in [-2, 2] and q a
 * random polynomial of degree <= 3. With nilpotent = true, A is strictly
 * upper triangular and q has no constant term, so X and Y are nilpotent.
 */
template <class F>
ADHMInstance<F> random_commuting_instance(const F& f, std::size_t n, std::uint64_t seed, bool nilpotent = false);

/** Doubled Jordan quiver: vertex "1", loops "x" and "y". */
Quiver doubled_jordan();

/** Twist giving x rank r1 (x1 .. x_r1) and y rank r2 (y1 .. y_r2); rank 1 keeps the names x, y. */
Twist adhm_twist(std::size_t r1, std::size_t r2);

/** The instance as a representation of the expanded doubled Jordan quiver. */
template <class F>
Representation<F> adhm_representation(const ADHMInstance<F>& inst);

}  // namespace quivext

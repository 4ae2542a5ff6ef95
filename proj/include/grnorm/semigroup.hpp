#pragma once

#include <set>
#include <vector>

#include "lattice.hpp"

namespace grnorm {

using Point = std::vector<Exp>; // element of Z^s

inline Point clamp_point(Point alpha, const Point& hi) {
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] > hi[i]) alpha[i] = hi[i];
    return alpha;
}

// Valuations attained by nonzero-on-every-branch elements of the spanned
// set, scanned over 0 <= alpha <= window (componentwise, inclusive; needs
// window[i] <= box[i] - 1).
//
// Over an infinite coefficient field, alpha is attained iff for every
// branch i the subspace of span vectors vanishing below alpha gets strictly
// smaller when additionally forced to vanish at (i, alpha_i); in column
// terms, iff no column (i, alpha_i) lies in the span of the columns
// {(j, e) : e < alpha_j}. The scan keeps an incremental column echelon
// along the innermost axis.
inline std::set<Point> attainable_valuations(const SubspaceBasis& s, const Point& window) {
    long n = s.coords().branch_count();
    if (static_cast<long>(window.size()) != n) throw BranchMismatchError("window size does not match branch count");
    for (long i = 0; i < n; ++i) {
        if (window[i] < 0) throw Error("negative window entry");
        if (window[i] + 1 > s.box()[i])
            throw BoxTooSmallError("attainability window reaches the box boundary");
    }
    std::set<Point> out;
    if (s.dim() == 0) return out;

    Point alpha(n, 0);
    long inner = n - 1;
    // odometer over the outer axes; echelon rebuilt per outer step, grown
    // column by column along the inner axis
    for (;;) {
        ColumnEchelon ech;
        for (long i = 0; i < inner; ++i)
            for (Exp e = 0; e < alpha[i]; ++e) ech.add(column_of(s, s.coords().col(i, e)));
        for (alpha[inner] = 0; alpha[inner] <= window[inner]; ++alpha[inner]) {
            bool ok = true;
            for (long i = 0; i < n && ok; ++i)
                if (ech.in_span(column_of(s, s.coords().col(i, alpha[i])))) ok = false;
            if (ok) out.insert(alpha);
            ech.add(column_of(s, s.coords().col(inner, alpha[inner])));
        }
        long i = inner - 1;
        while (i >= 0 && alpha[i] == window[i]) alpha[i--] = 0;
        if (i < 0) break;
        ++alpha[i];
    }
    return out;
}

// Conductor vector of a saturated attainable set: the minimal corner gamma
// with gamma + N^s contained in the set. The valid corners form an orthant,
// so independent per-axis descent from the box corner is exact. Requires
// one certified row beyond gamma strictly inside the box.
inline Point conductor_vector(const std::set<Point>& att, const Box& box) {
    long n = static_cast<long>(box.size());
    Point g(n);
    for (long i = 0; i < n; ++i) {
        if (box[i] < 1) throw BoxTooSmallError("empty box");
        g[i] = box[i] - 1;
    }
    if (!att.count(g)) throw BoxTooSmallError("box corner is not attainable");
    for (long i = 0; i < n; ++i) {
        while (g[i] > 0) {
            // does the whole slab {beta_i = g_i - 1, beta_j in [g_j, box_j - 1]} lie in att?
            Point beta = g;
            beta[i] = g[i] - 1;
            bool full = true;
            for (;;) {
                if (!att.count(beta)) {
                    full = false;
                    break;
                }
                long j = n - 1;
                while (j >= 0 && (j == i || beta[j] == box[j] - 1)) {
                    if (j != i) beta[j] = g[j];
                    --j;
                }
                if (j < 0) break;
                ++beta[j];
            }
            if (!full) break;
            --g[i];
        }
    }
    // saturation: everything from gamma to the corner must be attainable
    {
        Point beta = g;
        for (;;) {
            if (!att.count(beta)) throw BoxTooSmallError("attainable set is not saturated above the conductor");
            long j = n - 1;
            while (j >= 0 && beta[j] == box[j] - 1) beta[j] = g[j], --j;
            if (j < 0) break;
            ++beta[j];
        }
    }
    for (long i = 0; i < n; ++i)
        if (g[i] + 1 > box[i] - 1)
            throw BoxTooSmallError("no certified margin beyond the conductor");
    return g;
}

// Value semigroup (or value set of a fractional ideal), stored as the
// conductor vector plus the finite window of attained values below it.
// Membership anywhere in Z^s reduces to the window: coordinates at or above
// gamma can be clamped to gamma, because t^gamma*Abar is contained in the
// set and slices beyond the conductor repeat.
class ValueSemigroup {
public:
    ValueSemigroup() = default;
    ValueSemigroup(Point gamma, std::set<Point> window)
        : gamma_(std::move(gamma)), window_(std::move(window)) {
        for (const auto& w : window_) {
            if (w.size() != gamma_.size()) throw BranchMismatchError("window point of wrong dimension");
            for (std::size_t i = 0; i < w.size(); ++i)
                if (w[i] < 0 || w[i] > gamma_[i]) throw Error("window point outside [0, gamma]");
        }
        if (!window_.count(gamma_)) throw Error("gamma itself must be attainable");
    }

    long branch_count() const { return static_cast<long>(gamma_.size()); }
    const Point& gamma() const { return gamma_; }
    const std::set<Point>& window() const { return window_; }

    Point tau() const {
        Point t = gamma_;
        for (auto& v : t) v -= 1;
        return t;
    }

    bool contains(const Point& alpha) const {
        if (alpha.size() != gamma_.size()) throw BranchMismatchError("point of wrong dimension");
        for (Exp a : alpha)
            if (a < 0) return false;
        return window_.count(clamp_point(alpha, gamma_)) != 0;
    }

    bool operator==(const ValueSemigroup& o) const {
        return gamma_ == o.gamma_ && window_ == o.window_;
    }

private:
    Point gamma_;
    std::set<Point> window_;
};

// Does Delta(alpha) = union_i { beta : beta_i = alpha_i, beta_j > alpha_j
// for j != i } meet the semigroup? Any witness can be clamped into
// [alpha_j + 1, max(gamma_j, alpha_j + 1)] on the free coordinates (clamp
// rule again), so a finite scan decides it.
inline bool delta_intersects(const Point& alpha, const ValueSemigroup& sg) {
    long n = sg.branch_count();
    if (static_cast<long>(alpha.size()) != n) throw BranchMismatchError("point of wrong dimension");
    const Point& gamma = sg.gamma();
    for (long i = 0; i < n; ++i) {
        if (alpha[i] < 0) continue; // beta_i = alpha_i < 0 impossible
        Point lo(n), hi(n);
        for (long j = 0; j < n; ++j) {
            if (j == i) {
                lo[j] = hi[j] = alpha[i];
            } else {
                lo[j] = std::max<Exp>(alpha[j] + 1, 0);
                hi[j] = std::max(gamma[j], lo[j]);
            }
        }
        Point beta = lo;
        for (;;) {
            if (sg.contains(beta)) return true;
            long j = n - 1;
            while (j >= 0 && (beta[j] == hi[j])) beta[j] = lo[j], --j;
            if (j < 0) break;
            ++beta[j];
        }
    }
    return false;
}

// Points of Delta(alpha) inside [0, bound] (test helper; the library
// decides intersection questions through delta_intersects).
inline std::set<Point> delta_points(const Point& alpha, const Point& bound) {
    long n = static_cast<long>(alpha.size());
    std::set<Point> out;
    std::vector<Point> todo;
    for (long i = 0; i < n; ++i) {
        if (alpha[i] < 0) continue;
        Point lo(n), hi(n);
        bool empty = false;
        for (long j = 0; j < n; ++j) {
            if (j == i) {
                lo[j] = hi[j] = alpha[i];
                if (alpha[i] > bound[j]) empty = true;
            } else {
                lo[j] = std::max<Exp>(alpha[j] + 1, 0);
                hi[j] = bound[j];
                if (lo[j] > hi[j]) empty = true;
            }
        }
        if (empty) continue;
        Point beta = lo;
        for (;;) {
            out.insert(beta);
            long j = n - 1;
            while (j >= 0 && beta[j] == hi[j]) beta[j] = lo[j], --j;
            if (j < 0) break;
            ++beta[j];
        }
    }
    return out;
}

// Delgado symmetry over a finite certifying region. The biconditional
//   alpha in Gamma  <=>  Delta(tau - alpha) does not meet Gamma
// needs checking only for alpha in prod [-1, gamma_i + 1]:
//  - alpha_i <= -2 makes both sides automatic: alpha is not in Gamma, and
//    (tau - alpha)_i >= gamma_i + 1, so Delta_i(tau - alpha) contains the
//    point with beta_j = max(gamma_j, (tau - alpha)_j + 1) elsewhere, which
//    lies in the conductor orthant;
//  - alpha_i >= gamma_i + 2 reduces to alpha - e_i: membership clamps at
//    gamma, and once (tau - alpha)_i <= -2 the sets Delta(tau - alpha) and
//    Delta(tau - alpha + e_i) coincide (branch i contributes nothing and
//    the strict bounds agree below -1).
inline bool is_symmetric_in_region(const ValueSemigroup& sg, Exp margin) {
    long n = sg.branch_count();
    Point tau = sg.tau();
    Point lo(n), hi(n);
    for (long i = 0; i < n; ++i) {
        lo[i] = -margin;
        hi[i] = sg.gamma()[i] + margin;
    }
    Point alpha = lo;
    for (;;) {
        Point d(n);
        for (long i = 0; i < n; ++i) d[i] = tau[i] - alpha[i];
        if (sg.contains(alpha) != !delta_intersects(d, sg)) return false;
        long j = n - 1;
        while (j >= 0 && alpha[j] == hi[j]) alpha[j] = lo[j], --j;
        if (j < 0) break;
        ++alpha[j];
    }
    return true;
}

inline bool is_symmetric(const ValueSemigroup& sg) { return is_symmetric_in_region(sg, 1); }

} // namespace grnorm

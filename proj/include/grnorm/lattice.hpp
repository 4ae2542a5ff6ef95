#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <utility>
#include <vector>

#include "series.hpp"

namespace grnorm {

using Vec = std::vector<Rational>;

// Flat coordinates for the finite-dimensional quotient Abar / t^box*Abar.
// One coordinate per pair (branch i, exponent e < box[i]), ordered by
// (e, i): all branches' t^0 coefficients first, then all t^1, and so on.
// The graded order makes valuation reasoning on echelon pivots direct.
class FlatCoords {
public:
    FlatCoords() = default;
    explicit FlatCoords(Box box) : box_(std::move(box)) {
        for (Exp b : box_)
            if (b < 0) throw Error("negative box entry");
        Exp emax = 0;
        for (Exp b : box_) emax = std::max(emax, b);
        for (Exp e = 0; e < emax; ++e)
            for (long i = 0; i < static_cast<long>(box_.size()); ++i)
                if (e < box_[i]) cols_.emplace_back(e, i);
    }

    const Box& box() const { return box_; }
    long branch_count() const { return static_cast<long>(box_.size()); }
    std::size_t size() const { return cols_.size(); }

    // (branch, exponent) of a column.
    long col_branch(std::size_t c) const { return cols_.at(c).second; }
    Exp col_exp(std::size_t c) const { return cols_.at(c).first; }

    std::size_t col(long branch, Exp e) const {
        auto it = std::lower_bound(cols_.begin(), cols_.end(), std::make_pair(e, branch));
        if (it == cols_.end() || *it != std::make_pair(e, branch))
            throw Error("coordinate out of box");
        return static_cast<std::size_t>(it - cols_.begin());
    }

    bool operator==(const FlatCoords& o) const { return box_ == o.box_; }

    // Projection to the quotient; the operand must be known on the whole box.
    Vec flatten(const MultiElement& a) const {
        if (a.branch_count() != branch_count())
            throw BranchMismatchError("element branch count does not match box");
        Vec v(size(), Rational(0));
        for (std::size_t c = 0; c < cols_.size(); ++c)
            v[c] = a.branch(cols_[c].second).coeff(cols_[c].first);
        return v;
    }

    // Representative with precision exactly the box.
    MultiElement unflatten(const Vec& v) const {
        if (v.size() != size()) throw Error("vector length does not match coordinates");
        std::vector<BranchSeries::CoeffMap> maps(box_.size());
        for (std::size_t c = 0; c < cols_.size(); ++c)
            if (v[c] != 0) maps[cols_[c].second][cols_[c].first] = v[c];
        std::vector<BranchSeries> branches;
        branches.reserve(box_.size());
        for (std::size_t i = 0; i < box_.size(); ++i)
            branches.push_back(BranchSeries::make(std::move(maps[i]), box_[i]));
        return MultiElement(std::move(branches));
    }

private:
    Box box_;
    std::vector<std::pair<Exp, long>> cols_; // (exponent, branch), sorted
};

// A K-subspace of the flat quotient, kept in reduced row echelon form with
// rows sorted by pivot column. Insertion preserves the form, so the basis
// can be grown online (multiplicative closure, kernel assembly).
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(FlatCoords coords) : coords_(std::move(coords)) {}

    const FlatCoords& coords() const { return coords_; }
    const Box& box() const { return coords_.box(); }
    long dim() const { return static_cast<long>(rows_.size()); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    Vec reduce(Vec v) const {
        // hot loop: one preallocated product temporary instead of a fresh
        // rational per multiply-subtract
        mpq_t t;
        mpq_init(t);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (sgn(v[pivots_[r]]) == 0) continue;
            Rational f = v[pivots_[r]]; // copied: the pivot entry is zeroed below
            const Vec& row = rows_[r];
            for (std::size_t j = pivots_[r]; j < v.size(); ++j)
                if (sgn(row[j]) != 0) {
                    mpq_mul(t, f.get_mpq_t(), row[j].get_mpq_t());
                    mpq_sub(v[j].get_mpq_t(), v[j].get_mpq_t(), t);
                }
        }
        mpq_clear(t);
        return v;
    }

    bool contains_vec(const Vec& v) const {
        Vec r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const Rational& c) { return c == 0; });
    }

    bool contains(const MultiElement& a) const { return contains_vec(coords_.flatten(a)); }

    // Grow the span by v; returns false when v was already in it.
    bool insert(Vec v) {
        v = reduce(std::move(v));
        std::size_t p = v.size();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                p = j;
                break;
            }
        if (p == v.size()) return false;
        Rational lead = v[p];
        for (auto& c : v)
            if (sgn(c) != 0) c /= lead;
        mpq_t t;
        mpq_init(t);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (sgn(rows_[r][p]) == 0) continue;
            Rational f = rows_[r][p];
            Vec& row = rows_[r];
            for (std::size_t j = p; j < v.size(); ++j)
                if (sgn(v[j]) != 0) {
                    mpq_mul(t, f.get_mpq_t(), v[j].get_mpq_t());
                    mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), t);
                }
        }
        mpq_clear(t);
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        std::size_t at = static_cast<std::size_t>(it - pivots_.begin());
        pivots_.insert(it, p);
        rows_.insert(rows_.begin() + at, std::move(v));
        return true;
    }

    bool insert(const MultiElement& a) { return insert(coords_.flatten(a)); }

    // Exact polynomial representative of a row.
    MultiElement row_lift(std::size_t r) const { return padded(coords_.unflatten(rows_.at(r))); }

private:
    FlatCoords coords_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

inline SubspaceBasis echelonize(const std::vector<MultiElement>& elems, const Box& box) {
    SubspaceBasis s{FlatCoords(box)};
    for (const auto& a : elems) s.insert(a);
    return s;
}

inline SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (!(a.coords() == b.coords())) throw Error("subspace_sum: boxes differ");
    SubspaceBasis out = a;
    for (const auto& r : b.rows()) out.insert(r);
    return out;
}

inline bool subspace_eq(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (!(a.coords() == b.coords())) throw Error("subspace_eq: boxes differ");
    if (a.dim() != b.dim()) return false;
    for (const auto& r : b.rows())
        if (!a.contains_vec(r)) return false;
    return true;
}

// Kernel of the linear system rows * x = 0, x in K^ncols; returns a basis.
inline std::vector<Vec> nullspace(std::vector<Vec> rows, std::size_t ncols) {
    for (const auto& v : rows)
        if (v.size() != ncols) throw Error("nullspace: ragged matrix");
    std::vector<std::size_t> pivots;
    std::vector<Vec> rref;
    mpq_t t;
    mpq_init(t);
    for (auto& v : rows) {
        for (std::size_t r = 0; r < rref.size(); ++r) {
            if (sgn(v[pivots[r]]) == 0) continue;
            Rational f = v[pivots[r]]; // copied: the pivot entry is zeroed below
            const Vec& row = rref[r];
            for (std::size_t j = pivots[r]; j < ncols; ++j)
                if (sgn(row[j]) != 0) {
                    mpq_mul(t, f.get_mpq_t(), row[j].get_mpq_t());
                    mpq_sub(v[j].get_mpq_t(), v[j].get_mpq_t(), t);
                }
        }
        std::size_t p = ncols;
        for (std::size_t j = 0; j < ncols; ++j)
            if (sgn(v[j]) != 0) {
                p = j;
                break;
            }
        if (p == ncols) continue;
        Rational lead = v[p];
        for (auto& c : v)
            if (sgn(c) != 0) c /= lead;
        for (std::size_t r = 0; r < rref.size(); ++r)
            if (sgn(rref[r][p]) != 0) {
                Rational f = rref[r][p];
                for (std::size_t j = p; j < ncols; ++j)
                    if (sgn(v[j]) != 0) {
                        mpq_mul(t, f.get_mpq_t(), v[j].get_mpq_t());
                        mpq_sub(rref[r][j].get_mpq_t(), rref[r][j].get_mpq_t(), t);
                    }
            }
        auto it = std::lower_bound(pivots.begin(), pivots.end(), p);
        std::size_t at = static_cast<std::size_t>(it - pivots.begin());
        pivots.insert(it, p);
        rref.insert(rref.begin() + at, std::move(v));
    }
    mpq_clear(t);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Vec x(ncols, Rational(0));
        x[f] = 1;
        for (std::size_t r = 0; r < rref.size(); ++r) x[pivots[r]] = -rref[r][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

inline SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (!(a.coords() == b.coords())) throw Error("subspace_intersect: boxes differ");
    std::size_t ra = a.rows().size(), rb = b.rows().size();
    std::vector<Vec> sys;
    sys.reserve(a.coords().size());
    for (std::size_t c = 0; c < a.coords().size(); ++c) {
        Vec eq(ra + rb, Rational(0));
        for (std::size_t k = 0; k < ra; ++k) eq[k] = a.rows()[k][c];
        for (std::size_t l = 0; l < rb; ++l) eq[ra + l] = -b.rows()[l][c];
        sys.push_back(std::move(eq));
    }
    SubspaceBasis out{a.coords()};
    mpq_t t;
    mpq_init(t);
    for (const auto& x : nullspace(std::move(sys), ra + rb)) {
        Vec v(a.coords().size(), Rational(0));
        for (std::size_t k = 0; k < ra; ++k) {
            if (sgn(x[k]) == 0) continue;
            const Vec& row = a.rows()[k];
            for (std::size_t c = 0; c < v.size(); ++c)
                if (sgn(row[c]) != 0) {
                    mpq_mul(t, x[k].get_mpq_t(), row[c].get_mpq_t());
                    mpq_add(v[c].get_mpq_t(), v[c].get_mpq_t(), t);
                }
        }
        out.insert(std::move(v));
    }
    mpq_clear(t);
    return out;
}

// Echelon form of a growing set of column vectors; supports a non-mutating
// independence probe. Used for the attainability rank tests.
class ColumnEchelon {
public:
    bool in_span(Vec col) const {
        reduce(col);
        return std::all_of(col.begin(), col.end(), [](const Rational& c) { return c == 0; });
    }

    bool add(Vec col) {
        reduce(col);
        std::size_t p = col.size();
        for (std::size_t j = 0; j < col.size(); ++j)
            if (col[j] != 0) {
                p = j;
                break;
            }
        if (p == col.size()) return false;
        Rational lead = col[p];
        for (auto& c : col) c /= lead;
        cols_.push_back(std::move(col));
        pivots_.push_back(p);
        return true;
    }

    long rank() const { return static_cast<long>(cols_.size()); }

private:
    void reduce(Vec& v) const {
        mpq_t t;
        mpq_init(t);
        for (std::size_t r = 0; r < cols_.size(); ++r) {
            if (sgn(v[pivots_[r]]) == 0) continue;
            Rational f = v[pivots_[r]]; // copied: the pivot entry is zeroed below
            const Vec& col = cols_[r];
            for (std::size_t j = pivots_[r]; j < v.size(); ++j)
                if (sgn(col[j]) != 0) {
                    mpq_mul(t, f.get_mpq_t(), col[j].get_mpq_t());
                    mpq_sub(v[j].get_mpq_t(), v[j].get_mpq_t(), t);
                }
        }
        mpq_clear(t);
    }

    std::vector<Vec> cols_;
    std::vector<std::size_t> pivots_;
};

inline Vec column_of(const SubspaceBasis& s, std::size_t col) {
    Vec v(s.rows().size(), Rational(0));
    for (std::size_t r = 0; r < s.rows().size(); ++r) v[r] = s.rows()[r][col];
    return v;
}

// Subspace of vectors in s whose coordinates at zero_cols all vanish.
// Implemented as row reduction with the constrained columns searched first:
// rows whose pivot falls outside that block have zeros across all of it
// (a leading entry has nothing before it), and they span the section.
inline SubspaceBasis coordinate_section(const SubspaceBasis& s, const std::vector<std::size_t>& zero_cols) {
    std::size_t n = s.coords().size();
    std::vector<bool> constrained(n, false);
    for (std::size_t c : zero_cols) constrained.at(c) = true;
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t c = 0; c < n; ++c)
        if (constrained[c]) order.push_back(c);
    std::size_t nconstrained = order.size();
    for (std::size_t c = 0; c < n; ++c)
        if (!constrained[c]) order.push_back(c);

    std::vector<Vec> rref;
    std::vector<std::size_t> piv; // positions in `order`
    mpq_t t;
    mpq_init(t);
    for (Vec v : s.rows()) {
        for (std::size_t r = 0; r < rref.size(); ++r) {
            if (sgn(v[order[piv[r]]]) == 0) continue;
            Rational f = v[order[piv[r]]]; // copied: the pivot entry is zeroed below
            const Vec& row = rref[r];
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(row[j]) != 0) {
                    mpq_mul(t, f.get_mpq_t(), row[j].get_mpq_t());
                    mpq_sub(v[j].get_mpq_t(), v[j].get_mpq_t(), t);
                }
        }
        std::size_t p = n;
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(v[order[j]]) != 0) {
                p = j;
                break;
            }
        if (p == n) continue;
        Rational lead = v[order[p]];
        for (auto& c : v)
            if (sgn(c) != 0) c /= lead;
        for (std::size_t r = 0; r < rref.size(); ++r)
            if (sgn(rref[r][order[p]]) != 0) {
                Rational f = rref[r][order[p]];
                for (std::size_t j = 0; j < n; ++j)
                    if (sgn(v[j]) != 0) {
                        mpq_mul(t, f.get_mpq_t(), v[j].get_mpq_t());
                        mpq_sub(rref[r][j].get_mpq_t(), rref[r][j].get_mpq_t(), t);
                    }
            }
        rref.push_back(std::move(v));
        piv.push_back(p);
    }
    mpq_clear(t);
    SubspaceBasis out{s.coords()};
    for (std::size_t r = 0; r < rref.size(); ++r)
        if (piv[r] >= nconstrained) out.insert(rref[r]);
    return out;
}

// Canonical lift of a subspace at box to a strictly larger box: lifted rows
// (padded with zero coefficients) plus one unit row per new coordinate, so
// the result represents the same set span + t^box*Abar in the bigger
// quotient.
inline SubspaceBasis lifted_to(const SubspaceBasis& s, const Box& bigger) {
    const Box& small = s.box();
    if (small.size() != bigger.size()) throw BranchMismatchError("lifted_to: box sizes differ");
    for (std::size_t i = 0; i < small.size(); ++i)
        if (bigger[i] < small[i]) throw Error("lifted_to: target box is smaller");
    SubspaceBasis out{FlatCoords(bigger)};
    for (std::size_t r = 0; r < s.rows().size(); ++r)
        out.insert(padded(s.row_lift(r), bigger));
    long n = s.coords().branch_count();
    for (long i = 0; i < n; ++i)
        for (Exp e = small[i]; e < bigger[i]; ++e)
            out.insert(unit_monomial(n, i, e));
    return out;
}

// Image of the subspace under the projection to a smaller box.
inline SubspaceBasis restricted_to(const SubspaceBasis& s, const Box& smaller) {
    const Box& big = s.box();
    if (big.size() != smaller.size()) throw BranchMismatchError("restricted_to: box sizes differ");
    for (std::size_t i = 0; i < big.size(); ++i)
        if (smaller[i] > big[i]) throw Error("restricted_to: target box is larger");
    SubspaceBasis out{FlatCoords(smaller)};
    for (std::size_t r = 0; r < s.rows().size(); ++r)
        out.insert(truncate(s.coords().unflatten(s.rows()[r]), smaller));
    return out;
}

// Span of all products of the generators, truncated to the box. Starts from
// the constant 1 and multiplies worklist elements by the original
// generators only; truncation is compatible with multiplication by any
// fixed factor, so closing the spanning set under these maps closes the
// span. Generators must be known on the whole box and have no negative
// orders.
inline SubspaceBasis multiplicative_closure(const std::vector<MultiElement>& gens, const Box& box) {
    FlatCoords coords{box};
    for (const auto& g : gens) {
        if (g.branch_count() != coords.branch_count())
            throw BranchMismatchError("generator branch count does not match box");
        for (long i = 0; i < g.branch_count(); ++i) {
            auto p = g.branch(i).prec();
            if (p && *p < box[i])
                throw UnknownCoefficientError("generator not known on the whole box");
        }
    }
    SubspaceBasis s{coords};
    std::deque<MultiElement> work;
    MultiElement one = truncate(MultiElement::one(coords.branch_count()), box);
    if (s.insert(one)) work.push_back(one);
    while (!work.empty()) {
        MultiElement v = std::move(work.front());
        work.pop_front();
        for (const auto& g : gens) {
            MultiElement p = truncate(series_mul(v, g), box);
            if (s.insert(p)) work.push_back(p);
        }
    }
    return s;
}

} // namespace grnorm

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace grnorm {

// Exponent type for power series. Exponents are natural numbers; a signed
// type is used so that valuation arithmetic (tau = gamma - 1 and friends)
// does not need casts at every call site.
using Exp = long;

// Per-branch exponent bound. box[i] bounds branch i from above (exclusive
// where noted); all entries are >= 0.
using Box = std::vector<Exp>;

// A value in N u {inf}. Orders of series and entries of valuation vectors
// live here: the zero series has order inf, and so does a branch on which
// an element vanishes identically.
class ExtNat {
public:
    ExtNat() : inf_(false), v_(0) {}
    ExtNat(Exp v) : inf_(false), v_(v) {}
    static ExtNat infinity() {
        ExtNat e;
        e.inf_ = true;
        return e;
    }

    bool is_infinite() const { return inf_; }
    Exp value() const {
        if (inf_) throw Error("value() on infinite order");
        return v_;
    }

    ExtNat operator+(const ExtNat& o) const {
        if (inf_ || o.inf_) return infinity();
        return ExtNat(v_ + o.v_);
    }
    bool operator==(const ExtNat& o) const {
        return inf_ == o.inf_ && (inf_ || v_ == o.v_);
    }
    bool operator!=(const ExtNat& o) const { return !(*this == o); }
    bool operator<(const ExtNat& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return v_ < o.v_;
    }
    bool operator<=(const ExtNat& o) const { return *this < o || *this == o; }
    bool operator>=(const ExtNat& o) const { return o <= *this; }
    bool operator>(const ExtNat& o) const { return o < *this; }

    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

private:
    bool inf_;
    Exp v_;
};

using ValuationVector = std::vector<ExtNat>;

// One branch of a truncated power series in K[[t]].
//
// Representation: a sparse exponent -> coefficient map plus a precision
// bound. prec == nullopt means the series is known exactly (absent
// coefficients are zero); prec == p means coefficients at exponents >= p
// are unspecified and the stored ones below p are complete. Stored form is
// canonical: no zero coefficients, nothing at or above prec.
//
// Precision propagates pessimistically but sharply through arithmetic:
//   add:  prec = min(prec_a, prec_b)
//   mul:  prec = min(prec_a + ordlb(b), prec_b + ordlb(a))
// where ordlb is the least exponent at which the operand can have a nonzero
// coefficient (its order, or its precision bound if no term is stored).
// Unknown contributions to a product land at or above that bound, so every
// kept coefficient is exact.
class BranchSeries {
public:
    using CoeffMap = std::map<Exp, Rational>;

    BranchSeries() = default; // exact zero

    static BranchSeries zero() { return BranchSeries(); }

    static BranchSeries constant(const Rational& c) {
        CoeffMap m;
        if (c != 0) m[0] = c;
        return BranchSeries(std::move(m), std::nullopt);
    }

    static BranchSeries monomial(Exp e, const Rational& c = Rational(1)) {
        if (e < 0) throw Error("negative exponent");
        CoeffMap m;
        if (c != 0) m[e] = c;
        return BranchSeries(std::move(m), std::nullopt);
    }

    static BranchSeries make(CoeffMap coeffs, std::optional<Exp> prec) {
        return BranchSeries(std::move(coeffs), prec);
    }

    const CoeffMap& coeffs() const { return coeffs_; }
    std::optional<Exp> prec() const { return prec_; }
    bool is_exact() const { return !prec_.has_value(); }
    bool known_zero() const { return is_exact() && coeffs_.empty(); }

    Rational coeff(Exp e) const {
        if (prec_ && e >= *prec_) throw UnknownCoefficientError("coefficient at t^" + std::to_string(e) + " is beyond precision " + std::to_string(*prec_));
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    // Order as an element of N u {inf}; throws when truncation hides it.
    ExtNat order() const {
        if (!coeffs_.empty()) return ExtNat(coeffs_.begin()->first);
        if (is_exact()) return ExtNat::infinity();
        throw UnknownOrderError("order not determined below precision " + std::to_string(*prec_));
    }

    // Least exponent at which a nonzero coefficient is possible.
    ExtNat order_lower_bound() const {
        if (!coeffs_.empty()) return ExtNat(coeffs_.begin()->first);
        if (is_exact()) return ExtNat::infinity();
        return ExtNat(*prec_);
    }

    BranchSeries add(const BranchSeries& o) const {
        std::optional<Exp> p = min_prec(prec_, o.prec_);
        CoeffMap m = coeffs_;
        for (const auto& [e, c] : o.coeffs_) {
            auto [it, fresh] = m.emplace(e, c);
            if (!fresh) it->second += c;
        }
        return BranchSeries(std::move(m), p);
    }

    BranchSeries negate() const {
        CoeffMap m;
        for (const auto& [e, c] : coeffs_) m[e] = -c;
        return BranchSeries(std::move(m), prec_);
    }

    BranchSeries scale(const Rational& c) const {
        CoeffMap m;
        if (c != 0)
            for (const auto& [e, v] : coeffs_) m[e] = c * v;
        return BranchSeries(std::move(m), prec_);
    }

    BranchSeries mul(const BranchSeries& o) const {
        std::optional<Exp> p;
        {
            ExtNat la = order_lower_bound(), lb = o.order_lower_bound();
            std::optional<Exp> pa = bound_plus(prec_, lb);
            std::optional<Exp> pb = bound_plus(o.prec_, la);
            p = min_prec(pa, pb);
        }
        CoeffMap m;
        for (const auto& [ea, ca] : coeffs_)
            for (const auto& [eb, cb] : o.coeffs_) {
                Exp e = ea + eb;
                if (p && e >= *p) continue;
                auto [it, fresh] = m.emplace(e, ca * cb);
                if (!fresh) it->second += ca * cb;
            }
        return BranchSeries(std::move(m), p);
    }

    // Forget coefficients at exponents >= bound.
    BranchSeries truncated(Exp bound) const {
        if (bound < 0) throw Error("negative truncation bound");
        std::optional<Exp> p = min_prec(prec_, bound);
        CoeffMap m;
        for (const auto& [e, c] : coeffs_)
            if (e < *p) m[e] = c;
        return BranchSeries(std::move(m), p);
    }

    // Choose the representative with zero coefficients up to new_prec
    // (>= the current precision). Used to lift residue classes.
    BranchSeries padded(std::optional<Exp> new_prec) const {
        if (!prec_) return *this;
        if (new_prec && *new_prec < *prec_) throw Error("padded() cannot lower precision");
        return BranchSeries(CoeffMap(coeffs_), new_prec);
    }

    bool operator==(const BranchSeries& o) const {
        return prec_ == o.prec_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const BranchSeries& o) const { return !(*this == o); }

    std::string str() const {
        std::string out;
        for (const auto& [e, c] : coeffs_) {
            if (!out.empty()) out += " + ";
            out += to_string(c) + "*t^" + std::to_string(e);
        }
        if (out.empty()) out = "0";
        if (prec_) out += " + O(t^" + std::to_string(*prec_) + ")";
        return out;
    }

private:
    BranchSeries(CoeffMap m, std::optional<Exp> p) : coeffs_(std::move(m)), prec_(p) {
        normalize();
    }

    void normalize() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();) {
            if (it->second == 0 || (prec_ && it->first >= *prec_))
                it = coeffs_.erase(it);
            else
                ++it;
        }
    }

    static std::optional<Exp> min_prec(std::optional<Exp> a, std::optional<Exp> b) {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }

    static std::optional<Exp> bound_plus(std::optional<Exp> p, const ExtNat& shift) {
        if (!p || shift.is_infinite()) return std::nullopt;
        return *p + shift.value();
    }

    CoeffMap coeffs_;
    std::optional<Exp> prec_; // nullopt: exact
};

// An element of the product ring K[[t_1]] x ... x K[[t_s]], one truncated
// series per branch. All arithmetic is componentwise.
class MultiElement {
public:
    MultiElement() = default;
    explicit MultiElement(std::vector<BranchSeries> branches) : branches_(std::move(branches)) {}

    static MultiElement zero(long s) { return MultiElement(std::vector<BranchSeries>(s)); }

    static MultiElement one(long s) {
        std::vector<BranchSeries> b(s, BranchSeries::constant(Rational(1)));
        return MultiElement(std::move(b));
    }

    long branch_count() const { return static_cast<long>(branches_.size()); }
    const BranchSeries& branch(long i) const { return branches_.at(i); }
    const std::vector<BranchSeries>& branches() const { return branches_; }

    bool operator==(const MultiElement& o) const { return branches_ == o.branches_; }
    bool operator!=(const MultiElement& o) const { return !(*this == o); }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < branches_.size(); ++i) {
            if (i) out += " ; ";
            out += branches_[i].str();
        }
        return out + ")";
    }

private:
    std::vector<BranchSeries> branches_;
};

inline void require_same_branches(const MultiElement& a, const MultiElement& b) {
    if (a.branch_count() != b.branch_count())
        throw BranchMismatchError("branch counts differ: " + std::to_string(a.branch_count()) + " vs " + std::to_string(b.branch_count()));
}

inline MultiElement series_add(const MultiElement& a, const MultiElement& b) {
    require_same_branches(a, b);
    std::vector<BranchSeries> out;
    out.reserve(a.branch_count());
    for (long i = 0; i < a.branch_count(); ++i) out.push_back(a.branch(i).add(b.branch(i)));
    return MultiElement(std::move(out));
}

inline MultiElement series_mul(const MultiElement& a, const MultiElement& b) {
    require_same_branches(a, b);
    std::vector<BranchSeries> out;
    out.reserve(a.branch_count());
    for (long i = 0; i < a.branch_count(); ++i) out.push_back(a.branch(i).mul(b.branch(i)));
    return MultiElement(std::move(out));
}

inline MultiElement series_neg(const MultiElement& a) {
    std::vector<BranchSeries> out;
    out.reserve(a.branch_count());
    for (long i = 0; i < a.branch_count(); ++i) out.push_back(a.branch(i).negate());
    return MultiElement(std::move(out));
}

inline MultiElement series_scale(const Rational& c, const MultiElement& a) {
    std::vector<BranchSeries> out;
    out.reserve(a.branch_count());
    for (long i = 0; i < a.branch_count(); ++i) out.push_back(a.branch(i).scale(c));
    return MultiElement(std::move(out));
}

inline MultiElement series_sub(const MultiElement& a, const MultiElement& b) {
    return series_add(a, series_neg(b));
}

// Monomial tuple t^alpha; an absent entry gives the zero series on that
// branch (used for single-branch monomials e_i t^e).
inline MultiElement monomial(const std::vector<std::optional<Exp>>& alpha, const Rational& c = Rational(1)) {
    std::vector<BranchSeries> out;
    out.reserve(alpha.size());
    for (const auto& e : alpha)
        out.push_back(e ? BranchSeries::monomial(*e, c) : BranchSeries::zero());
    return MultiElement(std::move(out));
}

// Single-branch monomial c * e_i t^e in an s-branch product.
inline MultiElement unit_monomial(long s, long i, Exp e, const Rational& c = Rational(1)) {
    std::vector<std::optional<Exp>> alpha(s, std::nullopt);
    alpha.at(i) = e;
    return monomial(alpha, c);
}

inline MultiElement truncate(const MultiElement& a, const Box& box) {
    if (static_cast<long>(box.size()) != a.branch_count())
        throw BranchMismatchError("box size does not match branch count");
    std::vector<BranchSeries> out;
    out.reserve(a.branch_count());
    for (long i = 0; i < a.branch_count(); ++i) out.push_back(a.branch(i).truncated(box[i]));
    return MultiElement(std::move(out));
}

// Componentwise representative choice: extend each branch's precision to
// box[i] (or to exact when box is absent), declaring the padded
// coefficients zero.
inline MultiElement padded(const MultiElement& a, const std::optional<Box>& box = std::nullopt) {
    std::vector<BranchSeries> out;
    out.reserve(a.branch_count());
    for (long i = 0; i < a.branch_count(); ++i)
        out.push_back(a.branch(i).padded(box ? std::optional<Exp>((*box)[i]) : std::nullopt));
    return MultiElement(std::move(out));
}

// Valuation vector nu(a) in (N u {inf})^s. Throws UnknownOrderError when a
// branch order is hidden by truncation.
inline ValuationVector valuation(const MultiElement& a) {
    ValuationVector v;
    v.reserve(a.branch_count());
    for (long i = 0; i < a.branch_count(); ++i) v.push_back(a.branch(i).order());
    return v;
}

inline std::string valuation_str(const ValuationVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    return out + ")";
}

} // namespace grnorm

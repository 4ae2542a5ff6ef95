#pragma once

#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "semigroup.hpp"

namespace grnorm {

// Exact model of a t^tail*Abar-stable subset of Abar = prod K[[t_i]]:
//     M = { a : class of a in Abar / t^tail*Abar lies in span(basis) }
//         = span(lifted basis) + t^tail*Abar.
// Every ring and fractional ideal of the normalization chain admits such a
// model once its conductor is known, which makes all chain arithmetic
// finite and exact.
struct IdealModel {
    Box tail;
    SubspaceBasis basis;

    long branch_count() const { return static_cast<long>(tail.size()); }

    bool contains(const MultiElement& a) const { return basis.contains(truncate(a, tail)); }

    std::vector<MultiElement> basis_lifts() const {
        std::vector<MultiElement> out;
        out.reserve(basis.rows().size());
        for (std::size_t r = 0; r < basis.rows().size(); ++r) out.push_back(basis.row_lift(r));
        return out;
    }

    // Unit monomials e_i t^e for tail[i] <= e < upto[i]; together with the
    // basis lifts they generate the model as a vector space modulo
    // t^upto*Abar.
    std::vector<MultiElement> tail_monomials(const Box& upto) const {
        std::vector<MultiElement> out;
        for (long i = 0; i < branch_count(); ++i)
            for (Exp e = tail[i]; e < upto[i]; ++e)
                out.push_back(unit_monomial(branch_count(), i, e));
        return out;
    }
};

// Conductor vector of a model: gamma[i] is minimal with t^gamma*Abar
// contained in the set. The valid exponents form an orthant and the
// condition splits into per-branch unit-monomial membership, so a linear
// scan per branch is exact.
inline Point model_conductor(const IdealModel& m) {
    long n = m.branch_count();
    Point gamma(n);
    for (long i = 0; i < n; ++i) {
        Exp g = m.tail[i];
        while (g > 0 && m.basis.contains(unit_monomial(n, i, g - 1))) --g;
        gamma[i] = g;
    }
    return gamma;
}

// Value semigroup of the modeled set: conductor by the unit-monomial scan,
// then the attainability window over [0, gamma]. The box is extended by one
// so the window scan can probe columns at gamma itself.
inline ValueSemigroup semigroup_of_model(const IdealModel& m) {
    Point gamma = model_conductor(m);
    Box ext = m.tail;
    for (auto& b : ext) b += 1;
    SubspaceBasis lifted = lifted_to(m.basis, ext);
    return ValueSemigroup(gamma, attainable_valuations(lifted, gamma));
}

// An algebroid curve, or any ring of its normalization chain: a model whose
// tail is the conductor vector, its parametrization (step-0 rings only) and
// the cached value semigroup.
struct AlgebroidCurve {
    std::vector<MultiElement> generators;
    IdealModel model;
    ValueSemigroup semigroup;

    long branch_count() const { return model.branch_count(); }
    const Point& gamma() const { return model.tail; }
    bool is_normal() const {
        for (Exp g : gamma())
            if (g != 0) return false;
        return true;
    }
    bool contains(const MultiElement& a) const { return model.contains(a); }
};

inline AlgebroidCurve curve_from_model(IdealModel m, std::vector<MultiElement> gens = {}) {
    ValueSemigroup sg = semigroup_of_model(m);
    if (sg.gamma() != m.tail) {
        SubspaceBasis cut = restricted_to(m.basis, sg.gamma());
        m = IdealModel{sg.gamma(), std::move(cut)};
    }
    return AlgebroidCurve{std::move(gens), std::move(m), std::move(sg)};
}

// dim_K(big / small) for nested models big >= small.
inline long dim_quotient(const IdealModel& big, const IdealModel& small) {
    long n = big.branch_count();
    if (small.branch_count() != n) throw BranchMismatchError("dim_quotient: branch counts differ");
    Exp shift = 0;
    for (long i = 0; i < n; ++i) {
        if (small.tail[i] < big.tail[i]) throw NotNestedError("smaller model has smaller tail");
        shift += small.tail[i] - big.tail[i];
    }
    for (const auto& v : small.basis_lifts())
        if (!big.contains(v)) throw NotNestedError("basis element of the smaller model escapes the bigger one");
    long d = big.basis.dim() + shift - small.basis.dim();
    if (d < 0) throw InternalCheckError("negative quotient dimension");
    return d;
}

inline long dim_quotient(const AlgebroidCurve& big, const AlgebroidCurve& small) {
    return dim_quotient(big.model, small.model);
}

// dim_K(Abar / A) = sum(gamma) - dim(basis).
inline long delta_invariant(const AlgebroidCurve& a) {
    Exp sum = std::accumulate(a.gamma().begin(), a.gamma().end(), Exp(0));
    return sum - a.model.basis.dim();
}

// The conductor ideal t^gamma*Abar as a model (empty span plus tail).
inline IdealModel conductor_ideal(const AlgebroidCurve& a) {
    return IdealModel{a.gamma(), SubspaceBasis{FlatCoords(a.gamma())}};
}

// Jacobson radical: elements of positive order on every branch. The model
// is reboxed to gamma + 1 and cut by the coordinate hyperplanes at
// exponent 0.
inline IdealModel jacobson_radical(const AlgebroidCurve& a) {
    long n = a.branch_count();
    Box ext = a.gamma();
    for (auto& b : ext) b += 1;
    SubspaceBasis lifted = lifted_to(a.model.basis, ext);
    std::vector<std::size_t> zero_cols;
    zero_cols.reserve(n);
    for (long i = 0; i < n; ++i) zero_cols.push_back(lifted.coords().col(i, 0));
    return IdealModel{ext, coordinate_section(lifted, zero_cols)};
}

// Is I a finite module over B? Checked on spanning sets: products of basis
// lifts, and of B's tail monomials up to I's tail, stay in I; everything
// beyond lands in t^tail(I)*Abar automatically.
inline bool is_module_over(const IdealModel& ideal, const AlgebroidCurve& ring) {
    std::vector<MultiElement> ring_gens = ring.model.basis_lifts();
    for (auto& m : ring.model.tail_monomials(ideal.tail)) ring_gens.push_back(std::move(m));
    std::vector<MultiElement> ideal_gens = ideal.basis_lifts();
    for (const auto& a : ring_gens)
        for (const auto& b : ideal_gens)
            if (!ideal.contains(series_mul(a, b))) return false;
    return true;
}

// Endomorphism ring End_B(I) = (I : I), realized inside Abar. A candidate
// class q mod t^gamma(B)*Abar acts on I iff q times every basis lift of I
// lies in I (tail contributions are absorbed), which is a linear condition
// on the coordinates of q; the ring is the kernel of the stacked system.
// The result is reboxed to its own conductor, so the model stays exact.
inline AlgebroidCurve endomorphism_ring(const IdealModel& ideal, const AlgebroidCurve& ring) {
    if (ideal.branch_count() != ring.branch_count())
        throw BranchMismatchError("endomorphism_ring: branch counts differ");
    if (!is_module_over(ideal, ring)) throw NotAnIdealError("candidate ideal is not a module over the ring");

    FlatCoords cand{ring.gamma()};
    FlatCoords icoords{ideal.tail};
    std::vector<MultiElement> ilifts = ideal.basis_lifts();
    long n = ring.branch_count();

    // residuals[k][j]: reduction of (unit candidate k) * (ideal lift j)
    // against I's basis; q is an endomorphism iff its residual combination
    // vanishes for every j
    std::size_t nunk = cand.size();
    std::vector<std::vector<Vec>> residuals(nunk);
    for (std::size_t k = 0; k < nunk; ++k) {
        MultiElement u = unit_monomial(n, cand.col_branch(k), cand.col_exp(k));
        residuals[k].reserve(ilifts.size());
        for (const auto& b : ilifts)
            residuals[k].push_back(ideal.basis.reduce(icoords.flatten(truncate(series_mul(u, b), ideal.tail))));
    }
    std::vector<Vec> sys;
    for (std::size_t j = 0; j < ilifts.size(); ++j)
        for (std::size_t c = 0; c < icoords.size(); ++c) {
            Vec eq(nunk, Rational(0));
            bool nonzero = false;
            for (std::size_t k = 0; k < nunk; ++k) {
                eq[k] = residuals[k][j][c];
                if (eq[k] != 0) nonzero = true;
            }
            if (nonzero) sys.push_back(std::move(eq));
        }

    SubspaceBasis span{cand};
    for (auto& q : nullspace(std::move(sys), nunk)) span.insert(std::move(q));
    IdealModel grown{ring.gamma(), std::move(span)};

    if (!grown.contains(MultiElement::one(n)))
        throw InternalCheckError("endomorphism ring does not contain 1");
    for (const auto& v : ring.model.basis_lifts())
        if (!grown.contains(v)) throw InternalCheckError("endomorphism ring does not contain the ring");
    return curve_from_model(std::move(grown));
}

// Equality of chain rings, with the value-semigroup comparison run as an
// independent witness: for nested rings of a chain, equal semigroups and
// equal rings coincide, so the two answers must agree.
inline bool ring_equals(const AlgebroidCurve& a, const AlgebroidCurve& b) {
    bool direct = a.gamma() == b.gamma() && subspace_eq(a.model.basis, b.model.basis);
    bool by_semigroup = a.semigroup == b.semigroup;
    if (direct != by_semigroup)
        throw InternalCheckError("ring equality and semigroup equality disagree");
    return direct;
}

// Proper idempotents of the ring, as branch subsets. The member indicators
// form a Boolean algebra; its atoms partition the branches into the
// connected factors.
inline std::vector<std::vector<long>> idempotent_blocks(const AlgebroidCurve& a) {
    long n = a.branch_count();
    std::vector<std::vector<long>> blocks{std::vector<long>(static_cast<std::size_t>(n))};
    std::iota(blocks[0].begin(), blocks[0].end(), 0L);
    if (n == 1) return blocks;
    for (unsigned long mask = 1; mask + 1 < (1UL << n); ++mask) {
        std::vector<BranchSeries> parts(n);
        for (long i = 0; i < n; ++i)
            parts[i] = (mask >> i) & 1 ? BranchSeries::constant(Rational(1)) : BranchSeries::zero();
        if (!a.contains(MultiElement(std::move(parts)))) continue;
        std::vector<std::vector<long>> next;
        for (const auto& blk : blocks) {
            std::vector<long> in, out;
            for (long i : blk) ((mask >> i) & 1 ? in : out).push_back(i);
            if (!in.empty()) next.push_back(std::move(in));
            if (!out.empty()) next.push_back(std::move(out));
        }
        blocks = std::move(next);
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

inline MultiElement select_branches(const MultiElement& a, const std::vector<long>& branches) {
    std::vector<BranchSeries> parts;
    parts.reserve(branches.size());
    for (long i : branches) parts.push_back(a.branch(i));
    return MultiElement(std::move(parts));
}

// Decomposition A = prod of factors along the idempotent blocks. For a
// local ring the list is the ring itself.
inline std::vector<std::pair<std::vector<long>, AlgebroidCurve>> idempotent_split(const AlgebroidCurve& a) {
    std::vector<std::pair<std::vector<long>, AlgebroidCurve>> out;
    auto blocks = idempotent_blocks(a);
    if (blocks.size() == 1) {
        out.emplace_back(blocks[0], a);
        return out;
    }
    for (const auto& blk : blocks) {
        Box tail;
        tail.reserve(blk.size());
        for (long i : blk) tail.push_back(a.gamma()[i]);
        std::vector<MultiElement> rows;
        for (const auto& v : a.model.basis_lifts()) rows.push_back(select_branches(v, blk));
        out.emplace_back(blk, curve_from_model(IdealModel{tail, echelonize(rows, tail)}));
    }
    return out;
}

// Product ideal I*J, modeled at tail(I) + tail(J). Spanning products of the
// two models beyond the listed monomial ranges fall into the tail.
inline IdealModel product_ideal(const IdealModel& a, const IdealModel& b) {
    long n = a.branch_count();
    if (b.branch_count() != n) throw BranchMismatchError("product_ideal: branch counts differ");
    Box tail(n);
    for (long i = 0; i < n; ++i) tail[i] = a.tail[i] + b.tail[i];
    std::vector<MultiElement> agens = a.basis_lifts();
    for (auto& m : a.tail_monomials(tail)) agens.push_back(std::move(m));
    std::vector<MultiElement> bgens = b.basis_lifts();
    for (auto& m : b.tail_monomials(tail)) bgens.push_back(std::move(m));
    std::vector<MultiElement> prods;
    prods.reserve(agens.size() * bgens.size());
    for (const auto& x : agens)
        for (const auto& y : bgens) prods.push_back(truncate(series_mul(x, y), tail));
    return IdealModel{tail, echelonize(prods, tail)};
}

// dim_K(m / m^2), the minimal number of algebra generators.
inline long embedding_dimension(const AlgebroidCurve& a) {
    IdealModel rad = jacobson_radical(a);
    return dim_quotient(rad, product_ideal(rad, rad));
}

// Per-branch multiplicities: the least positive order attained on each
// branch by an element of the maximal ideal. Read off the radical's echelon
// rows (the graded column order makes the minimal stored exponent attained)
// and its tail.
inline std::vector<Exp> multiplicity_vector(const AlgebroidCurve& a) {
    IdealModel rad = jacobson_radical(a);
    std::vector<Exp> mult(rad.tail.begin(), rad.tail.end());
    for (const auto& row : rad.basis.rows())
        for (std::size_t c = 0; c < rad.basis.coords().size(); ++c)
            if (row[c] != 0) {
                long i = rad.basis.coords().col_branch(c);
                mult[i] = std::min(mult[i], rad.basis.coords().col_exp(c));
            }
    return mult;
}

// Build the curve model from a branch parametrization. Protocol: validate
// the generators, close multiplicatively at a provisional box, read off a
// conductor candidate, then recompute at a strictly larger box and demand
// the same answer; on any doubt the box is doubled (up to 8 rounds) before
// giving up. The returned model is reboxed to the certified conductor and
// exact from then on.
inline AlgebroidCurve from_parametrization(const std::vector<MultiElement>& gens,
                                           std::optional<Exp> box_override = std::nullopt) {
    if (gens.empty()) throw Error("no generators");
    long n = gens[0].branch_count();
    if (n < 1) throw Error("no branches");
    for (const auto& g : gens) {
        if (g.branch_count() != n) throw BranchMismatchError("generators have differing branch counts");
        for (long i = 0; i < n; ++i) {
            ExtNat o = g.branch(i).order(); // throws UnknownOrderError on hidden order
            if (!o.is_infinite() && o.value() == 0)
                throw NonLocalError("generator has a unit component; the parametrized ring is not local");
        }
    }
    for (long i = 0; i < n; ++i) {
        bool alive = false;
        for (const auto& g : gens)
            if (!g.branch(i).order().is_infinite()) alive = true;
        if (!alive) throw NotReducedError("branch " + std::to_string(i) + " has no nonzero generator; it parametrizes a point");
    }
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
            bool same = true;
            for (const auto& g : gens)
                if (g.branch(i) != g.branch(j)) same = false;
            if (same) throw NotReducedError("branches " + std::to_string(i) + " and " + std::to_string(j) + " are identical");
        }
    // A branch whose component exponents share a factor k > 1 parametrizes
    // its image k-to-one; the image ring then has no conductor inside the
    // ambient product of power series rings, so no box can ever certify one.
    for (long i = 0; i < n; ++i) {
        Exp shared = 0;
        for (const auto& g : gens)
            for (const auto& [e, c] : g.branch(i).coeffs()) shared = std::gcd(shared, e);
        if (shared > 1)
            throw BoxTooSmallError("branch " + std::to_string(i) + " component exponents share the factor " +
                                   std::to_string(shared) + "; the parametrization is not primitive");
    }

    Box box(n);
    for (long i = 0; i < n; ++i) {
        if (box_override) {
            if (*box_override < 2) throw BoxTooSmallError("box override must be at least 2");
            box[i] = *box_override;
        } else {
            Exp sum = 0;
            for (const auto& g : gens) {
                ExtNat o = g.branch(i).order();
                if (!o.is_infinite()) sum += o.value();
            }
            // generous for the common case, cheap to double when the
            // conductor turns out larger (closure cost is cubic in the box)
            box[i] = sum + 8;
        }
    }

    // Exact linear algebra on the flat coordinates is cubic in the total box
    // size, so cap the doubling rather than chase a conductor that a
    // value-locked (but exponent-coprime) branch will never produce.
    constexpr Exp kBoxBudget = 512;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Exp total = 0;
        for (Exp b : box) total += b;
        if (total > kBoxBudget) break;
        IdealModel trial{box, multiplicative_closure(gens, box)};
        Point gamma = model_conductor(trial);
        bool margin = true;
        for (long i = 0; i < n; ++i)
            if (gamma[i] + 2 > box[i]) margin = false;
        if (margin) {
            Box bigger(n);
            for (long i = 0; i < n; ++i) bigger[i] = box[i] + std::max<Exp>(4, box[i] / 4);
            IdealModel check{bigger, multiplicative_closure(gens, bigger)};
            if (model_conductor(check) == gamma) {
                IdealModel final_model{gamma, restricted_to(check.basis, gamma)};
                AlgebroidCurve a = curve_from_model(std::move(final_model), gens);
                if (a.gamma() != gamma) throw InternalCheckError("conductor changed under reboxing");
                return a;
            }
            box = bigger;
        }
        for (auto& b : box) b *= 2;
    }
    throw BoxTooSmallError("no stable conductor up to the retry limit; the parametrization may not define a reduced curve with finite normalization");
}

} // namespace grnorm

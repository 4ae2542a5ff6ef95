#pragma once

#include <vector>

#include "ring_model.hpp"

namespace grnorm {

// One ring of the normalization chain together with its invariants.
struct ChainStep {
    AlgebroidCurve ring;
    long index = 0;
    long dim_over_prev = 0; // dim_K(A_i / A_{i-1}), 0 at the start
    long delta = 0;         // dim_K(Abar / A_i)
    long embedding_dim = 0;
    std::vector<Exp> multiplicity;
    bool symmetric = false;  // Delgado test on the full value semigroup
    bool gorenstein = false; // symmetry of every idempotent factor
    std::vector<std::vector<long>> blocks;
};

struct ChainReport {
    std::vector<ChainStep> steps;
    long n() const { return static_cast<long>(steps.size()) - 1; }
};

inline ChainStep make_chain_step(AlgebroidCurve ring, long index, long dim_over_prev) {
    ChainStep st;
    st.index = index;
    st.dim_over_prev = dim_over_prev;
    st.delta = delta_invariant(ring);
    st.embedding_dim = embedding_dimension(ring);
    st.multiplicity = multiplicity_vector(ring);
    st.symmetric = is_symmetric(ring.semigroup);
    st.gorenstein = true;
    for (const auto& [blk, factor] : idempotent_split(ring)) {
        st.blocks.push_back(blk);
        if (!is_symmetric(factor.semigroup)) st.gorenstein = false;
    }
    st.ring = std::move(ring);
    return st;
}

// The normalization chain A = A_0 < A_1 < ... < A_n = Abar with
// A_{i+1} = End(rad A_i). Each step asserts the normality criterion in both
// directions: the endomorphism ring grows strictly iff the ring is not yet
// normal. The iteration count is capped by delta + 1 steps, which the
// telescoping dimension argument guarantees.
inline ChainReport gr_chain(const AlgebroidCurve& a) {
    ChainReport rep;
    rep.steps.push_back(make_chain_step(a, 0, 0));
    long cap = delta_invariant(a) + 1;
    for (long i = 0; i <= cap; ++i) {
        const AlgebroidCurve& cur = rep.steps.back().ring;
        AlgebroidCurve next = endomorphism_ring(jacobson_radical(cur), cur);
        bool stable = ring_equals(next, cur);
        if (stable != cur.is_normal())
            throw InternalCheckError("normality criterion violated: stability and normality disagree");
        if (stable) {
            if (!cur.is_normal()) throw InternalCheckError("chain stopped before the normalization");
            return rep;
        }
        long d = dim_quotient(next, cur);
        if (d <= 0) throw InternalCheckError("chain step did not grow");
        rep.steps.push_back(make_chain_step(std::move(next), i + 1, d));
    }
    throw InternalCheckError("chain exceeded the delta-invariant step bound");
}

// Number of steps the chain needs to reach the normalization.
inline long n_of(const AlgebroidCurve& a) { return gr_chain(a).n(); }

// One round of the normality criterion on a single ring; true when the
// criterion holds (always, unless the implementation is broken).
inline bool verify_gr_criterion(const AlgebroidCurve& a) {
    AlgebroidCurve grown = endomorphism_ring(jacobson_radical(a), a);
    return ring_equals(grown, a) == a.is_normal();
}

// Step count for a reduced curve given by the multiset of its singular
// local models: the chain of the whole curve normalizes every point in
// parallel, so the count is the maximum of the local counts.
inline long global_n(const std::vector<AlgebroidCurve>& locals) {
    long best = 0;
    for (const auto& a : locals) best = std::max(best, n_of(a));
    return best;
}

} // namespace grnorm

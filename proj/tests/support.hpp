#pragma once

// Shared helpers for the test suites: small builders, independent oracles
// (kept deliberately naive - they re-derive answers from first principles),
// and a reproducible random-curve generator.

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <grnorm/grnorm.hpp>

namespace testsup {

using namespace grnorm;

// --- builders -------------------------------------------------------------

inline BranchSeries bs(std::initializer_list<std::pair<Exp, long>> terms,
                       std::optional<Exp> prec = std::nullopt) {
    BranchSeries::CoeffMap m;
    for (auto [e, c] : terms) m[e] += Rational(c);
    return BranchSeries::make(std::move(m), prec);
}

inline MultiElement me(std::vector<BranchSeries> branches) { return MultiElement(std::move(branches)); }

// Monomial curve on one branch: t^e for each exponent.
inline std::vector<MultiElement> monomial_gens(const std::vector<Exp>& orders) {
    std::vector<MultiElement> gens;
    gens.reserve(orders.size());
    for (Exp e : orders) gens.push_back(unit_monomial(1, 0, e));
    return gens;
}

// --- independent oracles ---------------------------------------------------

// Additive closure of the given positive integers inside [0, bound]: the
// numerical semigroup they generate, computed by plain dynamic programming.
inline std::set<Exp> numerical_semigroup(const std::vector<Exp>& gens, Exp bound) {
    std::vector<char> in(static_cast<std::size_t>(bound) + 1, 0);
    in[0] = 1;
    for (Exp v = 1; v <= bound; ++v)
        for (Exp g : gens)
            if (g >= 1 && g <= v && in[v - g]) {
                in[v] = 1;
                break;
            }
    std::set<Exp> out;
    for (Exp v = 0; v <= bound; ++v)
        if (in[v]) out.insert(v);
    return out;
}

// Conductor of a numerical semigroup from its generators: smallest c with
// [c, c+max(gens)] fully inside, found by scanning far enough past the
// Frobenius bound of any two coprime generators.
inline Exp numerical_conductor(const std::vector<Exp>& gens) {
    Exp bound = 2;
    for (Exp g : gens) bound += g;
    bound *= bound; // generous: past (a-1)(b-1) for any coprime pair
    auto sg = numerical_semigroup(gens, bound);
    Exp c = 0;
    for (Exp v = bound; v >= 1; --v) {
        if (!sg.count(v)) {
            c = v + 1;
            break;
        }
    }
    return c;
}

// Symmetry of a numerical-semigroup window by the textbook gap count:
// symmetric iff exactly gamma/2 gaps... checked directly as the pairing
// v in S <=> tau - v not in S over the full window.
inline bool numerical_symmetric(const std::set<Exp>& sg, Exp gamma) {
    for (Exp v = -2; v <= gamma + 2; ++v) {
        bool inv = v >= 0 && (v >= gamma || sg.count(std::min(v, gamma)));
        Exp w = gamma - 1 - v;
        bool inw = w >= 0 && (w >= gamma || sg.count(std::min(w, gamma)));
        if (inv == inw) return false;
    }
    return true;
}

// --- random instances -------------------------------------------------------

struct RandomOptions {
    long max_branches = 3;
    long max_gens = 3;
    Exp max_order = 5;
    Exp max_gamma_sum = 16;
};

// One random polynomial branch entry with order in [1, max_order].
inline BranchSeries random_branch_poly(std::mt19937_64& rng, Exp max_order) {
    std::uniform_int_distribution<Exp> ord(1, max_order);
    std::uniform_int_distribution<int> extra(0, 2), pick(0, 5), denq(1, 3);
    static const long nums[6] = {1, -1, 2, -2, 3, 1};
    BranchSeries::CoeffMap m;
    Exp o = ord(rng);
    m[o] = rational(nums[pick(rng)], denq(rng));
    for (int k = extra(rng); k > 0; --k) {
        Exp e = o + 1 + ord(rng);
        m[e] += rational(nums[pick(rng)], denq(rng));
    }
    return BranchSeries::make(std::move(m), std::nullopt);
}

// Random reduced local parametrization with a modest conductor; resamples
// until from_parametrization accepts it and the conductor is small enough to
// keep property runs fast. Returns the constructed curve.
inline AlgebroidCurve random_curve(std::mt19937_64& rng, const RandomOptions& opt = {}) {
    std::uniform_int_distribution<long> nb(1, opt.max_branches);
    for (;;) {
        long s = nb(rng);
        std::uniform_int_distribution<long> ng(2, opt.max_gens);
        long g = ng(rng);
        std::uniform_int_distribution<int> zero_roll(0, 4);
        std::vector<MultiElement> gens;
        for (long j = 0; j < g; ++j) {
            std::vector<BranchSeries> branches;
            for (long i = 0; i < s; ++i) {
                bool zero = s > 1 && zero_roll(rng) == 0;
                branches.push_back(zero ? BranchSeries::zero() : random_branch_poly(rng, opt.max_order));
            }
            gens.push_back(MultiElement(std::move(branches)));
        }
        try {
            AlgebroidCurve a = from_parametrization(gens);
            Exp total = 0;
            for (Exp gi : a.gamma()) total += gi;
            if (total > opt.max_gamma_sum) continue;
            return a;
        } catch (const NotReducedError&) {
        } catch (const NonLocalError&) {
        } catch (const BoxTooSmallError&) {
        }
    }
}

// Uniform random classified singularity in the certified index ranges.
inline SingularityType random_ade_type(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> fam(0, 2);
    switch (fam(rng)) {
    case 0: {
        std::uniform_int_distribution<long> n(1, 12);
        return type_A(n(rng));
    }
    case 1: {
        std::uniform_int_distribution<long> n(4, 12);
        return type_D(n(rng));
    }
    default: {
        std::uniform_int_distribution<long> n(6, 8);
        return type_E(n(rng));
    }
    }
}

// --- misc -------------------------------------------------------------------

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::set<Point> window_set(std::initializer_list<Point> pts) { return std::set<Point>(pts); }

// --- chain property checks ---------------------------------------------------
//
// Each check returns an empty string on success and a human-readable failure
// description otherwise, so the same predicates serve the unit tests and the
// acceptance run.

// A_0 <= A_1 <= ... <= Abar, verified by explicit membership.
inline std::string prop_sandwich(const ChainReport& chain) {
    for (std::size_t i = 0; i + 1 < chain.steps.size(); ++i) {
        const AlgebroidCurve& cur = chain.steps[i].ring;
        const AlgebroidCurve& next = chain.steps[i + 1].ring;
        for (long j = 0; j < cur.branch_count(); ++j)
            if (next.gamma()[j] > cur.gamma()[j])
                return "conductor grew at step " + std::to_string(i + 1);
        for (const MultiElement& m : cur.model.basis_lifts())
            if (!next.contains(m)) return "step " + std::to_string(i) + " element escapes step " + std::to_string(i + 1);
    }
    return {};
}

// Delta(tau) never meets the value semigroup.
inline std::string prop_tau_gap(const ChainReport& chain) {
    for (const ChainStep& st : chain.steps)
        if (delta_intersects(st.ring.semigroup.tau(), st.ring.semigroup))
            return "Delta(tau) meets the semigroup at step " + std::to_string(st.index);
    return {};
}

// t^(tau v 0) * Abar lands in the next ring: componentwise bound plus
// explicit monomial membership.
inline std::string prop_conductor_bound(const ChainReport& chain) {
    for (std::size_t i = 0; i + 1 < chain.steps.size(); ++i) {
        const AlgebroidCurve& cur = chain.steps[i].ring;
        const AlgebroidCurve& next = chain.steps[i + 1].ring;
        Point tau = cur.semigroup.tau();
        long s = cur.branch_count();
        MultiElement diag = MultiElement::zero(s);
        for (long j = 0; j < s; ++j) {
            Exp c = std::max<Exp>(tau[j], 0);
            if (c < next.gamma()[j]) return "tau bound fails at step " + std::to_string(i);
            if (!next.contains(unit_monomial(s, j, c)))
                return "tau monomial escapes the next ring at step " + std::to_string(i);
            diag = series_add(diag, unit_monomial(s, j, c));
        }
        if (!next.contains(diag)) return "tau diagonal escapes the next ring at step " + std::to_string(i);
    }
    return {};
}

// The next semigroup is contained in every shift of the current one by a
// finite radical valuation.
inline std::string prop_semigroup_shift(const ChainReport& chain) {
    for (std::size_t i = 0; i + 1 < chain.steps.size(); ++i) {
        const AlgebroidCurve& cur = chain.steps[i].ring;
        const AlgebroidCurve& next = chain.steps[i + 1].ring;
        IdealModel rad = jacobson_radical(cur);
        for (const MultiElement& m : rad.basis_lifts()) {
            ValuationVector v = valuation(m);
            bool finite = true;
            for (const ExtNat& o : v) finite = finite && !o.is_infinite();
            if (!finite) continue;
            for (const Point& w : next.semigroup.window()) {
                Point shifted(w.size());
                for (std::size_t j = 0; j < w.size(); ++j) shifted[j] = w[j] + v[j].value();
                if (!cur.semigroup.contains(shifted))
                    return "shifted point leaves the semigroup at step " + std::to_string(i);
            }
        }
    }
    return {};
}

// A local factor is symmetric exactly when one endomorphism step gains a
// single dimension (or the factor is already normal).
inline std::string prop_gorenstein_iff(const ChainReport& chain) {
    for (const ChainStep& st : chain.steps)
        for (const auto& [blk, factor] : idempotent_split(st.ring)) {
            bool sym = is_symmetric(factor.semigroup);
            bool dim1 = true;
            if (!factor.is_normal()) {
                AlgebroidCurve grown = endomorphism_ring(jacobson_radical(factor), factor);
                dim1 = dim_quotient(grown, factor) == 1;
            }
            if (sym != dim1)
                return "symmetry and the one-dimensional-step test disagree at step " +
                       std::to_string(st.index);
        }
    return {};
}

// The stability criterion holds in both directions at every step.
inline std::string prop_gr_criterion(const ChainReport& chain) {
    for (const ChainStep& st : chain.steps)
        if (!verify_gr_criterion(st.ring)) return "criterion fails at step " + std::to_string(st.index);
    return {};
}

// Step dimensions telescope to the delta invariant.
inline std::string prop_telescoping(const ChainReport& chain) {
    long total = 0;
    for (std::size_t i = 1; i < chain.steps.size(); ++i) {
        if (chain.steps[i].dim_over_prev < 1) return "non-growing step";
        if (chain.steps[i].delta >= chain.steps[i - 1].delta) return "delta failed to drop";
        total += chain.steps[i].dim_over_prev;
    }
    if (total != chain.steps.front().delta) return "dimensions do not telescope to delta";
    if (chain.steps.back().delta != 0) return "chain ended with positive delta";
    if (!chain.steps.back().ring.is_normal()) return "chain ended below the normalization";
    if (chain.n() > chain.steps.front().delta + 1) return "chain longer than delta + 1";
    return {};
}

// Rebuilding from the same generators at a larger box changes nothing.
inline std::string prop_box_stability(const AlgebroidCurve& a) {
    Exp big = 4;
    for (Exp g : a.gamma()) big = std::max(big, 2 * g + 9);
    AlgebroidCurve again = from_parametrization(a.generators, big);
    if (again.gamma() != a.gamma()) return "conductor moved under a larger box";
    if (!(again.semigroup == a.semigroup)) return "semigroup moved under a larger box";
    if (!ring_equals(again, a)) return "ring moved under a larger box";
    return {};
}

// Substitute t -> c*t on one branch; preserves every valuation.
inline BranchSeries subst_scale(const BranchSeries& f, const Rational& c) {
    BranchSeries::CoeffMap m;
    Rational pw(1);
    Exp at = 0;
    for (const auto& [e, q] : f.coeffs()) {
        while (at < e) pw *= c, ++at;
        m[e] = q * pw;
    }
    std::optional<Exp> prec;
    if (!f.is_exact()) {
        // recover the precision bound to carry it across
        for (Exp p = 0;; ++p) {
            try {
                (void)f.coeff(p);
            } catch (const UnknownCoefficientError&) {
                prec = p;
                break;
            }
        }
    }
    return BranchSeries::make(std::move(m), prec);
}

} // namespace testsup

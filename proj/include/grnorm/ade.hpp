#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "normalization.hpp"

namespace grnorm {

// Catalogued singularity classes. EOne(n) is the first chain ring E_n(1)
// over E_n; AWedgeL(k) is the wedge of A_k with a transversal line (the
// first chain ring of D_{k+3}); Line and Smooth are the same class, a
// normal one-branch ring.
enum class TypeKind { A, D, E, EOne, AWedgeL, Product, Unrecognized, Smooth, Line = Smooth };

struct SingularityType {
    TypeKind kind = TypeKind::Unrecognized;
    long index = 0;
    std::vector<SingularityType> factors;
    std::string key; // fingerprint key when unrecognized

    bool operator==(const SingularityType& o) const {
        return kind == o.kind && index == o.index && factors == o.factors && key == o.key;
    }
    bool operator!=(const SingularityType& o) const { return !(*this == o); }

    std::string label() const {
        switch (kind) {
            case TypeKind::A: return "A" + std::to_string(index);
            case TypeKind::D: return "D" + std::to_string(index);
            case TypeKind::E: return "E" + std::to_string(index);
            case TypeKind::EOne: return "E" + std::to_string(index) + "(1)";
            case TypeKind::AWedgeL: return "A" + std::to_string(index) + "vL";
            case TypeKind::Smooth: return "L";
            case TypeKind::Product: {
                std::string out;
                for (std::size_t i = 0; i < factors.size(); ++i) {
                    if (i) out += " x ";
                    out += factors[i].label();
                }
                return out;
            }
            case TypeKind::Unrecognized: return "unrecognized[" + key + "]";
        }
        return "?";
    }
};

inline SingularityType type_A(long n) { return {TypeKind::A, n, {}, {}}; }
inline SingularityType type_D(long n) { return {TypeKind::D, n, {}, {}}; }
inline SingularityType type_E(long n) { return {TypeKind::E, n, {}, {}}; }
inline SingularityType type_E_one(long n) { return {TypeKind::EOne, n, {}, {}}; }
inline SingularityType type_A_wedge_L(long k) { return {TypeKind::AWedgeL, k, {}, {}}; }
inline SingularityType type_smooth() { return {TypeKind::Smooth, 0, {}, {}}; }
inline SingularityType type_product(std::vector<SingularityType> factors) {
    return {TypeKind::Product, 0, std::move(factors), {}};
}

// Parametrizations of the catalogued classes.
inline std::vector<MultiElement> ade_generators(TypeKind kind, long n) {
    auto mono1 = [](Exp e) { return monomial({e}); };
    switch (kind) {
        case TypeKind::A: {
            if (n < 1) throw Error("A_n needs n >= 1");
            if (n % 2 == 0) // t^(n+1), t^2
                return {mono1(n + 1), mono1(2)};
            long k = (n + 1) / 2; // (t^k, -t^k), (t, t)
            return {MultiElement({BranchSeries::monomial(k), BranchSeries::monomial(k, Rational(-1))}),
                    monomial({1, 1})};
        }
        case TypeKind::D: {
            if (n < 4) throw Error("D_n needs n >= 4");
            if (n % 2 == 1) { // n = 2k+3: (0, t^2), (t, t^(2k+1))
                long k = (n - 3) / 2;
                return {monomial({std::nullopt, 2}), monomial({1, 2 * k + 1})};
            }
            long k = (n - 2) / 2; // n = 2k+2: (0, t, t), (t, t^k, -t^k)
            return {monomial({std::nullopt, 1, 1}),
                    MultiElement({BranchSeries::monomial(1), BranchSeries::monomial(k),
                                  BranchSeries::monomial(k, Rational(-1))})};
        }
        case TypeKind::E: {
            if (n == 6) return {mono1(4), mono1(3)};
            if (n == 7) return {monomial({std::nullopt, 3}), monomial({1, 2})};
            if (n == 8) return {mono1(5), mono1(3)};
            throw Error("E_n needs n in {6,7,8}");
        }
        case TypeKind::EOne: {
            if (n == 6) return {mono1(3), mono1(4), mono1(5)};
            if (n == 7)
                return {monomial({std::nullopt, 3}), monomial({1, 2}), monomial({2, std::nullopt})};
            if (n == 8) return {mono1(3), mono1(5), mono1(7)};
            throw Error("E_n(1) needs n in {6,7,8}");
        }
        case TypeKind::AWedgeL: {
            if (n < 1) throw Error("A_k v L needs k >= 1");
            std::vector<MultiElement> base = ade_generators(TypeKind::A, n);
            long s = base[0].branch_count();
            std::vector<MultiElement> out;
            for (const auto& g : base) {
                std::vector<BranchSeries> parts = g.branches();
                parts.push_back(BranchSeries::zero());
                out.emplace_back(std::move(parts));
            }
            std::vector<BranchSeries> line(s, BranchSeries::zero());
            line.push_back(BranchSeries::monomial(1));
            out.emplace_back(std::move(line));
            return out;
        }
        case TypeKind::Smooth:
            return {mono1(1)};
        default:
            throw Error("no parametrization for this type kind");
    }
}

inline AlgebroidCurve make_ade(TypeKind kind, long n = 0) {
    return from_parametrization(ade_generators(kind, n));
}

inline AlgebroidCurve make_ade(const SingularityType& t) { return make_ade(t.kind, t.index); }

// Closed-form chain lengths.
inline long expected_n(TypeKind kind, long n) {
    switch (kind) {
        case TypeKind::A:
            if (n < 1) throw Error("A_n needs n >= 1");
            return (n + 1) / 2;
        case TypeKind::D:
            if (n < 4) throw Error("D_n needs n >= 4");
            return n / 2;
        case TypeKind::E:
            if (n < 6 || n > 8) throw Error("E_n needs n in {6,7,8}");
            return (n - 1) / 2;
        case TypeKind::Smooth:
            return 0;
        default:
            throw Error("no closed-form step count for this type kind");
    }
}

inline long expected_n(const SingularityType& t) { return expected_n(t.kind, t.index); }

// Closed-form conductor vectors.
inline Point expected_gamma(TypeKind kind, long n) {
    switch (kind) {
        case TypeKind::A:
            if (n % 2 == 0) return {n};
            return {(n + 1) / 2, (n + 1) / 2};
        case TypeKind::D:
            if (n % 2 == 1) return {2, n - 1};
            return {2, n / 2, n / 2};
        case TypeKind::E:
            if (n == 6) return {6};
            if (n == 7) return {3, 5};
            return {8};
        case TypeKind::Smooth:
            return {0};
        default:
            throw Error("no closed-form conductor for this type kind");
    }
}

// Conductor vectors along the whole expected chain, step 0 to step n.
inline std::vector<Point> expected_gamma_chain(TypeKind kind, long n) {
    std::vector<Point> out;
    switch (kind) {
        case TypeKind::A: {
            if (n % 2 == 0)
                for (long j = n; j >= 0; j -= 2) out.push_back({j});
            else
                for (long j = (n + 1) / 2; j >= 0; --j) out.push_back({j, j});
            return out;
        }
        case TypeKind::D: {
            if (n % 2 == 1) {
                long k = (n - 3) / 2;
                out.push_back({2, 2 * k + 2});
                out.push_back({1, 2 * k});
                for (long j = k - 1; j >= 0; --j) out.push_back({0, 2 * j});
            } else {
                long k = (n - 2) / 2;
                out.push_back({2, k + 1, k + 1});
                out.push_back({1, k, k});
                for (long j = k - 1; j >= 0; --j) out.push_back({0, j, j});
            }
            return out;
        }
        case TypeKind::E: {
            if (n == 6) return {{6}, {3}, {0}};
            if (n == 7) return {{3, 5}, {2, 3}, {1, 1}, {0, 0}};
            return {{8}, {5}, {2}, {0}};
        }
        default:
            throw Error("no expected chain for this type kind");
    }
}

// Expected class of the first chain ring End(rad A).
inline SingularityType expected_type_prime(TypeKind kind, long n) {
    switch (kind) {
        case TypeKind::A:
            if (n >= 3) return type_A(n - 2);
            if (n == 2) return type_smooth();
            return type_product({type_smooth(), type_smooth()});
        case TypeKind::D:
            return type_A_wedge_L(n - 3);
        case TypeKind::E:
            return type_E_one(n);
        default:
            throw Error("no expected chain types for this type kind");
    }
}

// Expected class of the second chain ring (valid when the chain has one).
inline SingularityType expected_type_second(TypeKind kind, long n) {
    switch (kind) {
        case TypeKind::A:
            if (n >= 5) return type_A(n - 4);
            if (n == 4) return type_smooth();
            return type_product({type_smooth(), type_smooth()});
        case TypeKind::D:
            if (n >= 6) return type_product({type_smooth(), type_A(n - 5)});
            if (n == 5) return type_product({type_smooth(), type_smooth()});
            return type_product({type_smooth(), type_smooth(), type_smooth()});
        case TypeKind::E:
            if (n == 6) return type_smooth();
            if (n == 7) return type_A(1);
            return type_A(2);
        default:
            throw Error("no expected chain types for this type kind");
    }
}

// Classifying invariants of a local ring, canonicalized over branch
// permutations.
struct Fingerprint {
    long s = 0;
    Point gamma;
    std::vector<Point> window;
    long delta = 0;
    long embdim = 0;
    bool gorenstein = false;
    std::vector<Exp> multiplicity;

    std::string key() const {
        std::vector<long> perm(s);
        std::iota(perm.begin(), perm.end(), 0L);
        std::string best;
        do {
            std::string cand = "s" + std::to_string(s) + ";g";
            auto app = [&cand](const Point& p, const std::vector<long>& pm) {
                for (std::size_t i = 0; i < p.size(); ++i)
                    cand += (i ? "," : "") + std::to_string(p[pm[i]]);
            };
            app(gamma, perm);
            cand += ";m";
            app(multiplicity, perm);
            cand += ";w";
            std::vector<Point> w;
            w.reserve(window.size());
            for (const auto& p : window) {
                Point q(p.size());
                for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[perm[i]];
                w.push_back(std::move(q));
            }
            std::sort(w.begin(), w.end());
            for (const auto& q : w) {
                cand += "(";
                for (std::size_t i = 0; i < q.size(); ++i) cand += (i ? "," : "") + std::to_string(q[i]);
                cand += ")";
            }
            cand += ";d" + std::to_string(delta) + ";e" + std::to_string(embdim) + ";gor" + (gorenstein ? "1" : "0");
            if (best.empty() || cand < best) best = cand;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }
};

inline Fingerprint fingerprint_of(const AlgebroidCurve& a) {
    Fingerprint fp;
    fp.s = a.branch_count();
    fp.gamma = a.gamma();
    fp.window.assign(a.semigroup.window().begin(), a.semigroup.window().end());
    fp.delta = delta_invariant(a);
    fp.embdim = embedding_dimension(a);
    fp.gorenstein = is_symmetric(a.semigroup);
    fp.multiplicity = multiplicity_vector(a);
    return fp;
}

// Fingerprint index of the catalogued local classes, built once. Ranges
// cover the acceptance sweep and every ring its chains visit.
inline const std::map<std::string, SingularityType>& ade_catalog() {
    static const std::map<std::string, SingularityType> cat = [] {
        std::map<std::string, SingularityType> m;
        auto put = [&m](const SingularityType& t) {
            std::string k = fingerprint_of(make_ade(t)).key();
            auto [it, fresh] = m.emplace(k, t);
            if (!fresh && !(it->second == t))
                throw InternalCheckError("fingerprint collision between " + it->second.label() + " and " + t.label());
        };
        put(type_smooth());
        for (long n = 1; n <= 14; ++n) put(type_A(n));
        for (long n = 4; n <= 14; ++n) put(type_D(n));
        for (long n = 6; n <= 8; ++n) put(type_E(n));
        for (long n = 6; n <= 8; ++n) put(type_E_one(n));
        for (long k = 1; k <= 11; ++k) put(type_A_wedge_L(k));
        return m;
    }();
    return cat;
}

// Classify a chain ring: split into connected factors, then match each
// local factor's fingerprint against the catalog.
inline SingularityType recognize(const AlgebroidCurve& a) {
    auto split = idempotent_split(a);
    if (split.size() > 1) {
        std::vector<SingularityType> factors;
        factors.reserve(split.size());
        for (const auto& [blk, factor] : split) factors.push_back(recognize(factor));
        return type_product(std::move(factors));
    }
    std::string k = fingerprint_of(a).key();
    const auto& cat = ade_catalog();
    auto it = cat.find(k);
    if (it != cat.end()) return it->second;
    return {TypeKind::Unrecognized, 0, {}, k};
}

struct AdeCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct AdeVerification {
    SingularityType type;
    long n_expected = 0;
    long n_got = 0;
    std::vector<AdeCheck> checks;
    bool all_pass = true;
};

namespace detail {

inline std::string point_str(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
    return out + ")";
}

inline std::string points_str(const std::vector<Point>& ps) {
    std::string out;
    for (const auto& p : ps) out += point_str(p);
    return out;
}

// Structural match of a chain ring against an expected class: products are
// compared factor by factor, local classes by fingerprint against an
// independently constructed model.
inline bool matches_type(const AlgebroidCurve& ring, const SingularityType& expected) {
    auto split = idempotent_split(ring);
    if (expected.kind == TypeKind::Product) {
        if (split.size() != expected.factors.size()) return false;
        for (std::size_t i = 0; i < split.size(); ++i)
            if (!matches_type(split[i].second, expected.factors[i])) return false;
        return true;
    }
    if (split.size() != 1) return false;
    return fingerprint_of(ring).key() == fingerprint_of(make_ade(expected)).key();
}

} // namespace detail

// Certify one catalogued curve: run its chain and compare every claimed
// invariant (step count, conductor sequence, intermediate classes,
// Gorenstein pattern, final normality). Failures are collected, not thrown.
inline AdeVerification verify_ade(TypeKind kind, long n) {
    AdeVerification v;
    v.type = {kind, n, {}, {}};
    AlgebroidCurve a = make_ade(kind, n);
    ChainReport chain = gr_chain(a);
    v.n_expected = expected_n(kind, n);
    v.n_got = chain.n();
    auto check = [&v](const std::string& name, bool pass, const std::string& detail) {
        v.checks.push_back({name, pass, detail});
        if (!pass) v.all_pass = false;
    };

    check("step_count", v.n_got == v.n_expected,
          "expected " + std::to_string(v.n_expected) + ", got " + std::to_string(v.n_got));

    Point g = expected_gamma(kind, n);
    check("conductor", a.gamma() == g,
          "expected " + detail::points_str({g}) + ", got " + detail::points_str({a.gamma()}));

    {
        std::vector<Point> want = expected_gamma_chain(kind, n);
        std::vector<Point> got;
        got.reserve(chain.steps.size());
        for (const auto& st : chain.steps) got.push_back(st.ring.gamma());
        check("conductor_chain", want == got,
              "expected " + detail::points_str(want) + ", got " + detail::points_str(got));
    }

    if (chain.n() >= 1) {
        SingularityType want = expected_type_prime(kind, n);
        check("first_step_class", detail::matches_type(chain.steps[1].ring, want) &&
                                      recognize(chain.steps[1].ring) == want,
              "expected " + want.label() + ", recognized " + recognize(chain.steps[1].ring).label());
    }
    if (chain.n() >= 2) {
        SingularityType want = expected_type_second(kind, n);
        check("second_step_class", detail::matches_type(chain.steps[2].ring, want) &&
                                       recognize(chain.steps[2].ring) == want,
              "expected " + want.label() + ", recognized " + recognize(chain.steps[2].ring).label());
    }

    check("gorenstein_start", chain.steps[0].gorenstein, "catalogued curves are Gorenstein");
    if ((kind == TypeKind::D || kind == TypeKind::E) && chain.n() >= 2) {
        bool nong = !chain.steps[1].gorenstein && chain.steps[2].dim_over_prev != 1;
        check("first_step_not_gorenstein", nong,
              "the first chain ring of D and E types is not Gorenstein");
    }
    if (kind == TypeKind::A && chain.n() >= 2) {
        bool gor = chain.steps[1].gorenstein && chain.steps[2].dim_over_prev == 1;
        check("first_step_gorenstein", gor, "chain rings of A types stay Gorenstein");
    }

    {
        const AlgebroidCurve& last = chain.steps.back().ring;
        bool normal = last.is_normal();
        SingularityType t = recognize(last);
        bool allsmooth = t.kind == TypeKind::Smooth;
        if (t.kind == TypeKind::Product) {
            allsmooth = true;
            for (const auto& f : t.factors)
                if (f.kind != TypeKind::Smooth) allsmooth = false;
        }
        check("final_normal", normal && allsmooth, "chain must end at the normalization");
    }
    return v;
}

inline AdeVerification verify_ade(const SingularityType& t) { return verify_ade(t.kind, t.index); }

// Recognized class of every chain step.
inline std::vector<SingularityType> annotate(const ChainReport& chain) {
    std::vector<SingularityType> out;
    out.reserve(chain.steps.size());
    for (const auto& st : chain.steps) out.push_back(recognize(st.ring));
    return out;
}

} // namespace grnorm

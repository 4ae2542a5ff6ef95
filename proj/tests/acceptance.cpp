// Acceptance run: one line per criterion, nonzero exit when any fails.
//
// The checks mirror the project's headline guarantees: closed-form step
// counts and conductors for the catalogued singularity classes, the
// intermediate classes along their chains, frozen staircase diagrams, the
// structural chain invariants at scale, the global step-count combinator,
// and an independent brute-force oracle for the one-branch case.
#include <grnorm/grnorm.hpp>

#include "support.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace grnorm;
using namespace testsup;

namespace {

// All catalogued plane classes in the sweep range.
std::vector<std::pair<TypeKind, long>> sweep() {
    std::vector<std::pair<TypeKind, long>> out;
    for (long n = 1; n <= 12; ++n) out.emplace_back(TypeKind::A, n);
    for (long n = 4; n <= 12; ++n) out.emplace_back(TypeKind::D, n);
    for (long n = 6; n <= 8; ++n) out.emplace_back(TypeKind::E, n);
    return out;
}

std::string label_of(TypeKind kind, long n) { return SingularityType{kind, n, {}, {}}.label(); }

// Criterion 1: chain lengths across the sweep match the closed forms
// floor((n+1)/2), floor(n/2), floor((n-1)/2).
std::string criterion_step_counts() {
    std::string bad;
    long count = 0;
    for (auto [kind, n] : sweep()) {
        long want = kind == TypeKind::A ? (n + 1) / 2 : kind == TypeKind::D ? n / 2 : (n - 1) / 2;
        long got = n_of(make_ade(kind, n));
        ++count;
        if (got != want)
            bad += " " + label_of(kind, n) + ": got " + std::to_string(got) + ", want " + std::to_string(want);
        if (want != expected_n(kind, n)) bad += " " + label_of(kind, n) + ": table mismatch";
    }
    return bad.empty() ? "24 classes, all exact" : "mismatches:" + bad;
}

// Criterion 2: conductor vectors across the sweep match the closed forms.
std::string criterion_conductors() {
    std::string bad;
    auto check = [&bad](TypeKind kind, long n, const Point& want) {
        AlgebroidCurve a = make_ade(kind, n);
        if (a.gamma() != want)
            bad += " " + label_of(kind, n) + ": got " + detail::point_str(a.gamma()) + ", want " +
                   detail::point_str(want);
        if (expected_gamma(kind, n) != want) bad += " " + label_of(kind, n) + ": table mismatch";
    };
    for (long n = 1; n <= 12; ++n)
        check(TypeKind::A, n, n % 2 == 0 ? Point{n} : Point{(n + 1) / 2, (n + 1) / 2});
    for (long n = 4; n <= 12; ++n)
        check(TypeKind::D, n, n % 2 == 1 ? Point{2, n - 1} : Point{2, n / 2, n / 2});
    check(TypeKind::E, 6, Point{6});
    check(TypeKind::E, 7, Point{3, 5});
    check(TypeKind::E, 8, Point{8});
    return bad.empty() ? "24 classes, all exact" : "mismatches:" + bad;
}

// Criterion 3: first and second chain rings carry the expected classes,
// compared by fingerprint.
std::string criterion_intermediate_types() {
    std::string bad;
    long checked = 0;
    for (auto [kind, n] : sweep()) {
        ChainReport chain = gr_chain(make_ade(kind, n));
        if (chain.steps.size() >= 2) {
            ++checked;
            if (!detail::matches_type(chain.steps[1].ring, expected_type_prime(kind, n)))
                bad += " " + label_of(kind, n) + ": first ring is not " + expected_type_prime(kind, n).label();
        }
        if (chain.steps.size() >= 3) {
            ++checked;
            if (!detail::matches_type(chain.steps[2].ring, expected_type_second(kind, n)))
                bad += " " + label_of(kind, n) + ": second ring is not " + expected_type_second(kind, n).label();
        }
    }
    return bad.empty() ? std::to_string(checked) + " identifications, all exact" : "mismatches:" + bad;
}

// Criterion 4: staircase diagrams match the checked-in goldens byte for byte.
std::string criterion_goldens() {
    struct Fixture {
        const char* file;
        const char* name;
        TypeKind kind;
        long n;
    };
    const Fixture fixtures[] = {
        {"a8.txt", "A8", TypeKind::A, 8},   {"a7.txt", "A7", TypeKind::A, 7},
        {"d7.txt", "D7", TypeKind::D, 7},   {"d10.txt", "D10", TypeKind::D, 10},
        {"e6.txt", "E6", TypeKind::E, 6},   {"e7.txt", "E7", TypeKind::E, 7},
        {"e8.txt", "E8", TypeKind::E, 8},
    };
    std::string bad;
    for (const Fixture& f : fixtures) {
        CurveSpec spec;
        spec.name = f.name;
        std::vector<MultiElement> gens = ade_generators(f.kind, f.n);
        spec.branches = gens.front().branch_count();
        char g = 'x';
        for (MultiElement& m : gens) spec.generators.emplace_back(std::string(1, g++), std::move(m));
        std::string got = cmd_diagram(spec, {}).output;
        std::string want = slurp(std::string(GOLDEN_DIR) + "/" + f.file);
        if (want.empty()) bad += std::string(" ") + f.file + ": golden missing";
        else if (got != want) bad += std::string(" ") + f.file + ": output drifted";
    }
    return bad.empty() ? "7 diagrams, all byte-identical" : "mismatches:" + bad;
}

// Criterion 5: the eight structural invariants on 200 random curves plus the
// full catalogue sweep, zero failures.
std::string criterion_property_suites() {
    struct Named {
        const char* name;
        std::function<std::string(const ChainReport&)> run;
    };
    std::vector<std::pair<std::string, AlgebroidCurve>> curves;
    for (auto [kind, n] : sweep()) curves.emplace_back(label_of(kind, n), make_ade(kind, n));
    for (long n = 6; n <= 8; ++n)
        curves.emplace_back(type_E_one(n).label(), make_ade(TypeKind::EOne, n));
    for (long k = 1; k <= 8; ++k)
        curves.emplace_back(type_A_wedge_L(k).label(), make_ade(TypeKind::AWedgeL, k));
    std::mt19937_64 rng(424242);
    long random_budget = 200;
    for (long i = 0; i < random_budget; ++i)
        curves.emplace_back("random#" + std::to_string(i), random_curve(rng));

    std::vector<ChainReport> chains;
    chains.reserve(curves.size());
    for (const auto& [name, a] : curves) chains.push_back(gr_chain(a));

    const Named suites[] = {
        {"sandwich", prop_sandwich},
        {"tau-gap", prop_tau_gap},
        {"conductor-bound", prop_conductor_bound},
        {"semigroup-shift", prop_semigroup_shift},
        {"symmetry", prop_gorenstein_iff},
        {"stability-criterion", prop_gr_criterion},
        {"telescoping", prop_telescoping},
    };
    std::string bad;
    for (const Named& suite : suites)
        for (std::size_t i = 0; i < chains.size(); ++i) {
            std::string msg = suite.run(chains[i]);
            if (!msg.empty()) bad += " [" + std::string(suite.name) + " @ " + curves[i].first + "] " + msg;
        }
    // eighth suite: rebuilding from the same generators at a larger box
    for (std::size_t i = 0; i < curves.size(); ++i) {
        std::string msg = prop_box_stability(curves[i].second);
        if (!msg.empty()) bad += " [box-stability @ " + curves[i].first + "] " + msg;
    }
    if (!bad.empty()) return "failures:" + bad;
    return std::to_string(curves.size()) + " instances x 8 suites, zero failures";
}

// Criterion 6: the disjoint-union step count is the max over the parts.
std::string criterion_global() {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> howmany(1, 4);
    std::string bad;
    for (int trial = 0; trial < 100; ++trial) {
        int parts = howmany(rng);
        std::vector<AlgebroidCurve> local;
        long want = 0;
        std::string names;
        for (int p = 0; p < parts; ++p) {
            SingularityType t = random_ade_type(rng);
            local.push_back(make_ade(t));
            want = std::max(want, expected_n(t));
            names += (p ? " + " : "") + t.label();
        }
        long got = global_n(local);
        if (got != want)
            bad += " [" + names + "] got " + std::to_string(got) + ", want " + std::to_string(want);
    }
    return bad.empty() ? "100 multisets, all exact" : "mismatches:" + bad;
}

// Criterion 7: one-branch semigroups agree with a brute-force additive
// closure of the generator orders, up to gamma + 10.
std::string criterion_oracle() {
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<int> count(2, 4);
    std::uniform_int_distribution<Exp> ord(2, 9);
    std::string bad;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Exp> orders;
        do {
            orders.clear();
            for (int k = count(rng); k > 0; --k) orders.push_back(ord(rng));
            Exp g = 0;
            for (Exp o : orders) g = std::gcd(g, o);
            if (g == 1) break;
        } while (true);

        AlgebroidCurve a = from_parametrization(monomial_gens(orders));
        Exp gamma = a.gamma()[0];
        if (gamma != numerical_conductor(orders)) {
            bad += " [trial " + std::to_string(trial) + "] conductor disagrees";
            continue;
        }
        std::set<Exp> oracle = numerical_semigroup(orders, gamma + 10);
        for (Exp v = 0; v <= gamma + 10; ++v)
            if (a.semigroup.contains({v}) != (oracle.count(v) != 0)) {
                bad += " [trial " + std::to_string(trial) + "] membership differs at " + std::to_string(v);
                break;
            }
    }
    return bad.empty() ? "50 monomial curves, all exact" : "mismatches:" + bad;
}

} // namespace

int main() {
    struct Criterion {
        const char* title;
        std::string (*run)();
    };
    const Criterion criteria[] = {
        {"step-count table", &criterion_step_counts},
        {"conductor closed forms", &criterion_conductors},
        {"intermediate chain classes", &criterion_intermediate_types},
        {"staircase diagram goldens", &criterion_goldens},
        {"chain property suites", &criterion_property_suites},
        {"global step-count combinator", &criterion_global},
        {"one-branch semigroup oracle", &criterion_oracle},
    };
    int failures = 0;
    for (std::size_t i = 0; i < std::size(criteria); ++i) {
        std::string detail;
        bool ok = true;
        auto start = std::chrono::steady_clock::now();
        try {
            detail = criteria[i].run();
            ok = detail.rfind("mismatches:", 0) != 0 && detail.rfind("failures:", 0) != 0;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << (i + 1) << " (" << criteria[i].title << "): "
                  << (ok ? "PASS" : "FAIL") << " -- " << detail << "  [" << std::fixed
                  << std::setprecision(1) << secs << "s]\n";
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "acceptance: all criteria pass" : "acceptance: FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}

#pragma once

#include <thread>

#include "curve_spec.hpp"
#include "diagram.hpp"
#include "report.hpp"

namespace grnorm {

// Options shared by the CLI subcommands. `box` overrides the provisional
// truncation box; `structured` selects JSON output; `jobs` bounds worker
// threads where a command can use them.
struct CommandOptions {
    std::optional<Exp> box;
    bool structured = false;
    long jobs = 1;
};

struct CommandResult {
    int exit_code = 0;
    std::string output;
};

inline AlgebroidCurve curve_from_spec(const CurveSpec& spec, const CommandOptions& opt) {
    std::optional<Exp> box = opt.box ? opt.box : spec.box;
    return from_parametrization(generator_elements(spec), box);
}

// `semigroup`: value semigroup, conductor, symmetry and allied invariants of
// the input curve, with no chain computation.
inline CommandResult cmd_semigroup(const CurveSpec& spec, const CommandOptions& opt) {
    AlgebroidCurve a = curve_from_spec(spec, opt);
    ChainStep st = make_chain_step(a, 0, 0);
    SingularityType type = recognize(a);
    if (opt.structured) {
        CurveReport r;
        r.name = spec.name;
        r.n = 0;
        r.steps.push_back(step_report(st, type));
        return {0, to_json_string(r)};
    }
    std::ostringstream out;
    out << "curve " << spec.name << "\n";
    out << "type=" << type.label() << "  s=" << a.branch_count() << "\n";
    out << "gamma=" << detail::point_str(a.gamma()) << "  tau=" << detail::point_str(a.semigroup.tau())
        << "  delta=" << st.delta << "\n";
    out << "embdim=" << st.embedding_dim << "  mult=" << detail::point_str(st.multiplicity) << "\n";
    out << "symmetric=" << (st.symmetric ? "yes" : "no") << "  gorenstein=" << (st.gorenstein ? "yes" : "no")
        << "\n";
    out << "window:";
    for (const auto& p : a.semigroup.window()) out << " " << detail::point_str(p);
    out << "\n";
    return {0, out.str()};
}

// `normalize`: run the endomorphism chain to the normalization and report
// every step.
inline CommandResult cmd_normalize(const CurveSpec& spec, const CommandOptions& opt) {
    AlgebroidCurve a = curve_from_spec(spec, opt);
    ChainReport chain = gr_chain(a);
    std::vector<SingularityType> types = annotate(chain);
    CurveReport r = chain_report(spec.name, chain, types);
    if (opt.structured) return {0, to_json_string(r)};
    return {0, render_text(r)};
}

// `diagram`: staircase pictures of the semigroups along the chain.
inline CommandResult cmd_diagram(const CurveSpec& spec, const CommandOptions& opt,
                                 std::optional<long> only_step = std::nullopt, bool svg = false) {
    AlgebroidCurve a = curve_from_spec(spec, opt);
    ChainReport chain = gr_chain(a);
    if (only_step && (*only_step < 0 || *only_step >= static_cast<long>(chain.steps.size())))
        throw Error("step " + std::to_string(*only_step) + " out of range; the chain has " +
                    std::to_string(chain.steps.size()) + " steps");
    std::vector<SingularityType> types = annotate(chain);
    if (svg) return {0, render_chain_svg(spec.name, chain, types)};
    std::string text = render_chain_diagram(spec.name, chain, types, only_step);
    if (opt.structured) {
        nlohmann::json j;
        j["schema"] = "grnorm.diagram/1";
        j["name"] = spec.name;
        j["n"] = chain.n();
        j["text"] = text;
        return {0, j.dump(2) + "\n"};
    }
    return {0, text};
}

namespace detail {

// Parse "7" or "4..12" into an inclusive range.
inline std::pair<long, long> parse_index_range(const std::string& text) {
    auto parse_long = [&](const std::string& v) {
        std::size_t idx = 0;
        long x = 0;
        try {
            x = std::stol(v, &idx);
        } catch (...) {
            idx = std::string::npos;
        }
        if (v.empty() || idx != v.size()) throw Error("bad index '" + v + "' in range '" + text + "'");
        return x;
    };
    auto dots = text.find("..");
    long lo, hi;
    if (dots == std::string::npos) {
        lo = hi = parse_long(text);
    } else {
        lo = parse_long(text.substr(0, dots));
        hi = parse_long(text.substr(dots + 2));
    }
    if (lo > hi) throw Error("empty range '" + text + "'");
    return {lo, hi};
}

// Intersect a requested range with the valid indices of one family.
inline std::vector<SingularityType> ade_targets(const std::string& type_sel, long lo, long hi) {
    std::vector<SingularityType> targets;
    auto add = [&](TypeKind kind, long min_n, long max_n) {
        for (long n = std::max(lo, min_n); n <= std::min(hi, max_n); ++n) targets.push_back({kind, n, {}, {}});
    };
    if (type_sel == "A" || type_sel == "all") add(TypeKind::A, 1, hi);
    if (type_sel == "D" || type_sel == "all") add(TypeKind::D, 4, hi);
    if (type_sel == "E" || type_sel == "all") add(TypeKind::E, 6, 8);
    if (type_sel != "A" && type_sel != "D" && type_sel != "E" && type_sel != "all")
        throw Error("unknown type '" + type_sel + "'; expected A, D, E or all");
    if (targets.empty())
        throw Error("no valid indices for type " + type_sel + " in " + std::to_string(lo) + ".." +
                    std::to_string(hi) + " (A needs n>=1, D needs n>=4, E needs 6<=n<=8)");
    return targets;
}

} // namespace detail

// `verify-ade`: certify the normalization chains of the requested classes
// against their closed-form descriptions. Exit code 1 when any check fails.
inline CommandResult cmd_verify_ade(const std::string& type_sel, const std::string& range,
                                    const CommandOptions& opt) {
    auto [lo, hi] = detail::parse_index_range(range);
    std::vector<SingularityType> targets = detail::ade_targets(type_sel, lo, hi);

    std::vector<AdeVerification> results(targets.size());
    long jobs = std::max<long>(1, std::min<long>(opt.jobs, static_cast<long>(targets.size())));
    if (jobs == 1) {
        for (std::size_t i = 0; i < targets.size(); ++i) results[i] = verify_ade(targets[i]);
    } else {
        ade_catalog(); // build once before the workers race to it
        std::vector<std::thread> pool;
        for (long w = 0; w < jobs; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < targets.size(); i += jobs) results[i] = verify_ade(targets[i]);
            });
        for (auto& th : pool) th.join();
    }

    bool all_pass = true;
    for (const auto& res : results) all_pass = all_pass && res.all_pass;

    if (opt.structured) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& res : results) {
            nlohmann::json checks = nlohmann::json::array();
            for (const auto& c : res.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            arr.push_back({{"type", res.type.label()},
                           {"n_expected", res.n_expected},
                           {"n_got", res.n_got},
                           {"pass", res.all_pass},
                           {"checks", checks}});
        }
        nlohmann::json j{{"schema", "grnorm.verify/1"}, {"pass", all_pass}, {"results", arr}};
        return {all_pass ? 0 : 1, j.dump(2) + "\n"};
    }

    std::ostringstream out;
    long passed = 0;
    for (const auto& res : results) {
        out << "verify " << res.type.label() << ": " << (res.all_pass ? "pass" : "FAIL") << "  (n="
            << res.n_got << ")\n";
        if (res.all_pass)
            ++passed;
        else
            for (const auto& c : res.checks)
                if (!c.pass) out << "  " << c.name << ": " << c.detail << "\n";
    }
    out << "summary: " << passed << "/" << results.size() << " pass\n";
    return {all_pass ? 0 : 1, out.str()};
}

} // namespace grnorm

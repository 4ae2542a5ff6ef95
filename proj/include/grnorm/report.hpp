#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ade.hpp"

namespace grnorm {

inline constexpr const char* kReportSchema = "grnorm.report/1";

// Serializable summary of one chain step.
struct StepReport {
    long index = 0;
    std::string type;
    long branches = 0;
    Point gamma;
    Point tau;
    long delta = 0;
    long dim_over_prev = 0;
    long embedding_dim = 0;
    std::vector<Exp> multiplicity;
    bool symmetric = false;
    bool gorenstein = false;
    std::vector<std::vector<long>> blocks;
    std::vector<Point> window;

    bool operator==(const StepReport&) const = default;
};

// One named verification outcome.
struct CheckReport {
    std::string name;
    bool pass = false;
    std::string detail;

    bool operator==(const CheckReport&) const = default;
};

// Full structured result of a CLI run on one curve.
struct CurveReport {
    std::string schema = kReportSchema;
    std::string name;
    long n = 0;
    std::vector<StepReport> steps;
    std::vector<CheckReport> checks;

    bool operator==(const CurveReport&) const = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(StepReport, index, type, branches, gamma, tau, delta, dim_over_prev,
                                   embedding_dim, multiplicity, symmetric, gorenstein, blocks, window)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CheckReport, name, pass, detail)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CurveReport, schema, name, n, steps, checks)

inline StepReport step_report(const ChainStep& st, const SingularityType& type) {
    StepReport r;
    r.index = st.index;
    r.type = type.label();
    r.branches = st.ring.branch_count();
    r.gamma = st.ring.gamma();
    r.tau = st.ring.semigroup.tau();
    r.delta = st.delta;
    r.dim_over_prev = st.dim_over_prev;
    r.embedding_dim = st.embedding_dim;
    r.multiplicity = st.multiplicity;
    r.symmetric = st.symmetric;
    r.gorenstein = st.gorenstein;
    r.blocks = st.blocks;
    r.window.assign(st.ring.semigroup.window().begin(), st.ring.semigroup.window().end());
    return r;
}

inline CurveReport chain_report(const std::string& name, const ChainReport& chain,
                                const std::vector<SingularityType>& types) {
    CurveReport r;
    r.name = name;
    r.n = chain.n();
    for (std::size_t i = 0; i < chain.steps.size(); ++i) r.steps.push_back(step_report(chain.steps[i], types.at(i)));
    return r;
}

inline std::string render_text(const CurveReport& r) {
    std::ostringstream out;
    out << "curve " << r.name << "  n=" << r.n << "\n";
    for (const StepReport& st : r.steps) {
        out << "  step " << st.index << ": type=" << st.type << "  s=" << st.branches << "  gamma=";
        out << detail::point_str(st.gamma) << "  tau=" << detail::point_str(st.tau);
        out << "  delta=" << st.delta;
        if (st.index > 0) out << "  dim/prev=" << st.dim_over_prev;
        out << "  embdim=" << st.embedding_dim << "  mult=" << detail::point_str(st.multiplicity);
        out << "  gorenstein=" << (st.gorenstein ? "yes" : "no") << "\n";
    }
    for (const CheckReport& c : r.checks)
        out << "  check " << c.name << ": " << (c.pass ? "pass" : "FAIL")
            << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    return out.str();
}

inline std::string to_json_string(const CurveReport& r) {
    nlohmann::json j = r;
    return j.dump(2) + "\n";
}

inline CurveReport report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    return j.get<CurveReport>();
}

} // namespace grnorm

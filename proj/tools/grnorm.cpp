#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <grnorm/grnorm.hpp>

namespace {

grnorm::CurveSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw grnorm::Error("cannot open input file '" + path + "'");
    return grnorm::parse_curve_spec(in);
}

void emit(const grnorm::CommandResult& res, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << res.output;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw grnorm::Error("cannot open output file '" + out_path + "'");
    out << res.output;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"normalization chains of algebroid curves from branch parametrizations"};
    app.require_subcommand(1);

    std::string input, out_path, format = "text";
    grnorm::CommandOptions opt;
    long box_flag = 0;

    auto add_common = [&](CLI::App* cmd, bool takes_input) {
        if (takes_input) cmd->add_option("-i,--input", input, "curve description file")->required();
        if (takes_input) cmd->add_option("-b,--box", box_flag, "override the provisional truncation box");
        cmd->add_option("-f,--format", format, "output format")->check(CLI::IsMember({"text", "structured"}));
        cmd->add_option("-o,--out", out_path, "write output to a file instead of stdout");
    };

    CLI::App* semigroup = app.add_subcommand("semigroup", "value semigroup, conductor and symmetry of a curve");
    add_common(semigroup, true);

    CLI::App* normalize = app.add_subcommand("normalize", "run the normalization chain and report every step");
    add_common(normalize, true);

    CLI::App* diagram = app.add_subcommand("diagram", "staircase diagrams of the semigroups along the chain");
    add_common(diagram, true);
    long step_flag = -1;
    bool svg = false;
    diagram->add_option("-s,--step", step_flag, "render only this chain step");
    diagram->add_flag("--svg", svg, "emit SVG instead of text");

    CLI::App* verify = app.add_subcommand("verify-ade", "certify chains of the classified singularities");
    std::string type_sel = "all", range = "1..8";
    verify->add_option("-t,--type", type_sel, "family to verify")->check(CLI::IsMember({"A", "D", "E", "all"}));
    verify->add_option("-n", range, "index or inclusive range, e.g. 7 or 4..12");
    verify->add_option("-j,--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    add_common(verify, false);

    CLI11_PARSE(app, argc, argv);

    try {
        opt.structured = format == "structured";
        if (box_flag != 0) opt.box = box_flag;

        grnorm::CommandResult res;
        if (semigroup->parsed())
            res = grnorm::cmd_semigroup(load_spec(input), opt);
        else if (normalize->parsed())
            res = grnorm::cmd_normalize(load_spec(input), opt);
        else if (diagram->parsed())
            res = grnorm::cmd_diagram(load_spec(input), opt,
                                      step_flag >= 0 ? std::optional<long>(step_flag) : std::nullopt, svg);
        else
            res = grnorm::cmd_verify_ade(type_sel, range, opt);

        emit(res, out_path);
        return res.exit_code;
    } catch (const grnorm::InternalCheckError& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return 1;
    } catch (const grnorm::SpecParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const grnorm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

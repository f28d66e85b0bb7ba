#include "curvedim/errors.hpp"
#include "curvedim/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using curvedim::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitUnresolved = 3;
constexpr int kExitUnclassified = 4;
constexpr int kExitUnsupportedGenus = 5;
constexpr int kExitTolerance = 6;

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw curvedim::ParseError("cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw curvedim::ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return doc;
}

void emit(const ordered_json& rep, const std::string& out_path) {
    std::string text = rep.dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw curvedim::Error("cannot write " + out_path);
        out << text;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Singularity invariants, divisors and the Bergman-space dichotomy for algebraic curves"};
    app.require_subcommand(1);

    std::string curve_path, openset_path, config_path, out_path;
    bool exact = false, bounds_only = false;

    CLI::App* analyze = app.add_subcommand("analyze", "invariants and divisors of a curve");
    analyze->add_option("--curve", curve_path, "curve description file")->required();
    analyze->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* decide = app.add_subcommand("decide", "Bergman-space dichotomy for an open subset");
    decide->add_option("--curve", curve_path, "curve description file")->required();
    decide->add_option("--openset", openset_path, "open-set description file")->required();
    decide->add_option("--out", out_path, "output file (default stdout)");
    decide->add_flag("--exact", exact, "fail unless the dimension is exact");
    decide->add_flag("--bounds-only", bounds_only, "report Riemann-Roch bounds only");

    CLI::App* l2delta = app.add_subcommand("l2delta", "L^2 delta invariant of an open subset");
    l2delta->add_option("--curve", curve_path, "curve description file")->required();
    l2delta->add_option("--openset", openset_path, "open-set description file")->required();
    l2delta->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "numeric verification battery");
    verify->add_option("--config", config_path, "quadrature configuration file");
    verify->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    if (analyze->parsed()) {
        curvedim::CurveModel model = curvedim::load_curve(read_json_file(curve_path));
        emit(curvedim::report_analyze(model), out_path);
        return kExitOk;
    }
    if (decide->parsed()) {
        curvedim::CurveModel model = curvedim::load_curve(read_json_file(curve_path));
        curvedim::OpenSetSpec spec = curvedim::load_openset(read_json_file(openset_path));
        curvedim::DecideOptions opts;
        opts.require_exact = exact;
        opts.bounds_only = bounds_only;
        curvedim::DichotomyReport rep = curvedim::decide(model, spec, opts);
        emit(curvedim::report_decide(model, spec, rep), out_path);
        return kExitOk;
    }
    if (l2delta->parsed()) {
        curvedim::CurveModel model = curvedim::load_curve(read_json_file(curve_path));
        curvedim::OpenSetSpec spec = curvedim::load_openset(read_json_file(openset_path));
        curvedim::L2DeltaResult res = curvedim::l2_delta(model, spec);
        emit(curvedim::report_l2delta(model, spec, res), out_path);
        return kExitOk;
    }
    if (verify->parsed()) {
        curvedim::QuadratureConfig cfg;
        if (!config_path.empty()) cfg = curvedim::load_config(read_json_file(config_path));
        curvedim::VerifySummary summary = curvedim::run_verify(cfg);
        emit(curvedim::report_verify(cfg, summary), out_path);
        return summary.all_passed() ? kExitOk : kExitTolerance;
    }
    return kExitParse;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const curvedim::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const curvedim::NotSquareFree& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const curvedim::UnresolvedLocus& e) {
        std::cerr << "error: " << e.what() << "\nhint: supply the curve in parametrized mode\n";
        return kExitUnresolved;
    } catch (const curvedim::IrrationalCoefficients& e) {
        std::cerr << "error: " << e.what() << "\nhint: supply the curve in parametrized mode\n";
        return kExitUnresolved;
    } catch (const curvedim::SymbolicDataInsufficient& e) {
        std::cerr << "error: " << e.what() << "\nhint: symbolic branches support order-based invariants only\n";
        return kExitUnresolved;
    } catch (const curvedim::UnclassifiedPoint& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnclassified;
    } catch (const curvedim::UnsupportedGenus& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupportedGenus;
    } catch (const curvedim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

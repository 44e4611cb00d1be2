// Batch front-end over the JSON interchange formats. Exit codes: 0 on
// success or a passing verification, 1 on a failing verification, 2 on
// usage errors (including violated preconditions).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "achr/bounds.hpp"
#include "achr/constructions.hpp"
#include "achr/gf.hpp"
#include "achr/json_io.hpp"
#include "achr/plane.hpp"
#include "achr/solver.hpp"

namespace {

struct Options {
    std::string output;
    bool verbose = false;
};

void emit(const nlohmann::json& j, const Options& opt) {
    if (opt.output.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(opt.output);
        if (!out) throw std::runtime_error("cannot open " + opt.output);
        out << j.dump(2) << '\n';
    }
}

nlohmann::json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return nlohmann::json::parse(in);
}

void note(const Options& opt, const std::string& message) {
    if (opt.verbose) std::cerr << message << '\n';
}

std::optional<std::chrono::milliseconds> budget_from(double seconds) {
    if (seconds <= 0) return std::nullopt;
    return std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colouring-matrix toolkit for products of complete graphs"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("-o,--output", opt.output, "Write the JSON result to a file");
    app.add_flag("-v,--verbose", opt.verbose, "Human-readable summary on stderr");

    long long arg_r = 0, arg_p = 0, arg_q = 0;
    int arg_s = 0, arg_t = 0;
    std::string arg_file, arg_mode = "line";
    bool arg_witness = false;
    double arg_budget = -1;

    auto* cmd_plane = app.add_subcommand("plane", "Construct the plane of a prime-power order");
    cmd_plane->add_option("r", arg_r, "plane order")->required();

    auto* cmd_vplane = app.add_subcommand("verify-plane", "Check the plane axioms on a structure");
    cmd_vplane->add_option("file", arg_file, "plane JSON file")->required();

    auto* cmd_construct = app.add_subcommand(
        "construct", "Build the plane-based colouring matrix, plus t extensions");
    cmd_construct->add_option("r", arg_r, "plane order")->required();
    cmd_construct->add_option("s", arg_s, "shift count")->required();
    cmd_construct->add_option("t", arg_t, "extra colours, in [0, r]");

    auto* cmd_verify = app.add_subcommand("verify", "Verify a colouring matrix");
    cmd_verify->add_option("file", arg_file, "matrix JSON file")->required();
    cmd_verify->add_option("--mode", arg_mode, "line or row")
        ->check(CLI::IsMember({"line", "row"}));

    auto* cmd_bounds = app.add_subcommand("bounds", "Colour-count bounds for (r, s, t)");
    cmd_bounds->add_option("r", arg_r, "plane order")->required();
    cmd_bounds->add_option("s", arg_s, "shift count, >= r^3+1")->required();
    cmd_bounds->add_option("t", arg_t, "extra colours, in [0, r]")->required();
    cmd_bounds->add_flag("--witness", arg_witness, "attach the lower-bound matrix");

    auto* cmd_known = app.add_subcommand("known", "Known exact value for small row counts");
    cmd_known->add_option("p", arg_p, "rows")->required();
    cmd_known->add_option("q", arg_q, "cols")->required();

    auto* cmd_exact = app.add_subcommand("exact", "Exact search for the maximum colour count");
    cmd_exact->add_option("p", arg_p, "rows")->required();
    cmd_exact->add_option("q", arg_q, "cols")->required();
    cmd_exact->add_option("--budget", arg_budget,
                          "time budget in seconds (default ACHR_BUDGET_SECS, 0 = none)");

    auto* cmd_ratio = app.add_subcommand("ratio", "Asymptotic colours-per-column ratio");
    cmd_ratio->add_option("r", arg_r, "plane order")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_plane->parsed()) {
            const auto field = achr::Field::create(arg_r);
            const auto plane = achr::plane_construct(field);
            note(opt, "plane of order " + std::to_string(arg_r) + ": " +
                          std::to_string(plane.point_count()) + " points, " +
                          std::to_string(plane.line_count()) + " lines");
            emit(achr::plane_to_json(plane), opt);
        } else if (cmd_vplane->parsed()) {
            const auto plane = achr::plane_from_json(load(arg_file));
            const auto report = achr::plane_verify(plane);
            emit(achr::plane_report_to_json(plane, report), opt);
            note(opt, std::string("plane verification: ") +
                          (report.all_pass() ? "pass" : "fail"));
            return report.all_pass() ? 0 : 1;
        } else if (cmd_construct->parsed()) {
            const auto m = achr::build_colouring(arg_r, arg_s, arg_t);
            note(opt, std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                          " matrix, " +
                          std::to_string(achr::verify_matrix(m, achr::Mode::Row).colour_count) +
                          " colours");
            emit(achr::matrix_to_json(m), opt);
        } else if (cmd_verify->parsed()) {
            const auto m = achr::matrix_from_json(load(arg_file));
            const auto report = achr::verify_matrix(
                m, arg_mode == "row" ? achr::Mode::Row : achr::Mode::Line);
            emit(achr::matrix_report_to_json(report), opt);
            note(opt, "matrix verification (" + arg_mode + " mode): " +
                          (report.all_pass() ? "pass" : "fail") + ", " +
                          std::to_string(report.colour_count) + " colours");
            return report.all_pass() ? 0 : 1;
        } else if (cmd_bounds->parsed()) {
            const auto report = achr::theorem4_bounds(arg_r, arg_s, arg_t, arg_witness);
            note(opt, "bounds [" + std::to_string(report.lower.value) + ", " +
                          std::to_string(report.upper.value) + "]");
            emit(achr::bounds_report_to_json(report), opt);
        } else if (cmd_known->parsed()) {
            const auto value = achr::known_value(arg_p, arg_q);
            nlohmann::json j{{"p", arg_p}, {"q", arg_q}, {"value", nullptr}};
            if (value) j["value"] = *value;
            emit(j, opt);
        } else if (cmd_exact->parsed()) {
            if (arg_budget < 0) {
                if (const char* env = std::getenv("ACHR_BUDGET_SECS")) {
                    arg_budget = std::atof(env);
                }
            }
            const auto result =
                achr::achromatic_exact(static_cast<int>(arg_p), static_cast<int>(arg_q),
                                       budget_from(arg_budget),
                                       opt.verbose ? &std::cerr : nullptr);
            note(opt, "exact value " + std::to_string(result.value) +
                          (result.completed ? "" : " (budget hit, lower bound only)"));
            emit(achr::exact_result_to_json(static_cast<int>(arg_p),
                                            static_cast<int>(arg_q), result),
                 opt);
        } else if (cmd_ratio->parsed()) {
            const auto ratio = achr::asymptotic_ratio(arg_r);
            nlohmann::json table = nlohmann::json::array();
            int p = 1;
            for (const auto& entry : achr::limit_ratio_table()) {
                table.push_back({{"p", p++}, {"num", entry.num}, {"den", entry.den}});
            }
            emit({{"r", arg_r},
                  {"num", ratio.num},
                  {"den", ratio.den},
                  {"display", ratio.str()},
                  {"table", table}},
                 opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

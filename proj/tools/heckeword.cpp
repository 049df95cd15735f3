// Command-line driver: runs named verification suites over the Hecke-algebra
// machinery and writes deterministic JSON (and optional CSV) reports.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hecke/suites.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadField = 3;
constexpr int kExitGuard = 4;

struct Output {
    std::string json_path;
    std::string csv_path;
    bool no_duration = false;
};

int emit(const hecke::SuiteReport& rep, const Output& out) {
    hecke::Json j = rep.to_json(!out.no_duration);
    std::string text = j.dump(2) + "\n";
    if (out.json_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out.json_path);
        f << text;
    }
    if (!out.csv_path.empty()) {
        std::ofstream f(out.csv_path);
        f << rep.to_csv();
    }
    return rep.all_pass() ? 0 : kExitFail;
}

const hecke::ScalarField* parse_field_or_exit(const std::string& desc) {
    try {
        return hecke::ScalarField::parse(desc);
    } catch (const std::exception& e) {
        std::cerr << "bad field descriptor: " << e.what() << "\n";
        std::exit(kExitBadField);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification suites for the deformed complex of injective words"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--json-out", out.json_path, "write the JSON report to a file");
    app.add_option("--csv-out", out.csv_path, "write a CSV mirror of the check records");
    app.add_flag("--no-duration", out.no_duration, "omit the duration field from the report");

    bool guard_override = false;
    app.add_flag("--guard-override", guard_override, "lift the resource guards");

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    int vn = 3;
    std::string vfield;
    verify->add_option("suite", suite, "coxeter | hecke | d-complex | injective-words")
        ->required();
    verify->add_option("--n", vn, "rank")->required();
    verify->add_option("--field", vfield,
                       "field descriptor (rational:q=3/2 | gf:p=2,q=1 | cyclotomic:l=3 | generic)");

    auto* tor = app.add_subcommand("tor", "dimensions of the trivial-coefficient homology");
    auto* ext = app.add_subcommand("ext", "dimensions of the trivial-coefficient cohomology");
    auto* stab = app.add_subcommand("stability", "stabilization maps and the stable range");
    int tn = 2, tdmax = 3;
    std::string tfield = "gf:p=2,q=1";
    for (auto* cmd : {tor, ext, stab}) {
        cmd->add_option("--n", tn, "rank")->required();
        cmd->add_option("--field", tfield, "field descriptor")->required();
        cmd->add_option("--dmax", tdmax, "top homological degree");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            if (suite == "coxeter") return emit(hecke::run_coxeter_suite(vn), out);
            if (suite == "hecke") {
                const auto* f = parse_field_or_exit(vfield.empty() ? "generic" : vfield);
                return emit(hecke::run_hecke_suite(vn, f), out);
            }
            if (suite == "d-complex") {
                const auto* f = parse_field_or_exit(vfield.empty() ? "generic" : vfield);
                return emit(hecke::run_d_complex_suite(vn, f, guard_override), out);
            }
            if (suite == "injective-words") {
                const auto* f = parse_field_or_exit(vfield.empty() ? "rational:q=1" : vfield);
                return emit(hecke::run_injective_words_suite(vn, f), out);
            }
            std::cerr << "unknown suite: " << suite << "\n";
            return kExitUsage;
        }
        if (tor->parsed())
            return emit(hecke::run_tor_suite(tn, parse_field_or_exit(tfield), tdmax, guard_override),
                        out);
        if (ext->parsed())
            return emit(hecke::run_ext_suite(tn, parse_field_or_exit(tfield), tdmax, guard_override),
                        out);
        if (stab->parsed())
            return emit(
                hecke::run_stability_suite(tn, parse_field_or_exit(tfield), tdmax, guard_override),
                out);
    } catch (const hecke::GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

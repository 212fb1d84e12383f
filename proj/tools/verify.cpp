#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qreg/errors.hpp"
#include "qreg/report.hpp"
#include "qreg/series.hpp"
#include "qreg/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qreg::InvalidConfig("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

qreg::Quaternion parse_point(const std::string& text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        if (!doc.is_array() || doc.size() != 4) throw qreg::ParseError("");
        return {doc[0].get<double>(), doc[1].get<double>(), doc[2].get<double>(),
                doc[3].get<double>()};
    } catch (...) {
        throw qreg::ParseError("point must be a JSON array [t,x,y,z]: " + text);
    }
}

int cmd_run(const std::string& config_path, const std::vector<std::string>& suites,
            std::optional<std::uint64_t> seed, std::optional<int> order,
            std::optional<std::string> backend, std::optional<std::string> report_path,
            std::optional<std::string> format, bool parallel) {
    qreg::SuiteConfig config;
    if (!config_path.empty()) config = qreg::SuiteConfig::from_json(read_file(config_path));
    // flags override config fields
    if (!suites.empty()) config.suites = suites;
    if (seed) config.seed = *seed;
    if (order) config.order = *order;
    if (backend) config.backend = *backend;
    if (report_path) config.report_path = *report_path;
    if (format) config.format = *format;
    if (parallel) config.parallel = true;
    if (const char* env = std::getenv("VERIFY_REPORT")) config.report_path = env;
    config.validate();

    const qreg::VerificationReport report = qreg::run_suites(config);
    const std::string rendered = qreg::emit_report(report, config.format);
    if (config.report_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(config.report_path, std::ios::binary);
        if (!out) throw qreg::InvalidConfig("cannot write " + config.report_path);
        out << rendered;
    }
    return report.overall_pass ? kExitPass : kExitCheckFailure;
}

void write_series(const qreg::QSeries& s, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << qreg::to_json(s) << '\n';
    } else {
        qreg::save_series(s, out_path);
    }
}

void print_anchors() {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& [name, anchor] : qreg::anchor_table()) doc[name] = anchor;
    std::cout << doc.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification harness for the regular product of "
                 "Cullen-regular quaternionic functions"};
    app.require_subcommand(1);

    // verify run
    auto* run = app.add_subcommand("run", "Run verification suites and emit a report");
    std::string config_path;
    std::vector<std::string> suites;
    std::optional<std::uint64_t> seed;
    std::optional<int> order;
    std::optional<std::string> backend, report_path, format;
    bool parallel = false;
    run->add_option("--config", config_path, "JSON config file");
    run->add_option("--suite", suites, "Suite to run (repeatable; default: all)");
    run->add_option("--seed", seed, "RNG seed");
    run->add_option("--order", order, "Series truncation order");
    run->add_option("--backend", backend, "Derivative backend: analytic or fd");
    run->add_option("--report", report_path, "Report output path (default: stdout)");
    run->add_option("--format", format, "Report format: json or text");
    run->add_flag("--parallel", parallel, "Run suites concurrently");

    // verify series <op>
    auto* series = app.add_subcommand("series", "Operate on series files");
    series->require_subcommand(1);
    std::string in_a, in_b, out_path, point_text;
    bool closed = false;

    auto* star = series->add_subcommand("star", "Regular product of two series files");
    star->add_option("a", in_a, "left series file")->required();
    star->add_option("b", in_b, "right series file")->required();
    star->add_option("-o,--output", out_path, "output series file (default: stdout)");

    auto* conj = series->add_subcommand("conj", "Regular conjugate of a series file");
    conj->add_option("a", in_a, "series file")->required();
    conj->add_option("-o,--output", out_path, "output series file (default: stdout)");

    auto* symm = series->add_subcommand("symm", "Symmetrization f^s of a series file");
    symm->add_option("a", in_a, "series file")->required();
    symm->add_option("-o,--output", out_path, "output series file (default: stdout)");

    auto* recip = series->add_subcommand("recip", "Regular reciprocal of a series file");
    recip->add_option("a", in_a, "series file")->required();
    recip->add_option("-o,--output", out_path, "output series file (default: stdout)");

    auto* eval = series->add_subcommand("eval", "Evaluate a series (or a closed-formula "
                                                "product) at a point");
    eval->add_option("a", in_a, "series file")->required();
    eval->add_option("-p,--point", point_text, "point as [t,x,y,z]")->required();
    eval->add_option("--closed-with", in_b,
                     "second series file; evaluates the closed formula a*b(p)");
    eval->add_flag("--closed", closed, "alias; requires --closed-with");

    auto* anchors = app.add_subcommand("anchors", "Print the check-to-anchor table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*run) {
            return cmd_run(config_path, suites, seed, order, backend, report_path, format,
                           parallel);
        }
        if (*anchors) {
            print_anchors();
            return kExitPass;
        }
        if (*star) {
            write_series(qreg::star_mul(qreg::load_series(in_a), qreg::load_series(in_b)),
                         out_path);
        } else if (*conj) {
            write_series(qreg::regular_conjugate(qreg::load_series(in_a)), out_path);
        } else if (*symm) {
            write_series(qreg::symmetrization(qreg::load_series(in_a)).as_qseries(), out_path);
        } else if (*recip) {
            write_series(qreg::reciprocal(qreg::load_series(in_a)), out_path);
        } else if (*eval) {
            const qreg::QSeries a = qreg::load_series(in_a);
            const qreg::Quaternion p = parse_point(point_text);
            qreg::Quaternion value;
            if (!in_b.empty()) {
                value = qreg::closed_formula_eval(a, qreg::load_series(in_b), p);
            } else if (closed) {
                throw qreg::InvalidConfig("--closed requires --closed-with FILE");
            } else {
                value = qreg::evaluate(a, p);
            }
            std::cout << value << '\n';
        }
        return kExitPass;
    } catch (const qreg::UnknownSuite& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qreg::InvalidConfig& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qreg::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qreg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailure;
    }
}

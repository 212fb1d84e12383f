#include "qreg/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "qreg/errors.hpp"
#include "qreg/suites.hpp"

namespace qreg {

SuiteConfig SuiteConfig::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidConfig(std::string("config: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidConfig("config: expected a JSON object");
    SuiteConfig c;
    try {
        if (doc.contains("suites")) c.suites = doc["suites"].get<std::vector<std::string>>();
        if (doc.contains("seed")) c.seed = doc["seed"].get<std::uint64_t>();
        if (doc.contains("order")) c.order = doc["order"].get<int>();
        if (doc.contains("backend")) c.backend = doc["backend"].get<std::string>();
        if (doc.contains("fd_step")) c.fd_step = doc["fd_step"].get<double>();
        if (doc.contains("report")) c.report_path = doc["report"].get<std::string>();
        if (doc.contains("format")) c.format = doc["format"].get<std::string>();
        if (doc.contains("parallel")) c.parallel = doc["parallel"].get<bool>();
        if (doc.contains("grid")) {
            const auto& g = doc["grid"];
            const auto range = [&](const char* key, double& lo, double& hi) {
                if (g.contains(key)) {
                    lo = g[key][0].get<double>();
                    hi = g[key][1].get<double>();
                }
            };
            range("t", c.grid.t_min, c.grid.t_max);
            range("r", c.grid.r_min, c.grid.r_max);
            range("alpha", c.grid.alpha_min, c.grid.alpha_max);
            range("beta", c.grid.beta_min, c.grid.beta_max);
            if (g.contains("counts")) {
                c.grid.nt = g["counts"][0].get<int>();
                c.grid.nr = g["counts"][1].get<int>();
                c.grid.nalpha = g["counts"][2].get<int>();
                c.grid.nbeta = g["counts"][3].get<int>();
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidConfig(std::string("config: bad field: ") + e.what());
    }
    c.validate();
    return c;
}

void SuiteConfig::validate() const {
    const auto& known = registered_suites();
    for (const auto& s : suites) {
        if (std::find(known.begin(), known.end(), s) == known.end()) {
            throw UnknownSuite("unknown suite: " + s);
        }
    }
    if (backend != "analytic" && backend != "fd") {
        throw InvalidConfig("backend must be 'analytic' or 'fd'");
    }
    if (format != "json" && format != "text") {
        throw InvalidConfig("format must be 'json' or 'text'");
    }
    if (order < 0) throw InvalidConfig("order must be >= 0");
    if (!(fd_step > 0.0)) throw InvalidConfig("fd_step must be positive");
    if (grid.r_min < 0.05) throw InvalidConfig("grid r_min must be >= 0.05");
    if (grid.nt < 1 || grid.nr < 1 || grid.nalpha < 1 || grid.nbeta < 1) {
        throw InvalidConfig("grid counts must be >= 1");
    }
}

std::string emit_report(const VerificationReport& report, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["schema_version"] = 1;
        doc["seed"] = report.seed;
        doc["overall_pass"] = report.overall_pass;
        auto& suites = doc["suites"] = nlohmann::ordered_json::array();
        for (const auto& s : report.suites) {
            nlohmann::ordered_json rec;
            rec["suite"] = s.suite;
            auto& checks = rec["checks"] = nlohmann::ordered_json::array();
            for (const auto& c : s.checks) {
                nlohmann::ordered_json item;
                item["name"] = c.name;
                item["anchor"] = c.anchor;
                item["max_residual"] = c.max_residual;
                item["tolerance"] = c.tolerance;
                item["pass"] = c.pass;
                checks.push_back(std::move(item));
            }
            suites.push_back(std::move(rec));
        }
        return doc.dump(2) + "\n";
    }
    if (format != "text") throw InvalidConfig("emit_report: format must be 'json' or 'text'");
    std::ostringstream out;
    out << "seed " << report.seed << "\n";
    for (const auto& s : report.suites) {
        out << "suite " << s.suite << " (" << s.wall_time_ms << " ms)\n";
        for (const auto& c : s.checks) {
            out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  residual="
                << c.max_residual << " tol=" << c.tolerance << "  [" << c.anchor << "]\n";
        }
    }
    out << (report.overall_pass ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
    return out.str();
}

}  // namespace qreg

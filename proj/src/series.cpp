#include "qreg/series.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>

#include <json.hpp>

#include "qreg/errors.hpp"

namespace qreg {

QSeries::QSeries(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error("QSeries: empty coefficient list");
    }
    for (const auto& c : coeffs_) {
        if (!c.finite()) throw Error("QSeries: non-finite coefficient");
    }
}

QSeries QSeries::zero(int order) {
    return QSeries(std::vector<Quaternion>(static_cast<std::size_t>(order) + 1));
}

QSeries QSeries::one(int order) {
    auto s = zero(order);
    s.coeffs_[0] = kOne;
    return s;
}

QSeries QSeries::power(int n, int order, const Quaternion& a) {
    auto s = zero(order);
    if (n <= order) s.coeffs_[static_cast<std::size_t>(n)] = a;
    return s;
}

QSeries QSeries::truncated(int order) const {
    std::vector<Quaternion> c(static_cast<std::size_t>(order) + 1);
    const std::size_t keep = std::min(c.size(), coeffs_.size());
    std::copy_n(coeffs_.begin(), keep, c.begin());
    return QSeries(std::move(c));
}

QSeries QSeries::operator+(const QSeries& o) const {
    const int n = std::min(order(), o.order());
    std::vector<Quaternion> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = coeff(k) + o.coeff(k);
    return QSeries(std::move(c));
}

QSeries QSeries::operator-(const QSeries& o) const {
    const int n = std::min(order(), o.order());
    std::vector<Quaternion> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = coeff(k) - o.coeff(k);
    return QSeries(std::move(c));
}

RSeries::RSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw Error("RSeries: empty coefficient list");
    }
}

QSeries RSeries::as_qseries() const {
    std::vector<Quaternion> c(coeffs_.size());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) c[n] = Quaternion::real(coeffs_[n]);
    return QSeries(std::move(c));
}

QSeries star_mul(const QSeries& f, const QSeries& g) {
    const int n = std::min(f.order(), g.order());
    std::vector<Quaternion> c(static_cast<std::size_t>(n) + 1);
    for (int d = 0; d <= n; ++d) {
        Quaternion acc;
        for (int k = 0; k <= d; ++k) acc += f.coeff(k) * g.coeff(d - k);
        c[static_cast<std::size_t>(d)] = acc;
    }
    return QSeries(std::move(c));
}

Quaternion evaluate(const QSeries& f, const Quaternion& p) {
    Quaternion acc;
    Quaternion pw = kOne;
    for (int n = 0; n <= f.order(); ++n) {
        acc += pw * f.coeff(n);
        pw = pw * p;
    }
    return acc;
}

QSeries regular_conjugate(const QSeries& f) {
    std::vector<Quaternion> c(f.coeffs().size());
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = f.coeffs()[n].conj();
    return QSeries(std::move(c));
}

RSeries symmetrization(const QSeries& f) {
    const QSeries s = star_mul(f, regular_conjugate(f));
    std::vector<double> c(s.coeffs().size());
    for (std::size_t n = 0; n < c.size(); ++n) {
        const Quaternion& q = s.coeffs()[n];
        const double imag = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
        if (imag > 1e-9) {
            throw NotReal("symmetrization: coefficient has imaginary part " +
                          std::to_string(imag));
        }
        c[n] = q.t;
    }
    return RSeries(std::move(c));
}

RSeries rseries_inverse(const RSeries& s) {
    const double s0 = s.coeff(0);
    if (std::abs(s0) < kEpsUnit * kEpsUnit) {
        throw NotUnit("rseries_inverse: constant term too small");
    }
    std::vector<double> b(s.coeffs().size());
    b[0] = 1.0 / s0;
    for (int n = 1; n <= s.order(); ++n) {
        double acc = 0.0;
        for (int k = 1; k <= n; ++k) acc += s.coeff(k) * b[static_cast<std::size_t>(n - k)];
        b[static_cast<std::size_t>(n)] = -acc / s0;
    }
    return RSeries(std::move(b));
}

QSeries reciprocal(const QSeries& f, double eps_unit) {
    if (f.coeff(0).norm() < eps_unit) {
        throw NotUnit("reciprocal: |a_0| below eps_unit");
    }
    const RSeries inv_s = rseries_inverse(symmetrization(f));
    const QSeries fc = regular_conjugate(f);
    // Real series is central, so the star product is a scalar convolution.
    std::vector<Quaternion> c(fc.coeffs().size());
    for (int n = 0; n <= fc.order(); ++n) {
        Quaternion acc;
        for (int k = 0; k <= n; ++k) acc += inv_s.coeff(k) * fc.coeff(n - k);
        c[static_cast<std::size_t>(n)] = acc;
    }
    return QSeries(std::move(c));
}

Quaternion closed_formula_eval(const QSeries& f, const QSeries& g, const Quaternion& p,
                               double eps_zero) {
    const Quaternion fp = evaluate(f, p);
    if (fp.norm() < eps_zero) {
        throw NearZero("closed_formula_eval: |f(p)| below eps_zero");
    }
    const Quaternion conjugated = qinv(fp, eps_zero) * p * fp;
    return fp * evaluate(g, conjugated);
}

std::pair<double, double> slice_components(int n, double t, double r) {
    std::complex<double> w{1.0, 0.0};
    const std::complex<double> z{t, r};
    for (int k = 0; k < n; ++k) w *= z;
    return {w.real(), w.imag()};
}

std::string to_json(const QSeries& f) {
    nlohmann::ordered_json doc;
    doc["order"] = f.order();
    auto& coeffs = doc["coeffs"] = nlohmann::ordered_json::array();
    for (const auto& a : f.coeffs()) coeffs.push_back({a.t, a.x, a.y, a.z});
    return doc.dump();
}

QSeries series_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("series: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("order") || !doc.contains("coeffs") ||
        !doc["coeffs"].is_array()) {
        throw ParseError("series: expected {\"order\": N, \"coeffs\": [[t,x,y,z], ...]}");
    }
    const int order = doc["order"].get<int>();
    std::vector<Quaternion> c;
    for (const auto& item : doc["coeffs"]) {
        if (!item.is_array() || item.size() != 4) {
            throw ParseError("series: each coefficient must be a 4-element array");
        }
        c.push_back({item[0].get<double>(), item[1].get<double>(), item[2].get<double>(),
                     item[3].get<double>()});
    }
    if (static_cast<int>(c.size()) != order + 1) {
        throw ParseError("series: coeffs length must be order + 1");
    }
    return QSeries(std::move(c));
}

void save_series(const QSeries& f, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("save_series: cannot open " + path.string());
    out << to_json(f) << '\n';
}

QSeries load_series(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("load_series: cannot open " + path.string());
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return series_from_json(text);
}

}  // namespace qreg

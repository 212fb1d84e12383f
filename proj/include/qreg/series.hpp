#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "qreg/quaternion.hpp"

namespace qreg {

inline constexpr double kEpsUnit = 1e-6;
inline constexpr int kDefaultOrder = 16;

// Truncated right-coefficient power series f(p) = sum_{n<=N} p^n a_n.
// Coefficients sit on the right of the powers throughout; order N is the
// highest stored degree.
class QSeries {
public:
    QSeries() : coeffs_(1) {}
    explicit QSeries(std::vector<Quaternion> coeffs);

    static QSeries zero(int order);
    static QSeries one(int order);
    // p^n * a, truncated at `order`.
    static QSeries power(int n, int order, const Quaternion& a = kOne);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Quaternion& coeff(int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    const std::vector<Quaternion>& coeffs() const { return coeffs_; }

    // Same coefficients re-truncated (or zero-padded) to the given order.
    QSeries truncated(int order) const;

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    bool operator==(const QSeries&) const = default;

private:
    std::vector<Quaternion> coeffs_;
};

// Real-coefficient series; the shape of a symmetrization f^s.
class RSeries {
public:
    RSeries() : coeffs_(1) {}
    explicit RSeries(std::vector<double> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    double coeff(int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    QSeries as_qseries() const;

private:
    std::vector<double> coeffs_;
};

// Regular (star) product by coefficient convolution,
// c_n = sum_{k<=n} a_k b_{n-k}, quaternion products in that order.
// Inputs of unequal order are re-truncated to the smaller one.
QSeries star_mul(const QSeries& f, const QSeries& g);

// Direct evaluation, powers on the left, coefficients on the right.
Quaternion evaluate(const QSeries& f, const Quaternion& p);

// f^c: coefficient-wise quaternion conjugation.
QSeries regular_conjugate(const QSeries& f);

// f^s = f * f^c; real coefficients by construction. Throws NotReal if an
// imaginary part survives above 1e-9 (that would be an implementation bug).
RSeries symmetrization(const QSeries& f);

// Truncated inverse of a real series with nonzero constant term:
// b_0 = 1/s_0, b_n = -(1/s_0) sum_{k=1..n} s_k b_{n-k}.
RSeries rseries_inverse(const RSeries& s);

// f^{-*} = (1/f^s) * f^c. Throws NotUnit when |a_0| < eps_unit.
QSeries reciprocal(const QSeries& f, double eps_unit = kEpsUnit);

// The closed formula f*g(p) = f(p) g(f(p)^{-1} p f(p)).
Quaternion closed_formula_eval(const QSeries& f, const QSeries& g, const Quaternion& p,
                               double eps_zero = kEpsZero);

// (u_n, v_n) with p^n = u_n + iota v_n on the slice through p = t + r iota;
// the real and imaginary parts of the complex power (t + i r)^n.
std::pair<double, double> slice_components(int n, double t, double r);

// JSON file format: {"order": N, "coeffs": [[t,x,y,z], ...]}.
std::string to_json(const QSeries& f);
QSeries series_from_json(const std::string& text);
void save_series(const QSeries& f, const std::filesystem::path& path);
QSeries load_series(const std::filesystem::path& path);

}  // namespace qreg

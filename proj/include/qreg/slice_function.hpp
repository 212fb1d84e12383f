#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "qreg/cullen.hpp"
#include "qreg/quaternion.hpp"
#include "qreg/series.hpp"

namespace qreg {

inline constexpr double kDefaultFdStep = 1e-3;

// Point of the slice chart, p = t + r iota(alpha, beta).
struct SlicePoint {
    double t = 0.0;
    double r = 1.0;
    double alpha = 0.0;
    double beta = std::numbers::pi / 2;
};

inline Quaternion to_cartesian(const SlicePoint& x) {
    return Quaternion::real(x.t) + iota_of(x.alpha, x.beta) * x.r;
}

// Inverse chart; throws OnRealAxis off the chart and leaves beta in (0, pi).
SlicePoint to_spherical(const Quaternion& q);

enum class Axis { T, R, Alpha, Beta };

// Quaternion-valued field on the slice chart with a derivative backend.
//
// Analytic backend: the field is of the slice form A(t,r) + iota(alpha,beta) B(t,r)
// where A and B are linear combinations sum_n (u_n c_n + v_n d_n) of the real
// components u_n, v_n of (t + i r)^n with quaternion coefficients. Every
// series-backed function has this shape and all partials are closed-form.
//
// FD backend: second-order central differences of the raw evaluator with a
// fixed step per axis.
class SliceFunction {
public:
    using Evaluator = std::function<Quaternion(const SlicePoint&)>;

    // Coefficients of A(t,r) = sum_n (u_n(t,r) cu[n] + v_n(t,r) cv[n]).
    struct SliceForm {
        std::vector<Quaternion> cu;
        std::vector<Quaternion> cv;

        static SliceForm zero(int order);
        // Partial derivative of order (dt, dr), evaluated at (t, r).
        Quaternion deriv(double t, double r, int dt, int dr) const;
    };

    static SliceFunction from_series(const QSeries& s);
    static SliceFunction from_slice_form(SliceForm a, SliceForm b);
    static SliceFunction from_evaluator(Evaluator f, double step = kDefaultFdStep);
    static SliceFunction constant(const Quaternion& a);

    Quaternion operator()(const SlicePoint& x) const;
    Quaternion partial(Axis axis, const SlicePoint& x) const;
    Quaternion partial2(Axis a, Axis b, const SlicePoint& x) const;

    bool analytic() const { return analytic_.has_value(); }
    double step() const { return step_; }
    // Backing series when constructed via from_series, else nullptr.
    const QSeries* series() const { return series_ ? &*series_ : nullptr; }

    // The field iota(alpha,beta) * F, in the same backend.
    SliceFunction premultiplied_by_iota() const;

    // Componentwise quaternion conjugation of the field values; stays
    // analytic when the field has no iota part.
    SliceFunction conjugated() const;

    // Analytic backend only: the components A and B of F = A + iota B as
    // fields of their own, and raw (t,r)-partials of either component.
    SliceFunction component_a() const;
    SliceFunction component_b() const;
    Quaternion form_deriv(int component, int dt, int dr, double t, double r) const;

    // Evaluation through the Cartesian chart, for Cartesian differencing.
    Quaternion eval_cartesian(const Quaternion& p) const;

private:
    struct AnalyticForm {
        SliceForm a;  // F = a + iota * b
        SliceForm b;
    };

    SliceFunction() = default;

    std::optional<AnalyticForm> analytic_;
    std::optional<QSeries> series_;
    Evaluator eval_;
    double step_ = kDefaultFdStep;
};

// Box domain in the slice chart; excludes the real axis and the polar band.
struct SliceDomain {
    double t_min = -1.0, t_max = 1.0;
    double r_min = 0.2, r_max = 1.5;
    double alpha_min = 0.0, alpha_max = 2.0 * std::numbers::pi;  // half-open
    double beta_min = 0.3, beta_max = std::numbers::pi - 0.3;
    int nt = 6, nr = 6, nalpha = 8, nbeta = 6;

    bool contains(const SlicePoint& x) const;
    std::vector<SlicePoint> grid() const;
};

struct ResidualStats {
    double max_norm = 0.0;
    double mean_norm = 0.0;
    SlicePoint argmax;
    std::size_t count = 0;
};

// Max/mean of a pointwise residual norm over the domain grid; deterministic
// reduction in grid order.
ResidualStats sweep(const SliceDomain& domain,
                    const std::function<double(const SlicePoint&)>& residual_norm);

}  // namespace qreg

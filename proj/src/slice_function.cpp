#include "qreg/slice_function.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "qreg/errors.hpp"

namespace qreg {

SlicePoint to_spherical(const Quaternion& q) {
    const double r = q.imag_norm();
    if (r < kEpsAxis) {
        throw OnRealAxis("to_spherical: point on the real axis");
    }
    double alpha = std::atan2(q.y, q.x);
    if (alpha < 0.0) alpha += 2.0 * std::numbers::pi;
    const double beta = std::acos(std::clamp(q.z / r, -1.0, 1.0));
    return {q.t, r, alpha, beta};
}

SliceFunction::SliceForm SliceFunction::SliceForm::zero(int order) {
    SliceForm f;
    f.cu.assign(static_cast<std::size_t>(order) + 1, Quaternion{});
    f.cv.assign(static_cast<std::size_t>(order) + 1, Quaternion{});
    return f;
}

Quaternion SliceFunction::SliceForm::deriv(double t, double r, int dt, int dr) const {
    const int d = dt + dr;
    const std::complex<double> z{t, r};
    const std::complex<double> iu{0.0, 1.0};
    // i^dr, from d/dr (t+ir)^n = i n (t+ir)^{n-1}
    std::complex<double> rot{1.0, 0.0};
    for (int k = 0; k < dr; ++k) rot *= iu;

    const int order = static_cast<int>(cu.size()) - 1;
    Quaternion acc;
    for (int n = d; n <= order; ++n) {
        double fall = 1.0;
        for (int k = 0; k < d; ++k) fall *= static_cast<double>(n - k);
        std::complex<double> zp{1.0, 0.0};
        for (int k = 0; k < n - d; ++k) zp *= z;
        const std::complex<double> w = rot * fall * zp;
        acc += cu[static_cast<std::size_t>(n)] * w.real() +
               cv[static_cast<std::size_t>(n)] * w.imag();
    }
    return acc;
}

SliceFunction SliceFunction::from_series(const QSeries& s) {
    SliceFunction f;
    AnalyticForm form;
    form.a = SliceForm::zero(s.order());
    form.b = SliceForm::zero(s.order());
    for (int n = 0; n <= s.order(); ++n) {
        form.a.cu[static_cast<std::size_t>(n)] = s.coeff(n);  // u_n a_n
        form.b.cv[static_cast<std::size_t>(n)] = s.coeff(n);  // iota v_n a_n
    }
    f.analytic_ = std::move(form);
    f.series_ = s;
    return f;
}

SliceFunction SliceFunction::from_slice_form(SliceForm a, SliceForm b) {
    if (a.cu.size() != a.cv.size() || b.cu.size() != b.cv.size() || a.cu.size() != b.cu.size()) {
        throw Error("from_slice_form: mismatched coefficient lengths");
    }
    SliceFunction f;
    f.analytic_ = AnalyticForm{std::move(a), std::move(b)};
    return f;
}

SliceFunction SliceFunction::from_evaluator(Evaluator fn, double step) {
    if (!(step > 0.0)) throw Error("from_evaluator: step must be positive");
    SliceFunction f;
    f.eval_ = std::move(fn);
    f.step_ = step;
    return f;
}

SliceFunction SliceFunction::constant(const Quaternion& a) {
    auto form = SliceForm::zero(0);
    form.cu[0] = a;
    return from_slice_form(form, SliceForm::zero(0));
}

Quaternion SliceFunction::operator()(const SlicePoint& x) const {
    if (analytic_) {
        return analytic_->a.deriv(x.t, x.r, 0, 0) +
               iota_of(x.alpha, x.beta) * analytic_->b.deriv(x.t, x.r, 0, 0);
    }
    return eval_(x);
}

namespace {

SlicePoint shifted(SlicePoint x, Axis axis, double d) {
    switch (axis) {
        case Axis::T: x.t += d; break;
        case Axis::R: x.r += d; break;
        case Axis::Alpha: x.alpha += d; break;
        case Axis::Beta: x.beta += d; break;
    }
    return x;
}

}  // namespace

Quaternion SliceFunction::partial(Axis axis, const SlicePoint& x) const {
    if (analytic_) {
        switch (axis) {
            case Axis::T:
                return analytic_->a.deriv(x.t, x.r, 1, 0) +
                       iota_of(x.alpha, x.beta) * analytic_->b.deriv(x.t, x.r, 1, 0);
            case Axis::R:
                return analytic_->a.deriv(x.t, x.r, 0, 1) +
                       iota_of(x.alpha, x.beta) * analytic_->b.deriv(x.t, x.r, 0, 1);
            case Axis::Alpha:
                return iota_partial(x.alpha, x.beta, 1, 0) * analytic_->b.deriv(x.t, x.r, 0, 0);
            case Axis::Beta:
                return iota_partial(x.alpha, x.beta, 0, 1) * analytic_->b.deriv(x.t, x.r, 0, 0);
        }
    }
    const double h = step_;
    return (eval_(shifted(x, axis, h)) - eval_(shifted(x, axis, -h))) / (2.0 * h);
}

Quaternion SliceFunction::partial2(Axis a, Axis b, const SlicePoint& x) const {
    if (analytic_) {
        const auto tr_orders = [](Axis ax) -> std::pair<int, int> {
            if (ax == Axis::T) return {1, 0};
            if (ax == Axis::R) return {0, 1};
            return {0, 0};
        };
        const bool a_tr = (a == Axis::T || a == Axis::R);
        const bool b_tr = (b == Axis::T || b == Axis::R);
        if (a_tr && b_tr) {
            const auto [t1, r1] = tr_orders(a);
            const auto [t2, r2] = tr_orders(b);
            return analytic_->a.deriv(x.t, x.r, t1 + t2, r1 + r2) +
                   iota_of(x.alpha, x.beta) * analytic_->b.deriv(x.t, x.r, t1 + t2, r1 + r2);
        }
        if (!a_tr && !b_tr) {
            const int da = (a == Axis::Alpha ? 1 : 0) + (b == Axis::Alpha ? 1 : 0);
            const int db = (a == Axis::Beta ? 1 : 0) + (b == Axis::Beta ? 1 : 0);
            return iota_partial(x.alpha, x.beta, da, db) * analytic_->b.deriv(x.t, x.r, 0, 0);
        }
        const Axis tr = a_tr ? a : b;
        const Axis ang = a_tr ? b : a;
        const auto [dt, dr] = tr_orders(tr);
        const int da = ang == Axis::Alpha ? 1 : 0;
        const int db = ang == Axis::Beta ? 1 : 0;
        return iota_partial(x.alpha, x.beta, da, db) * analytic_->b.deriv(x.t, x.r, dt, dr);
    }
    const double h = step_;
    if (a == b) {
        return (eval_(shifted(x, a, h)) - 2.0 * eval_(x) + eval_(shifted(x, a, -h))) / (h * h);
    }
    const Quaternion pp = eval_(shifted(shifted(x, a, h), b, h));
    const Quaternion pm = eval_(shifted(shifted(x, a, h), b, -h));
    const Quaternion mp = eval_(shifted(shifted(x, a, -h), b, h));
    const Quaternion mm = eval_(shifted(shifted(x, a, -h), b, -h));
    return (pp - pm - mp + mm) / (4.0 * h * h);
}

SliceFunction SliceFunction::premultiplied_by_iota() const {
    if (analytic_) {
        // iota (A + iota B) = -B + iota A
        SliceForm neg_b = analytic_->b;
        for (auto& c : neg_b.cu) c = -c;
        for (auto& c : neg_b.cv) c = -c;
        return from_slice_form(std::move(neg_b), analytic_->a);
    }
    auto inner = eval_;
    return from_evaluator(
        [inner](const SlicePoint& x) { return iota_of(x.alpha, x.beta) * inner(x); }, step_);
}

SliceFunction SliceFunction::conjugated() const {
    if (analytic_) {
        const bool b_zero = std::all_of(analytic_->b.cu.begin(), analytic_->b.cu.end(),
                                        [](const Quaternion& q) { return q == Quaternion{}; }) &&
                            std::all_of(analytic_->b.cv.begin(), analytic_->b.cv.end(),
                                        [](const Quaternion& q) { return q == Quaternion{}; });
        if (b_zero) {
            SliceForm a = analytic_->a;
            for (auto& c : a.cu) c = c.conj();
            for (auto& c : a.cv) c = c.conj();
            return from_slice_form(std::move(a),
                                   SliceForm::zero(static_cast<int>(a.cu.size()) - 1));
        }
    }
    auto self = *this;
    return from_evaluator([self](const SlicePoint& x) { return self(x).conj(); }, step_);
}

SliceFunction SliceFunction::component_a() const {
    if (!analytic_) throw Error("component_a: not an analytic field");
    return from_slice_form(analytic_->a, SliceForm::zero(static_cast<int>(analytic_->a.cu.size()) - 1));
}

SliceFunction SliceFunction::component_b() const {
    if (!analytic_) throw Error("component_b: not an analytic field");
    return from_slice_form(analytic_->b, SliceForm::zero(static_cast<int>(analytic_->b.cu.size()) - 1));
}

Quaternion SliceFunction::form_deriv(int component, int dt, int dr, double t, double r) const {
    if (!analytic_) throw Error("form_deriv: not an analytic field");
    return (component == 0 ? analytic_->a : analytic_->b).deriv(t, r, dt, dr);
}

Quaternion SliceFunction::eval_cartesian(const Quaternion& p) const {
    return (*this)(to_spherical(p));
}

bool SliceDomain::contains(const SlicePoint& x) const {
    return x.t >= t_min && x.t <= t_max && x.r >= r_min && x.r <= r_max &&
           x.alpha >= alpha_min && x.alpha < alpha_max && x.beta >= beta_min &&
           x.beta <= beta_max;
}

std::vector<SlicePoint> SliceDomain::grid() const {
    const auto linspace = [](double lo, double hi, int n, bool closed) {
        std::vector<double> v;
        v.reserve(static_cast<std::size_t>(n));
        if (n == 1) {
            v.push_back(0.5 * (lo + hi));
            return v;
        }
        const double d = (hi - lo) / (closed ? n - 1 : n);
        for (int k = 0; k < n; ++k) v.push_back(lo + k * d);
        return v;
    };
    std::vector<SlicePoint> pts;
    pts.reserve(static_cast<std::size_t>(nt) * nr * nalpha * nbeta);
    for (double t : linspace(t_min, t_max, nt, true))
        for (double r : linspace(r_min, r_max, nr, true))
            for (double a : linspace(alpha_min, alpha_max, nalpha, false))
                for (double b : linspace(beta_min, beta_max, nbeta, true))
                    pts.push_back({t, r, a, b});
    return pts;
}

ResidualStats sweep(const SliceDomain& domain,
                    const std::function<double(const SlicePoint&)>& residual_norm) {
    ResidualStats stats;
    double sum = 0.0;
    for (const SlicePoint& x : domain.grid()) {
        const double v = residual_norm(x);
        sum += v;
        if (v > stats.max_norm || stats.count == 0) {
            stats.max_norm = v;
            stats.argmax = x;
        }
        ++stats.count;
    }
    if (stats.count > 0) stats.mean_norm = sum / static_cast<double>(stats.count);
    return stats;
}

}  // namespace qreg

#include "qreg/operators.hpp"

#include <cmath>

#include "qreg/errors.hpp"

namespace qreg {

Quaternion cullen_operator(const SliceFunction& F, const SlicePoint& x) {
    return F.partial(Axis::T, x) + iota_of(x.alpha, x.beta) * F.partial(Axis::R, x);
}

Quaternion d_iota(const SliceFunction& F, const SlicePoint& x) {
    const IotaFrame frame = iota_frame(x.alpha, x.beta);
    return frame.iota_alpha_inv * F.partial(Axis::Alpha, x) +
           frame.iota_beta_inv * F.partial(Axis::Beta, x);
}

ComplexLikeForm proper_form(const SliceFunction& F) {
    if (F.analytic()) {
        // 1/2 d/diota(iota F) = A and 1/2 d/diota(F) = B for a slice-form
        // field F = A + iota B; keeping the components analytic preserves
        // closed-form (t,r)-derivatives for the CR residuals.
        return {F.component_a(), F.component_b(), true};
    }
    const double h = F.step();
    SliceFunction iota_f = F.premultiplied_by_iota();
    auto u = SliceFunction::from_evaluator(
        [iota_f](const SlicePoint& x) { return 0.5 * d_iota(iota_f, x); }, h);
    auto v = SliceFunction::from_evaluator(
        [F](const SlicePoint& x) { return 0.5 * d_iota(F, x); }, h);
    return {std::move(u), std::move(v), true};
}

std::pair<Quaternion, Quaternion> cr_residual(const ComplexLikeForm& form, const SlicePoint& x) {
    return {form.u.partial(Axis::T, x) - form.v.partial(Axis::R, x),
            form.u.partial(Axis::R, x) + form.v.partial(Axis::T, x)};
}

std::pair<Quaternion, Quaternion> modified_cr_residual(const ComplexLikeForm& form,
                                                       const SlicePoint& x) {
    const double sb = std::sin(x.beta);
    if (std::abs(sb) < kBetaMin) {
        throw PolarSingularity("modified_cr_residual: beta too close to a pole");
    }
    return {form.v.partial(Axis::Alpha, x) / sb + form.u.partial(Axis::Beta, x),
            form.u.partial(Axis::Alpha, x) / sb - form.v.partial(Axis::Beta, x)};
}

Quaternion compatibility_residual(const ComplexLikeForm& form, const SlicePoint& x) {
    return d_iota(form.u, x) - iota_of(x.alpha, x.beta) * d_iota(form.v, x);
}

Quaternion star_pointwise(const ComplexLikeForm& f1, const ComplexLikeForm& f2,
                          const SlicePoint& x) {
    const Quaternion u1 = f1.u(x), v1 = f1.v(x);
    const Quaternion u2 = f2.u(x), v2 = f2.v(x);
    return (u1 * u2 - v1 * v2) + iota_of(x.alpha, x.beta) * (u1 * v2 + v1 * u2);
}

Quaternion star_pointwise(const SliceFunction& F, const SliceFunction& G, const SlicePoint& x) {
    return star_pointwise(proper_form(F), proper_form(G), x);
}

ComplexLikeForm product_form(const ComplexLikeForm& f1, const ComplexLikeForm& f2) {
    const double h = std::min(f1.u.step(), f2.u.step());
    auto u = SliceFunction::from_evaluator(
        [f1, f2](const SlicePoint& x) { return f1.u(x) * f2.u(x) - f1.v(x) * f2.v(x); }, h);
    auto v = SliceFunction::from_evaluator(
        [f1, f2](const SlicePoint& x) { return f1.v(x) * f2.u(x) + f1.u(x) * f2.v(x); }, h);
    return ComplexLikeForm::from_fields(std::move(u), std::move(v));
}

Quaternion conj_pointwise(const SliceFunction& F, const SlicePoint& x) {
    const ComplexLikeForm form = proper_form(F);
    return form.u(x).conj() + iota_of(x.alpha, x.beta) * form.v(x).conj();
}

ComplexLikeForm conjugate_form(const ComplexLikeForm& form) {
    ComplexLikeForm out{form.u.conjugated(), form.v.conjugated(), form.proper};
    return out;
}

Quaternion symm_pointwise(const SliceFunction& F, const SlicePoint& x) {
    const ComplexLikeForm form = proper_form(F);
    const Quaternion u = form.u(x), v = form.v(x);
    const double u_tilde = u.norm2() - v.norm2();
    const double v_tilde = 2.0 * dot(u, v);
    return Quaternion::real(u_tilde) + iota_of(x.alpha, x.beta) * v_tilde;
}

Quaternion recip_pointwise(const SliceFunction& F, const SlicePoint& x, double eps_zero) {
    const ComplexLikeForm form = proper_form(F);
    const Quaternion u = form.u(x), v = form.v(x);
    const double u_tilde = u.norm2() - v.norm2();
    const double v_tilde = 2.0 * dot(u, v);
    const double d = u_tilde * u_tilde + v_tilde * v_tilde;
    if (std::sqrt(d) < eps_zero) {
        throw SymmetrizationZero("recip_pointwise: |f^s(x)| below eps_zero");
    }
    const Quaternion iota = iota_of(x.alpha, x.beta);
    const Quaternion inv_symm = Quaternion::real(u_tilde / d) + iota * (-v_tilde / d);
    const Quaternion fc = u.conj() + iota * v.conj();
    return inv_symm * fc;
}

namespace {

// D_l of a slice-form field A + iota B:
//   A_t + iota B_t + iota A_r - B_r - (2/r) B.
Quaternion fueter_slice_form(const Quaternion& at, const Quaternion& bt, const Quaternion& ar,
                             const Quaternion& br, const Quaternion& b, const Quaternion& iota,
                             double r) {
    return at + iota * bt + iota * ar - br - b * (2.0 / r);
}

}  // namespace

Quaternion fueter_dl(const SliceFunction& F, const SlicePoint& x) {
    if (F.analytic()) {
        const Quaternion iota = iota_of(x.alpha, x.beta);
        return fueter_slice_form(F.form_deriv(0, 1, 0, x.t, x.r), F.form_deriv(1, 1, 0, x.t, x.r),
                                 F.form_deriv(0, 0, 1, x.t, x.r), F.form_deriv(1, 0, 1, x.t, x.r),
                                 F.form_deriv(1, 0, 0, x.t, x.r), iota, x.r);
    }
    const double h = F.step();
    const Quaternion p = to_cartesian(x);
    const Quaternion basis[4] = {kOne, kI, kJ, kK};
    Quaternion acc;
    for (int axis = 0; axis < 4; ++axis) {
        Quaternion dp;
        (axis == 0 ? dp.t : axis == 1 ? dp.x : axis == 2 ? dp.y : dp.z) = h;
        const Quaternion diff =
            (F.eval_cartesian(p + dp) - F.eval_cartesian(p - dp)) / (2.0 * h);
        acc += basis[axis] * diff;
    }
    return acc;
}

Quaternion laplacian4(const SliceFunction& F, const SlicePoint& x) {
    const double sb = std::sin(x.beta);
    if (std::abs(sb) < kBetaMin) {
        throw PolarSingularity("laplacian4: beta too close to a pole");
    }
    const Quaternion radial = F.partial2(Axis::T, Axis::T, x) + F.partial2(Axis::R, Axis::R, x) +
                              F.partial(Axis::R, x) * (2.0 / x.r);
    const Quaternion angular = F.partial2(Axis::Alpha, Axis::Alpha, x) / (sb * sb) +
                               F.partial2(Axis::Beta, Axis::Beta, x) +
                               F.partial(Axis::Beta, x) * (std::cos(x.beta) / sb);
    return radial + angular / (x.r * x.r);
}

Quaternion laplacian4_cartesian_fd(const SliceFunction& F, const SlicePoint& x, double step) {
    const Quaternion p = to_cartesian(x);
    const Quaternion center = F.eval_cartesian(p);
    Quaternion acc;
    for (int axis = 0; axis < 4; ++axis) {
        Quaternion dp;
        (axis == 0 ? dp.t : axis == 1 ? dp.x : axis == 2 ? dp.y : dp.z) = step;
        acc += (F.eval_cartesian(p + dp) - 2.0 * center + F.eval_cartesian(p - dp)) /
               (step * step);
    }
    return acc;
}

Quaternion fueter_dl_laplacian(const SliceFunction& F, const SlicePoint& x) {
    if (F.analytic()) {
        const double r = x.r;
        const Quaternion iota = iota_of(x.alpha, x.beta);
        const auto a = [&](int dt, int dr) { return F.form_deriv(0, dt, dr, x.t, x.r); };
        const auto b = [&](int dt, int dr) { return F.form_deriv(1, dt, dr, x.t, x.r); };
        // Laplacian of A + iota B is again slice-form, Delta F = A2 + iota B2
        // (the angular Laplacian sends iota to -2 iota):
        const Quaternion b2 = b(2, 0) + b(0, 2) + b(0, 1) * (2.0 / r) - b(0, 0) * (2.0 / (r * r));
        const Quaternion a2_t = a(3, 0) + a(1, 2) + a(1, 1) * (2.0 / r);
        const Quaternion a2_r = a(2, 1) + a(0, 3) + a(0, 2) * (2.0 / r) - a(0, 1) * (2.0 / (r * r));
        const Quaternion b2_t = b(3, 0) + b(1, 2) + b(1, 1) * (2.0 / r) - b(1, 0) * (2.0 / (r * r));
        const Quaternion b2_r = b(2, 1) + b(0, 3) + b(0, 2) * (2.0 / r) -
                                b(0, 1) * (4.0 / (r * r)) + b(0, 0) * (4.0 / (r * r * r));
        return fueter_slice_form(a2_t, b2_t, a2_r, b2_r, b2, iota, r);
    }
    const double h = F.step();
    const Quaternion p = to_cartesian(x);
    const auto lap = [&](const Quaternion& q) {
        return laplacian4_cartesian_fd(F, to_spherical(q), h);
    };
    const Quaternion basis[4] = {kOne, kI, kJ, kK};
    Quaternion acc;
    for (int axis = 0; axis < 4; ++axis) {
        Quaternion dp;
        (axis == 0 ? dp.t : axis == 1 ? dp.x : axis == 2 ? dp.y : dp.z) = h;
        acc += basis[axis] * ((lap(p + dp) - lap(p - dp)) / (2.0 * h));
    }
    return acc;
}

double fundamental_property_residual(const SliceFunction& F, const SlicePoint& x) {
    const Quaternion lhs = d_iota(F.premultiplied_by_iota(), x) +
                           iota_of(x.alpha, x.beta) * d_iota(F, x) - 2.0 * F(x);
    return lhs.norm();
}

}  // namespace qreg

#pragma once

#include <utility>

#include "qreg/slice_function.hpp"

namespace qreg {

// Pair (u, v) with f = u + iota v. `proper` records construction through the
// angular operator (u = 1/2 d/diota(iota f), v = 1/2 d/diota(f)); forms built
// any other way are not proper and must not feed the regular product.
struct ComplexLikeForm {
    SliceFunction u;
    SliceFunction v;
    bool proper = false;

    static ComplexLikeForm from_fields(SliceFunction u, SliceFunction v) {
        return {std::move(u), std::move(v), false};
    }
};

// Cullen residual (d/dt + iota d/dr) F; vanishes iff F is C-regular at x.
Quaternion cullen_operator(const SliceFunction& F, const SlicePoint& x);

// The angular operator d/diota = iota_alpha^{-1} d/dalpha + iota_beta^{-1} d/dbeta.
Quaternion d_iota(const SliceFunction& F, const SlicePoint& x);

ComplexLikeForm proper_form(const SliceFunction& F);

// (du/dt - dv/dr, du/dr + dv/dt); both vanish iff the form is complex-like
// regular at x.
std::pair<Quaternion, Quaternion> cr_residual(const ComplexLikeForm& form, const SlicePoint& x);

// The angular system: (dv/da / sin(b) + du/db, du/da / sin(b) - dv/db).
std::pair<Quaternion, Quaternion> modified_cr_residual(const ComplexLikeForm& form,
                                                       const SlicePoint& x);

// du/diota - iota dv/diota; vanishes for proper forms of C-regular functions.
Quaternion compatibility_residual(const ComplexLikeForm& form, const SlicePoint& x);

// Regular product of the proper forms: (u1 u2 - v1 v2) + iota (u1 v2 + v1 u2).
Quaternion star_pointwise(const SliceFunction& F, const SliceFunction& G, const SlicePoint& x);
Quaternion star_pointwise(const ComplexLikeForm& f1, const ComplexLikeForm& f2,
                          const SlicePoint& x);

// The (u1 u2 - v1 v2, v1 u2 + u1 v2) form of the product; not marked proper.
ComplexLikeForm product_form(const ComplexLikeForm& f1, const ComplexLikeForm& f2);

// Regular conjugate f^c = conj(u) + iota conj(v).
Quaternion conj_pointwise(const SliceFunction& F, const SlicePoint& x);
ComplexLikeForm conjugate_form(const ComplexLikeForm& form);

// Symmetrization f^s = (|u|^2 - |v|^2) + iota 2(u . v); real pair by construction.
Quaternion symm_pointwise(const SliceFunction& F, const SlicePoint& x);

// Regular reciprocal (1/f^s) f^c, with 1/f^s through the real-pair inverse
// u_hat = u~ / (u~^2 + v~^2), v_hat = -v~ / (u~^2 + v~^2).
Quaternion recip_pointwise(const SliceFunction& F, const SlicePoint& x,
                           double eps_zero = kEpsZero);

// Left Fueter operator d/dt + i d/dx + j d/dy + k d/dz.
Quaternion fueter_dl(const SliceFunction& F, const SlicePoint& x);

// 4D Laplacian in the spherical chart,
// d2/dt2 + d2/dr2 + (2/r) d/dr + (1/r^2) (angular part).
Quaternion laplacian4(const SliceFunction& F, const SlicePoint& x);

// Cartesian-difference Laplacian through the chart; FD cross-check for laplacian4.
Quaternion laplacian4_cartesian_fd(const SliceFunction& F, const SlicePoint& x,
                                   double step = kDefaultFdStep);

// D_l applied to the Laplacian; closed form for analytic fields, nested
// Cartesian differences otherwise.
Quaternion fueter_dl_laplacian(const SliceFunction& F, const SlicePoint& x);

// || d/diota(iota F) + iota d/diota(F) - 2F || at x; zero for any C^1 field.
double fundamental_property_residual(const SliceFunction& F, const SlicePoint& x);

}  // namespace qreg

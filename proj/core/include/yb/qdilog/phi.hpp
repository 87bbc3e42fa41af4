#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "yb/num/matrix.hpp"
#include "yb/residuals.hpp"

namespace yb::qdilog {

using num::cplx;

struct DilogParams {
    cplx b;
    cplx eta;  // (b + 1/b) / 2
    cplx q;    // exp(i pi b^2)

    cplx q_tilde() const;  // exp(-i pi / b^2)

    // Throws DomainError unless Im b^2 > 0 and |b| < 1.
    static DilogParams make(cplx b);
    static DilogParams defaults();  // b = 0.6 exp(i pi / 10)
};

enum class PhiMethod { quadrature, product, automatic };

// Contour integral over R + i0: a detour of radius r0 above w = 0 with the
// pole part integrated in closed form, tails cut where |integrand| < cutoff.
struct QuadratureBudget {
    double r0 = 1e-2;
    double cutoff = 1e-18;
    int max_panels = 20000;
};

// Branch of log phi continuous from z -> -infinity along the real axis.
// quadrature: the integral, extended beyond the strip |Im z| < Re(eta)/2 by
//             steps of i b through the functional equation.
// product:    ratio of infinite q- and q~-products; throws DomainError where
//             neither the product nor its inversion converges on the
//             principal branch.
// automatic:  product when available, quadrature otherwise.
cplx log_phi(cplx z, const DilogParams& p, PhiMethod method = PhiMethod::quadrature,
             const QuadratureBudget& budget = {});
cplx phi(cplx z, const DilogParams& p, PhiMethod method = PhiMethod::quadrature,
         const QuadratureBudget& budget = {});

// The cosh-weighted companion Phi; the integral is used for |Im z| <= 1.5 Re(eta),
// log Phi(z - i eta) + log Phi(z + i eta) = log phi(z) beyond.
cplx log_aux_phi(cplx z, const DilogParams& p, const QuadratureBudget& budget = {});
cplx aux_phi(cplx z, const DilogParams& p, const QuadratureBudget& budget = {});

// Closed-form right-hand sides of the inversion relations (log form).
cplx log_phi_inversion(cplx z, const DilogParams& p);      // log phi(z) + log phi(-z)
cplx log_aux_phi_inversion(cplx z, const DilogParams& p);  // log Phi(z) + log Phi(-z)

// Functional equation on a grid |Re z| <= 2, inversion relations, the limits
// at -infinity, Phi(0), and quadrature against the product formula.
Residuals phi_residuals(const DilogParams& p);

// Rows (Re z, Im z, Re f, Im f).
void write_csv(std::ostream& os, const std::vector<cplx>& points, const std::function<cplx(cplx)>& f);

}  // namespace yb::qdilog

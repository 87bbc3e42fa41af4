#pragma once

#include <vector>

#include "yb/num/random.hpp"
#include "yb/qdilog/phi.hpp"

namespace yb::qdilog {

enum class KernelKind { V, Vbar, VbarStar, W, Wbar };

// V_a(s)     = exp(i pi/8 - i pi s^2) phi(i a - s)
// Vbar_a(s)  = exp(-i pi/8 + i pi s^2) / phi(i a - i eta - s)
// Vbar*_a(s) = exp(i pi/8 - i pi s^2) phi(i eta + i a - s)
// W_a(s)     = exp(2 pi a s) phi(s + i a) / phi(s - i a) / F_a,
//              F_a = exp(i pi a^2 + i pi (1 - 8 eta^2)/24) Phi(2 i a)
// Wbar_a(s)  = W_{eta - a}(s), evaluated through the inversion relation.
cplx log_kernel_func(KernelKind kind, cplx alpha, cplx s, const DilogParams& p,
                     PhiMethod method = PhiMethod::automatic);
cplx kernel_func(KernelKind kind, cplx alpha, cplx s, const DilogParams& p,
                 PhiMethod method = PhiMethod::automatic);

// log F_a, and log W_a(s) without it; F_a costs a Phi quadrature.
cplx log_w_normalization(cplx alpha, const DilogParams& p);
cplx log_w_bare(cplx alpha, cplx s, const DilogParams& p, PhiMethod method = PhiMethod::automatic);

struct KernelPoint {
    cplx s1, s2, s1p, s2p;
    cplx alpha1, alpha2, beta1, beta2;
};

// Matrix element <s1, s2| R |s1', s2'> as a product of four V / Vbar factors,
// or the element <s1', s2'| R^{-1} |s1, s2> when inverse is set.
cplx log_r_kernel(const KernelPoint& pt, const DilogParams& p, bool inverse = false,
                  PhiMethod method = PhiMethod::automatic);
cplx r_kernel(const KernelPoint& pt, const DilogParams& p, bool inverse = false,
              PhiMethod method = PhiMethod::automatic);

// Ratios R(shifted)/R for the four shifts s1 + ib, s2 - ib, s1' + ib, s2' - ib,
// predicted from v_i = exp(2 pi b (s_i + i beta_i)), z_i = -exp(2 pi i b (alpha_i - beta_i)).
std::vector<cplx> predicted_shift_ratios(const KernelPoint& pt, const DilogParams& p);

// Max relative deviation of the four shift ratios over random interior points
// (parameters within 0.2, spins within 0.5 of the origin).
Residuals recurrence_residuals(const DilogParams& p, num::Sampler& rng, int points = 50);

// W(s) = W(-s), Wbar against W_{eta - a}, Fourier duality of V and Vbar.
Residuals kernel_identity_residuals(const DilogParams& p);

// Integral of exp(2 pi i s x) V_a(s) over the real line, by rotating the
// contour to s = exp(-i theta) t.
cplx fourier_v(cplx alpha, cplx x, const DilogParams& p, double theta = 0.39269908169872414);

struct QuasiRow {
    cplx b;
    double err_v, err_vbar, err_kernel;
};

struct QuasiTable {
    std::vector<QuasiRow> rows;
    bool decreasing = false;  // every column strictly decreasing down the rows
};

// Compares -2 pi i b^2 log of V, Vbar and the kernel with lambda, lambdabar and
// the Lagrangian density at fixed scaled variables a = -2 pi i b alpha,
// sigma = 2 pi b s. Logs are compared modulo 2 pi i.
struct QuasiPoint {
    cplx a = {0.3, 0.1}, sigma = {0.4, -0.2};
    cplx a1 = {0.35, 0.05}, a2 = {-0.15, 0.1}, b1 = {0.2, -0.05}, b2 = {-0.3, 0.0};
    cplx s1 = {0.1, 0.05}, s2 = {0.6, -0.1}, s1p = {-0.2, 0.1}, s2p = {0.45, 0.0};
};

QuasiTable quasiclassical_table(const std::vector<cplx>& bs, const QuasiPoint& pt = {});

}  // namespace yb::qdilog

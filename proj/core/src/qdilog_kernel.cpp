#include "yb/qdilog/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "yb/action/lagrangian.hpp"
#include "yb/errors.hpp"
#include "yb/num/quadrature.hpp"

namespace yb::qdilog {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx kI{0.0, 1.0};

cplx reduce_2pi_i(cplx d) { return d - cplx(0.0, 2.0 * kPi * std::round(d.imag() / (2.0 * kPi))); }

KernelPoint shifted(KernelPoint pt, int which, cplx d) {
    switch (which) {
        case 0: pt.s1 += d; break;
        case 1: pt.s2 += d; break;
        case 2: pt.s1p += d; break;
        default: pt.s2p += d; break;
    }
    return pt;
}

}  // namespace

cplx log_w_normalization(cplx a, const DilogParams& p) {
    return kI * kPi * a * a + kI * kPi * (1.0 - 8.0 * p.eta * p.eta) / 24.0 + log_aux_phi(2.0 * kI * a, p);
}

cplx log_w_bare(cplx alpha, cplx s, const DilogParams& p, PhiMethod m) {
    const cplx ia = kI * alpha;
    return 2.0 * kPi * alpha * s + log_phi(s + ia, p, m) - log_phi(s - ia, p, m);
}

cplx log_kernel_func(KernelKind kind, cplx alpha, cplx s, const DilogParams& p, PhiMethod m) {
    const cplx ia = kI * alpha, ieta = kI * p.eta;
    switch (kind) {
        case KernelKind::V:
            return kI * kPi / 8.0 - kI * kPi * s * s + log_phi(ia - s, p, m);
        case KernelKind::Vbar:
            return -kI * kPi / 8.0 + kI * kPi * s * s - log_phi(ia - ieta - s, p, m);
        case KernelKind::VbarStar:
            return kI * kPi / 8.0 - kI * kPi * s * s + log_phi(ieta + ia - s, p, m);
        case KernelKind::W:
            return log_w_bare(alpha, s, p, m) - log_w_normalization(alpha, p);
        case KernelKind::Wbar: {
            const cplx beta = p.eta - alpha, ib = kI * beta;
            return 2.0 * kPi * beta * s + log_phi_inversion(s + ib, p) - log_phi(-s - ib, p, m) -
                   log_phi(s - ib, p, m) - log_w_normalization(beta, p);
        }
    }
    return 0.0;
}

cplx kernel_func(KernelKind kind, cplx alpha, cplx s, const DilogParams& p, PhiMethod m) {
    return std::exp(log_kernel_func(kind, alpha, s, p, m));
}

cplx log_r_kernel(const KernelPoint& pt, const DilogParams& p, bool inverse, PhiMethod m) {
    const cplx v1 = log_kernel_func(KernelKind::V, pt.beta1 - pt.alpha2, pt.s2 - pt.s1, p, m);
    const cplx v2 = log_kernel_func(KernelKind::V, pt.alpha1 - pt.beta2, pt.s2p - pt.s1p, p, m);
    if (!inverse)
        return v1 + v2 + log_kernel_func(KernelKind::Vbar, pt.alpha1 - pt.alpha2, pt.s2p - pt.s1, p, m) +
               log_kernel_func(KernelKind::Vbar, pt.beta1 - pt.beta2, pt.s2 - pt.s1p, p, m);
    return log_kernel_func(KernelKind::VbarStar, pt.alpha1 - pt.alpha2, pt.s2p - pt.s1, p, m) +
           log_kernel_func(KernelKind::VbarStar, pt.beta1 - pt.beta2, pt.s2 - pt.s1p, p, m) - v1 - v2;
}

cplx r_kernel(const KernelPoint& pt, const DilogParams& p, bool inverse, PhiMethod m) {
    return std::exp(log_r_kernel(pt, p, inverse, m));
}

std::vector<cplx> predicted_shift_ratios(const KernelPoint& pt, const DilogParams& p) {
    const cplx b = p.b, q = p.q;
    auto v = [&](cplx s, cplx beta) { return std::exp(2.0 * kPi * b * (s + kI * beta)); };
    auto z = [&](cplx a, cplx beta) { return -std::exp(2.0 * kPi * kI * b * (a - beta)); };
    const cplx v1 = v(pt.s1, pt.beta1), v2 = v(pt.s2, pt.beta2);
    const cplx v1p = v(pt.s1p, pt.beta1), v2p = v(pt.s2p, pt.beta2);
    const cplx z1 = z(pt.alpha1, pt.beta1), z2 = z(pt.alpha2, pt.beta2);
    const cplx top = 1.0 - z2 * v2p / (z1 * v1), mid = 1.0 - v2 / v1p;
    const cplx left = 1.0 - z2 * v2 / (q * v1), right = 1.0 - v2p / (q * z1 * v1p);
    return {z1 * top / (q * left), z2 * mid / (q * left), mid / (q * z1 * right), top / (q * z2 * right)};
}

Residuals recurrence_residuals(const DilogParams& p, num::Sampler& rng, int points) {
    const cplx ib = kI * p.b;
    const cplx shifts[4] = {ib, -ib, ib, -ib};
    const char* names[4] = {"shift_s1", "shift_s2", "shift_s1p", "shift_s2p"};
    Residuals r;
    for (const char* n : names) r[n] = 0.0;
    auto spin = [&] { return cplx(rng.uniform(-0.5, 0.5), rng.uniform(-0.1, 0.1)); };
    for (int i = 0; i < points; ++i) {
        KernelPoint pt{spin(), spin(), spin(), spin(), rng.box(0.2), rng.box(0.2), rng.box(0.2), rng.box(0.2)};
        const cplx base = log_r_kernel(pt, p);
        const auto pred = predicted_shift_ratios(pt, p);
        for (int k = 0; k < 4; ++k) {
            const cplx ratio = std::exp(log_r_kernel(shifted(pt, k, shifts[k]), p) - base);
            r[names[k]] = std::max(r[names[k]], std::abs(ratio / pred[static_cast<size_t>(k)] - 1.0));
        }
    }
    return r;
}

cplx fourier_v(cplx alpha, cplx x, const DilogParams& p, double theta) {
    const cplx rot = std::exp(cplx(0.0, -theta));
    // exp(2 pi (alpha + i x) s) governs the decay as s -> -infinity along the ray.
    const double kappa = 2.0 * kPi * ((alpha + kI * x) * rot).real();
    const double gauss = kPi * std::sin(2.0 * theta);
    if (kappa < 0.05 || gauss < 0.05) throw DomainError("rotated Fourier contour does not decay");
    const double left = std::min(400.0, 38.0 / kappa);
    double right = 2.0;
    while (gauss * right * right - 2.0 * kPi * std::abs(x) * right < 40.0) right += 0.5;
    auto f = [&](cplx t) {
        const cplx s = rot * t;
        return std::exp(2.0 * kPi * kI * s * x + log_kernel_func(KernelKind::V, alpha, s, p)) * rot;
    };
    const int panels = static_cast<int>(std::ceil((left + right) / 0.25));
    return num::integrate_panels(f, -left, right, panels);
}

Residuals kernel_identity_residuals(const DilogParams& p) {
    Residuals r;
    double sym = 0.0, wbar = 0.0, four = 0.0;
    const cplx alphas[] = {{0.15, 0.0}, {0.2, 0.05}, {0.3, -0.05}};
    for (const cplx a : alphas) {
        for (const cplx s : {cplx(0.3, 0.0), cplx(-0.7, 0.05), cplx(1.1, -0.1)}) {
            const cplx w = kernel_func(KernelKind::W, a, s, p), wm = kernel_func(KernelKind::W, a, -s, p);
            sym = std::max(sym, std::abs(w - wm) / std::max(1.0, std::abs(w)));
            const cplx wb = kernel_func(KernelKind::Wbar, a, s, p);
            const cplx ref = kernel_func(KernelKind::W, p.eta - a, s, p);
            wbar = std::max(wbar, std::abs(wb - ref) / std::max(1.0, std::abs(ref)));
        }
        for (const double x : {0.1, 0.35, 0.6}) {
            const cplx lhs = fourier_v(a, x, p), rhs = kernel_func(KernelKind::Vbar, a, x, p);
            four = std::max(four, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
        }
    }
    r["w_symmetry"] = sym;
    r["wbar_identity"] = wbar;
    r["fourier_duality"] = four;
    return r;
}

QuasiTable quasiclassical_table(const std::vector<cplx>& bs, const QuasiPoint& q) {
    QuasiTable t;
    for (const cplx b : bs) {
        const auto p = DilogParams::make(b);
        const cplx scale = 2.0 * kPi * b;                   // sigma = scale * s
        const cplx to_alpha = kI / scale;                   // alpha = i a / (2 pi b)
        const cplx hbar = 2.0 * kPi * b * b;
        auto err = [&](cplx logf, cplx cl) { return std::abs(hbar * reduce_2pi_i(logf - kI * cl / hbar)); };

        const auto lp = action::lambda_pair(q.a, q.sigma);
        QuasiRow row{b, 0, 0, 0};
        row.err_v = err(log_kernel_func(KernelKind::V, to_alpha * q.a, q.sigma / scale, p), lp.lam);
        row.err_vbar = err(log_kernel_func(KernelKind::Vbar, to_alpha * q.a, q.sigma / scale, p), lp.lambar);

        const KernelPoint pt{q.s1 / scale,     q.s2 / scale,     q.s1p / scale,    q.s2p / scale,
                             to_alpha * q.a1, to_alpha * q.a2, to_alpha * q.b1, to_alpha * q.b2};
        const action::LagrangianParams lag{q.a1, q.a2, q.b1, q.b2};
        row.err_kernel = err(log_r_kernel(pt, p), action::lagrangian_density(q.s1, q.s2, q.s1p, q.s2p, lag));
        t.rows.push_back(row);
    }
    t.decreasing = t.rows.size() >= 2;
    for (size_t i = 1; i < t.rows.size(); ++i) {
        const auto &a = t.rows[i - 1], &c = t.rows[i];
        t.decreasing = t.decreasing && c.err_v < a.err_v && c.err_vbar < a.err_vbar && c.err_kernel < a.err_kernel;
    }
    return t;
}

}  // namespace yb::qdilog

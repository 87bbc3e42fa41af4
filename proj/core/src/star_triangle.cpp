#include "yb/qdilog/star_triangle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "yb/action/lagrangian.hpp"
#include "yb/errors.hpp"
#include "yb/num/quadrature.hpp"

namespace yb::qdilog {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx kI{0.0, 1.0};

double mod_2pi_i(cplx d) {
    return std::abs(d - cplx(0.0, 2.0 * kPi * std::round(d.imag() / (2.0 * kPi))));
}

struct Weights {
    const DilogParams& p;
    std::function<cplx(cplx)> cache_f;

    cplx log_w(cplx alpha, cplx s, cplx log_f) const { return log_w_bare(alpha, s, p) - log_f; }
    cplx log_wbar(cplx alpha, cplx s, cplx log_f_bar) const { return log_w_bare(p.eta - alpha, s, p) - log_f_bar; }
    cplx log_v(cplx alpha, cplx s) const { return log_kernel_func(KernelKind::V, alpha, s, p); }
    cplx log_vbar(cplx alpha, cplx s) const { return log_kernel_func(KernelKind::Vbar, alpha, s, p); }
};

StarResult real_line(const std::function<cplx(double)>& log_integrand, cplx log_rhs) {
    auto f = [&](cplx t) { return std::exp(log_integrand(t.real()) - log_rhs); };
    StarResult out;
    double L = 6.0;
    cplx prev = 0.0;
    for (int round = 0; round < 4; ++round, L *= 2.0) {
        const double tail = std::max(std::abs(f(-L)), std::abs(f(L)));
        const cplx val = num::integrate_panels(f, -L, L, static_cast<int>(8 * L));
        if (round > 0 && tail < 1e-12 && std::abs(val - prev) < 1e-10) {
            // Poles close to the real line need finer panels; refine until stable.
            int panels = static_cast<int>(8 * L);
            cplx cur = val, fine = num::integrate_panels(f, -L, L, 2 * panels);
            while (std::abs(fine - cur) > 1e-2 * kStretchTolerance && panels < 64 * static_cast<int>(8 * L)) {
                panels *= 2;
                cur = fine;
                fine = num::integrate_panels(f, -L, L, 2 * panels);
            }
            if (std::abs(fine - cur) > 1e-2 * kStretchTolerance) {
                out.status = CheckStatus::skipped;
                out.note = "integrand not resolved with " + std::to_string(2 * panels) +
                           " panels; singularities pinch the real line";
                return out;
            }
            out.residual = std::abs(fine - 1.0);
            out.status = out.residual < kStretchTolerance ? CheckStatus::pass : CheckStatus::fail;
            out.note = "real-line quadrature on [-" + std::to_string(L) + ", " + std::to_string(L) + "]";
            return out;
        }
        prev = val;
    }
    out.status = CheckStatus::skipped;
    out.note = "integrand does not decay on the real line within |sigma| <= " + std::to_string(L / 2.0);
    return out;
}

}  // namespace

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

const char* to_string(StarTriangle w) {
    switch (w) {
        case StarTriangle::fvstr: return "fvstr";
        case StarTriangle::str1: return "str1";
        case StarTriangle::str2: return "str2";
        case StarTriangle::three_leg: return "three_leg";
    }
    return "?";
}

cplx big_lambdabar(cplx beta, cplx sigma) {
    return 0.5 * sigma * sigma + action::li2(std::exp(-sigma - beta)) + action::li2(std::exp(sigma - beta));
}

cplx three_leg_root(const StarParams& sp) {
    const cplx A = std::exp(-sp.a), B = std::exp(-sp.b), C = std::exp(-sp.c);
    const cplx P = std::exp(-sp.alpha), Q = std::exp(-sp.beta);
    const cplx X = (A * Q + P * B + C - P * B * Q * Q) / (A * B + C * B * Q);
    return std::log(X);
}

ThreeLeg three_leg_solve(const StarParams& sp, cplx seed) {
    auto S = [&](cplx s) {
        return action::lambda_pair(sp.alpha, s - sp.a).lambar + action::lambda_pair(sp.alpha + sp.beta, s - sp.c).lam +
               big_lambdabar(sp.beta, s - sp.b);
    };
    auto dS = [&](cplx s, double h) {
        return (45.0 * (S(s + h) - S(s - h)) - 9.0 * (S(s + 2.0 * h) - S(s - 2.0 * h)) + (S(s + 3.0 * h) - S(s - 3.0 * h))) /
               (60.0 * h);
    };
    // Branch points of S' modulo 2 pi i; the stencil stays well inside them.
    const cplx branch[] = {sp.a - sp.alpha, sp.c - sp.alpha - sp.beta + cplx(0.0, kPi), sp.b - sp.beta, sp.b + sp.beta};
    auto step_for = [&](cplx s) {
        double d = 1e300;
        for (const cplx z : branch) {
            cplx w = s - z;
            w -= cplx(0.0, 2.0 * kPi * std::round(w.imag() / (2.0 * kPi)));
            d = std::min(d, std::abs(w));
        }
        if (d < 1e-3) throw BranchAmbiguity("stationary point too close to a branch point");
        return std::min(2e-3, d / 100.0);
    };
    ThreeLeg out{seed, 0.0, 0.0, 0};
    cplx s = seed;
    for (int it = 1; it <= 60; ++it) {
        const double h = step_for(s);
        const cplx g = dS(s, h);
        const cplx gg = (dS(s + 0.05 * h, h) - dS(s - 0.05 * h, h)) / (0.1 * h);
        const cplx step = g / gg;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag()) || std::abs(step) > 2.0)
            throw BranchAmbiguity("Newton step left the principal sheet");
        s -= step;
        out.iterations = it;
        if (std::abs(step) < 1e-13) break;
    }
    if (std::abs(dS(s, step_for(s))) > 1e-9) throw BranchAmbiguity("Newton iteration did not converge");
    out.sigma = s;

    const cplx rel = std::log(std::exp(s - sp.a) - std::exp(-sp.alpha)) -
                     std::log(std::exp(s - sp.c) + std::exp(-sp.alpha - sp.beta)) +
                     std::log((std::exp(s - sp.b) - std::exp(-sp.beta)) / (1.0 - std::exp(s - sp.b - sp.beta)));
    out.residual = mod_2pi_i(rel);
    const cplx lhs = (std::exp(s - sp.a) - std::exp(-sp.alpha)) * (std::exp(s - sp.b) - std::exp(-sp.beta));
    const cplx rhs = (std::exp(s - sp.c) + std::exp(-sp.alpha - sp.beta)) * (1.0 - std::exp(s - sp.b - sp.beta));
    out.polynomial = std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
    return out;
}

ThreeLegSweep three_leg_sweep(num::Sampler& rng, int samples) {
    ThreeLegSweep sw;
    int attempts = 0;
    while (sw.samples < samples) {
        if (++attempts > 20 * samples) throw DegenerateSamples("too many three-leg samples redrawn");
        StarParams sp{rng.box(0.5), rng.box(0.5), rng.box(0.5),
                      {rng.uniform(0.2, 1.2), rng.uniform(-0.2, 0.2)},
                      {rng.uniform(0.2, 1.2), rng.uniform(-0.2, 0.2)}};
        const cplx seed = three_leg_root(sp) + cplx(rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1));
        try {
            const auto r = three_leg_solve(sp, seed);
            sw.max_residual = std::max(sw.max_residual, r.residual);
            sw.max_polynomial = std::max(sw.max_polynomial, r.polynomial);
            ++sw.samples;
        } catch (const BranchAmbiguity&) {
            ++sw.redrawn;
        }
    }
    return sw;
}

StarResult star_triangle_residual(StarTriangle which, const StarParams& sp, const DilogParams& p) {
    if (which == StarTriangle::three_leg) {
        StarResult out;
        ThreeLeg r;
        try {
            r = three_leg_solve(sp, three_leg_root(sp) + cplx(0.05, 0.03));
        } catch (const BranchAmbiguity& e) {
            return {0.0, CheckStatus::fail, e.what()};
        }
        out.residual = r.residual;
        out.status = r.residual < kThreeLegTolerance ? CheckStatus::pass : CheckStatus::fail;
        out.note = "Newton iterations: " + std::to_string(r.iterations);
        return out;
    }

    Weights w{p, {}};
    const cplx al = sp.alpha, be = sp.beta, ab = sp.alpha + sp.beta;
    const cplx a = sp.a, b = sp.b, c = sp.c;
    try {
        switch (which) {
            case StarTriangle::fvstr: {
                const cplx fa = log_w_normalization(al, p), fab = log_w_normalization(ab, p);
                const cplx fb = log_w_normalization(be, p);
                const cplx fa_bar = log_w_normalization(p.eta - al, p), fab_bar = log_w_normalization(p.eta - ab, p);
                const cplx fb_bar = log_w_normalization(p.eta - be, p);
                const cplx rhs = w.log_w(be, a - c, fb) + w.log_wbar(ab, a - b, fab_bar) + w.log_w(al, c - b, fa);
                return real_line(
                    [&](double s) {
                        return w.log_wbar(al, a - s, fa_bar) + w.log_w(ab, c - s, fab) + w.log_wbar(be, b - s, fb_bar);
                    },
                    rhs);
            }
            case StarTriangle::str1: {
                const cplx fb = log_w_normalization(be, p), fb_bar = log_w_normalization(p.eta - be, p);
                const cplx rhs = w.log_w(be, a - c, fb) + w.log_vbar(ab, a - b) + w.log_v(al, c - b);
                return real_line(
                    [&](double s) { return w.log_vbar(al, a - s) + w.log_v(ab, c - s) + w.log_wbar(be, b - s, fb_bar); },
                    rhs);
            }
            case StarTriangle::str2: {
                const cplx fb = log_w_normalization(be, p), fb_bar = log_w_normalization(p.eta - be, p);
                const cplx rhs = w.log_w(be, a - c, fb) + w.log_vbar(ab, b - a) + w.log_v(al, b - c);
                return real_line(
                    [&](double s) { return w.log_vbar(al, s - a) + w.log_v(ab, s - c) + w.log_wbar(be, b - s, fb_bar); },
                    rhs);
            }
            default:
                break;
        }
    } catch (const DomainError& e) {
        return {0.0, CheckStatus::skipped, std::string("quadrature unavailable: ") + e.what()};
    }
    return {};
}

}  // namespace yb::qdilog

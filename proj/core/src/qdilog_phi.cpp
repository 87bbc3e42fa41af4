#include "yb/qdilog/phi.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "yb/errors.hpp"
#include "yb/num/quadrature.hpp"

namespace yb::qdilog {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx kI{0.0, 1.0};

double mod_2pi_i(cplx d) {
    const double k = std::round(d.imag() / (2.0 * kPi));
    return std::abs(d - cplx(0.0, 2.0 * kPi * k));
}

// (1/w) / (sinh(wb) sinh(w/b) [cosh(2 eta w)]) exp(-2 i z w) integrated over R + i0.
cplx contour_integral(cplx z, const DilogParams& p, bool aux, const QuadratureBudget& bud) {
    const cplx b = p.b, binv = 1.0 / p.b;
    auto g = [&](cplx w) {
        cplx den = w * std::sinh(w * b) * std::sinh(w * binv);
        if (aux) den *= std::cosh(2.0 * p.eta * w);
        return std::exp(-2.0 * kI * z * w) / den;
    };

    const double re_eta = p.eta.real();
    const double rate = (aux ? 4.0 : 2.0) * re_eta - 2.0 * std::abs(z.imag());
    if (rate < 0.5 * re_eta) throw DomainError("contour tail does not converge for this z");
    const double W = (std::log(4.0 / bud.cutoff) + 2.0) / rate;

    // Closest singularities of the integrand off the real axis set the panel width.
    double dist = std::min(std::abs((kI * kPi * b).imag()), std::abs((kI * kPi * binv).imag()));
    if (aux) dist = std::min(dist, std::abs((kI * kPi / (4.0 * p.eta)).imag()));
    const double h = std::min({0.5, 2.0 * dist, 2.0 / (1.0 + std::abs(z.real()))});

    auto sym = [&](cplx w) { return g(w) + g(-w); };
    cplx acc = 0.0;
    double lo = bud.r0;
    while (lo < 0.5 && lo < W) {
        const double hi = std::min({2.0 * lo, 0.5, W});
        acc += num::integrate_segment(sym, lo, hi);
        lo = hi;
    }
    if (W > lo) {
        const int panels = static_cast<int>(std::ceil((W - lo) / h));
        if (panels > bud.max_panels) throw DomainError("quadrature budget exceeded");
        acc += num::integrate_panels(sym, lo, W, panels);
    }

    // Laurent part c3/w^3 + c2/w^2 + c1/w on the upper half circle, in closed form.
    const cplx c2 = -2.0 * kI * z;
    cplx c1 = -2.0 * z * z - (b * b + binv * binv) / 6.0;
    if (aux) c1 -= 2.0 * p.eta * p.eta;
    const double r0 = bud.r0;
    acc += c2 * (-2.0 / r0) + c1 * cplx(0.0, -kPi);
    auto rest = [&](cplx theta) {
        const cplx w = r0 * std::exp(kI * theta);
        const cplx reg = g(w) - 1.0 / (w * w * w) - c2 / (w * w) - c1 / w;
        return reg * kI * w;
    };
    acc += num::integrate_segment(rest, kPi, 0.0);
    return acc;
}

cplx log_phi_strip(cplx z, const DilogParams& p, const QuadratureBudget& bud) {
    return 0.25 * contour_integral(z, p, false, bud);
}

cplx log_phi_quadrature(cplx z, const DilogParams& p, const QuadratureBudget& bud) {
    const double edge = 0.5 * p.eta.real();
    const cplx ib = kI * p.b;
    cplx acc = 0.0;
    int steps = 0;
    while (z.imag() > edge) {
        acc -= std::log(1.0 + std::exp(2.0 * kPi * p.b * (z - 0.5 * ib)));
        z -= ib;
        if (++steps > 10000) throw DomainError("continuation did not reach the strip");
    }
    while (z.imag() < -edge) {
        acc += std::log(1.0 + std::exp(2.0 * kPi * p.b * (z + 0.5 * ib)));
        z += ib;
        if (++steps > 10000) throw DomainError("continuation did not reach the strip");
    }
    return acc + log_phi_strip(z, p, bud);
}

// sum_k log(1 + r^{2k+1} x), requiring |r x| < 1.
bool qpoch_log(cplx r, cplx x, cplx& out) {
    cplx t = r * x;
    if (!(std::abs(t) < 1.0)) return false;
    const cplx r2 = r * r;
    out = 0.0;
    for (long k = 0; k < 4'000'000; ++k) {
        if (std::abs(t) < 1e-18) return true;
        out += std::log(1.0 + t);
        t *= r2;
    }
    return false;
}

bool log_phi_product_direct(cplx z, const DilogParams& p, cplx& out) {
    cplx num, den;
    if (!qpoch_log(p.q, std::exp(2.0 * kPi * p.b * z), num)) return false;
    if (!qpoch_log(p.q_tilde(), std::exp(2.0 * kPi * z / p.b), den)) return false;
    out = num - den;
    return true;
}

bool log_phi_product(cplx z, const DilogParams& p, cplx& out) {
    if (log_phi_product_direct(z, p, out)) return true;
    cplx mirror;
    if (!log_phi_product_direct(-z, p, mirror)) return false;
    out = log_phi_inversion(z, p) - mirror;
    return true;
}

}  // namespace

cplx DilogParams::q_tilde() const { return std::exp(-kI * kPi / (b * b)); }

DilogParams DilogParams::make(cplx b) {
    if (!((b * b).imag() > 0.0)) throw DomainError("need Im b^2 > 0");
    if (!(std::abs(b) < 1.0)) throw DomainError("need |b| < 1");
    return {b, 0.5 * (b + 1.0 / b), std::exp(kI * kPi * b * b)};
}

DilogParams DilogParams::defaults() { return make(0.6 * std::exp(kI * kPi / 10.0)); }

cplx log_phi_inversion(cplx z, const DilogParams& p) {
    return kI * kPi * z * z - kI * kPi * (1.0 - 2.0 * p.eta * p.eta) / 6.0;
}

cplx log_aux_phi_inversion(cplx z, const DilogParams& p) {
    return 0.5 * kI * kPi * z * z - kI * kPi * (1.0 - 8.0 * p.eta * p.eta) / 12.0;
}

cplx log_phi(cplx z, const DilogParams& p, PhiMethod method, const QuadratureBudget& budget) {
    cplx out;
    switch (method) {
        case PhiMethod::quadrature:
            return log_phi_quadrature(z, p, budget);
        case PhiMethod::product:
            if (!log_phi_product(z, p, out)) throw DomainError("product formula does not converge at this z");
            return out;
        case PhiMethod::automatic:
            if (log_phi_product(z, p, out)) return out;
            return log_phi_quadrature(z, p, budget);
    }
    return out;
}

cplx phi(cplx z, const DilogParams& p, PhiMethod method, const QuadratureBudget& budget) {
    return std::exp(log_phi(z, p, method, budget));
}

cplx log_aux_phi(cplx z, const DilogParams& p, const QuadratureBudget& budget) {
    // log Phi(z - i eta) + log Phi(z + i eta) = log phi(z)
    const cplx ieta = kI * p.eta;
    const double edge = 1.5 * p.eta.real();
    if (z.imag() > edge) return log_phi(z - ieta, p, PhiMethod::automatic, budget) - log_aux_phi(z - 2.0 * ieta, p, budget);
    if (z.imag() < -edge) return log_phi(z + ieta, p, PhiMethod::automatic, budget) - log_aux_phi(z + 2.0 * ieta, p, budget);
    return 0.125 * contour_integral(z, p, true, budget);
}

cplx aux_phi(cplx z, const DilogParams& p, const QuadratureBudget& budget) {
    return std::exp(log_aux_phi(z, p, budget));
}

Residuals phi_residuals(const DilogParams& p) {
    Residuals r;
    const cplx ib = kI * p.b;
    std::vector<cplx> grid;
    for (int i = -8; i <= 8; ++i)
        for (int j = -1; j <= 1; ++j) grid.emplace_back(0.25 * i, 0.2 * j * p.b.real());

    double feq = 0.0, inv = 0.0, prod = 0.0, aux_inv = 0.0;
    for (const cplx z : grid) {
        const cplx lm = log_phi(z - 0.5 * ib, p), lp = log_phi(z + 0.5 * ib, p);
        feq = std::max(feq, mod_2pi_i(lm - lp - std::log(1.0 + std::exp(2.0 * kPi * p.b * z))));

        const cplx l = log_phi(z, p), lneg = log_phi(-z, p);
        inv = std::max(inv, std::abs(std::exp(l + lneg - log_phi_inversion(z, p)) - 1.0));
        prod = std::max(prod, mod_2pi_i(l - log_phi(z, p, PhiMethod::product)));

        const cplx a = log_aux_phi(z, p), aneg = log_aux_phi(-z, p);
        aux_inv = std::max(aux_inv, std::abs(std::exp(a + aneg - log_aux_phi_inversion(z, p)) - 1.0));
    }
    r["functional_equation"] = feq;
    r["inversion"] = inv;
    r["quadrature_vs_product"] = prod;
    r["aux_inversion"] = aux_inv;

    double shift = 0.0;
    for (const double x : {-1.0, -0.3, 0.0, 0.5, 1.2}) {
        const cplx ieta = kI * p.eta;
        shift = std::max(shift, mod_2pi_i(log_aux_phi(x - ieta, p) + log_aux_phi(x + ieta, p) - log_phi(x, p)));
    }
    r["aux_shift"] = shift;

    r["phi_zero"] = std::abs(phi(0.0, p) / std::exp(0.5 * log_phi_inversion(0.0, p)) - 1.0);
    r["aux_phi_zero"] = std::abs(aux_phi(0.0, p) / std::exp(0.5 * log_aux_phi_inversion(0.0, p)) - 1.0);
    r["limit"] = std::abs(phi(-5.0 / std::abs(p.b), p) - 1.0);
    r["aux_limit"] = std::abs(aux_phi(-15.0 * std::abs(p.eta), p) - 1.0);
    r["info_aux_limit_near"] = std::abs(aux_phi(-5.0 / std::abs(p.b), p) - 1.0);

    // Continuation by i b steps against the product formula off the strip.
    double cont = 0.0;
    for (const cplx z : {cplx(0.3, 1.1), cplx(-0.7, 1.6), cplx(0.4, -1.2), cplx(-1.1, -1.7)})
        cont = std::max(cont, mod_2pi_i(log_phi(z, p) - log_phi(z, p, PhiMethod::product)));
    r["continuation"] = cont;
    return r;
}

void write_csv(std::ostream& os, const std::vector<cplx>& points, const std::function<cplx(cplx)>& f) {
    os << "re_z,im_z,re_f,im_f\n";
    os.precision(17);
    for (const cplx z : points) {
        const cplx v = f(z);
        os << z.real() << ',' << z.imag() << ',' << v.real() << ',' << v.imag() << '\n';
    }
}

}  // namespace yb::qdilog

#include <cmath>
#include <numbers>
#include <string>

#include "yb/action/lagrangian.hpp"
#include "yb/errors.hpp"

namespace yb::action {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

LambdaPair lambda_pair(cplx a, cplx sigma) {
    const cplx w = std::exp(-sigma - a);
    LambdaPair r;
    r.lam = -0.5 * sigma * sigma - li2(-w);
    r.lambar = 0.5 * sigma * sigma + li2(w);
    r.dlam = -std::log(std::exp(sigma) + std::exp(-a));
    r.dlambar = std::log(std::exp(sigma) - std::exp(-a));
    return r;
}

LagrangianParams LagrangianParams::from_z(cplx z1, cplx z2, cplx b1, cplx b2) {
    if (z1 == cplx(0.0) || z2 == cplx(0.0)) throw InvalidPoint("z must be nonzero");
    return {b1 - std::log(-z1), b2 - std::log(-z2), b1, b2};
}

cplx lagrangian_density(cplx s1, cplx s2, cplx s1p, cplx s2p, const LagrangianParams& p) {
    return lambda_pair(p.b1 - p.a2, s2 - s1).lam + lambda_pair(p.a1 - p.b2, s2p - s1p).lam +
           lambda_pair(p.a1 - p.a2, s2p - s1).lambar + lambda_pair(p.b1 - p.b2, s2 - s1p).lambar;
}

std::array<cplx, 4> lagrangian_gradient(cplx s1, cplx s2, cplx s1p, cplx s2p, const LagrangianParams& p) {
    const cplx A = lambda_pair(p.b1 - p.a2, s2 - s1).dlam;
    const cplx B = lambda_pair(p.a1 - p.b2, s2p - s1p).dlam;
    const cplx C = lambda_pair(p.a1 - p.a2, s2p - s1).dlambar;
    const cplx D = lambda_pair(p.b1 - p.b2, s2 - s1p).dlambar;
    return {-A - C, A + D, -B - D, B + C};
}

void SigmaField::validate() const {
    if (T < 1) throw InvalidPoint("sigma field needs T >= 1");
    if (periodic ? (n_sites < 2 || n_sites % 2 != 0) : (n_sites < 3 || n_sites % 2 != 1))
        throw InvalidPoint("periodic fields need 2N sites, open fields 2N+1");
    if (static_cast<int>(sigma.size()) != n_sites * (T + 1)) throw InvalidPoint("sigma grid size mismatch");
}

SigmaField sigma_from_v(const liouville::VGrid& g, const LagrangianParams& p) {
    SigmaField f;
    f.n_sites = g.n_sites;
    f.T = g.T;
    f.periodic = g.periodic;
    f.sigma.resize(g.v.size());
    for (int k = 1; k <= g.n_sites; ++k)
        for (int t = 0; t <= g.T; ++t) f.at(k, t) = std::log(g.at(k, t)) + (k % 2 == 1 ? p.b1 : p.b2);
    return f;
}

Winding reduce_mod_2pi_i(cplx value) {
    const long w = std::lround(value.imag() / kTwoPi);
    return {std::abs(value - cplx(0.0, kTwoPi * static_cast<double>(w))), w};
}

ActionResult action_and_gradient(const SigmaField& field, const LagrangianParams& p) {
    field.validate();
    const int K = field.n_sites, T = field.T, N = field.n_pairs();
    auto site = [&](int k) { return field.periodic ? ((k - 1) % K + K) % K + 1 : k; };
    ActionResult out{0.0, {}, 0.0, 0.0, {}};
    std::map<std::pair<int, int>, cplx> grad;
    for (int n = 1; n <= N; ++n)
        for (int t = 0; t < T; ++t) {
            const int k1 = site(2 * n - 1), k2 = site(2 * n), k3 = site(2 * n + 1);
            const cplx s1 = field.at(k1, t), s2 = field.at(k2, t), s1p = field.at(k3, t + 1),
                       s2p = field.at(k2, t + 1);
            out.action += lagrangian_density(s1, s2, s1p, s2p, p);
            const auto g = lagrangian_gradient(s1, s2, s1p, s2p, p);
            grad[{k1, t}] += g[0];
            grad[{k2, t}] += g[1];
            grad[{k3, t + 1}] += g[2];
            grad[{k2, t + 1}] += g[3];
        }
    const int k_lo = field.periodic ? 1 : 2, k_hi = field.periodic ? K : K - 1;
    for (int k = k_lo; k <= k_hi; ++k)
        for (int t = 1; t < T; ++t) {
            const cplx g = grad[{k, t}];
            out.gradient[{k, t}] = g;
            const auto w = reduce_mod_2pi_i(g);
            out.grad_norm = std::max(out.grad_norm, w.residual);
            out.grad_norm_raw = std::max(out.grad_norm_raw, std::abs(g));
            if (w.winding != 0) out.windings[{k, t}] = w.winding;
        }
    return out;
}

double eom_residual(const liouville::VGrid& g, cplx z1, cplx z2) {
    const int K = g.n_sites, T = g.T;
    auto v = [&](int k, int t) {
        if (g.periodic) k = ((k - 1) % K + K) % K + 1;
        return g.at(k, t);
    };
    const int k_lo = g.periodic ? 1 : 2, k_hi = g.periodic ? K : K - 1;
    double m = 0.0;
    for (int k = k_lo; k <= k_hi; ++k)
        for (int t = 1; t < T; ++t) {
            const cplx c = v(k, t), vu = v(k + 1, t + 1), vd = v(k - 1, t - 1), vl = v(k - 1, t),
                       vr = v(k + 1, t);
            cplx r;
            if (k % 2 == 1)
                r = (1.0 - vl / (z1 * c)) * (1.0 - z2 * vr / c) - (1.0 - z2 * vu / (z1 * c)) * (1.0 - vd / c);
            else
                r = (1.0 - c / (z1 * vr)) * (1.0 - z2 * c / vl) - (1.0 - z2 * c / (z1 * vd)) * (1.0 - c / vu);
            m = std::max(m, std::abs(r));
        }
    return m;
}

GeneratingCheck generating_check(const classical::WeylTriple& w1, const classical::WeylTriple& w2,
                                 const LagrangianParams& p) {
    if (std::abs(w1.z - p.z1()) > 1e-12 * std::abs(w1.z) || std::abs(w2.z - p.z2()) > 1e-12 * std::abs(w2.z))
        throw InvalidPoint("site z values disagree with the Lagrangian parameters");
    const auto out = classical::yb_map_uv(w1, w2);
    const cplx s1 = std::log(w1.v) + p.b1, s2 = std::log(w2.v) + p.b2;
    const cplx s1p = std::log(out.first.v) + p.b1, s2p = std::log(out.second.v) + p.b2;
    const auto g = lagrangian_gradient(s1, s2, s1p, s2p, p);
    const cplx r[4] = {g[0] + std::log(w1.u), g[1] + std::log(w2.u), g[2] - std::log(out.first.u),
                       g[3] - std::log(out.second.u)};
    GeneratingCheck c{};
    for (int i = 0; i < 4; ++i) {
        const auto w = reduce_mod_2pi_i(r[i]);
        c.residual[i] = w.residual;
        c.winding[i] = w.winding;
    }
    return c;
}

}  // namespace yb::action

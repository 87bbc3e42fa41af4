#include "yb/classical/map.hpp"

#include <cmath>

#include "yb/errors.hpp"

namespace yb::classical {

namespace {

void require_k(const ClassicalTriple& x) {
    if (x.k == cplx(0.0)) throw InvalidPoint("k = 0 is not an invertible point");
}

void require_uvz(const WeylTriple& w) {
    if (w.u == cplx(0.0) || w.v == cplx(0.0) || w.z == cplx(0.0)) throw InvalidPoint("u, v, z must be nonzero");
}

void guard_pivot(cplx g, const char* what) {
    if (std::abs(g) < kPivotGuard || !std::isfinite(std::abs(g))) throw SingularMap(what, g);
}

std::array<cplx, 4> logs(const WeylPair& p) {
    return {std::log(p.first.u), std::log(p.first.v), std::log(p.second.u), std::log(p.second.v)};
}

WeylPair from_logs(const std::array<cplx, 4>& x, cplx z1, cplx z2) {
    return {{std::exp(x[0]), std::exp(x[1]), z1}, {std::exp(x[2]), std::exp(x[3]), z2}};
}

}  // namespace

cplx casimir(const ClassicalTriple& x) {
    require_k(x);
    return x.e * x.f + x.k + 1.0 / x.k;
}

TriplePair yb_map_kef(const ClassicalTriple& x1, const ClassicalTriple& x2, Direction dir) {
    require_k(x1);
    require_k(x2);
    const auto [k1, e1, f1] = x1;
    const auto [k2, e2, f2] = x2;
    if (dir == Direction::forward) {
        const cplx g = 1.0 - e1 * f2 * k2 / k1;
        guard_pivot(g, "forward map pivot 1 - e1 f2 k2/k1 vanishes");
        ClassicalTriple y1{k1 * g, e1 * k2, f1 / k2 + f2 - f2 / (k1 * k1 * g)};
        ClassicalTriple y2{k2 / g, k1 * e2 + e1 - e1 * k2 * k2 / g, f2 / k1};
        return {y1, y2};
    }
    const cplx g = 1.0 - e1 * f2;
    guard_pivot(g, "inverse map pivot 1 - e1' f2' vanishes");
    ClassicalTriple y1{k1 / g, e1 / (k2 * g), (f1 + f2 / k1) * g * k2 - k1 * f2 * k2};
    ClassicalTriple y2{k2 * g, (e2 + e1 * k2) * g / k1 - e1 / (k1 * k2), f2 * k1 / g};
    return {y1, y2};
}

ClassicalTriple coproduct_pair(const ClassicalTriple& x1, const ClassicalTriple& x2) {
    require_k(x1);
    require_k(x2);
    return {x1.k * x2.k, x1.e * x2.k + x2.e, x1.f + x2.f / x1.k};
}

ClassicalTriple hopf_unary(const ClassicalTriple& x, Unary which) {
    require_k(x);
    if (which == Unary::counit) return {1.0, 0.0, 0.0};
    return {1.0 / x.k, -x.e / x.k, -x.k * x.f};
}

ClassicalTriple weyl_embed(const WeylTriple& w) {
    require_uvz(w);
    return {w.u, w.v * (w.z - w.u), (1.0 - 1.0 / (w.z * w.u)) / w.v};
}

cplx g_cl(const WeylTriple& w1, const WeylTriple& w2) {
    return 1.0 - w1.v * (w1.z - w1.u) * (w2.u - 1.0 / w2.z) / (w1.u * w2.v);
}

WeylPair yb_map_uv(const WeylTriple& w1, const WeylTriple& w2, Direction dir) {
    require_uvz(w1);
    require_uvz(w2);
    const auto [u1, v1, z1] = w1;
    const auto [u2, v2, z2] = w2;
    if (dir == Direction::forward) {
        const cplx g = g_cl(w1, w2);
        guard_pivot(g, "forward uv map: g_cl vanishes");
        const cplx den = v1 * u2 + (v2 - v1 / z2);
        guard_pivot(den, "forward uv map: v1 u2 + v2 - v1/z2 vanishes");
        return {{u1 * g, v1 * v2 * u2 / den, z1}, {u2 / g, z1 * v1 / z2 + (v2 - v1 / z2) * u1, z2}};
    }
    const cplx g = 1.0 - v1 * (z1 - u1) * (u2 - 1.0 / z2) / (v2 * u2);
    guard_pivot(g, "inverse uv map: g_cl' vanishes");
    const cplx den = z1 * v1 / z2 + (v2 - z1 * v1) * u2;
    guard_pivot(den, "inverse uv map: denominator vanishes");
    return {{u1 / g, v1 * v2 / den, z1}, {u2 * g, v1 + (v2 - z1 * v1) / u1, z2}};
}

cplx poisson_bracket_numeric(const PairFunction& F, const PairFunction& G, const WeylPair& point,
                             const num::GradientConfig& cfg) {
    if (!(cfg.step > 0.0)) throw DomainError("gradient step must be positive");
    const auto x0 = logs(point);
    const cplx z1 = point.first.z, z2 = point.second.z;
    const cplx dir = cfg.scheme == num::GradScheme::complex_step ? cplx(0.0, cfg.step) : cplx(cfg.step, 0.0);
    auto grad = [&](const PairFunction& H) {
        std::array<cplx, 4> g{};
        for (int i = 0; i < 4; ++i) {
            auto xp = x0, xm = x0;
            xp[i] += dir;
            xm[i] -= dir;
            g[i] = (H(from_logs(xp, z1, z2)) - H(from_logs(xm, z1, z2))) / (2.0 * dir);
        }
        return g;
    };
    const auto gf = grad(F);
    const auto gg = grad(G);
    return gf[0] * gg[1] - gf[1] * gg[0] + gf[2] * gg[3] - gf[3] * gg[2];
}

num::ComplexMatrix log_jacobian_uv(const WeylPair& point, double step) {
    const auto x0 = logs(point);
    const cplx z1 = point.first.z, z2 = point.second.z;
    const auto out0 = yb_map_uv(point.first, point.second);
    const std::array<cplx, 4> y0{out0.first.u, out0.first.v, out0.second.u, out0.second.v};
    num::ComplexMatrix j(4, 4);
    for (int b = 0; b < 4; ++b) {
        auto xp = x0, xm = x0;
        xp[b] += step;
        xm[b] -= step;
        const auto p = from_logs(xp, z1, z2);
        const auto m = from_logs(xm, z1, z2);
        const auto yp = yb_map_uv(p.first, p.second);
        const auto ym = yb_map_uv(m.first, m.second);
        const std::array<cplx, 4> a{yp.first.u, yp.first.v, yp.second.u, yp.second.v};
        const std::array<cplx, 4> c{ym.first.u, ym.first.v, ym.second.u, ym.second.v};
        for (int r = 0; r < 4; ++r) j(r, b) = (a[r] - c[r]) / (2.0 * step * y0[r]);
    }
    return j;
}

num::ComplexMatrix canonical_form(int n_pairs) {
    num::ComplexMatrix o = num::ComplexMatrix::Zero(2 * n_pairs, 2 * n_pairs);
    for (int i = 0; i < n_pairs; ++i) {
        o(2 * i, 2 * i + 1) = 1.0;
        o(2 * i + 1, 2 * i) = -1.0;
    }
    return o;
}

}  // namespace yb::classical

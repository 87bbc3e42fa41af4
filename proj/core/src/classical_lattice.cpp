#include "yb/classical/lattice.hpp"

#include <cmath>
#include <string>

#include "yb/errors.hpp"
#include "yb/num/poly_fit.hpp"

namespace yb::lattice {

using classical::Direction;
using classical::weyl_embed;
using classical::yb_map_kef;
using classical::yb_map_uv;

void ChainState::validate() const {
    if (n_pairs < 1) throw InvalidPoint("chain needs N >= 1");
    if (static_cast<int>(u.size()) != sites() || static_cast<int>(v.size()) != sites())
        throw InvalidPoint("u and v must have 2N entries");
    if (z1 == cplx(0.0) || z2 == cplx(0.0)) throw InvalidPoint("z1, z2 must be nonzero");
    for (int i = 0; i < sites(); ++i)
        if (u[i] == cplx(0.0) || v[i] == cplx(0.0))
            throw InvalidPoint("site " + std::to_string(i + 1) + " has a zero coordinate");
}

LaxSample lax_matrix(const ClassicalTriple& x, LaxKind kind, cplx lambda, std::optional<cplx> sqrt_k) {
    if (x.k == cplx(0.0)) throw InvalidPoint("k = 0 in Lax matrix");
    const cplx s = sqrt_k ? *sqrt_k : std::sqrt(x.k);
    ComplexMatrix lp(2, 2), lm(2, 2);
    lp << s, s * x.f, 0.0, 1.0 / s;
    lm << 1.0 / s, 0.0, -x.e / s, s;
    LaxSample out{kind, lambda, {}};
    switch (kind) {
        case LaxKind::plus: out.matrix = lp; break;
        case LaxKind::minus: out.matrix = lm; break;
        case LaxKind::lambda:
            if (lambda == cplx(0.0)) throw InvalidPoint("lambda = 0 in Lax matrix");
            out.matrix = lambda * lp - lm / lambda;
            break;
    }
    return out;
}

ChainState evolve_step(const ChainState& s) {
    s.validate();
    const int m = s.sites();
    ChainState out = s;
    for (int n = 0; n < s.n_pairs; ++n) {
        WeylPair w;
        try {
            w = yb_map_uv(s.site(2 * n), s.site(2 * n + 1));
        } catch (const SingularMap& e) {
            throw EvolutionSingularity(std::string("cell ") + std::to_string(n + 1) + ": " + e.what(), n + 1);
        }
        out.u[2 * n + 1] = w.second.u;
        out.v[2 * n + 1] = w.second.v;
        out.u[(2 * n + 2) % m] = w.first.u;
        out.v[(2 * n + 2) % m] = w.first.v;
    }
    return out;
}

ChainState evolve_step_inverse(const ChainState& s) {
    s.validate();
    const int m = s.sites();
    ChainState out = s;
    for (int n = 0; n < s.n_pairs; ++n) {
        const WeylTriple p1{s.u[(2 * n + 2) % m], s.v[(2 * n + 2) % m], s.z1};
        const WeylTriple p2{s.u[2 * n + 1], s.v[2 * n + 1], s.z2};
        WeylPair w;
        try {
            w = yb_map_uv(p1, p2, Direction::inverse);
        } catch (const SingularMap& e) {
            throw EvolutionSingularity(std::string("cell ") + std::to_string(n + 1) + ": " + e.what(), n + 1);
        }
        out.u[2 * n] = w.first.u;
        out.v[2 * n] = w.first.v;
        out.u[2 * n + 1] = w.second.u;
        out.v[2 * n + 1] = w.second.v;
    }
    return out;
}

std::vector<cplx> aligned_sqrt_k(const std::vector<ClassicalTriple>& xs) {
    std::vector<cplx> r(xs.size());
    cplx prod_k = 1.0, prod_r = 1.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        r[i] = std::sqrt(xs[i].k);
        prod_k *= xs[i].k;
        if (i + 1 < xs.size()) prod_r *= r[i];
    }
    r.back() = std::sqrt(prod_k) / prod_r;
    return r;
}

namespace {

std::vector<ClassicalTriple> embedded_sites(const ChainState& s) {
    std::vector<ClassicalTriple> xs;
    for (int i = 0; i < s.sites(); ++i) xs.push_back(weyl_embed(s.site(i)));
    return xs;
}

}  // namespace

cplx monodromy_trace(const ChainState& s, cplx lambda, TraceKind which) {
    s.validate();
    if (lambda == cplx(0.0)) throw InvalidPoint("lambda = 0 in monodromy trace");
    const auto xs = embedded_sites(s);
    const auto rt = aligned_sqrt_k(xs);
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    for (int n = 0; n < s.n_pairs; ++n) {
        const int a = 2 * n, b = 2 * n + 1;
        if (which == TraceKind::t)
            m = m * lax_matrix(xs[a], LaxKind::lambda, lambda, rt[a]).matrix *
                lax_matrix(xs[b], LaxKind::plus, 1.0, rt[b]).matrix;
        else
            m = m * lax_matrix(xs[a], LaxKind::minus, 1.0, rt[a]).matrix *
                lax_matrix(xs[b], LaxKind::lambda, lambda, rt[b]).matrix;
    }
    return m.trace();
}

ImCoefficients im_coefficients(const ChainState& s) {
    const int n = s.n_pairs;
    const auto lams = num::lambda_grid(n + 1);
    std::vector<cplx> tv, tbv;
    for (auto l : lams) {
        tv.push_back(monodromy_trace(s, l, TraceKind::t));
        tbv.push_back(monodromy_trace(s, l, TraceKind::tbar));
    }
    ImCoefficients out;
    out.g = num::fit_poly_lambda2(lams, tv, n, n);
    auto rev = num::fit_poly_lambda2(lams, tbv, n, n);
    out.gbar.assign(rev.rbegin(), rev.rend());
    if (n % 2)
        for (auto& c : out.gbar) c = -c;
    return out;
}

namespace {

std::vector<cplx> chain_logs(const ChainState& s) {
    std::vector<cplx> x;
    for (int i = 0; i < s.sites(); ++i) {
        x.push_back(std::log(s.u[i]));
        x.push_back(std::log(s.v[i]));
    }
    return x;
}

ChainState from_chain_logs(const ChainState& like, const std::vector<cplx>& x) {
    ChainState s = like;
    for (int i = 0; i < s.sites(); ++i) {
        s.u[i] = std::exp(x[2 * i]);
        s.v[i] = std::exp(x[2 * i + 1]);
    }
    return s;
}

}  // namespace

cplx chain_poisson_bracket(const ChainFunction& F, const ChainFunction& G, const ChainState& s,
                           const num::GradientConfig& cfg) {
    s.validate();
    const auto x0 = chain_logs(s);
    const cplx dir = cfg.scheme == num::GradScheme::complex_step ? cplx(0.0, cfg.step) : cplx(cfg.step, 0.0);
    auto grad = [&](const ChainFunction& H) {
        std::vector<cplx> g(x0.size());
        for (size_t i = 0; i < x0.size(); ++i) {
            auto xp = x0, xm = x0;
            xp[i] += dir;
            xm[i] -= dir;
            g[i] = (H(from_chain_logs(s, xp)) - H(from_chain_logs(s, xm))) / (2.0 * dir);
        }
        return g;
    };
    const auto gf = grad(F);
    const auto gg = grad(G);
    cplx acc = 0.0;
    for (int i = 0; i < s.sites(); ++i) acc += gf[2 * i] * gg[2 * i + 1] - gf[2 * i + 1] * gg[2 * i];
    return acc;
}

ComplexMatrix evolve_log_jacobian(const ChainState& s, double step) {
    const auto x0 = chain_logs(s);
    const auto y0 = evolve_step(s);
    const int m = 2 * s.sites();
    ComplexMatrix j(m, m);
    for (int b = 0; b < m; ++b) {
        auto xp = x0, xm = x0;
        xp[b] += step;
        xm[b] -= step;
        const auto yp = evolve_step(from_chain_logs(s, xp));
        const auto ym = evolve_step(from_chain_logs(s, xm));
        for (int i = 0; i < s.sites(); ++i) {
            j(2 * i, b) = (yp.u[i] - ym.u[i]) / (2.0 * step * y0.u[i]);
            j(2 * i + 1, b) = (yp.v[i] - ym.v[i]) / (2.0 * step * y0.v[i]);
        }
    }
    return j;
}

ComplexMatrix r_matrix(cplx lambda) {
    if (lambda * lambda == cplx(1.0)) throw InvalidPoint("r-matrix pole at lambda^2 = 1");
    ComplexMatrix rp = ComplexMatrix::Zero(4, 4), rm = ComplexMatrix::Zero(4, 4);
    rp(1, 1) = -0.5;
    rp(1, 2) = 1.0;
    rp(2, 2) = -0.5;
    rm(1, 1) = 0.5;
    rm(2, 1) = -1.0;
    rm(2, 2) = 0.5;
    return (lambda * rp - rm / lambda) / (lambda - 1.0 / lambda);
}

Residuals zcr_residuals(const ClassicalTriple& x1, const ClassicalTriple& x2, const std::vector<cplx>& lambdas) {
    const auto [y1, y2] = yb_map_kef(x1, x2);
    const cplx s1 = std::sqrt(x1.k), s2 = std::sqrt(x2.k);
    const cplx t1 = std::sqrt(y1.k);
    const cplx t2 = s1 * s2 / t1;
    auto L = [](const ClassicalTriple& x, LaxKind k, cplx s, cplx lam = 1.0) {
        return lax_matrix(x, k, lam, s).matrix;
    };
    Residuals r;
    r["zcr_plus_plus"] = num::max_abs_diff(L(x1, LaxKind::plus, s1) * L(x2, LaxKind::plus, s2),
                                           L(y2, LaxKind::plus, t2) * L(y1, LaxKind::plus, t1));
    r["zcr_minus_plus"] = num::max_abs_diff(L(x1, LaxKind::minus, s1) * L(x2, LaxKind::plus, s2),
                                            L(y2, LaxKind::plus, t2) * L(y1, LaxKind::minus, t1));
    r["zcr_minus_minus"] = num::max_abs_diff(L(x1, LaxKind::minus, s1) * L(x2, LaxKind::minus, s2),
                                             L(y2, LaxKind::minus, t2) * L(y1, LaxKind::minus, t1));
    double a = 0.0, b = 0.0;
    for (auto lam : lambdas) {
        a = std::max(a, num::max_abs_diff(L(x1, LaxKind::lambda, s1, lam) * L(x2, LaxKind::plus, s2),
                                          L(y2, LaxKind::plus, t2) * L(y1, LaxKind::lambda, t1, lam)));
        b = std::max(b, num::max_abs_diff(L(x1, LaxKind::minus, s1) * L(x2, LaxKind::lambda, s2, lam),
                                          L(y2, LaxKind::lambda, t2, lam) * L(y1, LaxKind::minus, t1)));
    }
    r["zcr2_lambda_plus"] = a;
    r["zcr2_minus_lambda"] = b;
    return r;
}

double r_bracket_residual(const WeylTriple& w, cplx lambda, cplx mu, double step) {
    const cplx lu0 = std::log(w.u), lv0 = std::log(w.v);
    auto ell = [&](cplx lu, cplx lv, cplx lam) {
        const ClassicalTriple x = weyl_embed({std::exp(lu), std::exp(lv), w.z});
        return lax_matrix(x, LaxKind::lambda, lam, std::exp(lu / 2.0)).matrix;
    };
    // Richardson-extrapolated central differences.
    auto d = [&](cplx lam, int which) {
        auto cd = [&](double h) {
            const cplx du = which == 0 ? h : 0.0, dv = which == 1 ? h : 0.0;
            return ComplexMatrix((ell(lu0 + du, lv0 + dv, lam) - ell(lu0 - du, lv0 - dv, lam)) / (2.0 * h));
        };
        return ComplexMatrix((4.0 * cd(step / 2) - cd(step)) / 3.0);
    };
    const ComplexMatrix bracket = num::kron(d(lambda, 0), d(mu, 1)) - num::kron(d(lambda, 1), d(mu, 0));
    const ComplexMatrix ll = num::kron(ell(lu0, lv0, lambda), ell(lu0, lv0, mu));
    const ComplexMatrix r = r_matrix(lambda / mu);
    return num::max_abs(bracket + num::commutator(r, ll));
}

double cybe_residual(cplx lambda, cplx mu) {
    const ComplexMatrix i2 = num::identity(2);
    const ComplexMatrix p23 = num::kron(i2, num::swap_matrix(2, 2));
    auto e12 = [&](const ComplexMatrix& m) { return num::kron(m, i2); };
    auto e23 = [&](const ComplexMatrix& m) { return num::kron(i2, m); };
    auto e13 = [&](const ComplexMatrix& m) { return ComplexMatrix(p23 * e12(m) * p23); };
    const ComplexMatrix a = e12(r_matrix(lambda)), b = e13(r_matrix(lambda * mu)), c = e23(r_matrix(mu));
    return num::max_abs(num::commutator(a, b) + num::commutator(a, c) + num::commutator(b, c));
}

Residuals residual_suite(const WeylPair& pair, const std::vector<std::pair<cplx, cplx>>& lambda_mu) {
    std::vector<cplx> lams;
    for (const auto& [l, m] : lambda_mu) lams.push_back(l);
    Residuals r = zcr_residuals(weyl_embed(pair.first), weyl_embed(pair.second), lams);
    double br = 0.0, cy = 0.0;
    for (const auto& [l, m] : lambda_mu) {
        br = std::max(br, r_bracket_residual(pair.first, l, m));
        cy = std::max(cy, cybe_residual(l, m));
    }
    r["r_matrix_bracket"] = br;
    r["classical_ybe_r"] = cy;
    return r;
}

}  // namespace yb::lattice

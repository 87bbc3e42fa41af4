#include <algorithm>
#include <cmath>

#include "yb/action/lagrangian.hpp"
#include "yb/classical/map.hpp"
#include "yb/errors.hpp"
#include "yb/num/poly_fit.hpp"
#include "yb/suites/suites.hpp"

namespace yb::suites {

using classical::ClassicalTriple;
using classical::Direction;
using classical::WeylPair;
using classical::WeylTriple;
using num::cplx;

namespace {

constexpr double kPivotReject = 1e-6;

double rel(cplx a, cplx b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

double rel(const ClassicalTriple& a, const ClassicalTriple& b) {
    return std::max({rel(a.k, b.k), rel(a.e, b.e), rel(a.f, b.f)});
}

double rel(const WeylTriple& a, const WeylTriple& b) {
    return std::max({rel(a.u, b.u), rel(a.v, b.v), rel(a.z, b.z)});
}

ClassicalTriple random_triple(num::Sampler& rng) { return {rng.unit_log(), rng.unit_log(), rng.unit_log()}; }
WeylTriple random_weyl(num::Sampler& rng) { return {rng.unit_log(), rng.unit_log(), rng.unit_log()}; }

cplx forward_pivot(const ClassicalTriple& x1, const ClassicalTriple& x2) { return 1.0 - x1.e * x2.f * x2.k / x1.k; }

// Applies the map to slots (i, j) of a triple.
void apply(std::array<ClassicalTriple, 3>& x, int i, int j) {
    const auto [a, b] = classical::yb_map_kef(x[static_cast<size_t>(i)], x[static_cast<size_t>(j)]);
    x[static_cast<size_t>(i)] = a;
    x[static_cast<size_t>(j)] = b;
}

// Random triple of points on which every map application in the YBE and
// hexagon checks stays away from the singular set.
std::array<ClassicalTriple, 3> sample_three(num::Sampler& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::array<ClassicalTriple, 3> x{random_triple(rng), random_triple(rng), random_triple(rng)};
        try {
            bool ok = true;
            auto guard = [&](const std::array<ClassicalTriple, 3>& y, int i, int j) {
                ok = ok && std::abs(forward_pivot(y[static_cast<size_t>(i)], y[static_cast<size_t>(j)])) > kPivotReject;
            };
            auto y = x;
            guard(y, 1, 2); apply(y, 1, 2); guard(y, 0, 2); apply(y, 0, 2); guard(y, 0, 1);
            y = x;
            guard(y, 0, 1); apply(y, 0, 1); guard(y, 0, 2); apply(y, 0, 2); guard(y, 1, 2);
            y = x;
            apply(y, 0, 2); guard(y, 1, 2); guard(y, 0, 1);
            guard(x, 0, 2);
            guard({classical::coproduct_pair(x[0], x[1]), x[2], x[2]}, 0, 1);
            guard({x[0], classical::coproduct_pair(x[1], x[2]), x[2]}, 0, 1);
            if (ok) return x;
        } catch (const SingularMap&) {
        }
    }
    throw DegenerateSamples("could not sample a regular triple of points");
}

std::pair<WeylTriple, WeylTriple> sample_weyl_pair(num::Sampler& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const WeylTriple w1 = random_weyl(rng), w2 = random_weyl(rng);
        try {
            if (std::abs(classical::g_cl(w1, w2)) < kPivotReject) continue;
            const auto fw = classical::yb_map_uv(w1, w2);
            if (std::abs(classical::g_cl(fw.first, fw.second)) < kPivotReject) continue;
            classical::yb_map_uv(w1, w2, Direction::inverse);
            return {w1, w2};
        } catch (const SingularMap&) {
        } catch (const InvalidPoint&) {
        }
    }
    throw DegenerateSamples("could not sample a regular Weyl pair");
}

double symplectic_defect(const num::ComplexMatrix& J, const num::ComplexMatrix& omega) {
    return num::max_abs_diff(J * omega * J.transpose(), omega);
}

}  // namespace

lattice::ChainState random_chain(num::Sampler& rng, int n_pairs, cplx z1, cplx z2, double spread) {
    lattice::ChainState s;
    s.n_pairs = n_pairs;
    s.z1 = z1;
    s.z2 = z2;
    for (int i = 0; i < 2 * n_pairs; ++i) {
        s.u.push_back(rng.unit_log(spread));
        s.v.push_back(rng.unit_log(spread));
    }
    return s;
}

Report classical_map_suite(const ClassicalConfig& cfg) {
    Report rep;
    rep.suite = "classical-map";
    num::Sampler rng(cfg.seed);
    const auto S = [](const ClassicalTriple& x) { return classical::hopf_unary(x, classical::Unary::antipode); };

    double ybe = 0, hex1 = 0, hex2 = 0, rd = 0, rt_kef = 0, rs = 0, s2 = 0, cas = 0, cu_l = 0, cu_r = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        const auto x = sample_three(rng);

        auto lhs = x, rhs = x;
        apply(lhs, 1, 2); apply(lhs, 0, 2); apply(lhs, 0, 1);
        apply(rhs, 0, 1); apply(rhs, 0, 2); apply(rhs, 1, 2);
        for (int i = 0; i < 3; ++i) ybe = std::max(ybe, rel(lhs[static_cast<size_t>(i)], rhs[static_cast<size_t>(i)]));

        // (delta x 1) R = R13 R23 and (1 x delta) R = R13 R12 as maps on triples.
        const auto h1 = classical::yb_map_kef(classical::coproduct_pair(x[0], x[1]), x[2]);
        auto y = x;
        apply(y, 0, 2); apply(y, 1, 2);
        hex1 = std::max({hex1, rel(h1.first, classical::coproduct_pair(y[0], y[1])), rel(h1.second, y[2])});
        const auto h2 = classical::yb_map_kef(x[0], classical::coproduct_pair(x[1], x[2]));
        y = x;
        apply(y, 0, 2); apply(y, 0, 1);
        hex2 = std::max({hex2, rel(h2.first, y[0]), rel(h2.second, classical::coproduct_pair(y[1], y[2]))});

        const auto [x1p, x2p] = classical::yb_map_kef(x[0], x[1]);
        rd = std::max(rd, rel(classical::coproduct_pair(x1p, x2p), classical::coproduct_pair(x[1], x[0])));
        const auto back = classical::yb_map_kef(x1p, x2p, Direction::inverse);
        rt_kef = std::max({rt_kef, rel(back.first, x[0]), rel(back.second, x[1])});
        cas = std::max({cas, rel(classical::casimir(x1p), classical::casimir(x[0])),
                        rel(classical::casimir(x2p), classical::casimir(x[1]))});

        const auto inv = classical::yb_map_kef(x[0], x[1], Direction::inverse);
        const auto lhs_s = classical::yb_map_kef(S(x[0]), S(x[1]));
        rs = std::max({rs, rel(lhs_s.first, S(inv.first)), rel(lhs_s.second, S(inv.second))});
        s2 = std::max(s2, rel(S(S(x[0])), x[0]));

        const auto c1 = classical::yb_map_kef(ClassicalTriple{}, x[1]);
        const auto c2 = classical::yb_map_kef(x[0], ClassicalTriple{});
        cu_l = std::max({cu_l, rel(c1.first, ClassicalTriple{}), rel(c1.second, x[1])});
        cu_r = std::max({cu_r, rel(c2.first, x[0]), rel(c2.second, ClassicalTriple{})});
    }
    rep.add("ybe", ybe, 1e-9);
    rep.add("hexagon_1", hex1, 1e-10);
    rep.add("hexagon_2", hex2, 1e-10);
    rep.add("coproduct_intertwining", rd, 1e-12);
    rep.add("roundtrip_kef", rt_kef, 1e-10);
    rep.add("casimir_invariance", cas, 1e-10);
    rep.add("antipode_map", rs, 1e-10);
    rep.add("antipode_square", s2, 1e-12);
    rep.add("counit_left", cu_l, 1e-12);
    rep.add("counit_right", cu_r, 1e-12);

    double rt_uv = 0, chart = 0, embed = 0, zinv = 0, sym = 0, table = 0, trivial = 0;
    const auto omega = classical::canonical_form(2);
    const int jac_trials = std::min(cfg.trials, 50);
    for (int t = 0; t < cfg.trials; ++t) {
        const auto [w1, w2] = sample_weyl_pair(rng);
        const auto fw = classical::yb_map_uv(w1, w2);
        const auto bk = classical::yb_map_uv(fw.first, fw.second, Direction::inverse);
        const auto iv = classical::yb_map_uv(w1, w2, Direction::inverse);
        const auto fi = classical::yb_map_uv(iv.first, iv.second);
        rt_uv = std::max({rt_uv, rel(bk.first, w1), rel(bk.second, w2), rel(fi.first, w1), rel(fi.second, w2)});

        const auto kef = classical::yb_map_kef(classical::weyl_embed(w1), classical::weyl_embed(w2));
        chart = std::max({chart, rel(classical::weyl_embed(fw.first), kef.first),
                          rel(classical::weyl_embed(fw.second), kef.second)});
        embed = std::max(embed, rel(classical::casimir(classical::weyl_embed(w1)), w1.z + 1.0 / w1.z));
        if (fw.first.z != w1.z || fw.second.z != w2.z) zinv = 1.0;
        if (t < jac_trials)
            sym = std::max(sym, symplectic_defect(classical::log_jacobian_uv({w1, w2}, 1e-6), omega));

        if (t < 5) {
            const WeylPair point{w1, w2};
            std::array<classical::PairFunction, 4> outs = {
                [](const WeylPair& p) { return std::log(classical::yb_map_uv(p.first, p.second).first.u); },
                [](const WeylPair& p) { return std::log(classical::yb_map_uv(p.first, p.second).first.v); },
                [](const WeylPair& p) { return std::log(classical::yb_map_uv(p.first, p.second).second.u); },
                [](const WeylPair& p) { return std::log(classical::yb_map_uv(p.first, p.second).second.v); }};
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    const cplx b = classical::poisson_bracket_numeric(outs[static_cast<size_t>(i)],
                                                                      outs[static_cast<size_t>(j)], point);
                    table = std::max(table, std::abs(b - omega(i, j)));
                }
        }

        // u1 = z1 makes g = 1 and leaves both u's fixed.
        WeylTriple t1 = w1;
        t1.u = t1.z;
        const auto tr = classical::yb_map_uv(t1, w2);
        trivial = std::max({trivial, rel(tr.first.u, t1.u), rel(tr.second.u, w2.u)});
    }
    rep.add("roundtrip_uv", rt_uv, 1e-10);
    rep.add("chart_consistency", chart, 1e-10);
    rep.add("embed_casimir", embed, 1e-12);
    rep.add("z_invariance", zinv, 0.0);
    rep.add("symplectic_map", sym, 1e-6);
    rep.add("bracket_table", table, 1e-6);
    rep.add("trivial_cell", trivial, 1e-14);

    const WeylPair p0{random_weyl(rng), random_weyl(rng)};
    auto lu1 = [](const WeylPair& p) { return std::log(p.first.u); };
    auto lv1 = [](const WeylPair& p) { return std::log(p.first.v); };
    auto lv2 = [](const WeylPair& p) { return std::log(p.second.v); };
    rep.add("canonical_pairs",
            std::max(std::abs(classical::poisson_bracket_numeric(lu1, lv1, p0) - 1.0),
                     std::abs(classical::poisson_bracket_numeric(lu1, lv2, p0))),
            1e-6);
    return rep;
}

Report classical_lattice_suite(const ClassicalConfig& cfg) {
    Report rep;
    rep.suite = "classical-lattice";
    num::Sampler rng(cfg.seed + 1);
    const cplx z1 = rng.unit_log(0.5), z2 = rng.unit_log(0.5);

    // Long run: traces, z and site Casimirs along the trajectory.
    std::vector<cplx> lambdas;
    for (int k = 0; k < cfg.lambda_samples; ++k) lambdas.push_back(rng.unit_log(0.4));
    double drift = 0, zc = 0, casc = 0;
    int redrawn = 0;
    for (;;) {
        auto s = random_chain(rng, cfg.chain_pairs, z1, z2);
        std::vector<cplx> t0, tb0;
        for (const cplx l : lambdas) {
            t0.push_back(lattice::monodromy_trace(s, l, lattice::TraceKind::t));
            tb0.push_back(lattice::monodromy_trace(s, l, lattice::TraceKind::tbar));
        }
        try {
            double d = 0, zz = 0, cc = 0;
            for (int step = 1; step <= cfg.steps; ++step) {
                s = lattice::evolve_step(s);
                for (size_t k = 0; k < lambdas.size(); ++k) {
                    d = std::max({d, rel(lattice::monodromy_trace(s, lambdas[k], lattice::TraceKind::t), t0[k]),
                                  rel(lattice::monodromy_trace(s, lambdas[k], lattice::TraceKind::tbar), tb0[k])});
                }
                if (s.z1 != z1 || s.z2 != z2) zz = 1.0;
                for (int i = 0; i < s.sites(); ++i)
                    cc = std::max(cc, rel(classical::casimir(classical::weyl_embed(s.site(i))),
                                          s.z_at(i) + 1.0 / s.z_at(i)));
            }
            drift = d;
            zc = zz;
            casc = cc;
            break;
        } catch (const EvolutionSingularity&) {
            if (++redrawn > 20) throw;
        }
    }
    rep.add("trace_drift", drift, 1e-8);
    rep.add("z_conservation", zc, 0.0);
    rep.add("site_casimir", casc, 1e-12);
    rep.residuals["info_redrawn_chains"] = redrawn;

    double rt = 0, sym = 0, fit = 0, edges = 0;
    for (int t = 0; t < cfg.lattice_trials; ++t) {
        const auto s = random_chain(rng, 2, z1, z2);
        const auto s1 = lattice::evolve_step(s);
        const auto b = lattice::evolve_step_inverse(s1);
        for (int i = 0; i < s.sites(); ++i) rt = std::max({rt, rel(b.u[i], s.u[i]), rel(b.v[i], s.v[i])});
        sym = std::max(sym, symplectic_defect(lattice::evolve_log_jacobian(s, 1e-6), classical::canonical_form(s.sites())));

        const auto im = lattice::im_coefficients(s);
        for (const cplx l : {cplx(0.7, 0.3), cplx(-1.3, 0.5)}) {
            fit = std::max(fit, rel(num::eval_poly_lambda2(im.g, l, s.n_pairs),
                                    lattice::monodromy_trace(s, l, lattice::TraceKind::t)));
            const double sign = s.n_pairs % 2 == 0 ? 1.0 : -1.0;
            fit = std::max(fit, rel(num::eval_poly_lambda2(im.gbar, 1.0 / l, s.n_pairs),
                                    sign * lattice::monodromy_trace(s, l, lattice::TraceKind::tbar)));
        }
        const size_t n = im.g.size() - 1;
        edges = std::max({edges, rel(im.g[0], im.gbar[0]), rel(im.g[n], im.gbar[n])});
    }
    rep.add("evolve_roundtrip", rt, 1e-10);
    rep.add("symplectic_evolve", sym, 1e-6);
    rep.add("im_fit", fit, 1e-10);
    rep.add("im_edges", edges, 1e-10);

    // The Vandermonde fit amplifies evaluation noise; a wider step keeps it below truncation.
    const num::GradientConfig bracket_cfg{num::GradScheme::central_difference, 1e-4};
    double inv = 0;
    for (int n = 2; n <= cfg.involution_max_pairs; ++n) {
        const auto s = random_chain(rng, n, z1, z2);
        std::vector<lattice::ChainFunction> fs;
        for (int k = 0; k <= n; ++k) {
            fs.push_back([k](const lattice::ChainState& c) { return lattice::im_coefficients(c).g[static_cast<size_t>(k)]; });
            fs.push_back([k](const lattice::ChainState& c) { return lattice::im_coefficients(c).gbar[static_cast<size_t>(k)]; });
        }
        for (size_t i = 0; i < fs.size(); ++i)
            for (size_t j = i + 1; j < fs.size(); ++j)
                inv = std::max(inv, std::abs(lattice::chain_poisson_bracket(fs[i], fs[j], s, bracket_cfg)));
    }
    rep.add("involution", inv, 1e-6);

    Residuals zcr;
    for (int t = 0; t < cfg.lattice_trials; ++t) {
        const auto [w1, w2] = sample_weyl_pair(rng);
        std::vector<std::pair<cplx, cplx>> lm;
        for (int k = 0; k < 5; ++k) lm.emplace_back(rng.unit_log(0.4), rng.unit_log(0.4));
        for (const auto& [k, v] : lattice::residual_suite({w1, w2}, lm)) zcr[k] = std::max(zcr[k], v);
    }
    for (const auto& [k, v] : zcr) {
        const double tol = k == "r_matrix_bracket" ? 1e-6 : k == "classical_ybe_r" ? 1e-12 : 1e-10;
        rep.add(k, v, tol);
    }
    return rep;
}

Report classical_suite(const ClassicalConfig& cfg) {
    Report rep;
    rep.suite = "classical";
    rep.merge(classical_map_suite(cfg), "map.");
    rep.merge(classical_lattice_suite(cfg), "lattice.");
    return rep;
}

}  // namespace yb::suites

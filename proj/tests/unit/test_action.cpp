#include <doctest.h>

#include <numbers>

#include "yb/action/lagrangian.hpp"
#include "yb/errors.hpp"
#include "yb/num/gradient.hpp"
#include "yb/suites/suites.hpp"

using namespace yb;
using namespace yb::action;
using num::cplx;

TEST_CASE("dilogarithm values") {
    CHECK(std::abs(li2(0.0)) == 0.0);
    const double x = 1e-4;
    CHECK(std::abs(li2(x) - (x + x * x / 4)) < 1e-12);
    double partial = 0.0;
    const int n = 2000000;
    for (int k = n; k >= 1; --k) partial += 1.0 / (double(k) * k);
    partial += 1.0 / n;  // tail
    CHECK(std::abs(li2(1.0) - partial) < 1e-12);
    CHECK(std::abs(li2(1.0) - std::numbers::pi * std::numbers::pi / 6) < 1e-12);
    // Euler reflection away from the cut.
    const cplx z(0.3, 0.4);
    CHECK(std::abs(li2(z) + li2(1.0 - z) - (std::numbers::pi * std::numbers::pi / 6 - std::log(z) * std::log(1.0 - z))) <
          1e-13);
}

TEST_CASE("lambda pair derivatives") {
    CHECK(std::abs(lambda_pair(0.0, 0.0).dlam + std::log(2.0)) < 1e-15);
    const cplx a(0.2, -0.1);
    const cplx s = std::log(std::exp(-a) + 1.0);
    CHECK(std::abs(lambda_pair(a, s).dlambar) < 1e-14);

    num::Sampler rng(3);
    for (int i = 0; i < 10; ++i) {
        const cplx aa = rng.box(0.5), ss = rng.box(0.5) + 1.0;
        const auto lp = lambda_pair(aa, ss);
        const auto g = num::holo_gradient([&](const std::vector<cplx>& x) { return lambda_pair(aa, x[0]).lam; }, {ss});
        const auto gb =
            num::holo_gradient([&](const std::vector<cplx>& x) { return lambda_pair(aa, x[0]).lambar; }, {ss});
        CHECK(std::abs(g[0] - lp.dlam) < 1e-7);
        CHECK(std::abs(gb[0] - lp.dlambar) < 1e-7);
    }
}

TEST_CASE("density at equal sigmas") {
    const LagrangianParams p{{0.3, 0.1}, {-0.2, 0.05}, {0.3, 0.1}, {-0.2, 0.05}};
    const cplx s(0.4, 0.2);
    const cplx expected = lambda_pair(p.b1 - p.a2, 0.0).lam + lambda_pair(p.a1 - p.b2, 0.0).lam +
                          lambda_pair(p.a1 - p.a2, 0.0).lambar + lambda_pair(p.b1 - p.b2, 0.0).lambar;
    CHECK(std::abs(lagrangian_density(s, s, s, s, p) - expected) < 1e-14);
}

TEST_CASE("gradient of the density against differences") {
    const LagrangianParams p{{0.3, 0.1}, {-0.2, 0.05}, {0.1, -0.1}, {0.25, 0.0}};
    const std::vector<cplx> pt{{0.1, 0.2}, {0.9, -0.1}, {-0.3, 0.1}, {0.6, 0.05}};
    const auto g = lagrangian_gradient(pt[0], pt[1], pt[2], pt[3], p);
    const auto fd = num::holo_gradient(
        [&](const std::vector<cplx>& x) { return lagrangian_density(x[0], x[1], x[2], x[3], p); }, pt);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(g[i] - fd[i]) < 1e-7);
}

TEST_CASE("action of a single plaquette") {
    const LagrangianParams p{{0.3, 0.1}, {-0.2, 0.05}, {0.1, -0.1}, {0.25, 0.0}};
    SigmaField f;
    f.n_sites = 3;
    f.T = 1;
    f.periodic = false;
    f.sigma = {{0.1, 0.0}, {0.2, 0.1}, {0.9, -0.1}, {0.7, 0.0}, {0.6, 0.05}, {-0.3, 0.1}};
    const auto r = action_and_gradient(f, p);
    CHECK(std::abs(r.action - lagrangian_density(f.at(1, 0), f.at(2, 0), f.at(3, 1), f.at(2, 1), p)) < 1e-14);
}

TEST_CASE("stationarity on tau solutions, not on random fields") {
    num::Sampler rng(43);
    const auto in = suites::random_liouville_inputs(rng, 10, 10);
    const auto field = liouville::build_tau(in.alpha, in.beta, in.phi, in.gamma, 10, 10, in.f0, in.g0);
    const auto lat = liouville::uv_from_tau(field, in.z1, in.z2);
    const auto grid = liouville::v_grid_from_tau(lat, 3, 6, 4);
    const auto p = LagrangianParams::from_z(in.z1, in.z2, {0.2, 0.1}, {-0.1, 0.05});
    CHECK(std::abs(p.z1() - in.z1) < 1e-14);
    const auto sig = sigma_from_v(grid, p);
    const auto res = action_and_gradient(sig, p);
    CHECK(res.grad_norm < 1e-8);
    CHECK(eom_residual(grid, in.z1, in.z2) < 1e-10);

    // The analytic gradient agrees with differences of the total action.
    const auto [site, analytic] = *res.gradient.begin();
    const auto fd = num::holo_gradient(
        [&, site = site](const std::vector<cplx>& x) {
            auto f = sig;
            f.at(site.first, site.second) = x[0];
            return action_and_gradient(f, p).action;
        },
        {sig.at(site.first, site.second)});
    CHECK(std::abs(fd[0] - analytic) < 1e-6);

    auto noisy = grid;
    for (auto& v : noisy.v) v *= std::exp(0.05 * rng.box(1.0));
    CHECK(action_and_gradient(sigma_from_v(noisy, p), p).grad_norm > 1e-3);
    const double e1 = eom_residual(noisy, in.z1, in.z2);
    CHECK(e1 > 1e-4);

    // Residual scales linearly with the perturbation.
    auto small = grid;
    for (size_t i = 0; i < small.v.size(); ++i) small.v[i] = grid.v[i] * std::pow(noisy.v[i] / grid.v[i], 0.1);
    const double e2 = eom_residual(small, in.z1, in.z2);
    CHECK(e2 / e1 == doctest::Approx(0.1).epsilon(0.2));
}

TEST_CASE("constant v with unit z") {
    liouville::VGrid g;
    g.n_sites = 5;
    g.T = 3;
    g.v.assign(20, cplx(1.7, 0.3));
    CHECK(eom_residual(g, 1.0, 1.0) < 1e-15);
}

TEST_CASE("generating function") {
    num::Sampler rng(47);
    const LagrangianParams p = LagrangianParams::from_z(rng.unit_log(0.3), rng.unit_log(0.3), {0.2, 0.1}, {-0.1, 0.05});
    for (int i = 0; i < 10; ++i) {
        const classical::WeylTriple w1{rng.unit_log(0.3), rng.unit_log(0.3), p.z1()},
            w2{rng.unit_log(0.3), rng.unit_log(0.3), p.z2()};
        try {
            const auto g = generating_check(w1, w2, p);
            for (double r : g.residual) CHECK(r < 1e-8);
        } catch (const BranchAmbiguity&) {
        }
    }
    classical::WeylTriple w1{p.z1(), {1.1, 0.2}, p.z1()}, w2{{0.8, -0.1}, {0.9, 0.3}, p.z2()};
    const auto g = generating_check(w1, w2, p);
    for (double r : g.residual) CHECK(r < 1e-8);
}

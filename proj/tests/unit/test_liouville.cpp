#include <doctest.h>

#include "yb/errors.hpp"
#include "yb/liouville/tau.hpp"
#include "yb/suites/suites.hpp"

using namespace yb;
using namespace yb::liouville;
using num::cplx;

TEST_CASE("trivial field") {
    const auto f = build_tau(std::vector<cplx>(4, 0.0), std::vector<cplx>(5, 0.0), std::vector<cplx>(5, 1.0),
                             std::vector<cplx>(6, 1.0), 4, 5, 0.0, 0.0);
    for (auto t : f.tau) CHECK(t == cplx(1.0));
    CHECK(liouville_residual(f) == 0.0);
}

TEST_CASE("unit coefficients give 1 - x1 x2") {
    const int n = 6;
    const auto f = build_tau(std::vector<cplx>(n, 1.0), std::vector<cplx>(n, 1.0), std::vector<cplx>(n + 1, 1.0),
                             std::vector<cplx>(n + 1, 1.0), n, n, 0.0, 0.0, true);
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) CHECK(std::abs(f.at(a, b) - cplx(1.0 - a * b)) < 1e-14);
    CHECK(liouville_residual(f) < 1e-14);
}

TEST_CASE("random 16x16 field") {
    num::Sampler rng(41);
    const auto in = suites::random_liouville_inputs(rng, 16, 16);
    const auto f = build_tau(in.alpha, in.beta, in.phi, in.gamma, 16, 16, in.f0, in.g0);
    CHECK(liouville_residual(f) < 1e-12);

    auto noisy = f;
    for (auto& t : noisy.tau) t += 1e-3 * rng.box(1.0);
    const double r = liouville_residual(noisy);
    CHECK(r > 1e-5);
    CHECK(r < 1e-1);

    const auto lat = uv_from_tau(f, in.z1, in.z2);
    const auto h = hamiltonian_residuals(lat);
    for (const auto& [k, v] : h) CHECK_MESSAGE(v < 1e-10, k);
    CHECK(h.at("tau_consistency_uuuu") < 1e-13);

    const auto rep = suites::liouville_suite(f, in.z1, in.z2);
    for (const auto& name : rep.failures()) FAIL_CHECK(name);
    CHECK(rep.residuals.at("evolution_consistency") < 1e-9);
}

TEST_CASE("zero tau is reported with its cell") {
    // 1 + f g vanishes at x = (1, 1): f1 = -1, g1 = 1.
    try {
        build_tau({1.0}, {1.0}, {1.0, 1.0}, {1.0, 1.0}, 1, 1, 0.0, 0.0);
        FAIL("expected DegenerateSolution");
    } catch (const DegenerateSolution& e) {
        CHECK(e.x1() == 1);
        CHECK(e.x2() == 1);
    }
}

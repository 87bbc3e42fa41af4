#include <doctest.h>

#include "yb/classical/lattice.hpp"
#include "yb/errors.hpp"
#include "yb/num/poly_fit.hpp"
#include "yb/suites/suites.hpp"

using namespace yb;
using namespace yb::lattice;
using num::cplx;

namespace {

ChainState identity_chain(int n_pairs) {
    ChainState s;
    s.n_pairs = n_pairs;
    s.u.assign(2 * n_pairs, 1.0);
    s.v.assign(2 * n_pairs, 1.0);
    return s;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST_CASE("Lax matrices") {
    const classical::ClassicalTriple one{1.0, 0.0, 0.0};
    CHECK(num::max_abs_diff(lax_matrix(one, LaxKind::plus).matrix, num::identity(2)) < 1e-15);
    CHECK(num::max_abs_diff(lax_matrix(one, LaxKind::minus).matrix, num::identity(2)) < 1e-15);

    num::Sampler rng(2);
    for (int i = 0; i < 10; ++i) {
        const classical::ClassicalTriple x{rng.unit_log(0.5), rng.box(0.5), rng.box(0.5)};
        CHECK(std::abs(lax_matrix(x, LaxKind::plus).matrix.determinant() - 1.0) < 1e-14);
        const auto l1 = lax_matrix(x, LaxKind::lambda, 1.0).matrix;
        CHECK(num::max_abs_diff(l1, lax_matrix(x, LaxKind::plus).matrix - lax_matrix(x, LaxKind::minus).matrix) < 1e-15);
    }
    CHECK_THROWS_AS(lax_matrix({0.0, 0.0, 0.0}, LaxKind::plus), InvalidPoint);
}

TEST_CASE("identity sites") {
    const auto s = identity_chain(1);
    const cplx l(1.3, 0.4);
    CHECK(std::abs(monodromy_trace(s, l, TraceKind::t) - 2.0 * (l - 1.0 / l)) < 1e-14);
    const auto im = im_coefficients(s);
    REQUIRE(im.g.size() == 2);
    CHECK(std::abs(im.g[0] - 2.0) < 1e-12);
    CHECK(std::abs(im.g[1] + 2.0) < 1e-12);

    const auto res = residual_suite({{1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}}, {{cplx(1.2, 0.1), cplx(0.7, -0.3)}});
    for (const auto& [k, v] : res) CHECK_MESSAGE(v < 1e-12, k);
}

TEST_CASE("u = z at odd sites leaves u unchanged") {
    num::Sampler rng(6);
    auto s = suites::random_chain(rng, 1, cplx(1.2, 0.3), cplx(0.9, -0.2));
    s.u[0] = s.z1;
    const auto t = evolve_step(s);
    // The g = 1 cells only shift the u's along the chain.
    std::vector<cplx> us = s.u, ts = t.u;
    std::sort(us.begin(), us.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
    std::sort(ts.begin(), ts.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
    for (size_t i = 0; i < us.size(); ++i) CHECK(std::abs(us[i] - ts[i]) < 1e-13);
}

TEST_CASE("evolution: inverse, conservation, polynomial structure") {
    num::Sampler rng(17);
    const auto s = suites::random_chain(rng, 2, cplx(1.3, 0.2), cplx(0.8, -0.3));
    const auto back = evolve_step_inverse(evolve_step(s));
    for (int i = 0; i < s.sites(); ++i) {
        CHECK(std::abs(back.u[i] - s.u[i]) < 1e-10);
        CHECK(std::abs(back.v[i] - s.v[i]) < 1e-10);
    }

    const auto s4 = suites::random_chain(rng, 4, cplx(1.3, 0.2), cplx(0.8, -0.3));
    std::vector<cplx> lams;
    for (int k = 0; k < 8; ++k) lams.push_back(rng.unit_log(0.4));
    auto cur = s4;
    for (int t = 0; t < 100; ++t) cur = evolve_step(cur);
    for (auto l : lams) {
        CHECK(rel(monodromy_trace(cur, l, TraceKind::t), monodromy_trace(s4, l, TraceKind::t)) < 1e-8);
        CHECK(rel(monodromy_trace(cur, l, TraceKind::tbar), monodromy_trace(s4, l, TraceKind::tbar)) < 1e-8);
    }
    CHECK(cur.z1 == s4.z1);
    CHECK(cur.z2 == s4.z2);

    const auto im = im_coefficients(s4);
    for (auto l : lams) {
        CHECK(rel(num::eval_poly_lambda2(im.g, l, 4), monodromy_trace(s4, l, TraceKind::t)) < 1e-12);
    }
    CHECK(rel(im.g.front(), im.gbar.front()) < 1e-10);
    CHECK(rel(im.g.back(), im.gbar.back()) < 1e-10);
}

TEST_CASE("involution of fitted coefficients, N = 2") {
    num::Sampler rng(23);
    const auto s = suites::random_chain(rng, 2, cplx(1.3, 0.2), cplx(0.8, -0.3));
    std::vector<ChainFunction> fs;
    for (int n = 0; n <= 2; ++n) {
        fs.push_back([n](const ChainState& c) { return im_coefficients(c).g[n]; });
        fs.push_back([n](const ChainState& c) { return im_coefficients(c).gbar[n]; });
    }
    const num::GradientConfig cfg{num::GradScheme::central_difference, 1e-4};
    for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = i + 1; j < fs.size(); ++j) CHECK(std::abs(chain_poisson_bracket(fs[i], fs[j], s, cfg)) < 1e-6);
}

TEST_CASE("evolution Jacobian is canonical") {
    num::Sampler rng(29);
    const auto s = suites::random_chain(rng, 2, cplx(1.3, 0.2), cplx(0.8, -0.3));
    const auto J = evolve_log_jacobian(s);
    const auto w = classical::canonical_form(4);
    CHECK(num::max_abs_diff(J * w * J.transpose(), w) < 1e-6);
}

TEST_CASE("ZCR, r-matrix bracket and CYBE on random pairs") {
    num::Sampler rng(31);
    const classical::WeylPair pair{{rng.unit_log(0.5), rng.unit_log(0.5), rng.unit_log(0.5)},
                                   {rng.unit_log(0.5), rng.unit_log(0.5), rng.unit_log(0.5)}};
    std::vector<std::pair<cplx, cplx>> lm;
    for (int i = 0; i < 5; ++i) lm.emplace_back(rng.unit_log(0.5), rng.unit_log(0.5));
    const auto res = residual_suite(pair, lm);
    for (const auto& [k, v] : res) {
        if (k.rfind("zcr", 0) == 0) CHECK_MESSAGE(v < 1e-10, k);
        if (k.rfind("r_bracket", 0) == 0) CHECK_MESSAGE(v < 1e-6, k);
    }
    CHECK(cybe_residual(cplx(1.3, 0.2), cplx(0.7, -0.4)) < 1e-12);
}

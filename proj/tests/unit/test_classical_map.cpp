#include <doctest.h>

#include "yb/classical/map.hpp"
#include "yb/num/random.hpp"

using namespace yb;
using namespace yb::classical;
using num::cplx;

namespace {

ClassicalTriple random_triple(num::Sampler& rng) { return {rng.unit_log(0.5), 0.5 * rng.box(1.0), 0.5 * rng.box(1.0)}; }
WeylTriple random_weyl(num::Sampler& rng) { return {rng.unit_log(0.5), rng.unit_log(0.5), rng.unit_log(0.5)}; }

double dist(const ClassicalTriple& a, const ClassicalTriple& b) {
    return std::max({std::abs(a.k - b.k), std::abs(a.e - b.e), std::abs(a.f - b.f)});
}

}  // namespace

TEST_CASE("casimir values") {
    CHECK(std::abs(casimir({2.0, 0.0, 0.0}) - 2.5) < 1e-15);
    CHECK(std::abs(casimir({1.0, 0.0, 0.0}) - 2.0) < 1e-15);
}

TEST_CASE("map with e1 = f2 = 0") {
    const ClassicalTriple x1{cplx(1.2, 0.3), 0.0, cplx(0.4, -0.2)}, x2{cplx(0.7, -0.1), cplx(-0.3, 0.5), 0.0};
    const auto [y1, y2] = yb_map_kef(x1, x2);
    CHECK(dist(y1, {x1.k, 0.0, x1.f / x2.k}) < 1e-15);
    CHECK(dist(y2, {x2.k, x1.k * x2.e, 0.0}) < 1e-15);
}

TEST_CASE("random pairs: round trip, casimirs, YBE") {
    num::Sampler rng(21);
    for (int i = 0; i < 50; ++i) {
        const auto x1 = random_triple(rng), x2 = random_triple(rng), x3 = random_triple(rng);
        const auto [y1, y2] = yb_map_kef(x1, x2);
        const auto [w1, w2] = yb_map_kef(y1, y2, Direction::inverse);
        CHECK(dist(w1, x1) < 1e-11);
        CHECK(dist(w2, x2) < 1e-11);
        CHECK(std::abs(casimir(y1) - casimir(x1)) < 1e-11);
        CHECK(std::abs(casimir(y2) - casimir(x2)) < 1e-11);

        // R12 R13 R23 = R23 R13 R12 acting on (x1, x2, x3).
        auto lhs = [&] {
            auto [a1, a2] = yb_map_kef(x2, x3);
            auto [b1, b3] = yb_map_kef(x1, a2);
            auto [c1, c2] = yb_map_kef(b1, a1);
            return std::array<ClassicalTriple, 3>{c1, c2, b3};
        }();
        auto rhs = [&] {
            auto [a1, a2] = yb_map_kef(x1, x2);
            auto [b1, b3] = yb_map_kef(a1, x3);
            auto [c2, c3] = yb_map_kef(a2, b3);
            return std::array<ClassicalTriple, 3>{b1, c2, c3};
        }();
        double r = 0.0;
        for (int s = 0; s < 3; ++s) r = std::max(r, dist(lhs[s], rhs[s]));
        CHECK(r < 1e-9);
    }
}

TEST_CASE("coproduct slots and intertwining") {
    num::Sampler rng(3);
    const auto x1 = random_triple(rng), x2 = random_triple(rng);
    const ClassicalTriple one{1.0, 0.0, 0.0};
    CHECK(dist(coproduct_pair(x1, one), x1) < 1e-15);
    CHECK(dist(coproduct_pair(one, x2), x2) < 1e-15);
    const auto [y1, y2] = yb_map_kef(x1, x2);
    CHECK(dist(coproduct_pair(x2, x1), coproduct_pair(y1, y2)) < 1e-12);
}

TEST_CASE("antipode and counit") {
    num::Sampler rng(4);
    const auto x = random_triple(rng);
    CHECK(dist(hopf_unary(hopf_unary(x, Unary::antipode), Unary::antipode), x) < 1e-14);
    CHECK(dist(hopf_unary({1.0, 0.0, 0.0}, Unary::antipode), {1.0, 0.0, 0.0}) < 1e-15);
    CHECK(dist(hopf_unary(x, Unary::counit), {1.0, 0.0, 0.0}) == 0.0);
}

TEST_CASE("Weyl embedding") {
    CHECK(dist(weyl_embed({1.0, 1.0, 1.0}), {1.0, 0.0, 0.0}) < 1e-15);
    num::Sampler rng(8);
    for (int i = 0; i < 20; ++i) {
        const auto w = random_weyl(rng);
        CHECK(std::abs(casimir(weyl_embed(w)) - (w.z + 1.0 / w.z)) < 1e-12);
    }
    const cplx z(0.8, 0.3);
    CHECK(std::abs(weyl_embed({z, cplx(1.1, -0.2), z}).e) < 1e-15);
}

TEST_CASE("uv map") {
    num::Sampler rng(9);
    auto w1 = random_weyl(rng);
    const auto w2 = random_weyl(rng);
    SUBCASE("u1 = z1 gives g = 1") {
        w1.u = w1.z;
        CHECK(std::abs(g_cl(w1, w2) - 1.0) < 1e-15);
        const auto [y1, y2] = yb_map_uv(w1, w2);
        CHECK(std::abs(y1.u - w1.u) < 1e-14);
        CHECK(std::abs(y2.u - w2.u) < 1e-14);
    }
    SUBCASE("chart consistency and inverse") {
        for (int i = 0; i < 20; ++i) {
            const auto a = random_weyl(rng), b = random_weyl(rng);
            const auto [y1, y2] = yb_map_uv(a, b);
            const auto [k1, k2] = yb_map_kef(weyl_embed(a), weyl_embed(b));
            CHECK(dist(weyl_embed(y1), k1) < 1e-10);
            CHECK(dist(weyl_embed(y2), k2) < 1e-10);
            const auto [r1, r2] = yb_map_uv(y1, y2, Direction::inverse);
            CHECK(std::abs(r1.u - a.u) + std::abs(r1.v - a.v) + std::abs(r2.u - b.u) + std::abs(r2.v - b.v) < 1e-11);
        }
    }
}

TEST_CASE("canonical brackets and symplecticity") {
    num::Sampler rng(10);
    const WeylPair pt{random_weyl(rng), random_weyl(rng)};
    auto lu1 = [](const WeylPair& p) { return std::log(p.first.u); };
    auto lv1 = [](const WeylPair& p) { return std::log(p.first.v); };
    auto lv2 = [](const WeylPair& p) { return std::log(p.second.v); };
    CHECK(std::abs(poisson_bracket_numeric(lu1, lv1, pt) - 1.0) < 1e-6);
    CHECK(std::abs(poisson_bracket_numeric(lu1, lv2, pt)) < 1e-6);

    const auto J = log_jacobian_uv(pt);
    const auto w = canonical_form(2);
    CHECK(num::max_abs_diff(J * w * J.transpose(), w) < 1e-6);

    // Same statement through brackets of the output components.
    auto comp = [](int i) {
        return PairFunction([i](const WeylPair& p) {
            const auto [y1, y2] = yb_map_uv(p.first, p.second);
            const cplx v[4] = {y1.u, y1.v, y2.u, y2.v};
            return std::log(v[i]);
        });
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(std::abs(poisson_bracket_numeric(comp(i), comp(j), pt) - w(i, j)) < 1e-6);
}

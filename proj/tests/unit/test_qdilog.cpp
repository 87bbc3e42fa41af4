#include <doctest.h>

#include <numbers>
#include <sstream>

#include "yb/errors.hpp"
#include "yb/qdilog/star_triangle.hpp"

using namespace yb;
using namespace yb::qdilog;

namespace {

const DilogParams P = DilogParams::defaults();
constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);

}  // namespace

TEST_CASE("parameters") {
    CHECK(std::abs(P.eta - 0.5 * (P.b + 1.0 / P.b)) < 1e-15);
    CHECK(std::abs(P.q - std::exp(I * kPi * P.b * P.b)) < 1e-15);
    CHECK_THROWS_AS(DilogParams::make(0.5), DomainError);
    CHECK_THROWS_AS(DilogParams::make(1.2 * std::exp(I * 0.3)), DomainError);
}

TEST_CASE("functional equation on a grid") {
    double worst = 0.0;
    for (double x = -2.0; x <= 2.0; x += 0.5) {
        const cplx z(x, 0.05);
        const cplx lhs = log_phi(z - I * P.b / 2.0, P) - log_phi(z + I * P.b / 2.0, P);
        const cplx rhs = std::log(1.0 + std::exp(2.0 * kPi * P.b * z));
        const cplx d = lhs - rhs;
        // Compare modulo 2 pi i.
        worst = std::max(worst, std::abs(d - 2.0 * kPi * I * std::round(d.imag() / (2.0 * kPi))));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("inversion relations and values at zero") {
    for (const cplx z : {cplx(0.3, 0.1), cplx(-1.2, 0.2), cplx(0.7, -0.15)}) {
        CHECK(std::abs(phi(z, P) * phi(-z, P) - std::exp(log_phi_inversion(z, P))) < 1e-8);
        CHECK(std::abs(aux_phi(z, P) * aux_phi(-z, P) - std::exp(log_aux_phi_inversion(z, P))) < 1e-8);
    }
    const cplx phi0 = std::exp(-I * kPi * (1.0 - 2.0 * P.eta * P.eta) / 12.0);
    const cplx aux0 = std::exp(-I * kPi * (1.0 - 8.0 * P.eta * P.eta) / 24.0);
    CHECK(std::abs(phi(0.0, P) - phi0) < 1e-8);
    CHECK(std::abs(aux_phi(0.0, P) - aux0) < 1e-8);
}

TEST_CASE("limits at minus infinity") {
    CHECK(std::abs(phi(-5.0 / std::abs(P.b), P) - 1.0) < 1e-6);
    CHECK(std::abs(aux_phi(-15.0 * std::abs(P.eta), P) - 1.0) < 1e-6);
}

TEST_CASE("quadrature agrees with the product formula") {
    for (const cplx z : {cplx(-0.4, 0.1), cplx(0.2, 0.0), cplx(-1.0, -0.2)}) {
        const cplx a = log_phi(z, P, PhiMethod::quadrature), b = log_phi(z, P, PhiMethod::product);
        CHECK(std::abs(std::exp(a) - std::exp(b)) < 1e-8);
    }
}

TEST_CASE("phi residual table") {
    const auto r = phi_residuals(P);
    CHECK(r.at("functional_equation") < 1e-6);
    CHECK(r.at("inversion") < 1e-8);
    CHECK(r.at("aux_inversion") < 1e-8);
    CHECK(r.at("limit") < 1e-6);
}

TEST_CASE("CSV export") {
    std::ostringstream os;
    write_csv(os, {cplx(0.1, 0.0), cplx(0.2, 0.0)}, [](cplx z) { return phi(z, P); });
    CHECK(os.str().find("re_z") != std::string::npos);
}

TEST_CASE("kernel function identities") {
    const cplx a(0.15, 0.05);
    for (const cplx s : {cplx(0.3, 0.0), cplx(-0.7, 0.1)}) {
        CHECK(std::abs(kernel_func(KernelKind::W, a, s, P) - kernel_func(KernelKind::W, a, -s, P)) < 1e-9);
        CHECK(std::abs(kernel_func(KernelKind::Wbar, a, s, P) - kernel_func(KernelKind::W, P.eta - a, s, P)) < 1e-9);
    }
    const auto id = kernel_identity_residuals(P);
    CHECK(id.at("fourier_duality") < 1e-4);
    CHECK(std::abs(fourier_v(a, 0.3, P) - kernel_func(KernelKind::Vbar, a, 0.3, P)) < 1e-4);
}

TEST_CASE("kernel recurrences") {
    num::Sampler rng(19);
    for (const auto& [k, v] : recurrence_residuals(P, rng, 50)) CHECK_MESSAGE(v < 1e-5, k);
}

TEST_CASE("quasiclassical errors shrink with b") {
    const cplx ph = std::exp(I * kPi / 8.0);
    const auto t = quasiclassical_table({0.25 * ph, 0.15 * ph, 0.1 * ph});
    CHECK(t.decreasing);
    CHECK(t.rows[2].err_v < 5.0 * t.rows[0].err_v);
    // Roughly quadratic in |b|.
    CHECK(t.rows[2].err_kernel / t.rows[0].err_kernel < 0.3);

    QuasiPoint sym;
    sym.s1 = sym.s2 = sym.s1p = sym.s2p = 0.0;
    sym.b1 = sym.a1;
    sym.b2 = sym.a2;
    const auto ts = quasiclassical_table({0.25 * ph, 0.1 * ph}, sym);
    CHECK(std::isfinite(ts.rows[1].err_kernel));
    CHECK(ts.rows[1].err_kernel < ts.rows[0].err_kernel);
}

TEST_CASE("three-leg relation") {
    num::Sampler rng(37);
    const auto sweep = three_leg_sweep(rng, 100);
    CHECK(sweep.max_residual < 1e-8);
    const StarParams sp{{0.1, 0.05}, {-0.2, 0.1}, {0.3, -0.05}, {0.6, 0.1}, {0.8, -0.1}};
    const auto r = star_triangle_residual(StarTriangle::three_leg, sp, P);
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.residual < 1e-8);
}

TEST_CASE("star-triangle quadratures report pass or explicit skip") {
    const StarParams sp{{0.1, 0.0}, {-0.2, 0.0}, {0.3, 0.0}, {0.15, 0.0}, {0.2, 0.0}};
    for (auto w : {StarTriangle::fvstr, StarTriangle::str1, StarTriangle::str2}) {
        const auto r = star_triangle_residual(w, sp, P);
        CHECK(r.status != CheckStatus::fail);
        if (r.status == CheckStatus::pass) CHECK(r.residual < kStretchTolerance);
        if (r.status == CheckStatus::skipped) CHECK(!r.note.empty());
    }
    // Near-trivial weight.
    const StarParams small{{0.1, 0.0}, {-0.2, 0.0}, {0.3, 0.0}, {1e-3, 0.0}, {0.2, 0.0}};
    const auto r = star_triangle_residual(StarTriangle::str1, small, P);
    CHECK(r.status != CheckStatus::fail);
}

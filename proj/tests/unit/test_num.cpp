#include <doctest.h>

#include <cmath>

#include "yb/errors.hpp"
#include "yb/num/gradient.hpp"
#include "yb/num/poly_fit.hpp"
#include "yb/num/quadrature.hpp"
#include "yb/num/random.hpp"

using namespace yb;
using num::cplx;

TEST_CASE("constant polynomial fit") {
    const auto c = num::fit_poly_lambda2({1.0, 2.0}, {7.0, 7.0}, 0, 0);
    REQUIRE(c.size() == 1);
    CHECK(std::abs(c[0] - 7.0) < 1e-14);
}

TEST_CASE("monomial fit lambda + 3/lambda") {
    std::vector<cplx> ls{1.0, 2.0}, vs;
    for (auto l : ls) vs.push_back(l + 3.0 / l);
    const auto c = num::fit_poly_lambda2(ls, vs, 1, 1);
    REQUIRE(c.size() == 2);
    CHECK(std::abs(c[0] - 1.0) < 1e-13);
    CHECK(std::abs(c[1] - 3.0) < 1e-13);
}

TEST_CASE("random cubic recovered from four samples") {
    num::Sampler rng(5);
    std::vector<cplx> coeffs;
    for (int i = 0; i < 4; ++i) coeffs.push_back(rng.box(1.0));
    const auto ls = num::lambda_grid(4);
    std::vector<cplx> vs;
    for (auto l : ls) {
        cplx v = 0.0;
        for (int n = 0; n < 4; ++n) v += coeffs[n] * std::pow(l, -2.0 * n);
        vs.push_back(std::pow(l, 3) * v);
    }
    const auto fit = num::fit_poly_lambda2(ls, vs, 3, 3);
    for (int n = 0; n < 4; ++n) CHECK(std::abs(fit[n] - coeffs[n]) < 1e-12);
}

TEST_CASE("matrix-valued fit matches scalar fit entrywise") {
    std::vector<num::LambdaSample> samples;
    for (auto l : num::lambda_grid(2)) {
        num::ComplexMatrix m(2, 2);
        m << l + 1.0 / l, 2.0 * l, cplx(0, 1) / l, l - 4.0 / l;
        samples.push_back({l, m});
    }
    const auto c = num::fit_poly_lambda2(samples, 1, 1);
    CHECK(std::abs(c[0](0, 0) - 1.0) < 1e-13);
    CHECK(std::abs(c[1](1, 1) + 4.0) < 1e-13);
    CHECK(std::abs(c[1](1, 0) - cplx(0, 1)) < 1e-13);
}

TEST_CASE("central differences") {
    const auto g = num::fd_gradient(num::RealFunction([](const std::vector<double>& x) { return cplx(x[0] * x[0]); }),
                                    {3.0});
    CHECK(std::abs(g[0] - 6.0) < 1e-9);
    const auto h = num::fd_gradient(num::RealFunction([](const std::vector<double>& x) { return cplx(x[0] * x[1]); }),
                                    {2.0, 5.0});
    CHECK(std::abs(h[0] - 5.0) < 1e-9);
    CHECK(std::abs(h[1] - 2.0) < 1e-9);
}

TEST_CASE("complex step") {
    num::GradientConfig cfg{num::GradScheme::complex_step, 1e-20};
    const auto g = num::fd_gradient(
        num::HoloFunction([](const std::vector<cplx>& x) { return std::exp(x[0]) * x[1]; }), {0.3, 2.0}, cfg);
    CHECK(std::abs(g[0] - 2.0 * std::exp(0.3)) < 1e-14);
    CHECK(std::abs(g[1] - std::exp(0.3)) < 1e-14);
}

TEST_CASE("kron, inverse and guards") {
    num::ComplexMatrix a(2, 2), b(2, 2);
    a << 1, 2, 3, 4;
    b << 0, 1, 1, 0;
    const auto k = num::kron(a, b);
    CHECK(k(0, 1) == cplx(1.0));
    CHECK(k(3, 2) == cplx(4.0));
    CHECK(num::max_abs_diff(num::inverse(a) * a, num::identity(2)) < 1e-14);
    num::ComplexMatrix s(2, 2);
    s << 1, 1, 1, 1;
    CHECK_THROWS_AS(num::inverse(s), IllConditioned);
}

TEST_CASE("swap matrix exchanges factors") {
    num::ComplexMatrix a = num::ComplexMatrix::Random(2, 2), b = num::ComplexMatrix::Random(3, 3);
    const auto p = num::swap_matrix(2, 3);
    CHECK(num::max_abs_diff(p * num::kron(a, b) * p.transpose(), num::kron(b, a)) < 1e-14);
}

TEST_CASE("Gauss-Legendre panels") {
    const cplx v = num::integrate_panels([](cplx x) { return std::exp(x); }, 0.0, cplx(1.0, 1.0), 4);
    CHECK(std::abs(v - (std::exp(cplx(1.0, 1.0)) - 1.0)) < 1e-14);
    double w = 0.0;
    for (const auto& [x, wt] : num::gauss_legendre_64()) w += wt;
    CHECK(std::abs(w - 2.0) < 1e-14);
}

#include <doctest.h>

#include "yb/errors.hpp"
#include "yb/num/random.hpp"
#include "yb/quantum/rep.hpp"

using namespace yb;
using namespace yb::quantum;

namespace {

const QParams P = QParams::defaults();

ComplexMatrix m2(cplx a, cplx b, cplx c, cplx d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace

TEST_CASE("spin 1/2 matrices") {
    const auto r = spin_rep(1, P);
    const cplx q = P.q(), dq = q - 1.0 / q;
    CHECK(num::max_abs_diff(r.H, m2(1, 0, 0, -1)) == 0.0);
    CHECK(num::max_abs_diff(r.E, m2(0, dq, 0, 0)) < 1e-15);
    CHECK(num::max_abs_diff(r.F, m2(0, 0, dq, 0)) < 1e-15);
    CHECK(num::max_abs_diff(r.K, m2(q, 0, 0, 1.0 / q)) < 1e-15);
    CHECK(num::max_abs_diff(r.K_half, m2(P.q_half, 0, 0, 1.0 / P.q_half)) < 1e-15);
}

TEST_CASE("relations and Casimir for several spins") {
    for (int tj : {1, 2, 3, 4}) {
        const auto r = spin_rep(tj, QParams::from_q({0.5, 0.6}));
        for (const auto& [k, v] : rep_relation_residuals(r)) CHECK_MESSAGE(v < 1e-13, k);
        const auto c = casimir_matrix(r);
        CHECK(num::max_abs_diff(c, r.casimir_scalar() * num::identity(r.dim)) < 1e-12);
    }
}

TEST_CASE("root of unity is rejected") {
    CHECK_THROWS_AS(check_generic(QParams::from_q(std::polar(1.0, 3.14159265358979323846 / 2)), 2), GenericityError);
}

TEST_CASE("universal R for spin 1/2 is the block R+") {
    const auto r = spin_rep(1, P);
    const cplx q = P.q();
    ComplexMatrix rp = ComplexMatrix::Zero(4, 4);
    rp(0, 0) = q;
    rp(1, 1) = 1.0;
    rp(1, 2) = q - 1.0 / q;
    rp(2, 2) = 1.0;
    rp(3, 3) = q;
    rp /= P.q_half;
    CHECK(num::max_abs_diff(universal_r(r, r), rp) < 1e-12);
    CHECK(num::max_abs_diff(lax_and_r6v(r, 1.0).L_plus, rp) < 1e-12);
}

TEST_CASE("universal R against a truncated product") {
    const auto p = QParams::from_q({0.4, 0.1});
    const cplx q = p.q();
    for (int tj : {1, 2}) {
        const auto a = spin_rep(tj, p), b = spin_rep(1, p);
        const ComplexMatrix x = num::kron(a.E, b.F);
        const auto dim = x.rows();
        ComplexMatrix prod = num::identity(dim);
        for (int k = 0; k <= 30; ++k) prod = prod * (num::identity(dim) - std::pow(q, 2 * k + 1) * x);
        ComplexMatrix diag = ComplexMatrix::Zero(dim, dim);
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < b.dim; ++j)
                diag(i * b.dim + j, i * b.dim + j) = std::pow(p.q_half, a.H(i, i).real() * b.H(j, j).real());
        CHECK(num::max_abs_diff(universal_r(a, b), diag * prod) < 1e-10);
    }
}

TEST_CASE("trivial rep in either slot") {
    const auto t = trivial_rep(P), r = spin_rep(2, P);
    CHECK(num::max_abs_diff(universal_r(t, r), num::identity(3)) < 1e-15);
    CHECK(num::max_abs_diff(universal_r(r, t), num::identity(3)) < 1e-15);
}

TEST_CASE("six-vertex R at q^{1/2} is a multiple of the permutation") {
    const auto r = spin_rep(1, P);
    const auto blocks = lax_and_r6v(r, P.q_half);
    const cplx q = P.q();
    CHECK(num::max_abs_diff(blocks.R_lambda, (q - 1.0 / q) * num::swap_matrix(2, 2)) < 1e-12);
    CHECK(num::max_abs_diff(r6v(P, P.q_half), (q - 1.0 / q) * num::swap_matrix(2, 2)) < 1e-12);
}

TEST_CASE("L+ is upper triangular with unit quantum determinant") {
    const auto r = spin_rep(2, P);
    const auto L = lax_plus(r.K_half, r.F);
    const auto d = r.dim;
    CHECK(num::max_abs(L.block(d, 0, d, d)) == 0.0);
    CHECK(num::max_abs_diff(L.block(0, 0, d, d) * L.block(d, d, d, d), num::identity(d)) < 1e-14);
}

TEST_CASE("quantum map residuals") {
    for (int tj : {1, 2, 3}) {
        const auto res = quantum_map_residual(spin_rep(tj, P));
        for (const auto& [k, v] : res) CHECK_MESSAGE(v < (tj == 1 ? 1e-12 : 1e-10), k);
        if (tj == 1) CHECK(res.at("map_E1") < 1e-13);
    }
}

TEST_CASE("Hopf suite at spin 1/2") {
    const auto res = hopf_residual_suite(spin_rep(1, P));
    CHECK(res.at("intertwining_E") < 1e-13);
    CHECK(res.at("intertwining_F") < 1e-13);
    CHECK(res.at("intertwining_K") < 1e-13);
    CHECK(res.at("hexagon_1") < 1e-12);
    CHECK(res.at("hexagon_2") < 1e-12);
    CHECK(res.at("counit_r_left") < 1e-15);
    CHECK(res.at("counit_r_right") < 1e-15);
    for (const auto& [k, v] : res) CHECK_MESSAGE(v < 1e-11, k);
}

TEST_CASE("dimension guard") {
    CHECK_THROWS_AS(hopf_residual_suite(spin_rep(16, P)), DimensionGuard);
}

TEST_CASE("RLL and YBE") {
    num::Sampler rng(12);
    std::vector<std::pair<cplx, cplx>> lm;
    for (int i = 0; i < 5; ++i) lm.emplace_back(rng.unit_log(0.5), rng.unit_log(0.5));
    for (int tj : {1, 2}) {
        const auto res = rll_ybe_residual(spin_rep(tj, P), lm);
        for (const auto& [k, v] : res) {
            if (k.rfind("info_", 0) == 0) continue;
            CHECK_MESSAGE(v < (k.rfind("ybe", 0) == 0 ? 1e-10 : 1e-11), k);
        }
        if (tj == 1) {
            CHECK(res.at("ybe") < 1e-12);
            CHECK(res.at("rll_lambda") < 1e-11);
        }
        // The unshifted spectral parameter is a negative control.
        CHECK(res.at("info_rll_lambda_unshifted") > 1e-3);
    }
}

#include <cmath>
#include <numbers>

#include "yb/action/lagrangian.hpp"
#include "yb/errors.hpp"

namespace yb::action {

namespace {

constexpr double kPi2_6 = std::numbers::pi * std::numbers::pi / 6.0;

// B_{2k} / (2k+1)!, k = 1..22.
constexpr double kBern[] = {
    0.027777777777777776,     -0.00027777777777777778,  4.7241118669690098e-06,   -9.1857730746619641e-08,
    1.8978869988971001e-09,   -4.0647616451442256e-11,  8.9216910204564523e-13,   -1.9939295860721074e-14,
    4.5189800296199183e-16,   -1.0356517612181247e-17,  2.395218621026187e-19,    -5.581785874325009e-21,
    1.3091507554183213e-22,   -3.0874198024267403e-24,  7.3159756527022029e-26,   -1.7408456572340009e-27,
    4.1576356446138999e-29,   -9.9621484882846217e-31,  2.3940344248961652e-32,   -5.7683473553673897e-34,
    1.393179479647008e-35,    -3.3721219654850894e-37,
};

// |x| <= 1 and Re x <= 1/2.
cplx li2_core(cplx x) {
    const cplx u = -std::log(1.0 - x);
    const cplx u2 = u * u;
    cplx sum = u - 0.25 * u2;
    cplx p = u;
    for (double c : kBern) {
        p *= u2;
        const cplx term = c * p;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

cplx li2_unit_disk(cplx x) {
    if (x.real() <= 0.5) return li2_core(x);
    return kPi2_6 - std::log(x) * std::log(1.0 - x) - li2_core(1.0 - x);
}

}  // namespace

cplx li2(cplx x) {
    if (x == cplx(0.0)) return 0.0;
    if (x == cplx(1.0)) return kPi2_6;
    if (x.imag() == 0.0 && x.real() > 1.0) throw BranchAmbiguity("li2 evaluated on its cut [1, inf)");
    if (std::abs(x) <= 1.0) return li2_unit_disk(x);
    const cplx l = std::log(-x);
    return -kPi2_6 - 0.5 * l * l - li2_unit_disk(1.0 / x);
}

cplx li2(cplx x, CutSide side) {
    if (!(x.imag() == 0.0 && x.real() > 1.0)) return li2(x);
    const double r = x.real();
    const double re = kPi2_6 - std::log(r) * std::log(r - 1.0) - li2(cplx(1.0 - r, 0.0)).real();
    const double im = std::numbers::pi * std::log(r);
    return {re, side == CutSide::above ? im : -im};
}

}  // namespace yb::action

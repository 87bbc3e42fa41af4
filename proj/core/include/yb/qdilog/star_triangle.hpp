#pragma once

#include <string>

#include "yb/num/random.hpp"
#include "yb/qdilog/kernel.hpp"

namespace yb::qdilog {

enum class StarTriangle { fvstr, str1, str2, three_leg };

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus s);
const char* to_string(StarTriangle w);

struct StarParams {
    cplx a, b, c, alpha, beta;
};

struct StarResult {
    double residual = 0.0;  // |LHS/RHS - 1|, or the three-leg residual
    CheckStatus status = CheckStatus::skipped;
    std::string note;
};

inline constexpr double kStretchTolerance = 1e-3;
inline constexpr double kThreeLegTolerance = 1e-8;

// Integral identities are computed on the real line when the integrand decays
// there; otherwise, or when doubling the range moves the value by more than
// the tolerance, the result is skipped with a note.
StarResult star_triangle_residual(StarTriangle which, const StarParams& sp, const DilogParams& p);

// Stationary point of lambdabar_alpha(s - a) + lambda_{alpha+beta}(s - c) + Lambdabar_beta(s - b),
// found by Newton iteration on finite differences of the action.
struct ThreeLeg {
    cplx sigma;
    double residual;        // three-leg relation at sigma, modulo 2 pi i
    double polynomial;      // exponentiated form, relative
    int iterations;
};

ThreeLeg three_leg_solve(const StarParams& sp, cplx seed);

// Lambdabar_b(s) = s^2/2 + Li2(exp(-s - b)) + Li2(exp(s - b)).
cplx big_lambdabar(cplx beta, cplx sigma);

// Closed-form root sigma of the exponentiated relation, which is linear in e^sigma
// once the e^sigma = 0 factor is removed. Principal log.
cplx three_leg_root(const StarParams& sp);

// Maximum residual over random parameter sets; samples where the iteration
// leaves the principal sheet of Li2 are redrawn and counted.
struct ThreeLegSweep {
    double max_residual = 0.0, max_polynomial = 0.0;
    int samples = 0, redrawn = 0;
};

ThreeLegSweep three_leg_sweep(num::Sampler& rng, int samples);

}  // namespace yb::qdilog

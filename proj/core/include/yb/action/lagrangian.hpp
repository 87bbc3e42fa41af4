#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "yb/classical/map.hpp"
#include "yb/liouville/tau.hpp"
#include "yb/num/matrix.hpp"

namespace yb::action {

using num::cplx;

enum class CutSide { above, below };

// Principal-branch Euler dilogarithm, cut [1, inf).
cplx li2(cplx x);
cplx li2(cplx x, CutSide side);

struct LambdaPair {
    cplx lam, lambar, dlam, dlambar;
};

LambdaPair lambda_pair(cplx a, cplx sigma);

struct LagrangianParams {
    cplx a1, a2, b1, b2;

    cplx z1() const { return -std::exp(b1 - a1); }
    cplx z2() const { return -std::exp(b2 - a2); }
    static LagrangianParams from_z(cplx z1, cplx z2, cplx b1, cplx b2);
};

cplx lagrangian_density(cplx s1, cplx s2, cplx s1p, cplx s2p, const LagrangianParams& p);

// dL/d(s1, s2, s1', s2') from the closed-form derivatives.
std::array<cplx, 4> lagrangian_gradient(cplx s1, cplx s2, cplx s1p, cplx s2p, const LagrangianParams& p);

// sigma_{k,t}, k = 1..n_sites, t = 0..T.
struct SigmaField {
    int n_sites = 0, T = 0;
    bool periodic = true;
    std::vector<cplx> sigma;

    cplx at(int k, int t) const { return sigma[static_cast<size_t>((k - 1) * (T + 1) + t)]; }
    cplx& at(int k, int t) { return sigma[static_cast<size_t>((k - 1) * (T + 1) + t)]; }
    // Number of plaquette columns n = 1..N.
    int n_pairs() const { return periodic ? n_sites / 2 : (n_sites - 1) / 2; }
    void validate() const;
};

SigmaField sigma_from_v(const liouville::VGrid& g, const LagrangianParams& p);

struct Winding {
    double residual;  // distance of the value from 2 pi i * winding
    long winding;
};

Winding reduce_mod_2pi_i(cplx value);

struct ActionResult {
    cplx action;
    std::map<std::pair<int, int>, cplx> gradient;  // interior sites (k, t)
    double grad_norm;                              // max-norm modulo 2 pi i
    double grad_norm_raw;                          // max-norm without reduction
    std::map<std::pair<int, int>, long> windings;  // nonzero windings only
};

ActionResult action_and_gradient(const SigmaField& field, const LagrangianParams& p);

double eom_residual(const liouville::VGrid& g, cplx z1, cplx z2);

struct GeneratingCheck {
    std::array<double, 4> residual;
    std::array<long, 4> winding;
};

GeneratingCheck generating_check(const classical::WeylTriple& w1, const classical::WeylTriple& w2,
                                 const LagrangianParams& p);

}  // namespace yb::action

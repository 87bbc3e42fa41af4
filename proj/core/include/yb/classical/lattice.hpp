#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "yb/classical/map.hpp"
#include "yb/num/gradient.hpp"
#include "yb/num/matrix.hpp"
#include "yb/residuals.hpp"

namespace yb::lattice {

using classical::ClassicalTriple;
using classical::WeylPair;
using classical::WeylTriple;
using num::ComplexMatrix;
using num::cplx;

struct ChainState {
    int n_pairs = 1;
    std::vector<cplx> u, v;  // 2N entries, site 1 at index 0
    cplx z1{1.0}, z2{1.0};

    int sites() const { return 2 * n_pairs; }
    cplx z_at(int i) const { return i % 2 == 0 ? z1 : z2; }
    WeylTriple site(int i) const { return {u[i], v[i], z_at(i)}; }
    void validate() const;
};

enum class LaxKind { plus, minus, lambda };

struct LaxSample {
    LaxKind kind = LaxKind::plus;
    cplx lambda{1.0};
    ComplexMatrix matrix;
};

// sqrt_k overrides the principal square root of k when given.
LaxSample lax_matrix(const ClassicalTriple& x, LaxKind kind, cplx lambda = 1.0,
                     std::optional<cplx> sqrt_k = std::nullopt);

ChainState evolve_step(const ChainState& s);
ChainState evolve_step_inverse(const ChainState& s);

enum class TraceKind { t, tbar };

cplx monodromy_trace(const ChainState& s, cplx lambda, TraceKind which);

// Square roots of the site k's: principal except the last, which is chosen
// so that their product is the principal root of the product of all k.
std::vector<cplx> aligned_sqrt_k(const std::vector<ClassicalTriple>& xs);

struct ImCoefficients {
    std::vector<cplx> g;     // t(lambda) = lambda^N sum g_n lambda^{-2n}
    std::vector<cplx> gbar;  // (-1)^N tbar(lambda) = lambda^{-N} sum gbar_n lambda^{2n}
};

ImCoefficients im_coefficients(const ChainState& s);

// {F, G} for the canonical brackets {log u_i, log v_j} = delta_ij on the chain.
using ChainFunction = std::function<cplx(const ChainState&)>;
cplx chain_poisson_bracket(const ChainFunction& F, const ChainFunction& G, const ChainState& s,
                           const num::GradientConfig& cfg = {});

// Jacobian of evolve_step in (log u_1, log v_1, ..., log u_2N, log v_2N).
ComplexMatrix evolve_log_jacobian(const ChainState& s, double step = 1e-6);

// Normalized classical r-matrix (lambda r+ - lambda^{-1} r-)/(lambda - lambda^{-1}).
ComplexMatrix r_matrix(cplx lambda);

// ZCR identities for the mapped pair, the r-matrix bracket relation at each
// (lambda, mu) through the Weyl chart of the first site, and the classical
// Yang-Baxter equation for r.
Residuals residual_suite(const WeylPair& pair, const std::vector<std::pair<cplx, cplx>>& lambda_mu);

// Individual families, exposed for targeted tests.
Residuals zcr_residuals(const ClassicalTriple& x1, const ClassicalTriple& x2, const std::vector<cplx>& lambdas);
double r_bracket_residual(const WeylTriple& w, cplx lambda, cplx mu, double step = 1e-3);
double cybe_residual(cplx lambda, cplx mu);

}  // namespace yb::lattice

#pragma once

#include <vector>

#include "yb/quantum/rep.hpp"
#include "yb/residuals.hpp"

namespace yb::quantum {

inline constexpr Eigen::Index kChainGuard = 4096;

// 2N sites carrying the same spin rep; site 1 is the leftmost tensor factor.
struct ChainSpace {
    int n_pairs = 1;
    SpinRep site_rep;

    int sites() const { return 2 * n_pairs; }
    Eigen::Index total_dim() const;
};

// Throws DimensionGuard when d^{2N} exceeds kChainGuard.
ChainSpace make_chain(int n_pairs, const SpinRep& rep);

struct SiteOps {
    ComplexMatrix K, K_half, E, F;
};

std::vector<SiteOps> site_operators(const ChainSpace& space);
std::vector<SiteOps> conjugate_sites(const std::vector<SiteOps>& ops, const ComplexMatrix& m,
                                     const ComplexMatrix& m_inv);

enum class Transfer { T, Tbar };

ComplexMatrix aux_trace(const ComplexMatrix& m);
ComplexMatrix transfer_matrix(const std::vector<SiteOps>& ops, cplx lambda, Transfer which);
ComplexMatrix transfer_matrix(const ChainSpace& space, cplx lambda, Transfer which);

struct ImOperators {
    std::vector<ComplexMatrix> g;     // T = lambda^N sum g_n lambda^{-2n}
    std::vector<ComplexMatrix> gbar;  // (-1)^N Tbar = lambda^{-N} sum gbar_n lambda^{2n}
    ComplexMatrix g0_closed;          // q^P + q^{-P}
    ComplexMatrix g1_closed, gbar1_closed;
};

ImOperators im_operators(const ChainSpace& space);

// Fitted against closed forms, endpoint identities, commutativity of the
// transfer matrices and of all IM operators.
Residuals im_residuals(const ChainSpace& space, const std::vector<cplx>& lambdas);

// U = (prod_n R_n)(prod_n P_n) Sigma with Sigma X_k Sigma^{-1} = X_{k+1}.
ComplexMatrix evolution_matrix(const ChainSpace& space);

// Invariance of T and Tbar under U, local ZCR identities on a site pair and
// the defining relations of the evolved site generators.
Residuals evolution_invariance(const ChainSpace& space, const std::vector<cplx>& lambdas);

std::vector<cplx> spectrum(const ComplexMatrix& m);

}  // namespace yb::quantum

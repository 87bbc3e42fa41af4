#pragma once

#include <vector>

#include "yb/classical/lattice.hpp"
#include "yb/num/matrix.hpp"
#include "yb/residuals.hpp"

namespace yb::liouville {

using num::cplx;

// tau on {0..n1} x {0..n2}, stored row-major in x1.
struct TauField {
    int n1 = 0, n2 = 0;
    std::vector<cplx> tau;
    std::vector<cplx> alpha;  // n1 entries
    std::vector<cplx> beta;   // n2 entries
    std::vector<cplx> phi;    // n1 + 1 entries
    std::vector<cplx> gamma;  // n2 + 1 entries

    cplx at(int x1, int x2) const { return tau[static_cast<size_t>(x1 * (n2 + 1) + x2)]; }
    cplx& at(int x1, int x2) { return tau[static_cast<size_t>(x1 * (n2 + 1) + x2)]; }
};

// Throws DegenerateSolution at the first zero tau unless allow_zero is set;
// the bilinear equation itself is polynomial and tolerates zeros.
TauField build_tau(const std::vector<cplx>& alpha, const std::vector<cplx>& beta, const std::vector<cplx>& phi,
                   const std::vector<cplx>& gamma, int n1, int n2, cplx f0, cplx g0, bool allow_zero = false);

double liouville_residual(const TauField& field);

struct UVCell {
    cplx u1, u2, v1, v2;
};

// Canonical variables on cells {0..n1-1} x {0..n2-1}.
struct UVLattice {
    int n1 = 0, n2 = 0;
    cplx z1, z2;
    std::vector<UVCell> cells;

    const UVCell& at(int x1, int x2) const { return cells[static_cast<size_t>(x1 * n2 + x2)]; }
};

UVLattice uv_from_tau(const TauField& field, cplx z1, cplx z2);

// Four relations linking (u, v) at x, x+e1, x+e2, plus the tau consistency
// u1(x)u2(x) = u1(x+e1)u2(x+e2) and the classical map x -> (x+e1, x+e2).
Residuals hamiltonian_residuals(const UVLattice& lat);

// Site grid v_{k,t}, k = 1..n_sites, t = 0..T; odd k carry v1, even k carry v2.
struct VGrid {
    int n_sites = 0, T = 0;
    bool periodic = false;
    std::vector<cplx> v;  // (k-1) * (T+1) + t

    cplx at(int k, int t) const { return v[static_cast<size_t>((k - 1) * (T + 1) + t)]; }
    cplx& at(int k, int t) { return v[static_cast<size_t>((k - 1) * (T + 1) + t)]; }
};

// Open grid of 2N+1 sites with site 2n-1 at time t read from v1(n-1, t-n+offset)
// and site 2n from v2(n-1, t-n+offset).
VGrid v_grid_from_tau(const UVLattice& lat, int n_pairs, int T, int offset);

// Saw of the lattice at time t as a chain state (periodic closure implied).
lattice::ChainState saw_state(const UVLattice& lat, int n_pairs, int t, int offset);

// Max deviation between evolve_step(saw t) and saw t+1 over sites not fed by
// the periodic wrap.
double evolution_consistency(const UVLattice& lat, int n_pairs, int t, int offset);

}  // namespace yb::liouville

#pragma once

#include <cstdint>

#include "yb/classical/lattice.hpp"
#include "yb/liouville/tau.hpp"
#include "yb/num/random.hpp"
#include "yb/suites/report.hpp"

namespace yb::suites {

struct ClassicalConfig {
    std::uint64_t seed = 1;
    int trials = 500;        // random points per map family
    int chain_pairs = 4;     // conservation run
    int steps = 100;
    int lambda_samples = 8;
    int involution_max_pairs = 4;
    int lattice_trials = 5;  // random chains per lattice family
};

// Set-theoretic YBE, round trips, chart consistency, symplecticity, hexagons,
// coproduct intertwining, counit, antipode, Casimir and z invariance.
Report classical_map_suite(const ClassicalConfig& cfg);

// Evolution symplecticity and inverse, conservation of traces, z and site
// Casimirs, involutivity of fitted IM coefficients, ZCR, r-matrix bracket, CYBE.
Report classical_lattice_suite(const ClassicalConfig& cfg);

Report classical_suite(const ClassicalConfig& cfg);

// Random chain with u, v = exp(U[-s,s] + i U[-s,s]).
lattice::ChainState random_chain(num::Sampler& rng, int n_pairs, num::cplx z1, num::cplx z2, double spread = 0.5);

struct LiouvilleInputs {
    std::vector<num::cplx> alpha, beta, phi, gamma;
    num::cplx f0{0.0}, g0{0.0}, z1{1.0}, z2{1.0};
};

LiouvilleInputs random_liouville_inputs(num::Sampler& rng, int n1, int n2);

// Bilinear equation, Hamiltonian and Lagrangian equations of the induced
// (u, v) lattice, stationarity of the action, agreement with evolve_step.
Report liouville_suite(const liouville::TauField& field, num::cplx z1, num::cplx z2);

struct QuantumConfig {
    int two_j = 1;
    int n_pairs = 2;
    std::uint64_t seed = 1;
    int rll_samples = 5;
};

Report quantum_suite(const QuantumConfig& cfg);

struct QdilogConfig {
    std::uint64_t seed = 1;
    int recurrence_points = 50;
    int three_leg_samples = 100;
};

Report qdilog_suite(const QdilogConfig& cfg);

}  // namespace yb::suites

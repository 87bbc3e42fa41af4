#include <cmath>

#include "yb/errors.hpp"
#include "yb/quantum/lattice.hpp"
#include "yb/suites/suites.hpp"

namespace yb::suites {

using num::cplx;

namespace {

double rll_tolerance(const std::string& key) {
    if (key.rfind("ybe", 0) == 0) return 1e-10;
    if (key.rfind("r6v", 0) == 0 || key.find("_universal") != std::string::npos) return 1e-12;
    return 1e-11;
}

double chain_tolerance(const std::string& key) {
    if (key.rfind("commute_T", 0) == 0) return 1e-12;
    return 1e-10;
}

}  // namespace

Report quantum_suite(const QuantumConfig& cfg) {
    Report rep;
    rep.suite = "quantum";
    const auto p = quantum::QParams::defaults();
    quantum::check_generic(p, cfg.two_j + 2);
    const auto r = quantum::spin_rep(cfg.two_j, p);
    num::Sampler rng(cfg.seed);

    rep.add_all(quantum::rep_relation_residuals(r), 1e-12, "rep.");
    rep.add_all(quantum::quantum_map_residual(r), 1e-10, "map.");

    if (static_cast<Eigen::Index>(r.dim) * r.dim * r.dim <= quantum::kTripleGuard)
        rep.add_all(quantum::hopf_residual_suite(r), 1e-11, "hopf.");
    else
        rep.skipped["hopf"] = "triple product exceeds the dimension guard";

    std::vector<std::pair<cplx, cplx>> lm;
    for (int k = 0; k < cfg.rll_samples; ++k) lm.emplace_back(rng.unit_log(0.5), rng.unit_log(0.5));
    for (const auto& [k, v] : quantum::rll_ybe_residual(r, lm)) rep.add("rll." + k, v, rll_tolerance(k));

    try {
        const auto space = quantum::make_chain(cfg.n_pairs, r);
        std::vector<cplx> lambdas;
        for (int k = 0; k < 3; ++k) lambdas.push_back(rng.unit_log(0.4));
        for (const auto& [k, v] : quantum::im_residuals(space, lambdas)) rep.add("chain." + k, v, chain_tolerance(k));
        for (const auto& [k, v] : quantum::evolution_invariance(space, lambdas))
            rep.add("chain." + k, v, chain_tolerance(k));
    } catch (const DimensionGuard& e) {
        rep.skipped["chain"] = e.what();
    }
    return rep;
}

}  // namespace yb::suites

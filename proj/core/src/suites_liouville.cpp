#include <algorithm>
#include <cmath>

#include "yb/action/lagrangian.hpp"
#include "yb/errors.hpp"
#include "yb/suites/suites.hpp"

namespace yb::suites {

using num::cplx;

LiouvilleInputs random_liouville_inputs(num::Sampler& rng, int n1, int n2) {
    LiouvilleInputs in;
    for (int i = 0; i < n1; ++i) in.alpha.push_back(0.3 * rng.unit_log(0.3));
    for (int i = 0; i < n2; ++i) in.beta.push_back(0.3 * rng.unit_log(0.3));
    for (int i = 0; i <= n1; ++i) in.phi.push_back(rng.unit_log(0.3));
    for (int i = 0; i <= n2; ++i) in.gamma.push_back(rng.unit_log(0.3));
    in.f0 = 0.1 * rng.box(1.0);
    in.g0 = 0.1 * rng.box(1.0);
    in.z1 = rng.unit_log(0.5);
    in.z2 = rng.unit_log(0.5);
    return in;
}

Report liouville_suite(const liouville::TauField& field, cplx z1, cplx z2) {
    Report rep;
    rep.suite = "liouville";
    rep.add("bilinear", liouville::liouville_residual(field), 1e-12);

    auto noisy = field;
    num::Sampler rng(12345);
    for (auto& t : noisy.tau) t += 1e-3 * rng.box(1.0);
    rep.residuals["info_perturbed_bilinear"] = liouville::liouville_residual(noisy);

    const auto lat = liouville::uv_from_tau(field, z1, z2);
    rep.add_all(liouville::hamiltonian_residuals(lat), 1e-10, "hamiltonian_");

    // Open saw of 2N+1 sites kept inside the cell lattice for t = 0..T.
    const int n_pairs = std::min(3, lat.n1 - 1);
    const int offset = n_pairs + 1;
    const int T = lat.n2 - offset;
    if (n_pairs < 1 || T < 2) {
        rep.skipped["lagrangian"] = "grid too small for an interior time slice";
        return rep;
    }
    const auto grid = liouville::v_grid_from_tau(lat, n_pairs, T, offset);
    rep.add("eom", action::eom_residual(grid, z1, z2), 1e-10);

    const auto params = action::LagrangianParams::from_z(z1, z2, {0.2, 0.1}, {-0.1, 0.05});
    const auto res = action::action_and_gradient(action::sigma_from_v(grid, params), params);
    rep.add("action_gradient", res.grad_norm, 1e-8);
    rep.residuals["info_action_gradient_raw"] = res.grad_norm_raw;
    rep.residuals["info_nonzero_windings"] = static_cast<double>(res.windings.size());

    double evo = 0.0;
    for (int t = 0; t < T; ++t) evo = std::max(evo, liouville::evolution_consistency(lat, n_pairs, t, offset));
    rep.add("evolution_consistency", evo, 1e-9);
    return rep;
}

}  // namespace yb::suites

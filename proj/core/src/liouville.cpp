#include "yb/liouville/tau.hpp"

#include <cmath>
#include <string>

#include "yb/classical/map.hpp"
#include "yb/errors.hpp"

namespace yb::liouville {

TauField build_tau(const std::vector<cplx>& alpha, const std::vector<cplx>& beta, const std::vector<cplx>& phi,
                   const std::vector<cplx>& gamma, int n1, int n2, cplx f0, cplx g0, bool allow_zero) {
    if (n1 < 1 || n2 < 1) throw InvalidPoint("grid extents must be positive");
    if (static_cast<int>(alpha.size()) < n1 || static_cast<int>(beta.size()) < n2 ||
        static_cast<int>(phi.size()) < n1 + 1 || static_cast<int>(gamma.size()) < n2 + 1)
        throw InvalidPoint("sequence lengths must be n1, n2, n1+1, n2+1");
    for (auto p : phi)
        if (p == cplx(0.0)) throw InvalidPoint("phi must be nonzero");
    for (auto g : gamma)
        if (g == cplx(0.0)) throw InvalidPoint("gamma must be nonzero");

    TauField out;
    out.n1 = n1;
    out.n2 = n2;
    out.alpha.assign(alpha.begin(), alpha.begin() + n1);
    out.beta.assign(beta.begin(), beta.begin() + n2);
    out.phi.assign(phi.begin(), phi.begin() + n1 + 1);
    out.gamma.assign(gamma.begin(), gamma.begin() + n2 + 1);

    std::vector<cplx> f(n1 + 1), g(n2 + 1);
    f[0] = f0;
    g[0] = g0;
    for (int i = 0; i < n1; ++i) f[i + 1] = f[i] - alpha[i] * phi[i] * phi[i + 1];
    for (int j = 0; j < n2; ++j) g[j + 1] = g[j] + beta[j] * gamma[j] * gamma[j + 1];

    out.tau.resize(static_cast<size_t>((n1 + 1) * (n2 + 1)));
    for (int i = 0; i <= n1; ++i)
        for (int j = 0; j <= n2; ++j) {
            const cplx t = (1.0 + f[i] * g[j]) / (phi[i] * gamma[j]);
            if (!allow_zero && std::abs(t) < 1e-300) throw DegenerateSolution("tau vanishes", i, j);
            out.at(i, j) = t;
        }
    return out;
}

double liouville_residual(const TauField& fl) {
    double m = 0.0;
    for (int i = 0; i < fl.n1; ++i)
        for (int j = 0; j < fl.n2; ++j) {
            const cplx r = fl.at(i + 1, j) * fl.at(i, j + 1) - fl.at(i, j) * fl.at(i + 1, j + 1) -
                           fl.alpha[i] * fl.beta[j];
            m = std::max(m, std::abs(r));
        }
    return m;
}

UVLattice uv_from_tau(const TauField& fl, cplx z1, cplx z2) {
    UVLattice lat;
    lat.n1 = fl.n1;
    lat.n2 = fl.n2;
    lat.z1 = z1;
    lat.z2 = z2;
    lat.cells.resize(static_cast<size_t>(fl.n1 * fl.n2));
    for (int i = 0; i < fl.n1; ++i)
        for (int j = 0; j < fl.n2; ++j) {
            const cplx t = fl.at(i, j), te1 = fl.at(i + 1, j), te2 = fl.at(i, j + 1);
            if (t == cplx(0.0)) throw PoleOfSolution("tau vanishes", i, j);
            const cplx d1 = z1 * t - te2, d2 = z2 * fl.alpha[i];
            if (std::abs(d1) < 1e-300 || std::abs(d2) < 1e-300 || te1 == cplx(0.0))
                throw PoleOfSolution("vanishing denominator in (u, v) reconstruction", i, j);
            auto& c = lat.cells[static_cast<size_t>(i * fl.n2 + j)];
            c.u1 = te2 / t;
            c.u2 = t / te1;
            c.v1 = fl.beta[j] / d1;
            c.v2 = (z2 * t - te1) / d2;
        }
    return lat;
}

Residuals hamiltonian_residuals(const UVLattice& lat) {
    const cplx z1 = lat.z1, z2 = lat.z2;
    double h = 0.0, uu = 0.0, mp = 0.0;
    for (int i = 0; i + 1 < lat.n1; ++i)
        for (int j = 0; j + 1 < lat.n2; ++j) {
            const auto& c = lat.at(i, j);
            const auto& e1 = lat.at(i + 1, j);
            const auto& e2 = lat.at(i, j + 1);
            const cplx v1 = c.v1, v2 = c.v2, v1p = e1.v1, v2p = e2.v2;
            const cplx r[4] = {
                c.u1 - z1 * (1.0 - z2 * v2p / (z1 * v1)) / (1.0 - z2 * v2 / v1),
                c.u2 - (1.0 - z2 * v2 / v1) / (z2 * (1.0 - v2 / v1p)),
                e1.u1 - z1 * (1.0 - v2p / (z1 * v1p)) / (1.0 - v2 / v1p),
                e2.u2 - (1.0 - z2 * v2p / (z1 * v1)) / (z2 * (1.0 - v2p / (z1 * v1p))),
            };
            for (auto x : r) h = std::max(h, std::abs(x));
            uu = std::max(uu, std::abs(c.u1 * c.u2 - e1.u1 * e2.u2));
            const auto w = classical::yb_map_uv({c.u1, c.v1, z1}, {c.u2, c.v2, z2});
            mp = std::max({mp, std::abs(w.first.u - e1.u1), std::abs(w.first.v - e1.v1),
                           std::abs(w.second.u - e2.u2), std::abs(w.second.v - e2.v2)});
        }
    return {{"hamiltonian_relations", h}, {"tau_consistency_uuuu", uu}, {"classical_map_cells", mp}};
}

VGrid v_grid_from_tau(const UVLattice& lat, int n_pairs, int T, int offset) {
    VGrid g;
    g.n_sites = 2 * n_pairs + 1;
    g.T = T;
    g.periodic = false;
    g.v.resize(static_cast<size_t>(g.n_sites * (T + 1)));
    for (int k = 1; k <= g.n_sites; ++k)
        for (int t = 0; t <= T; ++t) {
            const bool odd = k % 2 == 1;
            const int n = odd ? (k + 1) / 2 : k / 2;
            const int x1 = n - 1, x2 = t - n + offset;
            if (x1 < 0 || x1 >= lat.n1 || x2 < 0 || x2 >= lat.n2)
                throw InvalidPoint("site (" + std::to_string(k) + "," + std::to_string(t) +
                                   ") falls outside the tau lattice");
            const auto& c = lat.at(x1, x2);
            g.at(k, t) = odd ? c.v1 : c.v2;
        }
    return g;
}

lattice::ChainState saw_state(const UVLattice& lat, int n_pairs, int t, int offset) {
    lattice::ChainState s;
    s.n_pairs = n_pairs;
    s.z1 = lat.z1;
    s.z2 = lat.z2;
    for (int n = 1; n <= n_pairs; ++n) {
        const int x1 = n - 1, x2 = t - n + offset;
        if (x1 < 0 || x1 >= lat.n1 || x2 < 0 || x2 >= lat.n2)
            throw InvalidPoint("saw leaves the tau lattice at pair " + std::to_string(n));
        const auto& c = lat.at(x1, x2);
        s.u.push_back(c.u1);
        s.v.push_back(c.v1);
        s.u.push_back(c.u2);
        s.v.push_back(c.v2);
    }
    return s;
}

double evolution_consistency(const UVLattice& lat, int n_pairs, int t, int offset) {
    const auto next = lattice::evolve_step(saw_state(lat, n_pairs, t, offset));
    const auto ref = saw_state(lat, n_pairs, t + 1, offset);
    double m = 0.0;
    for (int i = 1; i < next.sites(); ++i)
        m = std::max({m, std::abs(next.u[i] - ref.u[i]) / std::abs(ref.u[i]),
                      std::abs(next.v[i] - ref.v[i]) / std::abs(ref.v[i])});
    return m;
}

}  // namespace yb::liouville

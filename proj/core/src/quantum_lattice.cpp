#include "yb/quantum/lattice.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>

#include "yb/errors.hpp"
#include "yb/num/poly_fit.hpp"

namespace yb::quantum {

using num::identity;
using num::inverse;
using num::kron;

namespace {

double rel_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return num::max_abs_diff(a, b) / std::max(1.0, num::max_abs(b));
}

double rel_comm(const ComplexMatrix& a, const ComplexMatrix& b) {
    return num::max_abs(num::commutator(a, b)) / std::max(1.0, num::max_abs(a) * num::max_abs(b));
}


}  // namespace

Eigen::Index ChainSpace::total_dim() const {
    Eigen::Index d = 1;
    for (int i = 0; i < sites(); ++i) d *= site_rep.dim;
    return d;
}

ChainSpace make_chain(int n_pairs, const SpinRep& rep) {
    if (n_pairs < 1) throw InvalidPoint("chain needs N >= 1");
    ChainSpace s{n_pairs, rep};
    double dim = 1.0;
    for (int i = 0; i < s.sites(); ++i) dim *= rep.dim;
    if (dim > double(kChainGuard))
        throw DimensionGuard("chain dimension " + std::to_string(static_cast<long long>(dim)) + " exceeds " +
                             std::to_string(kChainGuard));
    return s;
}

std::vector<SiteOps> site_operators(const ChainSpace& space) {
    const SpinRep& r = space.site_rep;
    const int n = space.sites();
    std::vector<SiteOps> ops;
    for (int k = 0; k < n; ++k)
        ops.push_back({num::embed(r.K, k, n, r.dim), num::embed(r.K_half, k, n, r.dim), num::embed(r.E, k, n, r.dim),
                       num::embed(r.F, k, n, r.dim)});
    return ops;
}

std::vector<SiteOps> conjugate_sites(const std::vector<SiteOps>& ops, const ComplexMatrix& m,
                                     const ComplexMatrix& m_inv) {
    std::vector<SiteOps> out;
    for (const auto& s : ops)
        out.push_back({m * s.K * m_inv, m * s.K_half * m_inv, m * s.E * m_inv, m * s.F * m_inv});
    return out;
}

ComplexMatrix aux_trace(const ComplexMatrix& m) {
    const Eigen::Index d = m.rows() / 2;
    return m.block(0, 0, d, d) + m.block(d, d, d, d);
}

ComplexMatrix transfer_matrix(const std::vector<SiteOps>& ops, cplx lambda, Transfer which) {
    if (lambda == cplx(0.0)) throw InvalidPoint("lambda = 0 in transfer matrix");
    const Eigen::Index dim = ops.front().K.rows();
    ComplexMatrix m = identity(2 * dim);
    for (std::size_t k = 0; k + 1 < ops.size(); k += 2) {
        const SiteOps& odd = ops[k];
        const SiteOps& even = ops[k + 1];
        if (which == Transfer::T)
            m = m * lax_lambda(odd.K_half, odd.E, odd.F, lambda) * lax_plus(even.K_half, even.F);
        else
            m = m * lax_minus(odd.K_half, odd.E) * lax_lambda(even.K_half, even.E, even.F, lambda);
    }
    return aux_trace(m);
}

ComplexMatrix transfer_matrix(const ChainSpace& space, cplx lambda, Transfer which) {
    if (lambda == cplx(0.0)) throw InvalidPoint("lambda = 0 in transfer matrix");
    // Entries of the partial monodromy act on the sites seen so far only.
    const SpinRep& r = space.site_rep;
    const Eigen::Index d = r.dim;
    const ComplexMatrix lp = lax_plus(r.K_half, r.F), lm = lax_minus(r.K_half, r.E);
    const ComplexMatrix ll = lax_lambda(r.K_half, r.E, r.F, lambda);
    std::array<std::array<ComplexMatrix, 2>, 2> m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = ComplexMatrix::Constant(1, 1, i == j ? 1.0 : 0.0);
    for (int k = 0; k < space.sites(); ++k) {
        const bool odd = k % 2 == 0;
        const ComplexMatrix& l = which == Transfer::T ? (odd ? ll : lp) : (odd ? lm : ll);
        std::array<std::array<ComplexMatrix, 2>, 2> next;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                next[i][j] = kron(m[i][0], l.block(0, j * d, d, d)) + kron(m[i][1], l.block(d, j * d, d, d));
            }
        m = std::move(next);
    }
    return m[0][0] + m[1][1];
}

ImOperators im_operators(const ChainSpace& space) {
    const int n = space.n_pairs;
    const int sites = space.sites();
    const cplx q = space.site_rep.p.q();
    const auto ops = site_operators(space);
    const Eigen::Index dim = space.total_dim();

    ImOperators out;
    const auto lams = num::lambda_grid(n + 1);
    std::vector<num::LambdaSample> ts, tbs;
    for (auto l : lams) {
        ts.push_back({l, transfer_matrix(space, l, Transfer::T)});
        tbs.push_back({l, transfer_matrix(space, l, Transfer::Tbar)});
    }
    out.g = num::fit_poly_lambda2(ts, n, n);
    const auto rev = num::fit_poly_lambda2(tbs, n, n);
    const double sign = n % 2 ? -1.0 : 1.0;
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) out.gbar.push_back(sign * *it);

    ComplexMatrix qp = identity(dim);
    for (const auto& s : ops) qp = qp * s.K_half;
    const ComplexMatrix qpi = inverse(qp);
    out.g0_closed = qp + qpi;

    // Prefix and suffix products of K^{-1}: q^{-H_1-...-H_k} and q^{-H_k-...-H_2N}.
    std::vector<ComplexMatrix> kinv(sites), pre(sites), suf(sites);
    for (int k = 0; k < sites; ++k) kinv[k] = inverse(ops[k].K);
    for (int k = 0; k < sites; ++k) pre[k] = k ? ComplexMatrix(pre[k - 1] * kinv[k]) : kinv[0];
    for (int k = sites - 1; k >= 0; --k) suf[k] = k + 1 < sites ? ComplexMatrix(kinv[k] * suf[k + 1]) : kinv[k];
    std::vector<ComplexMatrix> vp(sites), vm(sites), vbp(sites), vbm(sites);
    for (int k = 0; k < sites; ++k) {
        vp[k] = ops[k].E * pre[k] / q;
        vm[k] = ops[k].F * inverse(pre[k]) / q;
        vbp[k] = ops[k].E * suf[k] / q;
        vbm[k] = ops[k].F * inverse(suf[k]) / q;
    }

    ComplexMatrix g1 = ComplexMatrix::Zero(dim, dim), gb1 = ComplexMatrix::Zero(dim, dim);
    for (int m = 1; m <= n; ++m) {
        const int o = 2 * m - 2;  // site 2m-1
        ComplexMatrix t = qp * kinv[o] + qpi * ops[o].K;
        for (int l = 0; l <= 2 * m - 3; ++l) t -= q * qp * vm[l] * vp[o];
        for (int l = 2 * m - 1; l < sites; ++l) t -= q * qpi * vp[o] * vm[l];
        g1 -= t;

        const int e = 2 * m - 1;  // site 2m
        ComplexMatrix tb = qp * kinv[e] + qpi * ops[e].K;
        for (int l = 0; l <= 2 * m - 2; ++l) tb -= qp * vbp[l] * vbm[e] / q;
        for (int l = 2 * m; l < sites; ++l) tb -= qpi * vbm[e] * vbp[l] / q;
        gb1 -= tb;
    }
    out.g1_closed = g1;
    out.gbar1_closed = gb1;
    return out;
}

Residuals im_residuals(const ChainSpace& space, const std::vector<cplx>& lambdas) {
    const int n = space.n_pairs;
    const ImOperators im = im_operators(space);
    Residuals out;
    out["g0_closed"] = rel_diff(im.g[0], im.g0_closed);
    out["gbar0_closed"] = rel_diff(im.gbar[0], im.g0_closed);
    out["gN_equals_gbarN"] = rel_diff(im.g[n], im.gbar[n]);
    out["g1_closed"] = rel_diff(im.g[1], im.g1_closed);
    out["gbar1_closed"] = rel_diff(im.gbar[1], im.gbar1_closed);

    double tt = 0.0, ttb = 0.0, tbtb = 0.0, fit = 0.0;
    std::vector<ComplexMatrix> t, tb;
    for (auto l : lambdas) {
        t.push_back(transfer_matrix(space, l, Transfer::T));
        tb.push_back(transfer_matrix(space, l, Transfer::Tbar));
        fit = std::max(fit, rel_diff(num::eval_poly_lambda2(im.g, l, n), t.back()));
    }
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) {
            tt = std::max(tt, rel_comm(t[i], t[j]));
            ttb = std::max(ttb, rel_comm(t[i], tb[j]));
            tbtb = std::max(tbtb, rel_comm(tb[i], tb[j]));
        }
    out["commute_T_T"] = tt;
    out["commute_T_Tbar"] = ttb;
    out["commute_Tbar_Tbar"] = tbtb;
    out["fit_T"] = fit;

    std::vector<ComplexMatrix> all = im.g;
    all.insert(all.end(), im.gbar.begin(), im.gbar.end());
    double gc = 0.0;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) gc = std::max(gc, rel_comm(all[i], all[j]));
    out["commute_im"] = gc;
    return out;
}

namespace {

ComplexMatrix cell_product(const ChainSpace& space, const ComplexMatrix& cell) {
    ComplexMatrix m = identity(1);
    for (int c = 0; c < space.n_pairs; ++c) m = kron(m, cell);
    return m;
}

ComplexMatrix shift_matrix(const ChainSpace& space) {
    const int n = space.sites();
    std::vector<int> dims(n, space.site_rep.dim), perm(n);
    for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
    return num::tensor_permutation(dims, perm);
}

}  // namespace

ComplexMatrix evolution_matrix(const ChainSpace& space) {
    const SpinRep& r = space.site_rep;
    const ComplexMatrix R = universal_r(r, r);
    const ComplexMatrix P = num::swap_matrix(r.dim, r.dim);
    return cell_product(space, R) * cell_product(space, P) * shift_matrix(space);
}

Residuals evolution_invariance(const ChainSpace& space, const std::vector<cplx>& lambdas) {
    const SpinRep& r = space.site_rep;
    const cplx q = r.p.q();
    const auto ops = site_operators(space);
    const ComplexMatrix U = evolution_matrix(space);
    const ComplexMatrix Ui = inverse(U);
    const ComplexMatrix R = universal_r(r, r);
    const ComplexMatrix P = num::swap_matrix(r.dim, r.dim);
    const ComplexMatrix literal = shift_matrix(space) * cell_product(space, P * R);
    const ComplexMatrix literal_inv = inverse(literal);
    Residuals out;

    double inv_t = 0.0, inv_tb = 0.0, lit_t = 0.0;
    for (auto l : lambdas) {
        const ComplexMatrix t = transfer_matrix(space, l, Transfer::T);
        const ComplexMatrix tb = transfer_matrix(space, l, Transfer::Tbar);
        inv_t = std::max(inv_t, rel_diff(U * t * Ui, t));
        inv_tb = std::max(inv_tb, rel_diff(U * tb * Ui, tb));
        lit_t = std::max(lit_t, rel_diff(literal * t * literal_inv, t));
    }
    out["invariance_T"] = inv_t;
    out["invariance_Tbar"] = inv_tb;
    out["info_invariance_T_shift_first"] = lit_t;

    // Evolved generators keep the defining relations and stay mutually commuting.
    {
        const auto evolved = conjugate_sites(ops, U, Ui);
        double rel = 0.0, loc = 0.0;
        for (std::size_t k = 0; k < evolved.size(); ++k) {
            const auto& s = evolved[k];
            const ComplexMatrix ki = inverse(s.K);
            rel = std::max({rel, rel_diff(s.K * s.E, q * q * s.E * s.K), rel_diff(s.K * s.F, s.F * s.K / (q * q)),
                            rel_diff(num::commutator(s.E, s.F), (q - 1.0 / q) * (s.K - ki)),
                            rel_diff(s.K_half * s.K_half, s.K)});
            for (std::size_t m = k + 1; m < evolved.size(); ++m) {
                const auto& o = evolved[m];
                for (const ComplexMatrix* a : {&s.K, &s.E, &s.F})
                    for (const ComplexMatrix* b : {&o.K, &o.E, &o.F}) loc = std::max(loc, rel_comm(*a, *b));
            }
        }
        out["evolved_relations"] = rel;
        out["evolved_locality"] = loc;
    }

    // Local ZCR on one site pair: primed operators are R X R^{-1}.
    {
        const ChainSpace pair{1, r};
        const auto x = site_operators(pair);
        const auto y = conjugate_sites(x, R, inverse(R));
        auto lp = [](const SiteOps& s) { return lax_plus(s.K_half, s.F); };
        auto lm = [](const SiteOps& s) { return lax_minus(s.K_half, s.E); };
        auto ll = [](const SiteOps& s, cplx l) { return lax_lambda(s.K_half, s.E, s.F, l); };
        out["zcr_plus_plus"] = rel_diff(lp(x[0]) * lp(x[1]), lp(y[1]) * lp(y[0]));
        out["zcr_minus_plus"] = rel_diff(lm(x[0]) * lp(x[1]), lp(y[1]) * lm(y[0]));
        out["zcr_minus_minus"] = rel_diff(lm(x[0]) * lm(x[1]), lm(y[1]) * lm(y[0]));
        double z1 = 0.0, z2 = 0.0;
        for (auto l : lambdas) {
            z1 = std::max(z1, rel_diff(ll(x[0], l) * lp(x[1]), lp(y[1]) * ll(y[0], l)));
            z2 = std::max(z2, rel_diff(lm(x[0]) * ll(x[1], l), ll(y[1], l) * lm(y[0])));
        }
        out["zcr2_lambda_plus"] = z1;
        out["zcr2_minus_lambda"] = z2;
    }

    {
        Eigen::JacobiSVD<ComplexMatrix> svd(U);
        const auto& sv = svd.singularValues();
        out["info_u_condition"] = sv(0) / sv(sv.size() - 1);
    }
    return out;
}

std::vector<cplx> spectrum(const ComplexMatrix& m) {
    Eigen::ComplexEigenSolver<ComplexMatrix> es(m, false);
    std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return ev;
}

}  // namespace yb::quantum

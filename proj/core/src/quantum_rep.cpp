#include "yb/quantum/rep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "yb/errors.hpp"

namespace yb::quantum {

using num::identity;
using num::inverse;
using num::kron;

namespace {

cplx ipow(cplx x, int n) {
    if (n < 0) return 1.0 / ipow(x, -n);
    cplx r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

cplx qnum(cplx q, int n) { return (ipow(q, n) - ipow(q, -n)) / (q - 1.0 / q); }

// Max-norm difference relative to the size of the reference.
double rel_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return num::max_abs_diff(a, b) / std::max(1.0, num::max_abs(b));
}

ComplexMatrix unipotent_inverse(const ComplexMatrix& m) { return num::inverse_unipotent(m, kNeumannTerms); }

ComplexMatrix eye_like(const ComplexMatrix& m) { return identity(m.rows()); }

}  // namespace

QParams QParams::from_q(cplx q) {
    if (q == cplx(0.0)) throw GenericityError("q = 0");
    return {std::sqrt(q)};
}

void check_generic(const QParams& p, int max_power) {
    const cplx q = p.q();
    if (std::abs(q) < 1e-300) throw GenericityError("q = 0");
    for (int m = 1; m <= max_power; ++m)
        if (std::abs(ipow(q, 2 * m) - 1.0) < 1e-10)
            throw GenericityError("q^" + std::to_string(2 * m) + " = 1: q is a root of unity");
}

SpinRep spin_rep(int two_j, const QParams& p) {
    if (two_j < 0) throw InvalidPoint("spin must be nonnegative");
    check_generic(p, two_j + 1);
    const int d = two_j + 1;
    const cplx q = p.q();
    const cplx dq = q - 1.0 / q;
    SpinRep r;
    r.two_j = two_j;
    r.dim = d;
    r.p = p;
    r.H = ComplexMatrix::Zero(d, d);
    r.K = ComplexMatrix::Zero(d, d);
    r.K_half = ComplexMatrix::Zero(d, d);
    r.K_inv = ComplexMatrix::Zero(d, d);
    r.E = ComplexMatrix::Zero(d, d);
    r.F = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const int h = two_j - 2 * i;
        r.H(i, i) = double(h);
        r.K_half(i, i) = ipow(p.q_half, h);
        r.K(i, i) = ipow(q, h);
        r.K_inv(i, i) = ipow(q, -h);
        if (i > 0) {
            r.E(i - 1, i) = qnum(q, i) * qnum(q, two_j - i + 1) * dq;
            r.F(i, i - 1) = dq;
        }
    }
    r.z = ipow(q, two_j + 1);
    return r;
}

ComplexMatrix casimir_matrix(const SpinRep& r) {
    const cplx q = r.p.q();
    return r.K / q + q * r.K_inv + r.E * r.F;
}

Residuals rep_relation_residuals(const SpinRep& r) {
    const cplx q = r.p.q();
    Residuals out;
    out["rel_KE"] = rel_diff(r.K * r.E, q * q * r.E * r.K);
    out["rel_KF"] = rel_diff(r.K * r.F, r.F * r.K / (q * q));
    out["rel_EF"] = rel_diff(num::commutator(r.E, r.F), (q - 1.0 / q) * (r.K - r.K_inv));
    out["rel_K_half"] = rel_diff(r.K_half * r.K_half, r.K);
    ComplexMatrix e = identity(r.dim), f = identity(r.dim);
    for (int i = 0; i < r.dim; ++i) {
        e = e * r.E;
        f = f * r.F;
    }
    out["nilpotent_E"] = num::max_abs(e);
    out["nilpotent_F"] = num::max_abs(f);
    out["casimir_scalar"] = rel_diff(casimir_matrix(r), r.casimir_scalar() * identity(r.dim));
    return out;
}

ComplexMatrix universal_r(const SpinRep& a, const SpinRep& b) {
    const cplx q = a.p.q();
    const int n_terms = std::min(a.dim, b.dim);
    check_generic(a.p, n_terms);
    const Eigen::Index dim = Eigen::Index(a.dim) * b.dim;
    ComplexMatrix diag = ComplexMatrix::Zero(dim, dim);
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < b.dim; ++k) {
            const int h = int(std::lround(a.H(i, i).real() * b.H(k, k).real()));
            diag(i * b.dim + k, i * b.dim + k) = ipow(a.p.q_half, h);
        }
    const ComplexMatrix x = kron(a.E, b.F);
    ComplexMatrix power = identity(dim);
    ComplexMatrix series = power;
    cplx denom = 1.0;
    for (int n = 1; n < n_terms; ++n) {
        power = power * x;
        denom *= 1.0 - ipow(q, 2 * n);
        const cplx c = (n % 2 ? -1.0 : 1.0) * ipow(q, n * n) / denom;
        series += c * power;
    }
    return diag * series;
}

ComplexMatrix universal_r_star(const SpinRep& a, const SpinRep& b) {
    const ComplexMatrix p = num::swap_matrix(a.dim, b.dim);
    const ComplexMatrix r21 = p.transpose() * universal_r(b, a) * p;
    return inverse(r21);
}

std::pair<OpTriple, OpTriple> quantum_map(const OpTriple& x1, const OpTriple& x2, cplx q, MapDirection dir) {
    const ComplexMatrix one = eye_like(x1.K);
    const ComplexMatrix k1i = inverse(x1.K), k2i = inverse(x2.K);
    OpTriple y1, y2;
    if (dir == MapDirection::forward) {
        const ComplexMatrix x = k1i * x1.E * x2.F * x2.K;
        const ComplexMatrix piv = one - x / q;
        const ComplexMatrix piv2_inv = unipotent_inverse(one - q * x);
        y1.K = x1.K * piv;
        y1.E = x1.E * x2.K;
        y1.F = x1.F * k2i + x2.F - k1i * k1i * x2.F * piv2_inv;
        y2.K = unipotent_inverse(piv) * x2.K;
        y2.E = x1.K * x2.E + x1.E - x1.E * x2.K * x2.K * piv2_inv;
        y2.F = k1i * x2.F;
    } else {
        const ComplexMatrix p = one - x1.E * x2.F / q;
        const ComplexMatrix p_inv = unipotent_inverse(p);
        y1.K = x1.K * p_inv;
        y1.E = x1.E * k2i * p_inv;
        y1.F = (x1.F + k1i * x2.F) * p * x2.K - x1.K * x2.F * x2.K;
        y2.K = p * x2.K;
        y2.E = (x2.E + x1.E * x2.K) * p * k1i - x1.E * k2i * k1i;
        y2.F = x1.K * x2.F * p_inv;
    }
    return {y1, y2};
}

OpTriple coproduct(const OpTriple& x1, const OpTriple& x2) {
    return {x1.K * x2.K, x1.E * x2.K + x2.E, x1.F + inverse(x1.K) * x2.F};
}

OpTriple antipode(const OpTriple& x) {
    const ComplexMatrix ki = inverse(x.K);
    return {ki, -x.E * ki, -x.K * x.F};
}

OpTriple counit_triple(Eigen::Index dim) {
    return {identity(dim), ComplexMatrix::Zero(dim, dim), ComplexMatrix::Zero(dim, dim)};
}

OpTriple conjugate(const OpTriple& x, const ComplexMatrix& m, const ComplexMatrix& m_inv) {
    return {m * x.K * m_inv, m * x.E * m_inv, m * x.F * m_inv};
}

OpTriple transpose(const OpTriple& x) { return {x.K.transpose(), x.E.transpose(), x.F.transpose()}; }

OpTriple site_triple(const SpinRep& r, int site, int n) {
    return {num::embed(r.K, site, n, r.dim), num::embed(r.E, site, n, r.dim), num::embed(r.F, site, n, r.dim)};
}

double triple_distance(const OpTriple& a, const OpTriple& b) {
    return std::max({rel_diff(a.K, b.K), rel_diff(a.E, b.E), rel_diff(a.F, b.F)});
}

namespace {

ComplexMatrix triple_casimir(const OpTriple& x, cplx q) { return x.K / q + q * inverse(x.K) + x.E * x.F; }

double pair_distance(const std::pair<OpTriple, OpTriple>& a, const std::pair<OpTriple, OpTriple>& b) {
    return std::max(triple_distance(a.first, b.first), triple_distance(a.second, b.second));
}

}  // namespace

Residuals quantum_map_residual(const SpinRep& r) {
    const cplx q = r.p.q();
    const ComplexMatrix R = universal_r(r, r);
    const ComplexMatrix Ri = inverse(R);
    const OpTriple x1 = site_triple(r, 0, 2), x2 = site_triple(r, 1, 2);
    const OpTriple c1 = conjugate(x1, R, Ri), c2 = conjugate(x2, R, Ri);
    const auto [f1, f2] = quantum_map(x1, x2, q);

    Residuals out;
    out["map_K1"] = rel_diff(c1.K, f1.K);
    out["map_E1"] = rel_diff(c1.E, f1.E);
    out["map_F1"] = rel_diff(c1.F, f1.F);
    out["map_K2"] = rel_diff(c2.K, f2.K);
    out["map_E2"] = rel_diff(c2.E, f2.E);
    out["map_F2"] = rel_diff(c2.F, f2.F);

    const auto back = quantum_map(c1, c2, q, MapDirection::inverse);
    out["inverse_roundtrip"] = std::max(triple_distance(back.first, x1), triple_distance(back.second, x2));
    const auto inv_formula = quantum_map(x1, x2, q, MapDirection::inverse);
    out["inverse_conjugation"] = pair_distance(inv_formula, {conjugate(x1, Ri, R), conjugate(x2, Ri, R)});

    out["casimir_slot1"] = rel_diff(triple_casimir(c1, q), triple_casimir(x1, q));
    out["casimir_slot2"] = rel_diff(triple_casimir(c2, q), triple_casimir(x2, q));
    return out;
}

ComplexMatrix lax_plus(const ComplexMatrix& K_half, const ComplexMatrix& F) {
    const Eigen::Index d = K_half.rows();
    ComplexMatrix l = ComplexMatrix::Zero(2 * d, 2 * d);
    l.block(0, 0, d, d) = K_half;
    l.block(0, d, d, d) = K_half * F;
    l.block(d, d, d, d) = inverse(K_half);
    return l;
}

ComplexMatrix lax_minus(const ComplexMatrix& K_half, const ComplexMatrix& E) {
    const Eigen::Index d = K_half.rows();
    const ComplexMatrix khi = inverse(K_half);
    ComplexMatrix l = ComplexMatrix::Zero(2 * d, 2 * d);
    l.block(0, 0, d, d) = khi;
    l.block(d, 0, d, d) = -E * khi;
    l.block(d, d, d, d) = K_half;
    return l;
}

ComplexMatrix lax_lambda(const ComplexMatrix& K_half, const ComplexMatrix& E, const ComplexMatrix& F,
                         cplx lambda) {
    if (lambda == cplx(0.0)) throw InvalidPoint("lambda = 0 in L-operator");
    return lambda * lax_plus(K_half, F) - lax_minus(K_half, E) / lambda;
}

ComplexMatrix r6v_plus(const QParams& p) {
    const cplx q = p.q();
    ComplexMatrix r = ComplexMatrix::Zero(4, 4);
    r(0, 0) = q;
    r(1, 1) = 1.0;
    r(1, 2) = q - 1.0 / q;
    r(2, 2) = 1.0;
    r(3, 3) = q;
    return r / p.q_half;
}

ComplexMatrix r6v_minus(const QParams& p) {
    const cplx q = p.q();
    ComplexMatrix r = ComplexMatrix::Zero(4, 4);
    r(0, 0) = 1.0 / q;
    r(1, 1) = 1.0;
    r(2, 1) = 1.0 / q - q;
    r(2, 2) = 1.0;
    r(3, 3) = 1.0 / q;
    return r * p.q_half;
}

ComplexMatrix r6v(const QParams& p, cplx lambda) {
    if (lambda == cplx(0.0)) throw InvalidPoint("lambda = 0 in R-matrix");
    return lambda * r6v_plus(p) - r6v_minus(p) / lambda;
}

LaxBlocks lax_and_r6v(const SpinRep& r, cplx lambda) {
    LaxBlocks b;
    b.L_plus = lax_plus(r.K_half, r.F);
    b.L_minus = lax_minus(r.K_half, r.E);
    b.L_lambda = lax_lambda(r.K_half, r.E, r.F, lambda);
    b.R_plus = r6v_plus(r.p);
    b.R_minus = r6v_minus(r.p);
    b.R_lambda = r6v(r.p, lambda);
    b.R_check = b.R_lambda * num::swap_matrix(2, 2);
    return b;
}

ComplexMatrix dot_tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Eigen::Index d = a.rows() / 2;
    const ComplexMatrix i2 = identity(2);
    ComplexMatrix a_ext = ComplexMatrix::Zero(4 * d, 4 * d);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            ComplexMatrix unit = ComplexMatrix::Zero(2, 2);
            unit(i, k) = 1.0;
            a_ext += kron({unit, i2, a.block(i * d, k * d, d, d)});
        }
    return a_ext * kron(i2, b);
}

Residuals hopf_residual_suite(const SpinRep& r) {
    const Eigen::Index d = r.dim;
    if (d * d * d > kTripleGuard)
        throw DimensionGuard("triple product space of dimension " + std::to_string(d * d * d) + " exceeds guard");
    const cplx q = r.p.q();
    const ComplexMatrix one = identity(d);
    const ComplexMatrix R = universal_r(r, r);
    const ComplexMatrix Ri = inverse(R);
    Residuals out;

    // Delta'(x) R = R Delta(x)
    {
        const ComplexMatrix dK = kron(r.K, r.K);
        const ComplexMatrix dE = kron(r.E, r.K) + kron(one, r.E);
        const ComplexMatrix dF = kron(r.F, one) + kron(r.K_inv, r.F);
        const ComplexMatrix fE = kron(r.K, r.E) + kron(r.E, one);
        const ComplexMatrix fF = kron(one, r.F) + kron(r.F, r.K_inv);
        out["intertwining_K"] = rel_diff(dK * R, R * dK);
        out["intertwining_E"] = rel_diff(fE * R, R * dE);
        out["intertwining_F"] = rel_diff(fF * R, R * dF);
    }

    const OpTriple a1 = site_triple(r, 0, 2), a2 = site_triple(r, 1, 2);
    {
        const auto y = quantum_map(a1, a2, q);
        out["delta_map"] = triple_distance(coproduct(y.first, y.second), coproduct(a2, a1));
    }

    const OpTriple x1 = site_triple(r, 0, 3), x2 = site_triple(r, 1, 3), x3 = site_triple(r, 2, 3);
    {
        const auto lhs = quantum_map(coproduct(x1, x2), x3, q);
        const auto m13 = quantum_map(x1, x3, q);
        const auto m23 = quantum_map(x2, m13.second, q);
        out["hexagon_1"] = pair_distance(lhs, {coproduct(m13.first, m23.first), m23.second});
    }
    {
        const auto lhs = quantum_map(x1, coproduct(x2, x3), q);
        const auto m13 = quantum_map(x1, x3, q);
        const auto m12 = quantum_map(m13.first, x2, q);
        out["hexagon_2"] = pair_distance(lhs, {m12.first, coproduct(m12.second, m13.second)});
    }
    {
        // R23 R13 R12 = R12 R13 R23 as maps on generator triples
        auto a = quantum_map(x1, x2, q);
        auto b = quantum_map(a.first, x3, q);
        auto c = quantum_map(a.second, b.second, q);
        auto e = quantum_map(x2, x3, q);
        auto f = quantum_map(x1, e.second, q);
        auto g = quantum_map(f.first, e.first, q);
        out["map_ybe"] = std::max({triple_distance(b.first, g.first), triple_distance(c.first, g.second),
                                   triple_distance(c.second, f.second)});
    }

    {
        const OpTriple eps = counit_triple(d * d);
        out["counit_left"] = pair_distance(quantum_map(eps, a2, q), {eps, a2});
        out["counit_right"] = pair_distance(quantum_map(a1, eps, q), {a1, eps});
        const SpinRep triv = trivial_rep(r.p);
        out["counit_r_left"] = rel_diff(universal_r(triv, r), identity(d));
        out["counit_r_right"] = rel_diff(universal_r(r, triv), identity(d));
    }

    {
        // Antipode images live in the opposite algebra; transposition realizes it.
        const auto lhs_t = quantum_map(transpose(antipode(a1)), transpose(antipode(a2)), q);
        const auto inv = quantum_map(a1, a2, q, MapDirection::inverse);
        out["antipode_map"] = pair_distance({transpose(lhs_t.first), transpose(lhs_t.second)},
                                            {antipode(inv.first), antipode(inv.second)});
    }

    {
        // Delta(L) equals the product with the second copy on the left.
        const ComplexMatrix kh = kron(r.K_half, r.K_half);
        const ComplexMatrix dE = kron(r.E, r.K) + kron(one, r.E);
        const ComplexMatrix dF = kron(r.F, one) + kron(r.K_inv, r.F);
        const ComplexMatrix kh1 = kron(r.K_half, one), kh2 = kron(one, r.K_half);
        const ComplexMatrix lp = lax_plus(kh2, a2.F) * lax_plus(kh1, a1.F);
        const ComplexMatrix lm = lax_minus(kh2, a2.E) * lax_minus(kh1, a1.E);
        out["lcomul_plus"] = rel_diff(lax_plus(kh, dF), lp);
        out["lcomul_minus"] = rel_diff(lax_minus(kh, dE), lm);
    }

    {
        const cplx qh = r.p.q_half;
        const Eigen::Index dd = d * d;
        ComplexMatrix neg_diag = ComplexMatrix::Zero(dd, dd);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                const int h = int(std::lround(r.H(i, i).real() * r.H(k, k).real()));
                neg_diag(i * d + k, i * d + k) = ipow(qh, -h);
            }
        const ComplexMatrix s_e = -r.E * r.K_inv;
        const ComplexMatrix s_inv_f = -r.F * r.K;
        ComplexMatrix lhs = ComplexMatrix::Zero(dd, dd), rhs = ComplexMatrix::Zero(dd, dd);
        ComplexMatrix pe = one, pf = one, pe0 = one, pf0 = one;
        cplx denom = 1.0;
        for (int n = 0; n < d; ++n) {
            if (n > 0) {
                pe = pe * s_e;
                pf = pf * r.F;
                pe0 = pe0 * r.E;
                pf0 = pf0 * s_inv_f;
                denom *= 1.0 - ipow(q, 2 * n);
            }
            const cplx c = (n % 2 ? -1.0 : 1.0) * ipow(q, n * n) / denom;
            lhs += c * kron(pe, one) * neg_diag * kron(one, pf);
            rhs += c * kron(one, pf0) * neg_diag * kron(pe0, one);
        }
        out["antipode_r"] = rel_diff(lhs, Ri);
        out["antipode_inverse_r"] = rel_diff(rhs, Ri);
    }
    return out;
}

Residuals rll_ybe_residual(const SpinRep& r, const std::vector<std::pair<cplx, cplx>>& lambda_mu) {
    const QParams& p = r.p;
    const cplx q = p.q();
    const Eigen::Index d = r.dim;
    const ComplexMatrix P = num::swap_matrix(2, 2);
    const ComplexMatrix id = identity(d);
    // With the first L on auxiliary factor 1, the braided R acts as P R.
    const ComplexMatrix rcp = kron(P * r6v_plus(p), id);
    const ComplexMatrix rcm = kron(P * r6v_minus(p), id);
    const ComplexMatrix lp = lax_plus(r.K_half, r.F), lm = lax_minus(r.K_half, r.E);
    Residuals out;

    const ComplexMatrix pp = dot_tensor(lp, lp), mm = dot_tensor(lm, lm);
    const ComplexMatrix pm = dot_tensor(lp, lm), mp = dot_tensor(lm, lp);
    out["rform_pp_plus"] = rel_diff(rcp * pp, pp * rcp);
    out["rform_pp_minus"] = rel_diff(rcm * pp, pp * rcm);
    out["rform_mm_plus"] = rel_diff(rcp * mm, mm * rcp);
    out["rform_mm_minus"] = rel_diff(rcm * mm, mm * rcm);
    out["rform_pm"] = rel_diff(rcp * pm, mp * rcp);
    out["rform_mp"] = rel_diff(rcm * mp, pm * rcm);
    // Alternative reading of the last relation: the R-matrix on the spaces in
    // reversed order. Informational.
    out["info_rform_mp_reversed"] = rel_diff(rcm * mp, pm * kron(r6v_minus(p) * P, id));

    // The q^{-+1/2} prefactors of R+- shift the spectral argument by q^{1/2}.
    double llr = 0.0, llr_literal = 0.0;
    for (const auto& [lam, mu] : lambda_mu) {
        if (lam == cplx(0.0) || mu == cplx(0.0)) throw InvalidPoint("lambda, mu must be nonzero");
        const ComplexMatrix ll = dot_tensor(lax_lambda(r.K_half, r.E, r.F, lam), lax_lambda(r.K_half, r.E, r.F, mu));
        const ComplexMatrix lr = dot_tensor(lax_lambda(r.K_half, r.E, r.F, mu), lax_lambda(r.K_half, r.E, r.F, lam));
        const ComplexMatrix rc = kron(P * r6v(p, p.q_half * lam / mu), id);
        const ComplexMatrix rc_lit = kron(P * r6v(p, lam / mu), id);
        llr = std::max(llr, rel_diff(rc * ll, lr * rc));
        llr_literal = std::max(llr_literal, rel_diff(rc_lit * ll, lr * rc_lit));
    }
    out["rll_lambda"] = llr;
    out["info_rll_lambda_unshifted"] = llr_literal;

    out["r6v_perm"] = rel_diff(r6v(p, p.q_half), (q - 1.0 / q) * P);
    {
        const SpinRep half = spin_rep(1, p);
        out["r6v_plus_universal"] = rel_diff(universal_r(half, half), r6v_plus(p));
        out["r6v_minus_universal"] = rel_diff(universal_r_star(half, half), r6v_minus(p));
        out["lax_plus_universal"] = rel_diff(universal_r(half, r), lp);
        out["lax_minus_universal"] = rel_diff(universal_r_star(half, r), lm);
    }

    {
        const ComplexMatrix R = universal_r(r, r), Rs = universal_r_star(r, r);
        const ComplexMatrix p23 = num::tensor_permutation({int(d), int(d), int(d)}, {0, 2, 1});
        auto s12 = [&](const ComplexMatrix& m) { return ComplexMatrix(kron(m, id)); };
        auto s23 = [&](const ComplexMatrix& m) { return ComplexMatrix(kron(id, m)); };
        auto s13 = [&](const ComplexMatrix& m) { return ComplexMatrix(p23 * kron(m, id) * p23); };
        auto ybe = [&](const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
            const ComplexMatrix lhs = s12(a) * s13(b) * s23(c);
            return rel_diff(lhs, s23(c) * s13(b) * s12(a));
        };
        out["ybe"] = ybe(R, R, R);
        out["ybe_star"] = ybe(Rs, Rs, Rs);
        out["ybe_mixed_a"] = ybe(Rs, R, R);
        out["ybe_mixed_b"] = ybe(R, R, Rs);
        out["ybe_mixed_c"] = ybe(R, Rs, Rs);
        out["ybe_mixed_d"] = ybe(Rs, Rs, R);
    }
    return out;
}

}  // namespace yb::quantum

#pragma once

#include <array>
#include <utility>
#include <vector>

#include "yb/num/matrix.hpp"
#include "yb/residuals.hpp"

namespace yb::quantum {

using num::ComplexMatrix;
using num::cplx;

struct QParams {
    cplx q_half;

    cplx q() const { return q_half * q_half; }
    static QParams from_q(cplx q);  // principal square root
    static QParams defaults() { return from_q({0.7, 0.2}); }
};

// Throws GenericityError if q^{2m} = 1 (to 1e-10) for some m in 1..max_power.
void check_generic(const QParams& p, int max_power);

// Spin j = two_j / 2. Basis index 0 carries the highest weight.
struct SpinRep {
    int two_j = 1;
    int dim = 2;
    QParams p;
    ComplexMatrix H, K, K_half, K_inv, E, F;
    cplx z;  // C = z + 1/z on this rep, z = q^{2j+1}

    cplx casimir_scalar() const { return z + 1.0 / z; }
};

SpinRep spin_rep(int two_j, const QParams& p);
inline SpinRep trivial_rep(const QParams& p) { return spin_rep(0, p); }

// q^{-1} K + q K^{-1} + E F.
ComplexMatrix casimir_matrix(const SpinRep& r);

// Defining relations, nilpotency and scalar Casimir.
Residuals rep_relation_residuals(const SpinRep& r);

// Euler closed form of the universal R on A (x) B.
ComplexMatrix universal_r(const SpinRep& a, const SpinRep& b);

// R*_12 = (R_21)^{-1} on A (x) B.
ComplexMatrix universal_r_star(const SpinRep& a, const SpinRep& b);

// Generators acting on a common space (a tensor product of reps).
struct OpTriple {
    ComplexMatrix K, E, F;
};

enum class MapDirection { forward, inverse };

// Pivot inverses use the terminating Neumann series up to this many terms,
// then fall back to LU.
inline constexpr int kNeumannTerms = 8;

std::pair<OpTriple, OpTriple> quantum_map(const OpTriple& x1, const OpTriple& x2, cplx q,
                                          MapDirection dir = MapDirection::forward);

OpTriple coproduct(const OpTriple& x1, const OpTriple& x2);  // delta(X1, X2)
OpTriple antipode(const OpTriple& x);
OpTriple counit_triple(Eigen::Index dim);  // (1, 0, 0)
OpTriple conjugate(const OpTriple& x, const ComplexMatrix& m, const ComplexMatrix& m_inv);
OpTriple transpose(const OpTriple& x);

// Rep generators placed at factor `site` of a homogeneous n-fold product.
OpTriple site_triple(const SpinRep& r, int site, int n);

double triple_distance(const OpTriple& a, const OpTriple& b);

// R X R^{-1} against the explicit map, the inverse map, and Casimir
// preservation in each slot.
Residuals quantum_map_residual(const SpinRep& r);

// Hopf-level identities. Throws DimensionGuard if d^3 > kTripleGuard.
inline constexpr Eigen::Index kTripleGuard = 4096;
Residuals hopf_residual_suite(const SpinRep& r);

// 2x2 operator-valued matrices stored as 2d x 2d blocks, auxiliary space first.
struct LaxBlocks {
    ComplexMatrix L_plus, L_minus, L_lambda;
    ComplexMatrix R_plus, R_minus, R_lambda, R_check;
};

LaxBlocks lax_and_r6v(const SpinRep& r, cplx lambda);

ComplexMatrix lax_plus(const ComplexMatrix& K_half, const ComplexMatrix& F);
ComplexMatrix lax_minus(const ComplexMatrix& K_half, const ComplexMatrix& E);
ComplexMatrix lax_lambda(const ComplexMatrix& K_half, const ComplexMatrix& E, const ComplexMatrix& F,
                         cplx lambda);

// Six-vertex blocks for the fundamental rep.
ComplexMatrix r6v_plus(const QParams& p);
ComplexMatrix r6v_minus(const QParams& p);
ComplexMatrix r6v(const QParams& p, cplx lambda);

// Products of 2x2 operator-valued matrices are ordinary matrix products in
// this layout. The (x)-dot product: a on auxiliary factor 1, b on factor 2, with
// operator entries multiplied a-then-b. Result acts on C2 (x) C2 (x) V.
ComplexMatrix dot_tensor(const ComplexMatrix& a, const ComplexMatrix& b);

Residuals rll_ybe_residual(const SpinRep& r, const std::vector<std::pair<cplx, cplx>>& lambda_mu);

}  // namespace yb::quantum

#pragma once

#include <array>
#include <functional>
#include <utility>

#include "yb/num/gradient.hpp"
#include "yb/num/matrix.hpp"

namespace yb::classical {

using num::cplx;

struct ClassicalTriple {
    cplx k{1.0}, e{0.0}, f{0.0};
};

struct WeylTriple {
    cplx u{1.0}, v{1.0}, z{1.0};
};

using TriplePair = std::pair<ClassicalTriple, ClassicalTriple>;
using WeylPair = std::pair<WeylTriple, WeylTriple>;

enum class Direction { forward, inverse };
enum class Unary { antipode, counit };

// Pivots smaller than this are treated as singular.
inline constexpr double kPivotGuard = 1e-14;

cplx casimir(const ClassicalTriple& x);

TriplePair yb_map_kef(const ClassicalTriple& x1, const ClassicalTriple& x2, Direction dir = Direction::forward);

ClassicalTriple coproduct_pair(const ClassicalTriple& x1, const ClassicalTriple& x2);

ClassicalTriple hopf_unary(const ClassicalTriple& x, Unary which);

ClassicalTriple weyl_embed(const WeylTriple& w);

WeylPair yb_map_uv(const WeylTriple& w1, const WeylTriple& w2, Direction dir = Direction::forward);

// g_cl of the forward map; equals 1 exactly when u1 = z1.
cplx g_cl(const WeylTriple& w1, const WeylTriple& w2);

using PairFunction = std::function<cplx(const WeylPair&)>;

// Bracket induced by {log u_i, log v_j} = delta_ij; derivatives are taken
// along the real and imaginary parts of log u, log v and combined
// holomorphically.
cplx poisson_bracket_numeric(const PairFunction& F, const PairFunction& G, const WeylPair& point,
                             const num::GradientConfig& cfg = {});

// Jacobian of yb_map_uv in log coordinates (log u1, log v1, log u2, log v2),
// evaluated by central differences along complex directions.
num::ComplexMatrix log_jacobian_uv(const WeylPair& point, double step = 1e-6);

// Canonical 2n x 2n form with {log u_i, log v_i} = 1.
num::ComplexMatrix canonical_form(int n_pairs);

}  // namespace yb::classical

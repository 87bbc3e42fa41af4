#pragma once

#include <utility>
#include <vector>

#include "yb/num/matrix.hpp"

namespace yb::num {

// 64-point Gauss-Legendre rule on [-1, 1] as (node, weight) pairs.
const std::vector<std::pair<double, double>>& gauss_legendre_64();

// Integral of f along the straight segment [a, b] in the complex plane.
template <class F>
cplx integrate_segment(F&& f, cplx a, cplx b) {
    const cplx half = 0.5 * (b - a), mid = 0.5 * (a + b);
    cplx acc = 0.0;
    for (const auto& [x, w] : gauss_legendre_64()) acc += w * f(mid + half * x);
    return acc * half;
}

// Sum of equal-width panels along [a, b].
template <class F>
cplx integrate_panels(F&& f, cplx a, cplx b, int panels) {
    cplx acc = 0.0;
    const cplx step = (b - a) / static_cast<double>(panels);
    for (int k = 0; k < panels; ++k)
        acc += integrate_segment(f, a + step * static_cast<double>(k), a + step * static_cast<double>(k + 1));
    return acc;
}

}  // namespace yb::num

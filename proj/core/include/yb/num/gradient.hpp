#pragma once

#include <functional>
#include <vector>

#include "yb/num/matrix.hpp"

namespace yb::num {

enum class GradScheme { central_difference, complex_step };

struct GradientConfig {
    GradScheme scheme = GradScheme::central_difference;
    double step = 1e-6;
};

using RealFunction = std::function<cplx(const std::vector<double>&)>;
// Holomorphic extension used by the complex-step scheme.
using HoloFunction = std::function<cplx(const std::vector<cplx>&)>;

std::vector<cplx> fd_gradient(const RealFunction& f, const std::vector<double>& point,
                              const GradientConfig& cfg = {});
std::vector<cplx> fd_gradient(const HoloFunction& f, const std::vector<double>& point,
                              const GradientConfig& cfg = {});

// Wirtinger-free derivative of a holomorphic function of complex arguments
// along each coordinate, by a central difference with a real step.
std::vector<cplx> holo_gradient(const HoloFunction& f, const std::vector<cplx>& point, double step = 1e-6);

// Jacobian of a vector map R^n -> C^m by central differences; rows are outputs.
ComplexMatrix fd_jacobian(const std::function<std::vector<cplx>(const std::vector<double>&)>& f,
                          const std::vector<double>& point, double step = 1e-6);

}  // namespace yb::num

#pragma once

#include <vector>

#include "yb/num/matrix.hpp"

namespace yb::num {

struct LambdaSample {
    cplx lambda;
    ComplexMatrix value;  // 1x1 for scalar samples
};

// Coefficients c_0..c_degree with value = lambda^p * sum c_n lambda^{-2n}.
std::vector<ComplexMatrix> fit_poly_lambda2(const std::vector<LambdaSample>& samples, int degree,
                                            int prefactor_power);

std::vector<cplx> fit_poly_lambda2(const std::vector<cplx>& lambdas, const std::vector<cplx>& values,
                                   int degree, int prefactor_power);

ComplexMatrix eval_poly_lambda2(const std::vector<ComplexMatrix>& coeffs, cplx lambda, int prefactor_power);
cplx eval_poly_lambda2(const std::vector<cplx>& coeffs, cplx lambda, int prefactor_power);

// Geometric grid lambda_k = 2^{k/m}, k = 0..m-1.
std::vector<cplx> lambda_grid(int m);

}  // namespace yb::num

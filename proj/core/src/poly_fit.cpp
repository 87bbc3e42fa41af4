#include "yb/num/poly_fit.hpp"

#include <cmath>
#include <string>

#include "yb/errors.hpp"

namespace yb::num {

std::vector<ComplexMatrix> fit_poly_lambda2(const std::vector<LambdaSample>& samples, int degree,
                                            int prefactor_power) {
    const int m = degree + 1;
    if (degree < 0 || static_cast<int>(samples.size()) < m)
        throw DegenerateSamples("need at least degree+1 samples");
    const auto rows = samples.front().value.rows();
    const auto cols = samples.front().value.cols();
    for (int i = 0; i < m; ++i) {
        if (samples[i].lambda == cplx(0.0)) throw DegenerateSamples("lambda = 0 sample");
        for (int k = 0; k < i; ++k)
            if (std::abs(samples[i].lambda * samples[i].lambda - samples[k].lambda * samples[k].lambda) <
                1e-14 * std::abs(samples[i].lambda * samples[i].lambda))
                throw DegenerateSamples("repeated lambda^2 in samples " + std::to_string(k) + " and " +
                                        std::to_string(i));
    }
    // Vandermonde in x = lambda^{-2}; one right-hand side per matrix entry.
    ComplexMatrix vand(m, m);
    ComplexMatrix rhs(m, rows * cols);
    for (int i = 0; i < m; ++i) {
        const cplx lam = samples[i].lambda;
        const cplx x = 1.0 / (lam * lam);
        cplx p = 1.0;
        for (int n = 0; n < m; ++n) {
            vand(i, n) = p;
            p *= x;
        }
        const cplx scale = std::pow(lam, -prefactor_power);
        const ComplexMatrix& v = samples[i].value;
        if (v.rows() != rows || v.cols() != cols) throw DegenerateSamples("sample shape mismatch");
        for (Eigen::Index r = 0; r < rows; ++r)
            for (Eigen::Index c = 0; c < cols; ++c) rhs(i, r * cols + c) = scale * v(r, c);
    }
    ComplexMatrix sol;
    try {
        sol = solve(vand, rhs);
    } catch (const IllConditioned& e) {
        throw DegenerateSamples(std::string("singular Vandermonde: ") + e.what());
    }
    std::vector<ComplexMatrix> out(m, ComplexMatrix(rows, cols));
    for (int n = 0; n < m; ++n)
        for (Eigen::Index r = 0; r < rows; ++r)
            for (Eigen::Index c = 0; c < cols; ++c) out[n](r, c) = sol(n, r * cols + c);
    return out;
}

std::vector<cplx> fit_poly_lambda2(const std::vector<cplx>& lambdas, const std::vector<cplx>& values,
                                   int degree, int prefactor_power) {
    if (lambdas.size() != values.size()) throw DegenerateSamples("lambda/value count mismatch");
    std::vector<LambdaSample> s;
    for (size_t i = 0; i < lambdas.size(); ++i) {
        ComplexMatrix v(1, 1);
        v(0, 0) = values[i];
        s.push_back({lambdas[i], v});
    }
    auto mats = fit_poly_lambda2(s, degree, prefactor_power);
    std::vector<cplx> out;
    for (auto& m : mats) out.push_back(m(0, 0));
    return out;
}

ComplexMatrix eval_poly_lambda2(const std::vector<ComplexMatrix>& coeffs, cplx lambda, int prefactor_power) {
    ComplexMatrix acc = ComplexMatrix::Zero(coeffs.front().rows(), coeffs.front().cols());
    const cplx x = 1.0 / (lambda * lambda);
    cplx p = 1.0;
    for (const auto& c : coeffs) {
        acc += p * c;
        p *= x;
    }
    return std::pow(lambda, prefactor_power) * acc;
}

cplx eval_poly_lambda2(const std::vector<cplx>& coeffs, cplx lambda, int prefactor_power) {
    cplx acc = 0.0;
    const cplx x = 1.0 / (lambda * lambda);
    cplx p = 1.0;
    for (const auto& c : coeffs) {
        acc += p * c;
        p *= x;
    }
    return std::pow(lambda, prefactor_power) * acc;
}

std::vector<cplx> lambda_grid(int m) {
    std::vector<cplx> out;
    for (int k = 0; k < m; ++k) out.emplace_back(std::pow(2.0, static_cast<double>(k) / m), 0.0);
    return out;
}

}  // namespace yb::num

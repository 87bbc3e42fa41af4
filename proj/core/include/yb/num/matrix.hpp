#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

namespace yb::num {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kCondGuard = 1e12;

ComplexMatrix identity(Eigen::Index n);

// Row-major construction, matching the on-disk layout.
ComplexMatrix from_rows(Eigen::Index rows, Eigen::Index cols, const std::vector<cplx>& entries);
std::vector<cplx> to_rows(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(std::initializer_list<ComplexMatrix> factors);

// LU with partial pivoting; throws IllConditioned when the estimated
// condition number exceeds kCondGuard.
ComplexMatrix inverse(const ComplexMatrix& m, double cond_guard = kCondGuard);
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& rhs, double cond_guard = kCondGuard);

// Inverse of 1 - X for nilpotent X by the terminating Neumann series.
ComplexMatrix inverse_unipotent(const ComplexMatrix& one_minus_x, int max_terms);

double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Permutation matrix of a tensor product of `dims`, sending factor i to
// position perm[i].
ComplexMatrix tensor_permutation(const std::vector<int>& dims, const std::vector<int>& perm);
ComplexMatrix swap_matrix(int da, int db);

// Places `op` (acting on factor `site`) into the product of `n` copies of
// dimension d.
ComplexMatrix embed(const ComplexMatrix& op, int site, int n, int d);

}  // namespace yb::num

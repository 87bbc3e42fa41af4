#include "yb/num/matrix.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "yb/errors.hpp"

namespace yb::num {

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix from_rows(Eigen::Index rows, Eigen::Index cols, const std::vector<cplx>& entries) {
    if (rows <= 0 || cols <= 0 || static_cast<Eigen::Index>(entries.size()) != rows * cols)
        throw InvalidPoint("matrix entries do not match rows*cols");
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = entries[static_cast<size_t>(i * cols + j)];
    return m;
}

std::vector<cplx> to_rows(const ComplexMatrix& m) {
    std::vector<cplx> out;
    out.reserve(static_cast<size_t>(m.size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

ComplexMatrix kron(std::initializer_list<ComplexMatrix> factors) {
    ComplexMatrix r = ComplexMatrix::Identity(1, 1);
    for (const auto& f : factors) r = kron(r, f);
    return r;
}

namespace {

double cond_estimate(const Eigen::PartialPivLU<ComplexMatrix>& lu, const ComplexMatrix& m) {
    const double rc = lu.rcond();
    if (!(rc > 0.0) || !std::isfinite(rc)) return INFINITY;
    (void)m;
    return 1.0 / rc;
}

}  // namespace

ComplexMatrix inverse(const ComplexMatrix& m, double cond_guard) {
    if (m.rows() != m.cols()) throw InvalidPoint("inverse of a non-square matrix");
    Eigen::PartialPivLU<ComplexMatrix> lu(m);
    const double c = cond_estimate(lu, m);
    if (c > cond_guard) throw IllConditioned("matrix condition number " + std::to_string(c) + " above guard", c);
    return lu.inverse();
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& rhs, double cond_guard) {
    if (a.rows() != a.cols() || a.rows() != rhs.rows()) throw InvalidPoint("solve: dimension mismatch");
    Eigen::PartialPivLU<ComplexMatrix> lu(a);
    const double c = cond_estimate(lu, a);
    if (c > cond_guard) throw IllConditioned("system condition number " + std::to_string(c) + " above guard", c);
    return lu.solve(rhs);
}

ComplexMatrix inverse_unipotent(const ComplexMatrix& one_minus_x, int max_terms) {
    const Eigen::Index n = one_minus_x.rows();
    const ComplexMatrix x = ComplexMatrix::Identity(n, n) - one_minus_x;
    ComplexMatrix term = ComplexMatrix::Identity(n, n);
    ComplexMatrix sum = term;
    for (int k = 1; k <= max_terms; ++k) {
        term = term * x;
        if (term.cwiseAbs().maxCoeff() == 0.0) return sum;
        sum += term;
    }
    term = term * x;
    if (term.cwiseAbs().maxCoeff() > 0.0) return inverse(one_minus_x);
    return sum;
}

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidPoint("shape mismatch in difference");
    return max_abs(a - b);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix tensor_permutation(const std::vector<int>& dims, const std::vector<int>& perm) {
    const int n = static_cast<int>(dims.size());
    std::vector<int> new_dims(n);
    for (int i = 0; i < n; ++i) new_dims[perm[i]] = dims[i];
    const int total = std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
    ComplexMatrix p = ComplexMatrix::Zero(total, total);
    std::vector<int> idx(n), nidx(n);
    for (int flat = 0; flat < total; ++flat) {
        int r = flat;
        for (int i = n - 1; i >= 0; --i) {
            idx[i] = r % dims[i];
            r /= dims[i];
        }
        for (int i = 0; i < n; ++i) nidx[perm[i]] = idx[i];
        int out = 0;
        for (int i = 0; i < n; ++i) out = out * new_dims[i] + nidx[i];
        p(out, flat) = 1.0;
    }
    return p;
}

ComplexMatrix swap_matrix(int da, int db) { return tensor_permutation({da, db}, {1, 0}); }

ComplexMatrix embed(const ComplexMatrix& op, int site, int n, int d) {
    ComplexMatrix left = ComplexMatrix::Identity(1, 1);
    for (int k = 0; k < site; ++k) left = kron(left, identity(d));
    ComplexMatrix r = kron(left, op);
    for (int k = site + 1; k < n; ++k) r = kron(r, identity(d));
    return r;
}

}  // namespace yb::num

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qd {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

Matrix kron(const Matrix& a, const Matrix& b);

// Largest singular value.
double operator_norm(const Matrix& m);

// Orthonormal basis of { T : T*A_i = B_i*T for all i }, where T is dim_b x
// dim_a. Solved through the stacked system (A_i^T (x) I - I (x) B_i) vec(T) = 0
// with singular values below rel_tol * sigma_max treated as zero.
// A_i and B_i must be square, of sizes dim_a and dim_b.
std::vector<Matrix> intertwiner_space(const std::vector<Matrix>& a,
                                      const std::vector<Matrix>& b,
                                      double rel_tol = 1e-8);

// dim of { T : T*M_i = M_i*T }; the M_i must span a set closed under the
// algebra generated (commuting with a generating family is enough).
// Assembled as a Hermitian normal system so the heavy case stays one dense
// self-adjoint eigensolve of size dim^2.
int commutant_dimension(const std::vector<Matrix>& mats, double rel_tol = 1e-6);

// Unitary factor of the polar decomposition T = U * H.
Matrix polar_unitary(const Matrix& t);

// Gauss-Legendre nodes/weights on [-1, 1] (Golub-Welsch on the Jacobi matrix).
void gauss_legendre(int npts, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace qd

#include "qdouble/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qd {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

std::vector<Matrix> intertwiner_space(const std::vector<Matrix>& a,
                                      const std::vector<Matrix>& b,
                                      double rel_tol) {
  const Eigen::Index da = a.empty() ? 0 : a[0].rows();
  const Eigen::Index db = b.empty() ? 0 : b[0].rows();
  if (da == 0 || db == 0 || a.size() != b.size()) return {};
  const Eigen::Index cols = da * db;
  Matrix stacked(static_cast<Eigen::Index>(a.size()) * cols, cols);
  const Matrix ia = Matrix::Identity(da, da);
  const Matrix ib = Matrix::Identity(db, db);
  for (size_t i = 0; i < a.size(); ++i) {
    // vec(T A) - vec(B T) = (A^T (x) I_b - I_a (x) B) vec(T), column-major vec
    stacked.middleRows(static_cast<Eigen::Index>(i) * cols, cols) =
        kron(a[i].transpose(), ib) - kron(ia, b[i]);
  }
  Eigen::BDCSVD<Matrix> svd(stacked, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff = rel_tol * (sv.size() ? sv(0) : 0.0);
  std::vector<Matrix> basis;
  for (Eigen::Index k = sv.size() - 1; k >= 0; --k) {
    if (sv(k) > cutoff) break;
    Vector v = svd.matrixV().col(k);
    basis.push_back(Eigen::Map<const Matrix>(v.data(), db, da));
  }
  return basis;
}

int commutant_dimension(const std::vector<Matrix>& mats, double rel_tol) {
  if (mats.empty()) return 0;
  const Eigen::Index d = mats[0].rows();
  const Eigen::Index d2 = d * d;
  const Matrix id = Matrix::Identity(d, d);
  // C = sum_i L_i^dagger L_i with L_i = M_i^T (x) I - I (x) M_i; the
  // commutant is the zero eigenspace of C.
  Matrix c = Matrix::Zero(d2, d2);
  for (const Matrix& m : mats) {
    const Matrix mt = m.transpose();
    const Matrix mc = m.conjugate();
    c += kron(mc * mt, id);
    c += kron(id, m.adjoint() * m);
    c -= kron(mc, m);
    c -= kron(mt, m.adjoint());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(c);
  const auto& ev = es.eigenvalues();
  const double cutoff = rel_tol * std::max(1.0, ev(ev.size() - 1));
  int dim = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) <= cutoff) ++dim;
  return dim;
}

Matrix polar_unitary(const Matrix& t) {
  Eigen::JacobiSVD<Matrix> svd(t, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

void gauss_legendre(int npts, std::vector<double>& nodes, std::vector<double>& weights) {
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(npts, npts);
  for (int k = 1; k < npts; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jac(k, k - 1) = b;
    jac(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  nodes.resize(npts);
  weights.resize(npts);
  for (int i = 0; i < npts; ++i) {
    nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    weights[i] = 2.0 * v0 * v0;
  }
}

}  // namespace qd

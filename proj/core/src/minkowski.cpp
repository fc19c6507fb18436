#include "mobius/minkowski.hpp"

#include <random>

namespace mobius {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegenerateGram: return "DegenerateGram";
    case ErrorKind::OutOfInterior: return "OutOfInterior";
    case ErrorKind::NonConformalChart: return "NonConformalChart";
    case ErrorKind::DegenerateMetric: return "DegenerateMetric";
    case ErrorKind::FrameDegenerate: return "FrameDegenerate";
    case ErrorKind::SignatureFailure: return "SignatureFailure";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::CriticalPoint: return "CriticalPoint";
    case ErrorKind::WrongCodimension: return "WrongCodimension";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::UmbilicPoint: return "UmbilicPoint";
    case ErrorKind::NonHolomorphicTheta: return "NonHolomorphicTheta";
    case ErrorKind::ZeroOfTheta: return "ZeroOfTheta";
    case ErrorKind::NotSWillmore: return "NotSWillmore";
    case ErrorKind::NotIsothermicChart: return "NotIsothermicChart";
    case ErrorKind::BlowUp: return "BlowUp";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorKind::NotSecondEnvelope: return "NotSecondEnvelope";
    case ErrorKind::AmbiguousBranch: return "AmbiguousBranch";
    case ErrorKind::BasePointMismatch: return "BasePointMismatch";
    case ErrorKind::UnknownSurface: return "UnknownSurface";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

Mat signature_matrix(int dim) {
  Mat g = Mat::Identity(dim, dim);
  g(0, 0) = -1.0;
  return g;
}

Mat gram(const Mat& basis) {
  const int k = static_cast<int>(basis.cols());
  Mat g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      g(i, j) = inner(Vec(basis.col(i)), Vec(basis.col(j)));
      g(j, i) = g(i, j);
    }
  return g;
}

std::pair<int, int> signature(const Mat& basis, double tol) {
  Eigen::SelfAdjointEigenSolver<Mat> es(gram(basis));
  int pos = 0, neg = 0;
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()[i] > tol * scale) ++pos;
    else if (es.eigenvalues()[i] < -tol * scale) ++neg;
  }
  return {pos, neg};
}

namespace {

// Solves Gram * c = rhs, guarding against a degenerate Gram matrix.
template <class RhsVec>
RhsVec gram_solve(const Mat& g, const RhsVec& rhs, double tol,
                  double scale) {
  Eigen::PartialPivLU<Mat> lu(g);
  const double det = std::abs(lu.determinant());
  if (det < tol * std::max(scale, 1e-300))
    fail(ErrorKind::DegenerateGram, "Gram determinant " + std::to_string(det));
  return lu.solve(rhs);
}

double gram_scale(const Mat& basis) {
  double s = 1.0;
  for (int i = 0; i < basis.cols(); ++i) s *= basis.col(i).squaredNorm();
  return s;
}

}  // namespace

std::pair<Vec, Vec> project(const Mat& basis, const Vec& v, double tol) {
  if (basis.rows() != v.size()) fail(ErrorKind::DimensionMismatch, "project");
  const int k = static_cast<int>(basis.cols());
  Vec rhs(k);
  for (int i = 0; i < k; ++i) rhs[i] = inner(Vec(basis.col(i)), v);
  Vec c = gram_solve(gram(basis), rhs, tol, gram_scale(basis));
  Vec par = basis * c;
  return {par, v - par};
}

std::pair<CVec, CVec> project(const Mat& basis, const CVec& v, double tol) {
  if (basis.rows() != v.size()) fail(ErrorKind::DimensionMismatch, "project");
  const int k = static_cast<int>(basis.cols());
  CVec rhs(k);
  for (int i = 0; i < k; ++i) rhs[i] = inner(v, Vec(basis.col(i)));
  Eigen::MatrixXcd g = gram(basis).cast<Complex>();
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(g);
  if (std::abs(lu.determinant()) < tol * std::max(gram_scale(basis), 1e-300))
    fail(ErrorKind::DegenerateGram, "complex project");
  CVec c = lu.solve(rhs);
  CVec par = basis.cast<Complex>() * c;
  return {par, v - par};
}

Mat span_projector(const Mat& basis, double tol) {
  const int k = static_cast<int>(basis.cols());
  Mat bg = basis.transpose() * signature_matrix(static_cast<int>(basis.rows()));
  Mat g = gram(basis);
  Eigen::PartialPivLU<Mat> lu(g);
  if (std::abs(lu.determinant()) < tol * std::max(gram_scale(basis), 1e-300))
    fail(ErrorKind::DegenerateGram, "span_projector");
  (void)k;
  return basis * lu.solve(bg);
}

bool subspace_equal(const Mat& b1, const Mat& b2, double tol) {
  if (b1.rows() != b2.rows()) fail(ErrorKind::DimensionMismatch, "subspace_equal");
  Mat d = span_projector(b1) - span_projector(b2);
  return d.norm() < tol;
}

Mat orthogonal_complement(const Mat& basis, double tol) {
  // v in the complement iff (B^t G) v = 0.
  Mat a = basis.transpose() * signature_matrix(static_cast<int>(basis.rows()));
  Eigen::FullPivLU<Mat> lu(a);
  lu.setThreshold(tol);
  return lu.kernel();
}

Mat orthonormalize(const Mat& basis, double tol) {
  const int dim = static_cast<int>(basis.rows());
  const int k = static_cast<int>(basis.cols());
  std::vector<Vec> pool;
  pool.reserve(k);
  for (int i = 0; i < k; ++i) pool.push_back(basis.col(i));
  Mat out(dim, k);
  std::vector<double> signs;
  for (int step = 0; step < k; ++step) {
    // Orthogonalize the pool against what we already have, then pivot.
    int best = -1;
    double best_abs = 0.0;
    std::vector<Vec> reduced(pool.size());
    for (size_t p = 0; p < pool.size(); ++p) {
      Vec v = pool[p];
      for (int j = 0; j < step; ++j) {
        const double s = signs[j];
        v -= s * inner(Vec(out.col(j)), v) * out.col(j);
      }
      reduced[p] = v;
      const double a = std::abs(inner(v, v));
      if (a > best_abs) {
        best_abs = a;
        best = static_cast<int>(p);
      }
    }
    if (best < 0 || best_abs < tol)
      fail(ErrorKind::DegenerateGram, "orthonormalize: degenerate span");
    Vec v = reduced[best];
    const double q = inner(v, v);
    out.col(step) = v / std::sqrt(std::abs(q));
    signs.push_back(q > 0 ? 1.0 : -1.0);
    pool.erase(pool.begin() + best);
  }
  return out;
}

Mat random_lorentz(std::uint64_t seed, int n) {
  const int dim = n + 2;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);

  auto random_rotation = [&](int m) {
    Mat a(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) a(i, j) = gauss(rng);
    Eigen::HouseholderQR<Mat> qr(a);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < m; ++i)
      if (r(i, i) < 0) q.col(i) *= -1.0;
    return q;
  };

  auto embed = [&](const Mat& q) {
    Mat t = Mat::Identity(dim, dim);
    t.block(1, 1, dim - 1, dim - 1) = q;
    return t;
  };

  const double chi = unif(rng);
  Mat boost = Mat::Identity(dim, dim);
  boost(0, 0) = std::cosh(chi);
  boost(0, 1) = std::sinh(chi);
  boost(1, 0) = std::sinh(chi);
  boost(1, 1) = std::cosh(chi);

  return embed(random_rotation(dim - 1)) * boost *
         embed(random_rotation(dim - 1));
}

}  // namespace mobius

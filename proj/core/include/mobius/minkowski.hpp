// Small-dimension linear algebra over R^{n+1,1}.
//
// Convention: coordinate 0 is timelike, <x,y> = -x0*y0 + sum_{i>=1} xi*yi.
// The forward cone is x0 > 0. Complex vectors pair bilinearly (never
// Hermitian): <ia,b> = i<a,b>.
#pragma once

#include <complex>
#include <cstdint>
#include <utility>

#include <Eigen/Dense>

#include "mobius/errors.hpp"

namespace mobius {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXd;

inline double inner(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "inner");
  return a.dot(b) - 2.0 * a[0] * b[0];
}

// Bilinear extension; Eigen's dot() conjugates, so expand by hand.
inline Complex inner(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "inner");
  return a.cwiseProduct(b).sum() - 2.0 * a[0] * b[0];
}

inline Complex inner(const CVec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "inner");
  return a.cwiseProduct(b.cast<Complex>()).sum() - 2.0 * a[0] * b[0];
}

inline Complex inner(const Vec& a, const CVec& b) { return inner(b, a); }

inline bool is_null(const Vec& v, double tol = 1e-10) {
  return std::abs(inner(v, v)) <= tol * v.squaredNorm();
}
inline bool is_forward(const Vec& v) { return v[0] > 0.0; }

// <a^b, c^d> = <a,c><b,d> - <a,d><b,c>.
template <class A, class B, class C, class D>
auto wedge_inner(const A& a, const B& b, const C& c, const D& d) {
  return inner(a, c) * inner(b, d) - inner(a, d) * inner(b, c);
}

// Signature matrix G = diag(-1, 1, ..., 1).
Mat signature_matrix(int dim);

// Gram matrix of the columns of B under the Minkowski product.
Mat gram(const Mat& basis);

// Counts (positive, negative) eigenvalues of the Gram matrix.
std::pair<int, int> signature(const Mat& basis, double tol = 1e-8);

// Splits v into span(basis) + its Minkowski-orthogonal complement.
// Throws DegenerateGram when the basis Gram matrix is near singular.
std::pair<Vec, Vec> project(const Mat& basis, const Vec& v,
                            double tol = 1e-10);
std::pair<CVec, CVec> project(const Mat& basis, const CVec& v,
                              double tol = 1e-10);

// Orthogonal (w.r.t. the Minkowski product) projector onto span(basis).
Mat span_projector(const Mat& basis, double tol = 1e-10);

// True when the two column spans agree: projectors differ by < tol.
bool subspace_equal(const Mat& b1, const Mat& b2, double tol = 1e-8);

// Basis of the Minkowski-orthogonal complement of span(basis).
Mat orthogonal_complement(const Mat& basis, double tol = 1e-10);

// Signature Gram-Schmidt with pivoting by largest |self-inner|.
// Returns vectors with <v,v> = +-1 spanning the input (requires a
// nondegenerate span).
Mat orthonormalize(const Mat& basis, double tol = 1e-10);

// Random orthochronous Lorentz transform: T^t G T = G to machine
// precision, forward cone preserved. Deterministic in the seed.
Mat random_lorentz(std::uint64_t seed, int n);

}  // namespace mobius

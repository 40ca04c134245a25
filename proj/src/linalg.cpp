#include "linalg.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace glocal::linalg {

namespace {

void check_triplets(std::span<const Trip> triplets, int dimension) {
  if (dimension <= 0) throw Error("assemble: dimension must be positive");
  for (const auto& t : triplets) {
    if (t.row() < 0 || t.row() >= dimension || t.col() < 0 ||
        t.col() >= dimension) {
      throw Error("assemble: index (" + std::to_string(t.row()) + "," +
                  std::to_string(t.col()) + ") out of range for dimension " +
                  std::to_string(dimension));
    }
    if (!std::isfinite(t.value())) {
      throw Error("assemble: non-finite value at (" + std::to_string(t.row()) +
                  "," + std::to_string(t.col()) + ")");
    }
  }
}

}  // namespace

SparseSym assemble(std::span<const Trip> triplets, int dimension) {
  check_triplets(triplets, dimension);

  SpMat full(dimension, dimension);
  full.setFromTriplets(triplets.begin(), triplets.end());

  // Symmetry guard, then keep one triangle only.
  const SpMat diff = SpMat(full.transpose()) - full;
  double scale = 0.0;
  for (int k = 0; k < full.outerSize(); ++k)
    for (SpMat::InnerIterator it(full, k); it; ++it)
      scale = std::max(scale, std::abs(it.value()));
  double asym = 0.0;
  for (int k = 0; k < diff.outerSize(); ++k)
    for (SpMat::InnerIterator it(diff, k); it; ++it)
      asym = std::max(asym, std::abs(it.value()));
  if (asym > 1e-10 * std::max(scale, 1.0))
    throw Error("assemble: matrix is not symmetric (max asymmetry " +
                std::to_string(asym) + ")");

  SpMat upper = full.triangularView<Eigen::Upper>();
  upper.makeCompressed();
  return SparseSym::from_upper(std::move(upper));
}

SparseSym SparseSym::from_upper(SpMat upper) {
  SparseSym K;
  upper.makeCompressed();
  K.upper_ = std::move(upper);
  return K;
}

Vec SparseSym::multiply(const Vec& x) const {
  return upper_.selfadjointView<Eigen::Upper>() * x;
}

double SparseSym::coeff(int row, int col) const {
  if (row > col) std::swap(row, col);
  return upper_.coeff(row, col);
}

Factorization::Factorization(const SparseSym& K) {
  n_ = K.dim();
  ldlt_ = std::make_shared<Eigen::SimplicialLDLT<SpMat, Eigen::Upper>>();
  ldlt_->compute(K.upper());

  // Reject non-positive or vanishing pivots and name the offending
  // equation in original numbering.  The pivot vector is valid up to the
  // point where Eigen bails out, so scan it before info().
  const Vec& d = ldlt_->vectorD();
  const double dmax = d.size() ? d.cwiseAbs().maxCoeff() : 0.0;
  const double tol = 1e-12 * std::max(dmax, 1.0);
  for (int i = 0; i < d.size(); ++i) {
    if (!(d[i] > tol)) {
      const auto& perm = ldlt_->permutationP().indices();
      int original = i;
      for (int j = 0; j < perm.size(); ++j)
        if (perm[j] == i) {
          original = j;
          break;
        }
      throw SingularSystemError(
          "factor: non-positive pivot, system singular at equation " +
              std::to_string(original),
          original);
    }
  }
  if (ldlt_->info() != Eigen::Success)
    throw SingularSystemError("factor: decomposition failed", -1);
}

Vec Factorization::solve(const Vec& b) const {
  if (!ldlt_) throw Error("solve: empty factorization");
  if (b.size() != n_)
    throw Error("solve: right-hand side size " + std::to_string(b.size()) +
                " does not match dimension " + std::to_string(n_));
  return ldlt_->solve(b);
}

Factorization factor(const SparseSym& K) { return Factorization(K); }

Vec solve(const Factorization& F, const Vec& b) { return F.solve(b); }

}  // namespace glocal::linalg

#pragma once

// Minimal sparse symmetric linear algebra used by every FEM module:
// triplet assembly, direct LDL^T factorization with reuse, and Eigen
// dense types for the element kernels and the quasi-Newton update.

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <memory>
#include <span>
#include <stdexcept>
#include <string>

namespace glocal {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using SpMat = Eigen::SparseMatrix<double>;
using Trip = Eigen::Triplet<double>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularSystemError : public Error {
 public:
  SingularSystemError(const std::string& msg, int equation)
      : Error(msg), equation_(equation) {}
  int equation() const { return equation_; }

 private:
  int equation_ = -1;
};

class NonConformingError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

namespace linalg {

// Symmetric sparse matrix; only the upper triangle is stored after
// assembly.  Input triplets may cover both triangles (element matrices
// are symmetric), symmetry is checked and the matrix symmetrized.
class SparseSym {
 public:
  SparseSym() = default;

  int dim() const { return static_cast<int>(upper_.rows()); }
  Vec multiply(const Vec& x) const;
  double coeff(int row, int col) const;
  const SpMat& upper() const { return upper_; }

  static SparseSym from_upper(SpMat upper);

 private:
  SpMat upper_;
};

SparseSym assemble(std::span<const Trip> triplets, int dimension);

// Direct LDL^T factorization.  Cheap to copy (shared backend), reusable
// for any number of right-hand sides.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(const SparseSym& K);

  int dim() const { return n_; }
  Vec solve(const Vec& b) const;

 private:
  std::shared_ptr<Eigen::SimplicialLDLT<SpMat, Eigen::Upper>> ldlt_;
  int n_ = 0;
};

Factorization factor(const SparseSym& K);
Vec solve(const Factorization& F, const Vec& b);

}  // namespace linalg
}  // namespace glocal

#ifndef RICCILAB_ALGEBRA_LIE_ALGEBRA_HPP
#define RICCILAB_ALGEBRA_LIE_ALGEBRA_HPP

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "riccilab/core/errors.hpp"
#include "riccilab/core/qmatrix.hpp"

namespace riccilab {

inline constexpr double kGramIdentityTol = 1e-10;
inline constexpr double kClosureTol = 1e-8;
inline constexpr double kCoefficientTol = 1e-10;

struct Expansion {
  Eigen::VectorXd coords;
  double residual = 0.0;
};

/// A compact matrix Lie algebra: an ordered basis of anti-Hermitian matrices
/// over one scalar kind, with the bi-invariant inner product
/// Q(X,Y) = -q_scale * Re tr(XY).
class MatrixLieAlgebra {
public:
  MatrixLieAlgebra() = default;
  MatrixLieAlgebra(std::string name, std::vector<QMatrix> basis,
                   std::vector<std::string> basis_names, double q_scale = 0.5)
      : name_(std::move(name)),
        basis_(std::move(basis)),
        names_(std::move(basis_names)),
        q_scale_(q_scale) {
    if (basis_.empty()) throw DimensionError("empty basis");
    if (q_scale_ <= 0.0) throw DomainError("q_scale must be positive");
    if (names_.empty()) {
      for (std::size_t i = 0; i < basis_.size(); ++i)
        names_.push_back("e" + std::to_string(i + 1));
    }
    if (names_.size() != basis_.size())
      throw DimensionError("basis_names size mismatch");
    for (const auto& x : basis_) {
      basis_.front().check_compatible(x);
      if (x.anti_hermitian_defect() > 1e-12 * std::max(1.0, x.max_abs()))
        throw DomainError(name_ + ": basis matrix is not anti-Hermitian");
    }
    gram_ = compute_gram();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(gram_);
    lu.setThreshold(1e-12);
    if (lu.rank() < static_cast<int>(basis_.size()))
      throw DegenerateBasisError(name_ + ": basis is linearly dependent (Gram rank " +
                                 std::to_string(lu.rank()) + " < " +
                                 std::to_string(basis_.size()) + ")");
    gram_solver_.compute(gram_);
    orthonormal_ = (gram_ - Eigen::MatrixXd::Identity(dim(), dim()))
                       .cwiseAbs()
                       .maxCoeff() < kGramIdentityTol;
  }

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int matrix_size() const { return basis_.front().size(); }
  ScalarKind kind() const { return basis_.front().kind(); }
  double q_scale() const { return q_scale_; }
  const std::vector<QMatrix>& basis() const { return basis_; }
  const QMatrix& basis(int i) const { return basis_.at(i); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Eigen::MatrixXd& gram() const { return gram_; }
  bool orthonormal() const { return orthonormal_; }

  double inner(const QMatrix& x, const QMatrix& y) const {
    return -q_scale_ * re_trace_product(x, y);
  }
  double norm(const QMatrix& x) const {
    return std::sqrt(std::max(0.0, inner(x, x)));
  }

  /// Coordinates of X in the basis, by solving the Gram system. For matrices
  /// in the span this is exact up to roundoff; the residual reports the
  /// Q-norm of the unrepresented part.
  Expansion expand_in_basis(const QMatrix& x) const {
    basis_.front().check_compatible(x);
    Eigen::VectorXd rhs(dim());
    for (int a = 0; a < dim(); ++a) rhs[a] = inner(x, basis_[a]);
    Expansion e;
    e.coords = gram_solver_.solve(rhs);
    QMatrix rem = x;
    for (int a = 0; a < dim(); ++a)
      if (e.coords[a] != 0.0) rem -= e.coords[a] * basis_[a];
    e.residual = norm(rem);
    return e;
  }

  QMatrix from_coords(const Eigen::VectorXd& c) const {
    QMatrix out(matrix_size(), kind());
    for (int a = 0; a < dim(); ++a)
      if (c[a] != 0.0) out += c[a] * basis_[a];
    return out;
  }

  /// Max expansion residual over all basis brackets.
  double closure_defect() const {
    double worst = 0.0;
    for (int i = 0; i < dim(); ++i)
      for (int j = i + 1; j < dim(); ++j)
        worst = std::max(worst,
                         expand_in_basis(bracket(basis_[i], basis_[j])).residual);
    return worst;
  }

  void require_closure(double tol = kClosureTol) const {
    const double d = closure_defect();
    if (d > tol)
      throw NotSubalgebraError(
          name_ + ": basis brackets leave the span (residual " +
              std::to_string(d) + ")",
          d);
  }

private:
  Eigen::MatrixXd compute_gram() const {
    Eigen::MatrixXd g(dim(), dim());
    for (int a = 0; a < dim(); ++a)
      for (int b = 0; b <= a; ++b)
        g(a, b) = g(b, a) = inner(basis_[a], basis_[b]);
    return g;
  }

  std::string name_;
  std::vector<QMatrix> basis_;
  std::vector<std::string> names_;
  double q_scale_ = 0.5;
  Eigen::MatrixXd gram_;
  Eigen::LDLT<Eigen::MatrixXd> gram_solver_;
  bool orthonormal_ = false;
};

} // namespace riccilab

#endif

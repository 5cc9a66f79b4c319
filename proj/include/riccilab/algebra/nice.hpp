#ifndef RICCILAB_ALGEBRA_NICE_HPP
#define RICCILAB_ALGEBRA_NICE_HPP

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include "riccilab/algebra/lie_algebra.hpp"
#include "riccilab/core/errors.hpp"

namespace riccilab {

/// Witness for a non-nice basis: a bracket [e_i, e_j] whose expansion has at
/// least two coefficients above tolerance.
struct NiceWitness {
  int i = 0;
  int j = 0;
  Eigen::VectorXd coords;
};

struct NiceReport {
  bool is_nice = true;
  std::optional<NiceWitness> witness;

  std::string describe(const MatrixLieAlgebra& alg) const {
    std::ostringstream os;
    if (is_nice) {
      os << alg.name() << ": nice basis";
      return os.str();
    }
    const auto& w = *witness;
    os << alg.name() << ": not nice; [" << alg.basis_names()[w.i] << ","
       << alg.basis_names()[w.j] << "] =";
    for (int k = 0; k < w.coords.size(); ++k)
      if (std::abs(w.coords[k]) > kCoefficientTol) {
        const double c = w.coords[k];
        os << (c >= 0 ? " +" : " -");
        if (std::abs(std::abs(c) - 1.0) > kCoefficientTol) os << std::abs(c) << "*";
        os << alg.basis_names()[k];
      }
    return os.str();
  }
};

/// A basis is nice when every pairwise bracket is a scalar multiple of a
/// single basis element. Pairs are scanned in lexicographic order and the
/// first violation is reported.
inline NiceReport is_nice(const MatrixLieAlgebra& alg,
                          double tol = kCoefficientTol) {
  const int m = alg.dim();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Expansion e = alg.expand_in_basis(bracket(alg.basis(i), alg.basis(j)));
      if (e.residual > kClosureTol)
        throw NotSubalgebraError(alg.name() + ": [" + alg.basis_names()[i] +
                                     "," + alg.basis_names()[j] +
                                     "] leaves the span (residual " +
                                     std::to_string(e.residual) + ")",
                                 e.residual);
      int nonzero = 0;
      for (int k = 0; k < m; ++k)
        if (std::abs(e.coords[k]) > tol) ++nonzero;
      if (nonzero >= 2)
        return NiceReport{false, NiceWitness{i, j, std::move(e.coords)}};
    }
  }
  return NiceReport{};
}

} // namespace riccilab

#endif

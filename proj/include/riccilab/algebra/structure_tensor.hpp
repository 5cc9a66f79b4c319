#ifndef RICCILAB_ALGEBRA_STRUCTURE_TENSOR_HPP
#define RICCILAB_ALGEBRA_STRUCTURE_TENSOR_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "riccilab/algebra/lie_algebra.hpp"
#include "riccilab/core/errors.hpp"

namespace riccilab {

/// Structure constants gamma_{ij}^k of a basis, stored sparsely for i < j
/// with the sign flip handled on access. In a Q-orthonormal basis these are
/// totally antisymmetric in all three indices.
class StructureTensor {
public:
  using Entry = std::pair<int, double>; // (k, gamma)

  StructureTensor() = default;
  explicit StructureTensor(int dim, bool orthonormal = false)
      : dim_(dim), orthonormal_(orthonormal) {}

  int dim() const { return dim_; }
  bool orthonormal() const { return orthonormal_; }

  void set(int i, int j, std::vector<Entry> entries) {
    if (i >= j) throw DimensionError("StructureTensor::set needs i < j");
    if (!entries.empty()) entries_[{i, j}] = std::move(entries);
  }

  double gamma(int i, int j, int k) const {
    if (i == j) return 0.0;
    const double sign = (i < j) ? 1.0 : -1.0;
    auto it = entries_.find({std::min(i, j), std::max(i, j)});
    if (it == entries_.end()) return 0.0;
    for (const auto& [kk, v] : it->second)
      if (kk == k) return sign * v;
    return 0.0;
  }

  /// fn(i, j, entries) for each stored pair i < j.
  template <class Fn>
  void for_each_pair(Fn&& fn) const {
    for (const auto& [ij, list] : entries_) fn(ij.first, ij.second, list);
  }

  std::size_t nonzero_pairs() const { return entries_.size(); }

  /// Dense matrix of ad_{e_i}: (ad_i)_{kj} = gamma_{ij}^k.
  Eigen::MatrixXd ad_matrix(int i) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
    for_each_pair([&](int a, int b, const std::vector<Entry>& list) {
      for (const auto& [k, v] : list) {
        if (a == i) m(k, b) += v;
        if (b == i) m(k, a) -= v;
      }
    });
    return m;
  }

private:
  int dim_ = 0;
  bool orthonormal_ = false;
  std::map<std::pair<int, int>, std::vector<Entry>> entries_;
};

inline double antisymmetry_defect(const StructureTensor& st);

/// gamma_{ij}^k for the algebra's own basis. Uses the plain Q-projection when
/// the basis is orthonormal, otherwise the Gram-system expansion. Every
/// bracket must stay in the span.
inline StructureTensor structure_constants(const MatrixLieAlgebra& alg) {
  const int m = alg.dim();
  StructureTensor st(m, alg.orthonormal());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const QMatrix br = bracket(alg.basis(i), alg.basis(j));
      Expansion e = alg.expand_in_basis(br);
      if (e.residual > kClosureTol)
        throw NotSubalgebraError(alg.name() + ": [" + alg.basis_names()[i] +
                                     "," + alg.basis_names()[j] +
                                     "] leaves the span (residual " +
                                     std::to_string(e.residual) + ")",
                                 e.residual);
      std::vector<StructureTensor::Entry> list;
      for (int k = 0; k < m; ++k)
        if (std::abs(e.coords[k]) > 1e-12) list.emplace_back(k, e.coords[k]);
      st.set(i, j, std::move(list));
    }
  }
  if (st.orthonormal()) {
    const double v = antisymmetry_defect(st);
    if (v > 1e-12)
      throw GramError(alg.name() + ": antisymmetry identities violated (" +
                      std::to_string(v) + ")");
  }
  return st;
}

/// Max violation of gamma_{ij}^k = -gamma_{ik}^j = -gamma_{kj}^i = -gamma_{ji}^k
/// over all stored entries. Meaningful only for orthonormal bases.
inline double antisymmetry_defect(const StructureTensor& st) {
  double worst = 0.0;
  st.for_each_pair([&](int i, int j, const std::vector<StructureTensor::Entry>& list) {
    for (const auto& [k, v] : list) {
      worst = std::max(worst, std::abs(v + st.gamma(i, k, j)));
      worst = std::max(worst, std::abs(v + st.gamma(k, j, i)));
      worst = std::max(worst, std::abs(v + st.gamma(j, i, k)));
      if (i == j || j == k || i == k) worst = std::max(worst, std::abs(v));
    }
  });
  return worst;
}

/// Max violation of the Jacobi identity, contracted through the tensor.
inline double jacobi_defect(const StructureTensor& st) {
  const int m = st.dim();
  std::vector<Eigen::MatrixXd> ad(m);
  for (int i = 0; i < m; ++i) ad[i] = st.ad_matrix(i);
  double worst = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      // [[e_i,e_j], .] = [ad_i, ad_j] as operators
      Eigen::VectorXd cij(m);
      for (int k = 0; k < m; ++k) cij[k] = st.gamma(i, j, k);
      Eigen::MatrixXd lhs = Eigen::MatrixXd::Zero(m, m);
      for (int k = 0; k < m; ++k)
        if (cij[k] != 0.0) lhs += cij[k] * ad[k];
      worst = std::max(worst,
                       (lhs - (ad[i] * ad[j] - ad[j] * ad[i])).cwiseAbs().maxCoeff());
    }
  return worst;
}

/// Killing form K(e_i,e_j) = tr(ad_i ad_j), purely from the tensor.
inline Eigen::MatrixXd killing_form(const StructureTensor& st) {
  const int m = st.dim();
  std::vector<Eigen::MatrixXd> ad(m);
  for (int i = 0; i < m; ++i) ad[i] = st.ad_matrix(i);
  Eigen::MatrixXd k(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j)
      k(i, j) = k(j, i) = (ad[i].transpose().cwiseProduct(ad[j])).sum();
  // tr(A B) = sum_{a,b} A_{ab} B_{ba} = sum (A^T .* B)
  return k;
}

} // namespace riccilab

#endif

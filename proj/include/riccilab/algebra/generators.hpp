#ifndef RICCILAB_ALGEBRA_GENERATORS_HPP
#define RICCILAB_ALGEBRA_GENERATORS_HPP

#include <string>
#include <vector>

#include "riccilab/algebra/lie_algebra.hpp"
#include "riccilab/core/qmatrix.hpp"

namespace riccilab {

namespace detail {

inline QMatrix sym_unit(int n, int p, int q, const Quat& u, ScalarKind kind) {
  QMatrix m(n, kind);
  m(p - 1, q - 1) = u;
  m(q - 1, p - 1) = u;
  return m;
}

inline QMatrix diag_unit(int n, int l, const Quat& u, ScalarKind kind) {
  QMatrix m(n, kind);
  m(l - 1, l - 1) = u;
  return m;
}

inline std::string pq_name(const char* stem, int p, int q) {
  return std::string(stem) + std::to_string(p) + std::to_string(q);
}

} // namespace detail

/// so(n): the E_ij, i < j, in lexicographic order. Orthonormal for the
/// default q_scale = 1/2.
inline MatrixLieAlgebra so_basis(int n) {
  if (n < 3) throw DomainError("so_basis: need n >= 3");
  std::vector<QMatrix> basis;
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      basis.push_back(skew_unit(n, i, j));
      names.push_back(detail::pq_name("E", i, j));
    }
  return MatrixLieAlgebra("so(" + std::to_string(n) + ")", std::move(basis),
                          std::move(names));
}

/// u(n): E_pq, F_pq, H_l.
inline MatrixLieAlgebra u_basis(int n) {
  if (n < 2) throw DomainError("u_basis: need n >= 2");
  std::vector<QMatrix> basis;
  std::vector<std::string> names;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      basis.push_back(skew_unit(n, p, q, ScalarKind::Complex));
      names.push_back(detail::pq_name("E", p, q));
    }
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      basis.push_back(detail::sym_unit(n, p, q, Quat::i(), ScalarKind::Complex));
      names.push_back(detail::pq_name("F", p, q));
    }
  for (int l = 1; l <= n; ++l) {
    basis.push_back(detail::diag_unit(n, l, Quat::i(), ScalarKind::Complex));
    names.push_back("H" + std::to_string(l));
  }
  return MatrixLieAlgebra("u(" + std::to_string(n) + ")", std::move(basis),
                          std::move(names));
}

/// su(n): E_pq, F_pq and the traceless diagonals G_l = H_l - H_{l+1}.
/// The G_l are not Q-orthogonal to each other.
inline MatrixLieAlgebra su_basis(int n) {
  if (n < 2) throw DomainError("su_basis: need n >= 2");
  std::vector<QMatrix> basis;
  std::vector<std::string> names;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      basis.push_back(skew_unit(n, p, q, ScalarKind::Complex));
      names.push_back(detail::pq_name("E", p, q));
    }
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      basis.push_back(detail::sym_unit(n, p, q, Quat::i(), ScalarKind::Complex));
      names.push_back(detail::pq_name("F", p, q));
    }
  for (int l = 1; l < n; ++l) {
    basis.push_back(detail::diag_unit(n, l, Quat::i(), ScalarKind::Complex) -
                    detail::diag_unit(n, l + 1, Quat::i(), ScalarKind::Complex));
    names.push_back("G" + std::to_string(l));
  }
  return MatrixLieAlgebra("su(" + std::to_string(n) + ")", std::move(basis),
                          std::move(names));
}

/// sp(n) as quaternionic anti-Hermitian matrices:
/// E_pq, F_pq (i), Y_pq (j), Z_pq (k), H_l (i), S_l (j), T_l (k).
inline MatrixLieAlgebra sp_basis(int n) {
  if (n < 2) throw DomainError("sp_basis: need n >= 2");
  const auto K = ScalarKind::Quaternion;
  std::vector<QMatrix> basis;
  std::vector<std::string> names;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      basis.push_back(skew_unit(n, p, q, K));
      names.push_back(detail::pq_name("E", p, q));
    }
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      basis.push_back(detail::sym_unit(n, p, q, Quat::i(), K));
      names.push_back(detail::pq_name("F", p, q));
    }
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      basis.push_back(detail::sym_unit(n, p, q, Quat::j(), K));
      names.push_back(detail::pq_name("Y", p, q));
    }
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      basis.push_back(detail::sym_unit(n, p, q, Quat::k(), K));
      names.push_back(detail::pq_name("Z", p, q));
    }
  for (int l = 1; l <= n; ++l) {
    basis.push_back(detail::diag_unit(n, l, Quat::i(), K));
    names.push_back("H" + std::to_string(l));
  }
  for (int l = 1; l <= n; ++l) {
    basis.push_back(detail::diag_unit(n, l, Quat::j(), K));
    names.push_back("S" + std::to_string(l));
  }
  for (int l = 1; l <= n; ++l) {
    basis.push_back(detail::diag_unit(n, l, Quat::k(), K));
    names.push_back("T" + std::to_string(l));
  }
  return MatrixLieAlgebra("sp(" + std::to_string(n) + ")", std::move(basis),
                          std::move(names));
}

/// The 14-element g2 basis inside so(7), stored verbatim. It is linearly
/// independent but not orthogonal, so expansions go through the Gram system.
inline MatrixLieAlgebra g2_basis() {
  const int n = 7;
  auto E = [n](int i, int j) { return skew_unit(n, i, j); };
  std::vector<QMatrix> basis = {
      E(1, 2) - E(4, 7), E(1, 2) + E(5, 6), E(1, 4) + E(2, 7),
      E(1, 4) - E(3, 6), E(1, 6) + E(2, 5), E(3, 4) + E(1, 6),
      E(1, 3) + E(4, 6), E(1, 3) + E(5, 7), E(1, 5) - E(2, 6),
      E(1, 5) - E(3, 7), E(1, 7) - E(2, 4), E(1, 7) + E(3, 5),
      E(2, 3) + E(6, 7), E(4, 5) + E(6, 7)};
  std::vector<std::string> names;
  for (int i = 1; i <= 14; ++i) names.push_back("X" + std::to_string(i));
  return MatrixLieAlgebra("g2", std::move(basis), std::move(names));
}

} // namespace riccilab

#endif

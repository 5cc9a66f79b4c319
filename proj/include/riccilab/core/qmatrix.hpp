#ifndef RICCILAB_CORE_QMATRIX_HPP
#define RICCILAB_CORE_QMATRIX_HPP

#include <string>
#include <vector>

#include "riccilab/core/errors.hpp"
#include "riccilab/core/quaternion.hpp"

namespace riccilab {

enum class ScalarKind { Real, Complex, Quaternion };

inline const char* to_string(ScalarKind k) {
  switch (k) {
    case ScalarKind::Real: return "real";
    case ScalarKind::Complex: return "complex";
    case ScalarKind::Quaternion: return "quaternion";
  }
  return "?";
}

/// Number of real components carried by entries of the given kind.
inline int component_count(ScalarKind k) {
  switch (k) {
    case ScalarKind::Real: return 1;
    case ScalarKind::Complex: return 2;
    case ScalarKind::Quaternion: return 4;
  }
  return 0;
}

/// Dense square matrix with quaternion entries, tagged with the scalar kind
/// it is meant to live over. Real and complex matrices simply keep the unused
/// components at zero.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(int n, ScalarKind kind) : n_(n), kind_(kind), a_(n * n) {}

  int size() const { return n_; }
  ScalarKind kind() const { return kind_; }

  Quat& operator()(int r, int c) { return a_[r * n_ + c]; }
  const Quat& operator()(int r, int c) const { return a_[r * n_ + c]; }

  QMatrix& operator+=(const QMatrix& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  QMatrix& operator-=(const QMatrix& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  QMatrix& operator*=(double s) {
    for (auto& q : a_) q = s * q;
    return *this;
  }

  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(double s, QMatrix a) { return a *= s; }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    a.check_compatible(b);
    const int n = a.n_;
    QMatrix out(n, a.kind_);
    for (int r = 0; r < n; ++r)
      for (int j = 0; j < n; ++j) {
        const Quat& arj = a(r, j);
        if (arj.norm2() == 0.0) continue;
        for (int c = 0; c < n; ++c) out(r, c) += arj * b(j, c);
      }
    return out;
  }

  /// Conjugate transpose (quaternionic adjoint).
  QMatrix adjoint() const {
    QMatrix out(n_, kind_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) out(c, r) = (*this)(r, c).conj();
    return out;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& q : a_) m = std::max(m, q.norm());
    return m;
  }

  /// Largest |X + X*| entry; zero for anti-Hermitian matrices.
  double anti_hermitian_defect() const {
    double m = 0.0;
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        m = std::max(m, ((*this)(r, c) + (*this)(c, r).conj()).norm());
    return m;
  }

  void check_compatible(const QMatrix& o) const {
    if (n_ != o.n_ || kind_ != o.kind_)
      throw DimensionError("matrix size/kind mismatch: " + std::to_string(n_) +
                           "x" + std::to_string(n_) + " " + to_string(kind_) +
                           " vs " + std::to_string(o.n_) + "x" +
                           std::to_string(o.n_) + " " + to_string(o.kind_));
  }

private:
  int n_ = 0;
  ScalarKind kind_ = ScalarKind::Real;
  std::vector<Quat> a_;
};

/// Commutator AB - BA.
inline QMatrix bracket(const QMatrix& a, const QMatrix& b) {
  a.check_compatible(b);
  return a * b - b * a;
}

/// Re tr(AB), computed entrywise without forming the product.
inline double re_trace_product(const QMatrix& a, const QMatrix& b) {
  a.check_compatible(b);
  double s = 0.0;
  for (int r = 0; r < a.size(); ++r)
    for (int c = 0; c < a.size(); ++c) s += re_product(a(r, c), b(c, r));
  return s;
}

/// Skew matrix E_ij with +1 at (i,j), -1 at (j,i); 1-based indices.
inline QMatrix skew_unit(int n, int i, int j,
                         ScalarKind kind = ScalarKind::Real) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw DimensionError("skew_unit: bad indices (" + std::to_string(i) + "," +
                         std::to_string(j) + ") for n=" + std::to_string(n));
  QMatrix m(n, kind);
  m(i - 1, j - 1) = Quat(1.0);
  m(j - 1, i - 1) = Quat(-1.0);
  return m;
}

} // namespace riccilab

#endif

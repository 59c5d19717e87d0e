#ifndef SRCOMPLEX_LATTICE_HPP
#define SRCOMPLEX_LATTICE_HPP

// Exact integer linear algebra: sign decompositions, the conformal and
// semiconformal orders, fraction-free rank and determinant, Hermite forms,
// saturated kernel lattices and pointedness.

#include <cstddef>
#include <utility>
#include <vector>

#include "srcomplex/detail/exact_simplex.hpp"
#include "srcomplex/error.hpp"
#include "srcomplex/types.hpp"

namespace srcomplex {

template <typename Scalar>
Vector<Scalar> positive_part(const Vector<Scalar>& u) {
  Vector<Scalar> p(u.size());
  for (Index i = 0; i < u.size(); ++i) p(i) = u(i) > Scalar(0) ? u(i) : Scalar(0);
  return p;
}

template <typename Scalar>
Vector<Scalar> negative_part(const Vector<Scalar>& u) {
  Vector<Scalar> p(u.size());
  for (Index i = 0; i < u.size(); ++i) p(i) = u(i) < Scalar(0) ? Scalar(-u(i)) : Scalar(0);
  return p;
}

/// Zero-based indices of the nonzero entries.
template <typename Scalar>
std::vector<Index> support(const Vector<Scalar>& u) {
  std::vector<Index> s;
  for (Index i = 0; i < u.size(); ++i) {
    if (u(i) != Scalar(0)) s.push_back(i);
  }
  return s;
}

/// g ⊑ u: g⁺ <= u⁺ and g⁻ <= u⁻ componentwise.
template <typename Scalar>
bool conformal_leq(const Vector<Scalar>& g, const Vector<Scalar>& u) {
  if (g.size() != u.size()) throw Error(ErrorCode::LengthMismatch, "conformal_leq: length mismatch");
  for (Index i = 0; i < g.size(); ++i) {
    const Scalar& a = g(i);
    const Scalar& b = u(i);
    if (a > Scalar(0)) {
      if (b < a) return false;
    } else if (a < Scalar(0)) {
      if (b > a) return false;
    }
  }
  return true;
}

/// u = v +_sc w: u = v + w, v_i > 0 implies w_i >= 0, and w_i < 0 implies v_i <= 0.
template <typename Scalar>
bool is_semiconformal_sum(const Vector<Scalar>& u, const Vector<Scalar>& v, const Vector<Scalar>& w) {
  if (u.size() != v.size() || u.size() != w.size()) {
    throw Error(ErrorCode::LengthMismatch, "is_semiconformal_sum: length mismatch");
  }
  for (Index i = 0; i < u.size(); ++i) {
    if (u(i) != v(i) + w(i)) return false;
    if (v(i) > Scalar(0) && w(i) < Scalar(0)) return false;
    if (w(i) < Scalar(0) && v(i) > Scalar(0)) return false;
  }
  return true;
}

enum class SignConvention { AsIs, LeadingPositive };

/// v divided by the gcd of its entries.
template <typename Scalar>
Vector<Scalar> primitive_part(const Vector<Scalar>& v, SignConvention sign = SignConvention::AsIs) {
  Scalar g(0);
  for (Index i = 0; i < v.size(); ++i) g = gcd_value(g, v(i));
  if (g == Scalar(0)) throw Error(ErrorCode::ZeroVector, "primitive_part: zero vector");
  Vector<Scalar> p(v.size());
  for (Index i = 0; i < v.size(); ++i) p(i) = v(i) / g;
  return sign == SignConvention::LeadingPositive ? canonical_sign(std::move(p)) : p;
}

/// Rank over Q by fraction-free (Bareiss) elimination.
template <typename Scalar>
Index rank(Matrix<Scalar> a) {
  const Index m = a.rows();
  const Index n = a.cols();
  Scalar prev(1);
  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    Index p = r;
    while (p < m && a(p, c) == Scalar(0)) ++p;
    if (p == m) continue;
    if (p != r) a.row(p).swap(a.row(r));
    for (Index i = r + 1; i < m; ++i) {
      for (Index j = c + 1; j < n; ++j) {
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = Scalar(0);
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

template <typename Scalar>
Scalar determinant(Matrix<Scalar> a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::LengthMismatch, "determinant: matrix not square");
  const Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  bool negate = false;
  for (Index k = 0; k < n; ++k) {
    Index p = k;
    while (p < n && a(p, k) == Scalar(0)) ++p;
    if (p == n) return Scalar(0);
    if (p != k) {
      a.row(p).swap(a.row(k));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  return negate ? Scalar(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

namespace detail {

// Unimodular row reduction of column c over rows [r, m): leaves a single
// nonzero (possibly negative) entry at row r, or returns false if the column
// is already zero there.
template <typename Scalar>
bool euclid_column(Matrix<Scalar>& h, Index r, Index c) {
  const Index m = h.rows();
  for (;;) {
    Index best = -1;
    for (Index i = r; i < m; ++i) {
      if (h(i, c) == Scalar(0)) continue;
      if (best < 0 || abs_value(h(i, c)) < abs_value(h(best, c))) best = i;
    }
    if (best < 0) return false;
    if (best != r) h.row(best).swap(h.row(r));
    bool done = true;
    for (Index i = r + 1; i < m; ++i) {
      if (h(i, c) == Scalar(0)) continue;
      const Scalar q = floor_div(h(i, c), h(r, c));
      h.row(i) -= q * h.row(r);
      if (h(i, c) != Scalar(0)) done = false;
    }
    if (done) return true;
  }
}

}  // namespace detail

/// Row Hermite normal form of the lattice spanned by the rows of m: positive
/// pivots, entries above each pivot reduced into [0, pivot), zero rows
/// dropped. Unique for the lattice, hence canonical.
template <typename Scalar>
Matrix<Scalar> hermite_rows(Matrix<Scalar> h) {
  Index r = 0;
  for (Index c = 0; c < h.cols() && r < h.rows(); ++c) {
    if (!detail::euclid_column(h, r, c)) continue;
    if (h(r, c) < Scalar(0)) h.row(r) = -h.row(r);
    for (Index i = 0; i < r; ++i) {
      const Scalar q = floor_div(h(i, c), h(r, c));
      if (q != Scalar(0)) h.row(i) -= q * h.row(r);
    }
    ++r;
  }
  return h.topRows(r);
}

/// Membership of v in the lattice whose row Hermite form is hnf.
template <typename Scalar>
bool in_row_lattice(const Matrix<Scalar>& hnf, Vector<Scalar> v) {
  if (v.size() != hnf.cols()) throw Error(ErrorCode::LengthMismatch, "in_row_lattice: length mismatch");
  Index c = 0;
  for (Index r = 0; r < hnf.rows(); ++r) {
    while (hnf(r, c) == Scalar(0)) {
      if (v(c) != Scalar(0)) return false;
      ++c;
    }
    if (v(c) % hnf(r, c) != Scalar(0)) return false;
    const Scalar q = v(c) / hnf(r, c);
    v -= q * hnf.row(r).transpose();
    ++c;
  }
  return is_zero_vector(v);
}

/// Saturated basis of Ker_Z(A).
template <typename Scalar>
struct KernelBasis {
  Matrix<Scalar> source;
  /// n x r; columns generate Ker_Z(source) and are in column Hermite form,
  /// so each column's lowest-index nonzero entry is positive.
  Matrix<Scalar> basis;

  Index lattice_rank() const { return basis.cols(); }
  /// Gale transform of column i (zero-based): row i of the basis matrix.
  Vector<Scalar> gale_row(Index i) const { return basis.row(i).transpose(); }
};

/// Reduces [Aᵀ | I] by unimodular row operations; the identity part of the
/// rows whose Aᵀ part vanishes spans the full integer kernel.
template <typename Scalar>
KernelBasis<Scalar> kernel_lattice_basis(const Matrix<Scalar>& a) {
  const Index m = a.rows();
  const Index n = a.cols();
  Matrix<Scalar> aug(n, m + n);
  aug.leftCols(m) = a.transpose();
  aug.rightCols(n) = Matrix<Scalar>::Identity(n, n);

  Index r = 0;
  for (Index c = 0; c < m && r < n; ++c) {
    if (detail::euclid_column(aug, r, c)) ++r;
  }
  Matrix<Scalar> kernel_rows = aug.bottomRows(n - r).rightCols(n);
  Matrix<Scalar> hnf = hermite_rows(std::move(kernel_rows));
  return KernelBasis<Scalar>{a, hnf.transpose()};
}

inline detail::Rational to_rational(const Integer& x) { return detail::Rational(x.rep()); }
template <std::integral T>
detail::Rational to_rational(T x) {
  return detail::Rational(x);
}

/// True iff Ker_Z(A) ∩ N^n = {0}: decided by exact infeasibility of
/// {x >= 0, Ax = 0, x_1 + ... + x_n = 1}.
template <typename Scalar>
bool is_pointed(const Matrix<Scalar>& a) {
  const Index m = a.rows();
  const Index n = a.cols();
  std::vector<std::vector<detail::Rational>> eq(static_cast<std::size_t>(m + 1),
                                                std::vector<detail::Rational>(static_cast<std::size_t>(n)));
  std::vector<detail::Rational> rhs(static_cast<std::size_t>(m + 1));
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) eq[i][j] = to_rational(a(i, j));
  }
  for (Index j = 0; j < n; ++j) eq[m][j] = 1;
  rhs[m] = 1;
  return !detail::nonnegative_feasible(std::move(eq), std::move(rhs));
}

}  // namespace srcomplex

#endif  // SRCOMPLEX_LATTICE_HPP

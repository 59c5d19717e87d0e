#ifndef SRCOMPLEX_TYPES_HPP
#define SRCOMPLEX_TYPES_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Core>

#include "srcomplex/error.hpp"
#include "srcomplex/integer.hpp"

namespace srcomplex {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVec = Vector<Integer>;
using IntMatrix = Matrix<Integer>;

using Index = Eigen::Index;

template <typename Scalar = Integer>
Vector<Scalar> make_vector(std::initializer_list<long long> entries) {
  Vector<Scalar> v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long long e : entries) v(i++) = Scalar(e);
  return v;
}

template <typename Scalar = Integer>
Vector<Scalar> make_vector(const std::vector<long long>& entries) {
  Vector<Scalar> v(static_cast<Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<Index>(i)) = Scalar(entries[i]);
  return v;
}

/// Row-major literal; all rows must have equal length.
template <typename Scalar = Integer>
Matrix<Scalar> make_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  const Index m = static_cast<Index>(rows.size());
  const Index n = m == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  Matrix<Scalar> a(m, n);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != n) {
      throw Error(ErrorCode::LengthMismatch, "make_matrix: ragged rows");
    }
    Index j = 0;
    for (long long e : row) a(i, j++) = Scalar(e);
    ++i;
  }
  return a;
}

template <typename Scalar>
std::vector<Vector<Scalar>> columns_of(const Matrix<Scalar>& a) {
  std::vector<Vector<Scalar>> cols;
  cols.reserve(static_cast<std::size_t>(a.cols()));
  for (Index j = 0; j < a.cols(); ++j) cols.emplace_back(a.col(j));
  return cols;
}

/// Stacks vectors of equal length as the rows of a matrix.
template <typename Scalar>
Matrix<Scalar> rows_to_matrix(const std::vector<Vector<Scalar>>& rows, Index width) {
  Matrix<Scalar> out(static_cast<Index>(rows.size()), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) throw Error(ErrorCode::LengthMismatch, "rows_to_matrix: width mismatch");
    out.row(static_cast<Index>(i)) = rows[i].transpose();
  }
  return out;
}

/// Lexicographic order on entries; shorter vectors first.
struct LexLess {
  template <typename Scalar>
  bool operator()(const Vector<Scalar>& a, const Vector<Scalar>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Index i = 0; i < a.size(); ++i) {
      if (a(i) < b(i)) return true;
      if (b(i) < a(i)) return false;
    }
    return false;
  }
};

template <typename Scalar>
bool equal_vectors(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  return a.size() == b.size() && (a.size() == 0 || a == b);
}

template <typename Scalar>
bool is_zero_vector(const Vector<Scalar>& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) != Scalar(0)) return false;
  }
  return true;
}

template <typename Scalar>
Scalar max_norm(const Vector<Scalar>& v) {
  Scalar best(0);
  for (Index i = 0; i < v.size(); ++i) best = std::max(best, abs_value(v(i)));
  return best;
}

template <typename Scalar>
Scalar dot(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "dot: length mismatch");
  Scalar s(0);
  for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

/// Negates v if its lowest-index nonzero entry is negative.
template <typename Scalar>
Vector<Scalar> canonical_sign(Vector<Scalar> v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) != Scalar(0)) {
      if (v(i) < Scalar(0)) v = -v;
      break;
    }
  }
  return v;
}

template <typename Scalar>
void sort_unique(std::vector<Vector<Scalar>>& vs) {
  std::sort(vs.begin(), vs.end(), LexLess{});
  vs.erase(std::unique(vs.begin(), vs.end(),
                       [](const auto& a, const auto& b) { return equal_vectors(a, b); }),
           vs.end());
}

}  // namespace srcomplex

#endif  // SRCOMPLEX_TYPES_HPP

#ifndef SRCOMPLEX_BOUQUET_HPP
#define SRCOMPLEX_BOUQUET_HPP

// Bouquet structure of a configuration, read off its Gale transforms.
//
// Two columns share a bouquet iff their Gale rows are nonzero and parallel;
// all columns with zero Gale row (the free vectors) form a single bouquet.
// Within a non-free bouquet with least member j0 we have G_j = λ_j G_j0, and
// the edge {j0, j} is in E⁺ iff λ_j > 0. The bouquet is mixed iff some
// λ_j < 0.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "srcomplex/error.hpp"
#include "srcomplex/lattice.hpp"
#include "srcomplex/parallel.hpp"
#include "srcomplex/types.hpp"

namespace srcomplex {

enum class BouquetClass { Free, Mixed, NonMixed };

inline std::string_view bouquet_class_name(BouquetClass c) {
  switch (c) {
    case BouquetClass::Free: return "free";
    case BouquetClass::Mixed: return "mixed";
    case BouquetClass::NonMixed: return "non-mixed";
  }
  return "unknown";
}

enum class EdgeClass { None, Plus, Minus, Zero };

template <typename Scalar>
struct Bouquet {
  std::vector<Index> members;  // zero-based column indices, ascending
  BouquetClass kind = BouquetClass::NonMixed;
  std::optional<Vector<Scalar>> c;  // absent for the free bouquet
  std::optional<Vector<Scalar>> a;  // Σ c_j a_j, absent for the free bouquet
};

template <typename Scalar>
bool gale_rows_parallel(const Vector<Scalar>& p, const Vector<Scalar>& q) {
  for (Index k = 0; k < p.size(); ++k) {
    for (Index l = k + 1; l < p.size(); ++l) {
      if (p(k) * q(l) != p(l) * q(k)) return false;
    }
  }
  return true;
}

/// Row i is the Gale transform of column i.
template <typename Scalar>
std::vector<Vector<Scalar>> gale_rows(const Matrix<Scalar>& a) {
  const KernelBasis<Scalar> kernel = kernel_lattice_basis(a);
  std::vector<Vector<Scalar>> rows;
  rows.reserve(static_cast<std::size_t>(a.cols()));
  for (Index i = 0; i < a.cols(); ++i) rows.push_back(kernel.gale_row(i));
  return rows;
}

template <typename Scalar>
class BouquetDecomposition {
 public:
  BouquetDecomposition(Matrix<Scalar> source, std::vector<Vector<Scalar>> gale,
                       std::vector<Bouquet<Scalar>> bouquets)
      : source_(std::move(source)), gale_(std::move(gale)), bouquets_(std::move(bouquets)) {}

  const Matrix<Scalar>& source() const { return source_; }
  /// Ordered by least member.
  const std::vector<Bouquet<Scalar>>& bouquets() const { return bouquets_; }
  std::size_t size() const { return bouquets_.size(); }

  bool has_free_bouquet() const {
    for (const auto& b : bouquets_) {
      if (b.kind == BouquetClass::Free) return true;
    }
    return false;
  }

  /// Index of the bouquet containing zero-based column j.
  std::size_t bouquet_of(Index j) const {
    for (std::size_t b = 0; b < bouquets_.size(); ++b) {
      for (Index member : bouquets_[b].members) {
        if (member == j) return b;
      }
    }
    throw Error(ErrorCode::InvalidArgument, "bouquet_of: column out of range");
  }

  EdgeClass edge_class(Index i, Index j) const {
    if (i == j || i < 0 || j < 0 || i >= source_.cols() || j >= source_.cols()) {
      throw Error(ErrorCode::InvalidArgument, "edge_class: need two distinct columns");
    }
    const auto& p = gale_[static_cast<std::size_t>(i)];
    const auto& q = gale_[static_cast<std::size_t>(j)];
    const bool p_free = is_zero_vector(p);
    const bool q_free = is_zero_vector(q);
    if (p_free && q_free) return EdgeClass::Zero;
    if (p_free || q_free || !gale_rows_parallel(p, q)) return EdgeClass::None;
    for (Index k = 0; k < p.size(); ++k) {
      if (p(k) != Scalar(0)) return sign_of(p(k)) == sign_of(q(k)) ? EdgeClass::Plus : EdgeClass::Minus;
    }
    return EdgeClass::None;
  }

 private:
  Matrix<Scalar> source_;
  std::vector<Vector<Scalar>> gale_;
  std::vector<Bouquet<Scalar>> bouquets_;
};

template <typename Scalar>
BouquetDecomposition<Scalar> bouquet_decomposition(const Matrix<Scalar>& a) {
  const Index n = a.cols();
  std::vector<Vector<Scalar>> gale = gale_rows(a);
  std::vector<char> assigned(static_cast<std::size_t>(n), 0);
  std::vector<Bouquet<Scalar>> bouquets;
  std::optional<std::size_t> free_slot;

  for (Index j0 = 0; j0 < n; ++j0) {
    if (assigned[j0]) continue;
    const Vector<Scalar>& lead = gale[j0];
    if (is_zero_vector(lead)) {
      if (!free_slot) {
        free_slot = bouquets.size();
        bouquets.push_back(Bouquet<Scalar>{{}, BouquetClass::Free, std::nullopt, std::nullopt});
      }
      bouquets[*free_slot].members.push_back(j0);
      assigned[j0] = 1;
      continue;
    }

    Index pivot = 0;
    while (lead(pivot) == Scalar(0)) ++pivot;

    Bouquet<Scalar> b;
    std::vector<Scalar> ratios;  // proportional to λ_j, positive at j0
    for (Index j = j0; j < n; ++j) {
      if (assigned[j] || is_zero_vector(gale[j])) continue;
      if (j != j0 && !gale_rows_parallel(lead, gale[j])) continue;
      b.members.push_back(j);
      ratios.push_back(lead(pivot) > Scalar(0) ? gale[j](pivot) : Scalar(-gale[j](pivot)));
      assigned[j] = 1;
    }

    Vector<Scalar> c(static_cast<Index>(ratios.size()));
    for (std::size_t k = 0; k < ratios.size(); ++k) c(static_cast<Index>(k)) = ratios[k];
    c = primitive_part(c);

    bool mixed = false;
    Vector<Scalar> a_b = Vector<Scalar>::Zero(a.rows());
    for (std::size_t k = 0; k < b.members.size(); ++k) {
      const Scalar& ck = c(static_cast<Index>(k));
      if (ck < Scalar(0)) mixed = true;
      a_b += ck * a.col(b.members[k]);
    }
    b.kind = mixed ? BouquetClass::Mixed : BouquetClass::NonMixed;
    b.c = std::move(c);
    b.a = std::move(a_b);
    bouquets.push_back(std::move(b));
  }
  return BouquetDecomposition<Scalar>(a, std::move(gale), std::move(bouquets));
}

/// Every bouquet is a singleton.
template <typename Scalar>
bool is_simple(const Matrix<Scalar>& a) {
  const auto decomposition = bouquet_decomposition(a);
  return decomposition.size() == static_cast<std::size_t>(a.cols());
}

/// Columns whose Gale row vanishes, zero-based.
template <typename Scalar>
std::vector<Index> free_columns(const Matrix<Scalar>& a) {
  std::vector<Index> out;
  const auto gale = gale_rows(a);
  for (std::size_t i = 0; i < gale.size(); ++i) {
    if (is_zero_vector(gale[i])) out.push_back(static_cast<Index>(i));
  }
  return out;
}

template <typename Scalar>
struct BouquetIdeal {
  /// Columns a_B in bouquet order, all-zero rows removed.
  Matrix<Scalar> matrix;
  std::vector<Vector<Scalar>> c;
};

/// Matrix of bouquet vectors a_B = Σ c_{B,j} a_j together with the c_B.
/// Rows that vanish identically carry no constraint and are dropped.
template <typename Scalar>
BouquetIdeal<Scalar> bouquet_ideal(const Matrix<Scalar>& a) {
  const auto decomposition = bouquet_decomposition(a);
  if (decomposition.has_free_bouquet()) {
    throw Error(ErrorCode::FreeBouquetPresent, "bouquet_ideal: configuration has free vectors");
  }
  const auto& bouquets = decomposition.bouquets();
  Matrix<Scalar> full(a.rows(), static_cast<Index>(bouquets.size()));
  BouquetIdeal<Scalar> out;
  for (std::size_t b = 0; b < bouquets.size(); ++b) {
    full.col(static_cast<Index>(b)) = *bouquets[b].a;
    out.c.push_back(*bouquets[b].c);
  }
  std::vector<Index> kept;
  for (Index i = 0; i < full.rows(); ++i) {
    if (!is_zero_vector<Scalar>(full.row(i).transpose())) kept.push_back(i);
  }
  out.matrix.resize(static_cast<Index>(kept.size()), full.cols());
  for (std::size_t r = 0; r < kept.size(); ++r) out.matrix.row(static_cast<Index>(r)) = full.row(kept[r]);
  return out;
}

/// Every choice of rows() columns is linearly independent. Requires at least
/// rows() + 2 columns.
template <typename Scalar>
bool is_general_position(const Matrix<Scalar>& a, std::size_t threads = 1) {
  const Index d = a.rows();
  const Index n = a.cols();
  if (n < d + 2) throw Error(ErrorCode::TooFewColumns, "is_general_position: need at least d + 2 columns");

  std::vector<std::vector<Index>> subsets;
  std::vector<Index> pick(static_cast<std::size_t>(d));
  for (Index k = 0; k < d; ++k) pick[k] = k;
  for (;;) {
    subsets.push_back(pick);
    Index k = d - 1;
    while (k >= 0 && pick[k] == n - d + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (Index l = k + 1; l < d; ++l) pick[l] = pick[l - 1] + 1;
  }

  std::vector<char> nonsingular(subsets.size(), 0);
  parallel_for(subsets.size(), threads, [&](std::size_t s) {
    Matrix<Scalar> minor(d, d);
    for (Index k = 0; k < d; ++k) minor.col(k) = a.col(subsets[s][k]);
    nonsingular[s] = determinant(std::move(minor)) != Scalar(0);
  });
  for (char ok : nonsingular) {
    if (!ok) return false;
  }
  return true;
}

/// d x n matrix with columns (1, t, t², ..., t^{d-1}).
template <typename Scalar = Integer>
Matrix<Scalar> cyclic_configuration(Index d, std::span<const long long> ts) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "cyclic_configuration: d must be positive");
  for (std::size_t j = 1; j < ts.size(); ++j) {
    if (ts[j] <= ts[j - 1]) throw Error(ErrorCode::NonIncreasing, "cyclic_configuration: parameters must increase strictly");
  }
  const Index n = static_cast<Index>(ts.size());
  if (n < d + 2) throw Error(ErrorCode::TooFewColumns, "cyclic_configuration: need at least d + 2 parameters");
  Matrix<Scalar> out(d, n);
  for (Index j = 0; j < n; ++j) {
    Scalar power(1);
    for (Index i = 0; i < d; ++i) {
      out(i, j) = power;
      power *= Scalar(ts[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

}  // namespace srcomplex

#endif  // SRCOMPLEX_BOUQUET_HPP

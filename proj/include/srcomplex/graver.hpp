#ifndef SRCOMPLEX_GRAVER_HPP
#define SRCOMPLEX_GRAVER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "srcomplex/error.hpp"
#include "srcomplex/lattice.hpp"
#include "srcomplex/parallel.hpp"
#include "srcomplex/types.hpp"

namespace srcomplex {

/// The ⊑-minimal nonzero vectors of Ker_Z(source).
///
/// Stored as one representative per ± pair (lowest-index nonzero entry
/// positive), sorted lexicographically. elements() gives the full
/// negation-closed set.
template <typename Scalar>
class GraverBasis {
 public:
  GraverBasis() = default;
  GraverBasis(Matrix<Scalar> source, std::vector<Vector<Scalar>> vectors) : source_(std::move(source)) {
    for (auto& v : vectors) {
      if (v.size() != source_.cols()) throw Error(ErrorCode::LengthMismatch, "GraverBasis: element length mismatch");
      representatives_.push_back(canonical_sign(std::move(v)));
    }
    sort_unique(representatives_);
  }

  const Matrix<Scalar>& source() const { return source_; }
  Index dimension() const { return source_.cols(); }

  const std::vector<Vector<Scalar>>& representatives() const { return representatives_; }
  /// Number of ± pairs.
  std::size_t size() const { return representatives_.size(); }

  std::vector<Vector<Scalar>> elements() const {
    std::vector<Vector<Scalar>> all;
    all.reserve(2 * representatives_.size());
    for (const auto& g : representatives_) {
      all.push_back(g);
      all.push_back(-g);
    }
    return all;
  }

  bool contains(const Vector<Scalar>& v) const {
    if (v.size() != dimension()) return false;
    Vector<Scalar> key = canonical_sign(v);
    return std::binary_search(representatives_.begin(), representatives_.end(), key, LexLess{});
  }

  Matrix<Scalar> to_matrix() const { return rows_to_matrix(representatives_, dimension()); }

  Scalar max_norm() const {
    Scalar best(0);
    for (const auto& g : representatives_) best = std::max(best, srcomplex::max_norm(g));
    return best;
  }

  friend bool operator==(const GraverBasis& a, const GraverBasis& b) {
    if (a.representatives_.size() != b.representatives_.size()) return false;
    for (std::size_t i = 0; i < a.representatives_.size(); ++i) {
      if (!equal_vectors(a.representatives_[i], b.representatives_[i])) return false;
    }
    return true;
  }

 private:
  Matrix<Scalar> source_;
  std::vector<Vector<Scalar>> representatives_;
};

namespace detail {

// Largest k >= 1 with k*g ⊑ v, given g ⊑ v and g != 0.
template <typename Scalar>
Scalar conformal_multiple(const Vector<Scalar>& g, const Vector<Scalar>& v) {
  bool first = true;
  Scalar k(0);
  for (Index i = 0; i < g.size(); ++i) {
    if (g(i) == Scalar(0)) continue;
    Scalar q = v(i) / g(i);
    if (first || q < k) k = std::move(q);
    first = false;
  }
  return k;
}

}  // namespace detail

/// Reduces v by the symmetric set reducers ∪ -reducers: while some ±g ⊑ v,
/// v <- v - g. The applicable reducer with the lowest index (g before -g) is
/// always taken, so the result is deterministic.
template <typename Scalar>
Vector<Scalar> normal_form(Vector<Scalar> v, const std::vector<Vector<Scalar>>& reducers) {
  for (const auto& g : reducers) {
    if (g.size() != v.size()) throw Error(ErrorCode::LengthMismatch, "normal_form: length mismatch");
  }
  bool reduced = true;
  while (reduced && !is_zero_vector(v)) {
    reduced = false;
    for (const auto& g : reducers) {
      if (is_zero_vector(g)) continue;
      if (conformal_leq(g, v)) {
        // Subtracting g keeps g ⊑ v until the multiple is exhausted, and no
        // lower-index reducer can become applicable along the way.
        v -= detail::conformal_multiple(g, v) * g;
        reduced = true;
        break;
      }
      const Vector<Scalar> neg = -g;
      if (conformal_leq(neg, v)) {
        v -= detail::conformal_multiple(neg, v) * neg;
        reduced = true;
        break;
      }
    }
  }
  return v;
}

struct GraverOptions {
  /// Workers for the final minimization pass; 1 is the sequential reference.
  std::size_t threads = 1;
};

/// Completion procedure: seeds with a kernel lattice basis, adds the normal
/// form of every pairwise sum f ± g until all of them reduce to zero, then
/// keeps the ⊑-minimal elements.
template <typename Scalar>
GraverBasis<Scalar> graver_basis(const Matrix<Scalar>& a, const GraverOptions& options = {}) {
  if (!is_pointed(a)) throw Error(ErrorCode::NotPointed, "graver_basis: Ker_Z(A) meets N^n nontrivially");
  const KernelBasis<Scalar> kernel = kernel_lattice_basis(a);

  std::vector<Vector<Scalar>> work;
  for (Index j = 0; j < kernel.basis.cols(); ++j) {
    Vector<Scalar> seed = normal_form<Scalar>(kernel.basis.col(j), work);
    if (!is_zero_vector(seed)) work.push_back(std::move(seed));
  }

  // Pair (i, j) is processed when the outer index reaches j, so every
  // element appended later still meets every earlier one.
  for (std::size_t j = 0; j < work.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      for (int sign : {1, -1}) {
        Vector<Scalar> s = sign > 0 ? Vector<Scalar>(work[i] + work[j]) : Vector<Scalar>(work[i] - work[j]);
        s = normal_form(std::move(s), work);
        if (!is_zero_vector(s)) work.push_back(std::move(s));
      }
    }
  }

  std::vector<char> keep(work.size(), 0);
  parallel_for(work.size(), options.threads, [&](std::size_t e) {
    for (std::size_t h = 0; h < work.size(); ++h) {
      if (h == e) continue;
      if (conformal_leq(work[h], work[e]) || conformal_leq(Vector<Scalar>(-work[h]), work[e])) return;
    }
    keep[e] = 1;
  });

  std::vector<Vector<Scalar>> minimal;
  for (std::size_t e = 0; e < work.size(); ++e) {
    if (keep[e]) minimal.push_back(work[e]);
  }
  return GraverBasis<Scalar>(a, std::move(minimal));
}

/// Test oracle: every nonzero v in Ker_Z(A) with ‖v‖∞ <= bound that is
/// ⊑-minimal within that box, as canonical representatives in sorted order.
/// Once the bound reaches the largest Graver norm this is exactly Gr(A).
/// Works in checked 64-bit arithmetic; oversized boxes are rejected.
template <typename Scalar>
std::vector<Vector<Scalar>> graver_brute_force(const Matrix<Scalar>& a, long long bound) {
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "graver_brute_force: bound must be positive");
  if (!is_pointed(a)) throw Error(ErrorCode::NotPointed, "graver_brute_force: Ker_Z(A) meets N^n nontrivially");
  const Index m = a.rows();
  const Index n = a.cols();

  double box = 1.0;
  for (Index j = 0; j < n; ++j) box *= static_cast<double>(2 * bound + 1);
  if (box > 2.5e8) throw Error(ErrorCode::InvalidArgument, "graver_brute_force: search box too large");

  std::vector<std::int64_t> entries(static_cast<std::size_t>(m * n));
  for (Index i = 0; i < m; ++i) {
    Integer row_budget(0);
    for (Index j = 0; j < n; ++j) {
      const Integer x(a(i, j));
      if (!x.fits_int64()) throw Error(ErrorCode::Overflow, "graver_brute_force: entry exceeds 64 bits");
      row_budget += abs_value(x) * Integer(2 * bound + 1);
      entries[static_cast<std::size_t>(i * n + j)] = x.to_int64();
    }
    if (row_budget > Integer(std::numeric_limits<std::int64_t>::max() / 4)) {
      throw Error(ErrorCode::Overflow, "graver_brute_force: residuals exceed 64 bits");
    }
  }
  auto col = [&](Index i, Index j) { return entries[static_cast<std::size_t>(i * n + j)]; };

  // Odometer over [-bound, bound]^n with an incrementally maintained A*v.
  std::vector<std::int64_t> v(static_cast<std::size_t>(n), -bound);
  std::vector<std::int64_t> residual(static_cast<std::size_t>(m), 0);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) residual[i] += col(i, j) * (-bound);
  }

  std::vector<std::vector<std::int64_t>> found;
  for (;;) {
    bool in_kernel = true;
    for (Index i = 0; i < m && in_kernel; ++i) in_kernel = residual[i] == 0;
    if (in_kernel) {
      // Keep one sign: leading nonzero entry positive.
      auto lead = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
      if (lead != v.end() && *lead > 0) found.push_back(v);
    }
    Index j = 0;
    for (; j < n; ++j) {
      if (v[j] < bound) {
        ++v[j];
        for (Index i = 0; i < m; ++i) residual[i] += col(i, j);
        break;
      }
      v[j] = -bound;
      for (Index i = 0; i < m; ++i) residual[i] -= col(i, j) * 2 * bound;
    }
    if (j == n) break;
  }

  auto leq = [](const std::vector<std::int64_t>& g, const std::vector<std::int64_t>& u, std::int64_t s) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::int64_t x = s * g[i];
      if (x > 0 && u[i] < x) return false;
      if (x < 0 && u[i] > x) return false;
    }
    return true;
  };

  std::vector<Vector<Scalar>> minimal;
  for (std::size_t e = 0; e < found.size(); ++e) {
    bool is_minimal = true;
    for (std::size_t h = 0; h < found.size() && is_minimal; ++h) {
      if (h == e) continue;
      if (leq(found[h], found[e], 1) || leq(found[h], found[e], -1)) is_minimal = false;
    }
    if (!is_minimal) continue;
    Vector<Scalar> out(n);
    for (Index k = 0; k < n; ++k) out(k) = Scalar(found[e][static_cast<std::size_t>(k)]);
    minimal.push_back(std::move(out));
  }
  sort_unique(minimal);
  return minimal;
}

}  // namespace srcomplex

#endif  // SRCOMPLEX_GRAVER_HPP

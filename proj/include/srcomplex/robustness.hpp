#ifndef SRCOMPLEX_ROBUSTNESS_HPP
#define SRCOMPLEX_ROBUSTNESS_HPP

// Indispensability, strong robustness and the strongly robust complex.
//
// For a pointed lattice L and u ∈ L, u = v +_sc (u - v) holds exactly when
// v⁺ <= u⁺. Any such v ∉ {0, u} has a Graver element g ⊑ v other than u
// (a conformal sum of copies of u alone would be k·u with k·u⁺ <= u⁺, so
// k = 1 since u⁺ != 0 by pointedness), and g⁺ <= v⁺ <= u⁺. Hence u ∈ Gr is
// indispensable iff no Graver element g != u satisfies g⁺ <= u⁺.

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "srcomplex/bouquet.hpp"
#include "srcomplex/error.hpp"
#include "srcomplex/graver.hpp"
#include "srcomplex/lattice.hpp"
#include "srcomplex/lawrence.hpp"
#include "srcomplex/omega_set.hpp"
#include "srcomplex/parallel.hpp"
#include "srcomplex/simplicial_complex.hpp"
#include "srcomplex/types.hpp"

namespace srcomplex {

/// Indispensable elements of a Graver basis, one representative per ± pair.
template <typename Scalar>
struct IndispensableSet {
  std::vector<Vector<Scalar>> representatives;
  std::size_t size() const { return representatives.size(); }
};

namespace detail {

template <typename Scalar>
bool positive_part_leq(const Vector<Scalar>& g, const Vector<Scalar>& u) {
  for (Index i = 0; i < g.size(); ++i) {
    if (g(i) > Scalar(0) && u(i) < g(i)) return false;
  }
  return true;
}

// Scans ±reps for a semiconformal left summand of u other than u itself.
template <typename Scalar>
bool has_semiconformal_witness(const Vector<Scalar>& u, const std::vector<Vector<Scalar>>& reps) {
  for (const auto& g : reps) {
    if (!equal_vectors(g, u) && positive_part_leq(g, u)) return true;
    const Vector<Scalar> neg = -g;
    if (!equal_vectors(neg, u) && positive_part_leq(neg, u)) return true;
  }
  return false;
}

template <typename Scalar>
bool all_indispensable(const std::vector<Vector<Scalar>>& reps, std::size_t threads) {
  std::vector<char> ok(reps.size(), 0);
  parallel_for(reps.size(), threads, [&](std::size_t i) { ok[i] = !has_semiconformal_witness(reps[i], reps); });
  return std::all_of(ok.begin(), ok.end(), [](char x) { return x != 0; });
}

}  // namespace detail

template <typename Scalar>
bool is_indispensable(const Vector<Scalar>& u, const GraverBasis<Scalar>& graver) {
  if (!graver.contains(u)) throw Error(ErrorCode::NotInGraver, "is_indispensable: vector is not a Graver element");
  return !detail::has_semiconformal_witness(u, graver.representatives());
}

template <typename Scalar>
IndispensableSet<Scalar> indispensable_set(const GraverBasis<Scalar>& graver, std::size_t threads = 1) {
  const auto& reps = graver.representatives();
  std::vector<char> ok(reps.size(), 0);
  parallel_for(reps.size(), threads, [&](std::size_t i) { ok[i] = !detail::has_semiconformal_witness(reps[i], reps); });
  IndispensableSet<Scalar> out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (ok[i]) out.representatives.push_back(reps[i]);
  }
  return out;
}

/// S(A) = Gr(A).
template <typename Scalar>
bool is_strongly_robust(const GraverBasis<Scalar>& graver, std::size_t threads = 1) {
  return detail::all_indispensable(graver.representatives(), threads);
}

template <typename Scalar>
bool is_strongly_robust(const Matrix<Scalar>& a, std::size_t threads = 1) {
  return is_strongly_robust(graver_basis(a, GraverOptions{threads}), threads);
}

/// Preconditions for the complex: pointed, no free vectors, simple.
template <typename Scalar>
void validate_simple_base(const Matrix<Scalar>& t) {
  if (!is_pointed(t)) throw Error(ErrorCode::NotPointed, "base configuration is not pointed");
  if (!free_columns(t).empty()) throw Error(ErrorCode::FreeVectorPresent, "base configuration has free vectors");
  if (!is_simple(t)) throw Error(ErrorCode::NotSimple, "base configuration is not simple");
}

namespace detail {

template <typename Scalar>
bool omega_is_face_unchecked(const GraverBasis<Scalar>& graver_t, const OmegaSet& omega, std::size_t threads) {
  std::vector<Vector<Scalar>> lifted;
  lifted.reserve(graver_t.size());
  for (const auto& g : graver_t.representatives()) lifted.push_back(d_omega(g, omega));
  return all_indispensable(lifted, threads);
}

}  // namespace detail

/// ω ∈ Δ_T iff Λ(T)_ω is strongly robust, decided on the lifted Graver basis.
template <typename Scalar>
bool omega_is_face(const GraverBasis<Scalar>& graver_t, const OmegaSet& omega, std::size_t threads = 1) {
  validate_simple_base(graver_t.source());
  if (omega.ground_size() != static_cast<std::size_t>(graver_t.dimension())) {
    throw Error(ErrorCode::InvalidOmega, "omega_is_face: omega ground size differs from column count");
  }
  return detail::omega_is_face_unchecked(graver_t, omega, threads);
}

struct ComplexOptions {
  std::size_t threads = 1;
};

struct EnumerationStats {
  std::size_t candidates_evaluated = 0;
};

/// Δ_T, enumerated level by level. A candidate of size k is tested only if
/// all of its (k-1)-subsets are faces; downward closure makes that pruning
/// exact. Tests within a level run concurrently.
template <typename Scalar>
SimplicialComplex strongly_robust_complex(const GraverBasis<Scalar>& graver_t, const ComplexOptions& options = {},
                                          EnumerationStats* stats = nullptr) {
  validate_simple_base(graver_t.source());
  const std::size_t s = static_cast<std::size_t>(graver_t.dimension());
  using Face = SimplicialComplex::Face;

  std::vector<Face> all_faces;
  std::vector<Face> level{Face{}};
  std::size_t evaluated = 0;
  while (!level.empty()) {
    std::vector<char> is_face(level.size(), 0);
    parallel_for(level.size(), options.threads, [&](std::size_t i) {
      is_face[i] = detail::omega_is_face_unchecked(graver_t, OmegaSet(s, level[i]), 1);
    });
    evaluated += level.size();

    std::vector<Face> faces;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (is_face[i]) faces.push_back(level[i]);
    }
    std::sort(faces.begin(), faces.end());
    all_faces.insert(all_faces.end(), faces.begin(), faces.end());

    // Join faces that agree except in their last vertex, then require every
    // facet of the candidate to be a face.
    const std::set<Face> face_set(faces.begin(), faces.end());
    std::vector<Face> next;
    if (faces.size() == 1 && faces.front().empty()) {
      for (std::size_t v = 1; v <= s; ++v) next.push_back(Face{v});
    } else {
      for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = i + 1; j < faces.size(); ++j) {
          const Face& a = faces[i];
          const Face& b = faces[j];
          if (!std::equal(a.begin(), a.end() - 1, b.begin())) continue;
          Face candidate = a;
          candidate.push_back(b.back());
          bool closed = true;
          for (std::size_t drop = 0; drop + 2 < candidate.size() && closed; ++drop) {
            Face facet = candidate;
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
            closed = face_set.count(facet) > 0;
          }
          if (closed) next.push_back(std::move(candidate));
        }
      }
    }
    level = std::move(next);
  }
  if (stats) stats->candidates_evaluated = evaluated;
  return SimplicialComplex(s, std::move(all_faces));
}

template <typename Scalar>
SimplicialComplex strongly_robust_complex(const Matrix<Scalar>& t, const ComplexOptions& options = {},
                                          EnumerationStats* stats = nullptr) {
  validate_simple_base(t);
  return strongly_robust_complex(graver_basis(t, GraverOptions{options.threads}), options, stats);
}

}  // namespace srcomplex

#endif  // SRCOMPLEX_ROBUSTNESS_HPP

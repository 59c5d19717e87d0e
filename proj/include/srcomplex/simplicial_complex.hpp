#ifndef SRCOMPLEX_SIMPLICIAL_COMPLEX_HPP
#define SRCOMPLEX_SIMPLICIAL_COMPLEX_HPP

#include <cstddef>
#include <vector>

#include "srcomplex/omega_set.hpp"

namespace srcomplex {

/// Downward-closed family of subsets of {1, ..., s}, stored as the sorted
/// antichain of its maximal faces.
class SimplicialComplex {
 public:
  using Face = std::vector<std::size_t>;  // one-based, ascending

  SimplicialComplex() = default;
  /// The complex generated by the given faces (their closure under subsets).
  /// No generators gives the void complex; the generator {} gives {∅}.
  SimplicialComplex(std::size_t ground_size, std::vector<Face> generators);

  std::size_t ground_size() const { return ground_size_; }
  const std::vector<Face>& maximal_faces() const { return maximal_; }
  bool is_void() const { return maximal_.empty(); }

  bool contains(const Face& face) const;
  bool contains(const OmegaSet& face) const { return contains(face.members()); }

  /// Every face, ordered by cardinality and then lexicographically.
  std::vector<Face> faces() const;
  std::size_t face_count() const { return faces().size(); }
  /// Largest face size minus one; -1 for {∅} and for the void complex.
  int dimension() const;

  bool is_subcomplex_of(const SimplicialComplex& other) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t ground_size_ = 0;
  std::vector<Face> maximal_;
};

/// [Δ]_σ = {ω ∩ σ : ω ∈ Δ}, on the same ground set.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, const OmegaSet& sigma);

}  // namespace srcomplex

#endif  // SRCOMPLEX_SIMPLICIAL_COMPLEX_HPP

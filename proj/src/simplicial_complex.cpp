#include "srcomplex/simplicial_complex.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <string>

#include "srcomplex/error.hpp"

namespace srcomplex {
namespace {

bool is_subset(const SimplicialComplex::Face& small, const SimplicialComplex::Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool face_order(const SimplicialComplex::Face& a, const SimplicialComplex::Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t ground_size, std::vector<Face> generators)
    : ground_size_(ground_size) {
  for (auto& face : generators) {
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end()) {
      throw Error(ErrorCode::InvalidOmega, "face with repeated vertex");
    }
    for (std::size_t v : face) {
      if (v < 1 || v > ground_size_) {
        throw Error(ErrorCode::InvalidOmega, "vertex " + std::to_string(v) + " outside ground set");
      }
    }
  }
  // Largest first, so a face is dropped iff some kept face contains it.
  std::sort(generators.begin(), generators.end(),
            [](const Face& a, const Face& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
  for (auto& face : generators) {
    bool covered = false;
    for (const auto& kept : maximal_) {
      if (is_subset(face, kept)) {
        covered = true;
        break;
      }
    }
    if (!covered) maximal_.push_back(std::move(face));
  }
  std::sort(maximal_.begin(), maximal_.end());
}

bool SimplicialComplex::contains(const Face& face) const {
  Face sorted = face;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& m : maximal_) {
    if (is_subset(sorted, m)) return true;
  }
  return false;
}

std::vector<SimplicialComplex::Face> SimplicialComplex::faces() const {
  std::set<Face> all;
  for (const auto& m : maximal_) {
    const std::size_t k = m.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      Face f;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1U) f.push_back(m[i]);
      }
      all.insert(std::move(f));
    }
  }
  std::vector<Face> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), face_order);
  return out;
}

int SimplicialComplex::dimension() const {
  std::size_t best = 0;
  for (const auto& m : maximal_) best = std::max(best, m.size());
  return static_cast<int>(best) - 1;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (const auto& m : maximal_) {
    if (!other.contains(m)) return false;
  }
  return true;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, const OmegaSet& sigma) {
  if (sigma.ground_size() != complex.ground_size()) {
    throw Error(ErrorCode::InvalidOmega, "induced_subcomplex: sigma lives on a different ground set");
  }
  std::vector<SimplicialComplex::Face> traces;
  for (const auto& m : complex.maximal_faces()) {
    SimplicialComplex::Face trace;
    std::set_intersection(m.begin(), m.end(), sigma.members().begin(), sigma.members().end(),
                          std::back_inserter(trace));
    traces.push_back(std::move(trace));
  }
  return SimplicialComplex(complex.ground_size(), std::move(traces));
}

}  // namespace srcomplex

#ifndef SRCOMPLEX_TESTS_FIXTURES_HPP
#define SRCOMPLEX_TESTS_FIXTURES_HPP

// Seeded random configurations shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "srcomplex/bouquet.hpp"
#include "srcomplex/lattice.hpp"
#include "srcomplex/matrix_io.hpp"
#include "srcomplex/types.hpp"

namespace srcomplex::fixtures {

inline std::string data_path(const std::string& name) { return std::string(SRCOMPLEX_DATA_DIR) + "/" + name; }

inline IntMatrix load_fixture(const std::string& name) { return read_matrix_file(data_path(name)); }

inline long long uniform(std::mt19937_64& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols, long long lo, long long hi) {
  IntMatrix a(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) a(i, j) = Integer(uniform(rng, lo, hi));
  }
  return a;
}

/// 2 x n, entries in [-5, 5], redrawn until pointed and in general position.
inline IntMatrix random_general_position(std::mt19937_64& rng, Index n) {
  for (;;) {
    IntMatrix a = random_matrix(rng, 2, n, -5, 5);
    if (is_general_position(a) && is_pointed(a)) return a;
  }
}

/// (n1, n2, n3) with entries in [1, 30].
inline IntMatrix random_monomial_curve(std::mt19937_64& rng) { return random_matrix(rng, 1, 3, 1, 30); }

/// Twenty planar configurations (n = 4 and n = 5 alternating), then ten
/// monomial curves. Fixed seed.
inline std::vector<IntMatrix> general_position_fixtures() {
  std::mt19937_64 rng(20240611);
  std::vector<IntMatrix> out;
  for (int k = 0; k < 20; ++k) out.push_back(random_general_position(rng, k % 2 == 0 ? 4 : 5));
  for (int k = 0; k < 10; ++k) out.push_back(random_monomial_curve(rng));
  return out;
}

}  // namespace srcomplex::fixtures

#endif  // SRCOMPLEX_TESTS_FIXTURES_HPP

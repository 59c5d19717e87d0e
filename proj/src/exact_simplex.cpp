#include "srcomplex/detail/exact_simplex.hpp"

#include <cstddef>

#include "srcomplex/error.hpp"

namespace srcomplex::detail {

bool nonnegative_feasible(std::vector<std::vector<Rational>> eq, std::vector<Rational> rhs) {
  const std::size_t rows = eq.size();
  if (rhs.size() != rows) throw Error(ErrorCode::LengthMismatch, "simplex: rhs length mismatch");
  if (rows == 0) return true;
  const std::size_t n = eq.front().size();
  for (const auto& row : eq) {
    if (row.size() != n) throw Error(ErrorCode::LengthMismatch, "simplex: ragged constraint matrix");
  }

  // Tableau over [x | artificials | rhs]; artificials start basic.
  const std::size_t width = n + rows + 1;
  const std::size_t rhs_col = width - 1;
  std::vector<std::vector<Rational>> tab(rows, std::vector<Rational>(width));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const bool flip = rhs[r] < 0;
    for (std::size_t j = 0; j < n; ++j) tab[r][j] = flip ? Rational(-eq[r][j]) : eq[r][j];
    tab[r][n + r] = 1;
    tab[r][rhs_col] = flip ? Rational(-rhs[r]) : rhs[r];
    basis[r] = n + r;
  }

  // Reduced costs of the phase-one objective (sum of artificials); the last
  // entry holds minus the current objective value.
  std::vector<Rational> obj(width);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < n; ++j) obj[j] -= tab[r][j];
    obj[rhs_col] -= tab[r][rhs_col];
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs_col; ++j) {
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (tab[r][enter] <= 0) continue;
      Rational ratio = tab[r][rhs_col] / tab[r][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry.
    if (leave == rows) break;

    const Rational pivot = tab[leave][enter];
    for (auto& x : tab[leave]) x /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || tab[r][enter] == 0) continue;
      const Rational f = tab[r][enter];
      for (std::size_t j = 0; j < width; ++j) tab[r][j] -= f * tab[leave][j];
    }
    const Rational f = obj[enter];
    for (std::size_t j = 0; j < width; ++j) obj[j] -= f * tab[leave][j];
    basis[leave] = enter;
  }
  return obj[rhs_col] == 0;
}

}  // namespace srcomplex::detail

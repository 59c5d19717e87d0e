#ifndef SRCOMPLEX_LAWRENCE_HPP
#define SRCOMPLEX_LAWRENCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srcomplex/error.hpp"
#include "srcomplex/graver.hpp"
#include "srcomplex/omega_set.hpp"
#include "srcomplex/types.hpp"

namespace srcomplex {

/// Second Lawrence lifting [[T, 0], [I, I]].
template <typename Scalar>
Matrix<Scalar> lawrence_lift(const Matrix<Scalar>& t) {
  const Index m = t.rows();
  const Index s = t.cols();
  Matrix<Scalar> out = Matrix<Scalar>::Zero(m + s, 2 * s);
  out.topLeftCorner(m, s) = t;
  out.bottomLeftCorner(s, s) = Matrix<Scalar>::Identity(s, s);
  out.bottomRightCorner(s, s) = Matrix<Scalar>::Identity(s, s);
  return out;
}

/// Λ(T) with row m+i and column s+i removed for every i in omega. Remaining
/// mirrored columns keep their ascending order.
template <typename Scalar>
Matrix<Scalar> lawrence_lift_omega(const Matrix<Scalar>& t, const OmegaSet& omega) {
  const Index m = t.rows();
  const Index s = t.cols();
  if (omega.ground_size() != static_cast<std::size_t>(s)) {
    throw Error(ErrorCode::InvalidOmega, "lawrence_lift_omega: omega ground size differs from column count");
  }
  const std::vector<std::size_t> kept = omega.complement_zero_based();
  const Index k = static_cast<Index>(kept.size());
  Matrix<Scalar> out = Matrix<Scalar>::Zero(m + k, s + k);
  out.topLeftCorner(m, s) = t;
  for (Index r = 0; r < k; ++r) {
    out(m + r, static_cast<Index>(kept[r])) = Scalar(1);
    out(m + r, s + r) = Scalar(1);
  }
  return out;
}

/// D_ω(u) = (u, -[u]^ω), where [u]^ω drops the coordinates in omega.
template <typename Scalar>
Vector<Scalar> d_omega(const Vector<Scalar>& u, const OmegaSet& omega) {
  if (omega.ground_size() != static_cast<std::size_t>(u.size())) {
    throw Error(ErrorCode::LengthMismatch, "d_omega: vector length differs from omega ground size");
  }
  const std::vector<std::size_t> kept = omega.complement_zero_based();
  Vector<Scalar> out(u.size() + static_cast<Index>(kept.size()));
  out.head(u.size()) = u;
  for (std::size_t r = 0; r < kept.size(); ++r) out(u.size() + static_cast<Index>(r)) = -u(static_cast<Index>(kept[r]));
  return out;
}

/// Gr(Λ(T)_ω) = {D_ω(u) : u ∈ Gr(T)}, without any completion run.
template <typename Scalar>
GraverBasis<Scalar> lifted_graver(const GraverBasis<Scalar>& graver_t, const OmegaSet& omega) {
  std::vector<Vector<Scalar>> lifted;
  lifted.reserve(graver_t.size());
  for (const auto& g : graver_t.representatives()) lifted.push_back(d_omega(g, omega));
  return GraverBasis<Scalar>(lawrence_lift_omega(graver_t.source(), omega), std::move(lifted));
}

/// λ with λ·c = 1, accumulated left to right by extended Euclid. When the
/// running gcd divides the next entry that entry gets coefficient 0, and when
/// the next entry divides the running gcd it takes over with coefficient ±1.
template <typename Scalar>
Vector<Scalar> bezout_coefficients(const Vector<Scalar>& c) {
  if (c.size() == 0) throw Error(ErrorCode::GcdNotOne, "bezout_coefficients: empty vector");
  Vector<Scalar> lambda = Vector<Scalar>::Zero(c.size());
  Scalar g = abs_value(c(0));
  lambda(0) = Scalar(sign_of(c(0)));
  for (Index k = 1; k < c.size(); ++k) {
    const Scalar& b = c(k);
    if (b == Scalar(0)) continue;
    if (g != Scalar(0) && b % g == Scalar(0)) continue;
    if (g % b == Scalar(0)) {
      lambda.head(k).setZero();
      lambda(k) = Scalar(sign_of(b));
      g = abs_value(b);
      continue;
    }
    // old_r = g * x + b * y throughout.
    Scalar old_r = g, r = b;
    Scalar old_x(1), x(0);
    Scalar old_y(0), y(1);
    while (r != Scalar(0)) {
      const Scalar q = old_r / r;
      old_r = std::exchange(r, old_r - q * r);
      old_x = std::exchange(x, old_x - q * x);
      old_y = std::exchange(y, old_y - q * y);
    }
    if (old_r < Scalar(0)) {
      old_r = -old_r;
      old_x = -old_x;
      old_y = -old_y;
    }
    lambda.head(k) *= old_x;
    lambda(k) = old_y;
    g = old_r;
  }
  if (g != Scalar(1)) throw Error(ErrorCode::GcdNotOne, "bezout_coefficients: entries are not coprime");
  return lambda;
}

/// Input to the generalized Lawrence construction: a base configuration T with
/// s columns and one vector c_i per column (optionally with chosen λ_i).
template <typename Scalar>
struct GLMSpec {
  Matrix<Scalar> base;
  std::vector<Vector<Scalar>> c;
  std::optional<std::vector<Vector<Scalar>>> lambda;
};

namespace detail {

template <typename Scalar>
void validate_glm_vector(const Vector<Scalar>& c, std::size_t i) {
  const std::string where = "c_" + std::to_string(i + 1);
  if (c.size() == 0) throw Error(ErrorCode::FullSupportViolated, where + " is empty");
  for (Index k = 0; k < c.size(); ++k) {
    if (c(k) == Scalar(0)) throw Error(ErrorCode::FullSupportViolated, where + " lacks full support");
  }
  if (c(0) <= Scalar(0)) throw Error(ErrorCode::FirstComponentNotPositive, where + " has nonpositive first entry");
  Scalar g(0);
  for (Index k = 0; k < c.size(); ++k) g = gcd_value(g, c(k));
  if (g != Scalar(1)) throw Error(ErrorCode::GcdNotOne, where + " is not primitive");
}

}  // namespace detail

/// Generalized Lawrence matrix. Column (i, k) carries λ_ik·t_i in the top m
/// rows; for k >= 2 a dedicated row holds -c_ik at column (i, 1) and c_i1 at
/// column (i, k). Its bouquets are the column groups of each c_i and its
/// bouquet ideal is that of T.
template <typename Scalar>
Matrix<Scalar> build_generalized_lawrence(const GLMSpec<Scalar>& spec) {
  const Matrix<Scalar>& t = spec.base;
  const std::size_t s = static_cast<std::size_t>(t.cols());
  if (spec.c.size() != s) throw Error(ErrorCode::InvalidArgument, "build_generalized_lawrence: need one c-vector per column");
  if (spec.lambda && spec.lambda->size() != s) {
    throw Error(ErrorCode::InvalidArgument, "build_generalized_lawrence: need one lambda-vector per column");
  }

  std::vector<Vector<Scalar>> lambdas;
  Index total_cols = 0;
  Index extra_rows = 0;
  for (std::size_t i = 0; i < s; ++i) {
    const Vector<Scalar>& c = spec.c[i];
    detail::validate_glm_vector(c, i);
    if (spec.lambda) {
      const Vector<Scalar>& lambda = (*spec.lambda)[i];
      if (lambda.size() != c.size() || dot(lambda, c) != Scalar(1)) {
        throw Error(ErrorCode::BezoutMismatch, "lambda_" + std::to_string(i + 1) + " · c_" + std::to_string(i + 1) + " != 1");
      }
      lambdas.push_back(lambda);
    } else {
      lambdas.push_back(bezout_coefficients(c));
    }
    total_cols += c.size();
    extra_rows += c.size() - 1;
  }

  const Index m = t.rows();
  Matrix<Scalar> out = Matrix<Scalar>::Zero(m + extra_rows, total_cols);
  Index col = 0;
  Index row = m;
  for (std::size_t i = 0; i < s; ++i) {
    const Vector<Scalar>& c = spec.c[i];
    for (Index k = 0; k < c.size(); ++k) {
      out.block(0, col + k, m, 1) = lambdas[i](k) * t.col(static_cast<Index>(i));
    }
    for (Index k = 1; k < c.size(); ++k) {
      out(row, col) = -c(k);
      out(row, col + k) = c(0);
      ++row;
    }
    col += c.size();
  }
  return out;
}

}  // namespace srcomplex

#endif  // SRCOMPLEX_LAWRENCE_HPP

#ifndef SRCOMPLEX_DETAIL_EXACT_SIMPLEX_HPP
#define SRCOMPLEX_DETAIL_EXACT_SIMPLEX_HPP

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace srcomplex::detail {

using Rational = boost::multiprecision::cpp_rational;

/// Decides whether {x >= 0 : eq * x = rhs} is nonempty, using a phase-one
/// simplex over the rationals with Bland's anti-cycling rule.
/// eq is row-major; every row must have the same length.
bool nonnegative_feasible(std::vector<std::vector<Rational>> eq, std::vector<Rational> rhs);

}  // namespace srcomplex::detail

#endif  // SRCOMPLEX_DETAIL_EXACT_SIMPLEX_HPP

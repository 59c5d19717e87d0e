#ifndef SRCOMPLEX_INTEGER_HPP
#define SRCOMPLEX_INTEGER_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

namespace srcomplex {

/// Arbitrary-precision signed integer.
///
/// Thin value wrapper around boost's cpp_int. The wrapper keeps boost's
/// expression-template machinery out of Eigen's overload resolution, so that
/// Eigen::Matrix<Integer, ...> supports the usual products and reductions.
/// Division and remainder truncate toward zero, like the built-in types.
class Integer {
 public:
  using Rep = boost::multiprecision::cpp_int;

  Integer() = default;
  template <std::integral T>
  Integer(T value) : rep_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(Rep value) : rep_(std::move(value)) {}

  /// Parses an optionally signed decimal literal; nullopt on anything else.
  static std::optional<Integer> parse(std::string_view text);

  const Rep& rep() const { return rep_; }
  std::string to_string() const { return rep_.str(); }
  int sign() const { return rep_.sign(); }
  bool is_zero() const { return rep_.is_zero(); }

  bool fits_int64() const {
    return rep_ >= std::numeric_limits<std::int64_t>::min() &&
           rep_ <= std::numeric_limits<std::int64_t>::max();
  }
  std::int64_t to_int64() const { return rep_.convert_to<std::int64_t>(); }

  Integer operator-() const { return Integer(Rep(-rep_)); }
  Integer operator+() const { return *this; }

  Integer& operator+=(const Integer& b) { rep_ += b.rep_; return *this; }
  Integer& operator-=(const Integer& b) { rep_ -= b.rep_; return *this; }
  Integer& operator*=(const Integer& b) { rep_ *= b.rep_; return *this; }
  Integer& operator/=(const Integer& b) { rep_ /= b.rep_; return *this; }
  Integer& operator%=(const Integer& b) { rep_ %= b.rep_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

  friend bool operator==(const Integer& a, const Integer& b) { return a.rep_ == b.rep_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    return a.rep_.compare(b.rep_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.rep_; }

 private:
  Rep rep_;
};

inline std::optional<Integer> Integer::parse(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) return std::nullopt;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  }
  Rep value(std::string(text.substr(pos)));
  if (text[0] == '-') value = -value;
  return Integer(std::move(value));
}

// Scalar helpers shared by Integer and the built-in integral types.

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

template <typename Scalar>
int sign_of(const Scalar& x) {
  return x > Scalar(0) ? 1 : (x < Scalar(0) ? -1 : 0);
}

/// Nonnegative gcd; gcd(0, 0) = 0.
template <typename Scalar>
Scalar gcd_value(Scalar a, Scalar b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != Scalar(0)) {
    Scalar r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Floor division for b != 0.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if ((a % b != Scalar(0)) && ((a < Scalar(0)) != (b < Scalar(0)))) q -= Scalar(1);
  return q;
}

inline std::string to_string(const Integer& x) { return x.to_string(); }
template <std::integral T>
std::string to_string(T x) {
  return std::to_string(x);
}

}  // namespace srcomplex

namespace Eigen {

template <>
struct NumTraits<srcomplex::Integer> : GenericNumTraits<srcomplex::Integer> {
  using Real = srcomplex::Integer;
  using NonInteger = srcomplex::Integer;
  using Literal = srcomplex::Integer;
  using Nested = srcomplex::Integer;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() = delete;
  static inline Real lowest() = delete;
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // SRCOMPLEX_INTEGER_HPP

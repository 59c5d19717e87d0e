#ifndef SRCOMPLEX_OMEGA_SET_HPP
#define SRCOMPLEX_OMEGA_SET_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace srcomplex {

/// A subset of the one-based ground set {1, ..., s}.
class OmegaSet {
 public:
  OmegaSet() = default;
  /// Members are one-based; they are sorted here, and duplicates or values
  /// outside [1, s] raise InvalidOmega.
  OmegaSet(std::size_t ground_size, std::vector<std::size_t> members);

  /// Bit i of mask selects member i + 1.
  static OmegaSet from_mask(std::size_t ground_size, std::uint64_t mask);
  static OmegaSet full(std::size_t ground_size);

  std::size_t ground_size() const { return ground_size_; }
  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::size_t one_based) const;
  /// Zero-based indices in [0, s) that are not members, ascending.
  std::vector<std::size_t> complement_zero_based() const;

  std::string to_string() const;

  friend bool operator==(const OmegaSet&, const OmegaSet&) = default;

 private:
  std::size_t ground_size_ = 0;
  std::vector<std::size_t> members_;
};

}  // namespace srcomplex

#endif  // SRCOMPLEX_OMEGA_SET_HPP

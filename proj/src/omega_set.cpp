#include "srcomplex/omega_set.hpp"

#include <algorithm>

#include "srcomplex/error.hpp"

namespace srcomplex {

OmegaSet::OmegaSet(std::size_t ground_size, std::vector<std::size_t> members)
    : ground_size_(ground_size), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (members_[k] < 1 || members_[k] > ground_size_) {
      throw Error(ErrorCode::InvalidOmega, "omega member " + std::to_string(members_[k]) + " outside [1, " +
                                               std::to_string(ground_size_) + "]");
    }
    if (k > 0 && members_[k] == members_[k - 1]) {
      throw Error(ErrorCode::InvalidOmega, "omega member " + std::to_string(members_[k]) + " repeated");
    }
  }
}

OmegaSet OmegaSet::from_mask(std::size_t ground_size, std::uint64_t mask) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < ground_size && i < 64; ++i) {
    if (mask >> i & 1U) members.push_back(i + 1);
  }
  return OmegaSet(ground_size, std::move(members));
}

OmegaSet OmegaSet::full(std::size_t ground_size) {
  std::vector<std::size_t> members(ground_size);
  for (std::size_t i = 0; i < ground_size; ++i) members[i] = i + 1;
  return OmegaSet(ground_size, std::move(members));
}

bool OmegaSet::contains(std::size_t one_based) const {
  return std::binary_search(members_.begin(), members_.end(), one_based);
}

std::vector<std::size_t> OmegaSet::complement_zero_based() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= ground_size_; ++i) {
    if (!contains(i)) out.push_back(i - 1);
  }
  return out;
}

std::string OmegaSet::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(members_[k]);
  }
  return out + "}";
}

}  // namespace srcomplex

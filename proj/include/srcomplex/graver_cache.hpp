#ifndef SRCOMPLEX_GRAVER_CACHE_HPP
#define SRCOMPLEX_GRAVER_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "srcomplex/graver.hpp"
#include "srcomplex/types.hpp"

namespace srcomplex {

inline constexpr const char* kCacheDirEnv = "SRCOMPLEX_CACHE_DIR";

/// Content-addressed store of Graver bases. Entry <hash>.mat holds the
/// canonical source matrix and <hash>.gra its Graver representatives; a hit
/// requires the stored source to match byte for byte.
class GraverCache {
 public:
  explicit GraverCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// Flag wins over the environment; nullopt when neither is set.
  static std::optional<GraverCache> from_settings(const std::string& flag_value);

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<GraverBasis<Integer>> load(const IntMatrix& a) const;
  void store(const GraverBasis<Integer>& graver) const;

 private:
  std::filesystem::path dir_;
};

/// graver_basis(a) through the cache when one is given.
GraverBasis<Integer> cached_graver_basis(const IntMatrix& a, const GraverCache* cache, const GraverOptions& options);

}  // namespace srcomplex

#endif  // SRCOMPLEX_GRAVER_CACHE_HPP

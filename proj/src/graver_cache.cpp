#include "srcomplex/graver_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include "srcomplex/error.hpp"
#include "srcomplex/matrix_io.hpp"

namespace srcomplex {
namespace {

std::optional<std::string> slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_atomically(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    out << text;
    if (!out) throw Error(ErrorCode::Io, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot rename " + tmp.string() + ": " + ec.message());
}

}  // namespace

std::optional<GraverCache> GraverCache::from_settings(const std::string& flag_value) {
  if (!flag_value.empty()) return GraverCache(flag_value);
  if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0') return GraverCache(env);
  return std::nullopt;
}

std::optional<GraverBasis<Integer>> GraverCache::load(const IntMatrix& a) const {
  const std::string key = matrix_hash(a);
  const auto source = slurp(dir_ / (key + ".mat"));
  if (!source || *source != write_matrix(a)) return std::nullopt;
  const auto body = slurp(dir_ / (key + ".gra"));
  if (!body) return std::nullopt;
  IntMatrix rows;
  try {
    rows = parse_matrix(*body);
  } catch (const Error&) {
    return std::nullopt;  // corrupt entry: recompute
  }
  if (rows.cols() != a.cols()) return std::nullopt;
  std::vector<IntVec> elements;
  for (Index i = 0; i < rows.rows(); ++i) elements.emplace_back(rows.row(i).transpose());
  return GraverBasis<Integer>(a, std::move(elements));
}

void GraverCache::store(const GraverBasis<Integer>& graver) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create cache directory " + dir_.string() + ": " + ec.message());
  const std::string key = matrix_hash(graver.source());
  write_atomically(dir_ / (key + ".gra"), write_matrix(graver.to_matrix()));
  write_atomically(dir_ / (key + ".mat"), write_matrix(graver.source()));
}

GraverBasis<Integer> cached_graver_basis(const IntMatrix& a, const GraverCache* cache, const GraverOptions& options) {
  if (cache) {
    if (auto hit = cache->load(a)) return std::move(*hit);
  }
  GraverBasis<Integer> graver = graver_basis(a, options);
  if (cache) cache->store(graver);
  return graver;
}

}  // namespace srcomplex

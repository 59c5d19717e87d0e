#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "srcomplex/graver_cache.hpp"
#include "srcomplex/matrix_io.hpp"
#include "support/fixtures.hpp"

using namespace srcomplex;
namespace fs = std::filesystem;

namespace {

ErrorCode parse_error(std::string_view text) {
  try {
    parse_matrix(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("srcomplex_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(MatrixIo, ParsesWhitespaceFreely) {
  EXPECT_EQ(parse_matrix("2 3\n1 2 3\n4 5 6"), make_matrix({{1, 2, 3}, {4, 5, 6}}));
  EXPECT_EQ(parse_matrix("  1 2\t-1\n\n 2 \n"), make_matrix({{-1, 2}}));
  EXPECT_EQ(parse_matrix("0 0\n").size(), 0);
}

TEST(MatrixIo, ParseErrors) {
  EXPECT_EQ(parse_error("2 2\n1 2 3"), ErrorCode::EntryCountMismatch);
  EXPECT_EQ(parse_error("1 2\n1 2 3"), ErrorCode::EntryCountMismatch);
  EXPECT_EQ(parse_error("x 2\n1 2"), ErrorCode::MalformedHeader);
  EXPECT_EQ(parse_error("-1 2\n"), ErrorCode::MalformedHeader);
  EXPECT_EQ(parse_error(""), ErrorCode::MalformedHeader);
  EXPECT_EQ(parse_error("1 2\n1 b"), ErrorCode::NonIntegerToken);
  EXPECT_EQ(parse_error("1 2\n1 2.0"), ErrorCode::NonIntegerToken);
}

TEST(MatrixIo, CanonicalWriter) {
  EXPECT_EQ(write_matrix(make_matrix({{1, -2}, {30, 4}})), "2 2\n1 -2\n30 4\n");
  const IntMatrix big = parse_matrix("1 1\n-123456789012345678901234567890");
  EXPECT_EQ(write_matrix(big), "1 1\n-123456789012345678901234567890\n");
}

TEST(MatrixIo, RoundTripOnFixturesAndRandomMatrices) {
  for (const char* name : {"T57.mat", "A465.mat", "ci465_m2.mat", "glm_13x15.mat"}) {
    const IntMatrix a = fixtures::load_fixture(name);
    EXPECT_EQ(parse_matrix(write_matrix(a)), a) << name;
    std::ifstream in(fixtures::data_path(name));
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(write_matrix(a), text) << name;
  }
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = fixtures::random_matrix(rng, fixtures::uniform(rng, 1, 5), fixtures::uniform(rng, 1, 5), -1000, 1000);
    EXPECT_EQ(parse_matrix(write_matrix(a)), a);
  }
}

TEST(MatrixIo, HashIsStableAndShapeSensitive) {
  const std::string h = matrix_hash(make_matrix({{1, 2, 3, 4}}));
  EXPECT_EQ(h.size(), 16u);
  EXPECT_EQ(h, matrix_hash(parse_matrix("1 4\n1   2 3\n4")));
  EXPECT_NE(h, matrix_hash(make_matrix({{1, 2}, {3, 4}})));
}

TEST(MatrixIo, FileErrors) {
  try {
    read_matrix_file("/nonexistent/x.mat");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Io);
  }
}

TEST(GraverCache, StoresAndReloads) {
  const fs::path dir = fresh_dir("cache");
  const GraverCache cache(dir);
  const IntMatrix a = fixtures::load_fixture("T57.mat");
  EXPECT_FALSE(cache.load(a));
  const auto cold = cached_graver_basis(a, &cache, {});
  const auto warm = cache.load(a);
  ASSERT_TRUE(warm);
  EXPECT_TRUE(*warm == cold);
  EXPECT_TRUE(cached_graver_basis(a, &cache, {}) == graver_basis(a));
  fs::remove_all(dir);
}

TEST(GraverCache, IgnoresEntriesForADifferentSource) {
  const fs::path dir = fresh_dir("collide");
  const GraverCache cache(dir);
  const IntMatrix a = make_matrix({{4, 6, 5}});
  cache.store(graver_basis(a));
  // Overwrite the stored source; the entry must no longer count as a hit.
  std::ofstream(dir / (matrix_hash(a) + ".mat")) << "1 3\n4 6 7\n";
  EXPECT_FALSE(cache.load(a));
  fs::remove_all(dir);
}

TEST(GraverCache, FlagBeatsEnvironment) {
  ::setenv(kCacheDirEnv, "/tmp/from_env", 1);
  EXPECT_EQ(GraverCache::from_settings("/tmp/from_flag")->dir(), fs::path("/tmp/from_flag"));
  EXPECT_EQ(GraverCache::from_settings("")->dir(), fs::path("/tmp/from_env"));
  ::unsetenv(kCacheDirEnv);
  EXPECT_FALSE(GraverCache::from_settings(""));
}

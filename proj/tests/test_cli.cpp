#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "file_cache.hpp"

namespace fs = std::filesystem;
using syzlab::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SYZLAB_TEST_DATA) + "/" + name; }

nlohmann::json certificate(const Result& r) { return nlohmann::json::parse(r.out); }

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("syzlab_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, ResidueFieldHasOrderZero) {
  auto r = invoke({"--no-cache", "syzygy-order", "--module", data("residue_field.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto c = certificate(r);
  EXPECT_EQ(c["syzygy_order"], 0);
  EXPECT_EQ(c["status"], "PASS");
  EXPECT_EQ(c["engine"], std::string(syzlab::kEngineVersion));
}

TEST(Cli, FreeModuleHasInfiniteOrder) {
  auto r = invoke({"--no-cache", "syzygy-order", "--module", data("free_rank2.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(certificate(r)["syzygy_order"], "infinite");
}

TEST(Cli, BorelBasis) {
  auto r = invoke({"--no-cache", "borel", "basis", "--n", "2", "--m", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto c = certificate(r);
  EXPECT_EQ(c["status"], "PASS");
  EXPECT_EQ(c["command"], "borel basis");
  EXPECT_EQ(c["degree_bound"], 8);
}

TEST(Cli, BigPolygonTriangle) {
  auto r = invoke({"--no-cache", "bigpolygon", "verify", "--n", "3", "--b", "1", "--a", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto c = certificate(r);
  EXPECT_EQ(c["syzygy_order"], 1);
  EXPECT_EQ(c["is_mth_syzygy"], true);
  EXPECT_EQ(c["is_next_syzygy"], false);
}

TEST(Cli, ResolveReportsExactness) {
  auto r = invoke({"--no-cache", "resolve", "--module", data("quotient_y.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto c = certificate(r);
  EXPECT_EQ(c["length"], 1);
  EXPECT_EQ(c["exactness"]["status"], "PASS");
}

TEST(Cli, GroebnerFromFlags) {
  auto r = invoke({"--no-cache", "groebner", "--ring", "t w", "--ideal", "t^2+t*w,w"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto c = certificate(r);
  EXPECT_EQ(c["oracle_span"], true);
}

TEST(Cli, UsageErrors) {
  auto unknown = invoke({"frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"borel"}).code, 2);
  EXPECT_EQ(invoke({"--no-cache", "bigpolygon", "verify", "--n", "4"}).code, 2);
  EXPECT_EQ(invoke({"--no-cache", "syzygy-order", "--module", data("inhomogeneous.txt")}).code, 2);
  EXPECT_EQ(invoke({"--no-cache", "syzygy-order", "--module", data("missing.txt")}).code, 2);
  EXPECT_EQ(invoke({"--format", "yaml", "borel", "euler"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, FailedCertificateExitsOne) {
  TempDir dir;
  auto catalog = dir.path() / "bad.json";
  std::ofstream(catalog) << R"({"pairs": [{"name": "wrong", "bk": {"num": "1", "den": [1]},
                             "bg": {"num": "1", "den": [2]}, "fibers": [{"num": "1", "den": []}]}]})";
  auto r = invoke({"--no-cache", "borel", "series", "--catalog", catalog.string()});
  EXPECT_EQ(r.code, 1) << r.err;
  EXPECT_EQ(certificate(r)["status"], "FAILED");
}

TEST(Cli, DeterministicAcrossThreads) {
  auto one = invoke({"--no-cache", "--threads", "1", "resolve", "--module", data("maximal_ideal.txt")});
  auto four = invoke({"--no-cache", "--threads", "4", "resolve", "--module", data("maximal_ideal.txt")});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  auto again = invoke({"--no-cache", "--threads", "1", "resolve", "--module", data("maximal_ideal.txt")});
  EXPECT_EQ(one.out, again.out);
}

TEST(Cli, CachedRunsAreIdentical) {
  TempDir dir;
  std::vector<std::string> args{"--cache-dir", dir.path().string(), "bigpolygon", "verify", "--n", "3"};
  auto fresh = invoke({"--no-cache", "bigpolygon", "verify", "--n", "3"});
  auto first = invoke(args);
  EXPECT_FALSE(fs::is_empty(dir.path()));
  auto second = invoke(args);
  ASSERT_EQ(first.code, 0);
  EXPECT_EQ(first.out, fresh.out);
  EXPECT_EQ(second.out, fresh.out);
}

TEST(Cli, OutFileAndTextFormat) {
  TempDir dir;
  auto path = dir.path() / "cert.txt";
  auto r = invoke({"--no-cache", "--format", "text", "--out", path.string(), "borel", "euler"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string first_line;
  std::getline(in, first_line);
  EXPECT_EQ(first_line, "status: PASS");
}

TEST(FileCache, RoundTripAndKeyCheck) {
  TempDir dir;
  syzlab::cli::FileCache cache(dir.path());
  EXPECT_FALSE(cache.load("groebner", "k1"));
  cache.store("groebner", "k1", "payload\nwith lines\n");
  EXPECT_EQ(cache.load("groebner", "k1"), "payload\nwith lines\n");
  EXPECT_FALSE(cache.load("resolution", "k1"));

  // An entry whose stored key differs from the requested one is a miss.
  auto entry = dir.path() / "groebner" / syzlab::cli::sha256_hex("k2");
  fs::copy_file(dir.path() / "groebner" / syzlab::cli::sha256_hex("k1"), entry);
  EXPECT_FALSE(cache.load("groebner", "k2"));

  std::ofstream(dir.path() / "groebner" / syzlab::cli::sha256_hex("k3")) << "garbage";
  EXPECT_FALSE(cache.load("groebner", "k3"));
  EXPECT_EQ(cache.hits(), 1U);
}

TEST(FileCache, Sha256) {
  EXPECT_EQ(syzlab::cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(FileCache, LocationPrecedence) {
  EXPECT_EQ(syzlab::cli::default_cache_dir(std::string("/x/y")), fs::path("/x/y"));
  ::setenv("SYZ_CACHE_DIR", "/from/env", 1);
  EXPECT_EQ(syzlab::cli::default_cache_dir(std::nullopt), fs::path("/from/env"));
  ::unsetenv("SYZ_CACHE_DIR");
  ::setenv("XDG_CACHE_HOME", "/xdg", 1);
  EXPECT_EQ(syzlab::cli::default_cache_dir(std::nullopt), fs::path("/xdg/syzlab"));
}

TEST(Cli, Selftest) {
  auto r = invoke({"--no-cache", "selftest", "--samples", "5"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(certificate(r)["failures"], 0);
}

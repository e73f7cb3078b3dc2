#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <skeinsolve/cli.hpp>

#include "support.hpp"

namespace skein {
namespace {

using namespace test;
namespace fs = std::filesystem;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

class CacheDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("skeinsolve-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    ::setenv("SKEINSOLVE_CACHE_DIR", dir_.c_str(), 1);
  }
  void TearDown() override {
    fs::remove_all(dir_);
    ::unsetenv("SKEINSOLVE_CACHE_DIR");
  }
  fs::path dir_;
};

TEST(Serialization, PolynomialRecordFormat) {
  const L f = -3 * s(-1) * L::a() + L::gamma(2).scaled(Integer("123456789012345678901234567890"));
  EXPECT_EQ(polynomial_records(f).dump(),
            R"([{"a":1,"aL":0,"c":"-3","g":0,"s":-1},)"
            R"({"a":0,"aL":0,"c":"123456789012345678901234567890","g":2,"s":0}])");
}

TEST(Serialization, RationalRoundTripIsBitExact) {
  std::mt19937 rng(2718);
  for (int i = 0; i < 200; ++i) {
    const RF x = random_rational(rng) * random_rational(rng);
    const Json rec = rational_record(x);
    const RF back = rational_from_record(Json::parse(rec.dump()));
    ASSERT_EQ(back.numerator(), x.numerator());
    ASSERT_EQ(back.denominator(), x.denominator());
    ASSERT_EQ(rational_record(back).dump(), rec.dump());
  }
}

TEST(Serialization, SkeinVectorRoundTrip) {
  for (GeometryTag tag : {GeometryTag::c3, GeometryTag::unknot, GeometryTag::unknot_prime}) {
    const SkeinVector psi = solve_recursion(tag, 5);
    const std::string bytes = serialize_skein_vector(psi, {{"geometry", to_string(tag)}});
    const SkeinVectorDocument doc = deserialize_skein_vector(bytes);
    EXPECT_EQ(doc.vector, psi);
    EXPECT_EQ(doc.manifest["geometry"], to_string(tag));
    EXPECT_EQ(serialize_skein_vector(doc.vector, doc.manifest), bytes);
  }
}

TEST(Serialization, RandomSkeinVectorRoundTrip) {
  std::mt19937 rng(161);
  for (int i = 0; i < 20; ++i) {
    SkeinVector v(4);
    for (const Partition& p : partitions_up_to(4)) {
      if (rng() % 2) v.add(p, random_rational(rng));
    }
    ASSERT_EQ(deserialize_skein_vector(serialize_skein_vector(v)).vector, v);
  }
}

TEST(Serialization, RejectsMalformedInput) {
  const std::string good = serialize_skein_vector(solve_recursion(GeometryTag::c3, 1));
  EXPECT_THROW(deserialize_skein_vector(""), SerializationError);
  EXPECT_THROW(deserialize_skein_vector("not json\n"), SerializationError);
  std::string wrong_version = good;
  wrong_version.replace(wrong_version.find("\"schema_version\":1"), 18, "\"schema_version\":9");
  EXPECT_THROW(deserialize_skein_vector(wrong_version), SerializationError);

  auto term = [](const std::string& c, int s) {
    return Json{{"s", s}, {"a", 0}, {"aL", 0}, {"g", 0}, {"c", c}};
  };
  EXPECT_THROW(polynomial_from_records(Json::array({term("0", 0)})), SerializationError);
  EXPECT_THROW(polynomial_from_records(Json::array({term("+1", 0)})), SerializationError);
  EXPECT_THROW(polynomial_from_records(Json::array({term("01", 0)})), SerializationError);
  EXPECT_THROW(polynomial_from_records(Json::array({term("1", 1), term("1", 0)})), SerializationError);
  EXPECT_THROW(polynomial_from_records(Json::array({term("1x", 0)})), SerializationError);
  EXPECT_THROW(rational_from_record({{"num", Json::array()}, {"den", Json::array()}}),
               SerializationError);
}

TEST(Cli, PsiTextExample) {
  const Result r = run_cli({"psi", "--geometry", "c3", "--max-degree", "1", "--format", "text",
                            "--no-cache"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "∅: 1\n1: γ/(q^{1/2} − q^{-1/2})\n");
}

TEST(Cli, ContentPolyExample) {
  const Result r = run_cli({"content-poly", "6,4,2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "q^{-2} + 2q^{-1} + 2 + 2q + 2q^2 + q^3 + q^4 + q^5\n");
}

TEST(Cli, HookPolyAndPartitions) {
  EXPECT_EQ(run_cli({"hook-poly", "1,1"}).out, "q^{-1} + 1\n");
  EXPECT_EQ(run_cli({"hook-poly", ""}).out, "1\n");
  EXPECT_EQ(run_cli({"partitions", "4"}).out, "4\n3,1\n2,2\n2,1,1\n1,1,1,1\n");
  EXPECT_EQ(run_cli({"partitions", "0"}).out, "∅\n");
}

TEST(Cli, VerifyBranchingExample) {
  const Result r = run_cli({"verify", "--suite", "branching", "--max-degree", "12"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("271 identities checked, all pass"), std::string::npos) << r.out;
}

TEST(Cli, VerifySuitesPass) {
  for (const char* suite : {"recursion", "commutator", "symmetry", "annihilation", "parity", "hookforms"}) {
    const Result r = run_cli({"verify", "--suite", suite, "--max-degree", "4", "--format", "records"});
    ASSERT_EQ(r.status, 0) << suite << r.out << r.err;
    const Json rec = Json::parse(r.out);
    EXPECT_TRUE(rec["passed"].get<bool>());
    EXPECT_GT(rec["checked"].get<long>(), 0);
    EXPECT_TRUE(rec["failure"].is_null());
  }
}

TEST(Cli, ClosedFormAndInvariant) {
  const Result c = run_cli({"closed-form", "--geometry", "c3", "--partition", "1"});
  EXPECT_EQ(c.out, "1: γ/(q^{1/2} − q^{-1/2})\n");
  const Result many = run_cli({"closed-form", "--geometry", "unknot", "--max-degree", "3"});
  EXPECT_EQ(std::count(many.out.begin(), many.out.end(), '\n'), 7);
  const Result inv = run_cli({"invariant", "1"});
  EXPECT_EQ(inv.out, "1: (−a^{-1} + a)/(q^{1/2} − q^{-1/2})\n");
}

TEST(Cli, SolveCoefficients) {
  const Result c3 = run_cli({"solve-coefficients", "--geometry", "c3"});
  EXPECT_EQ(c3.status, 0);
  EXPECT_EQ(c3.out, "γ_{1,0} = −1, γ_{0,1} = a_Lγ\n  operator: ◯ − P10 + a_Lγ·P01\n");
  const Result un = run_cli({"solve-coefficients", "--geometry", "unknot", "--format", "records"});
  EXPECT_EQ(std::count(un.out.begin(), un.out.end(), '\n'), 2);
  const Result none = run_cli({"solve-coefficients", "--geometry", "c3", "--bound", "0"});
  EXPECT_EQ(none.status, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).status, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).status, 2);
  EXPECT_EQ(run_cli({"partitions", "3", "--bogus"}).status, 2);
  EXPECT_EQ(run_cli({"content-poly", "1,2"}).status, 2);
  EXPECT_EQ(run_cli({"psi", "--geometry", "c4", "--max-degree", "2"}).status, 2);
  EXPECT_EQ(run_cli({"psi", "--geometry", "c3", "--max-degree", "41"}).status, 2);
  EXPECT_EQ(run_cli({"psi", "--geometry", "c3", "--max-degree", "-1"}).status, 2);
  EXPECT_EQ(run_cli({"psi", "--geometry", "c3"}).status, 2);
  EXPECT_EQ(run_cli({"verify", "--suite", "nope", "--max-degree", "2"}).status, 2);
  EXPECT_EQ(run_cli({"content-poly", "2", "--format", "xml"}).status, 2);
  EXPECT_EQ(run_cli({"closed-form", "--geometry", "c3"}).status, 2);
  EXPECT_EQ(run_cli({"closed-form", "--geometry", "c3", "--partition", "1", "--max-degree", "2"}).status, 2);
  EXPECT_EQ(run_cli({"psi", "--geometry", "c3", "--max-degree", "1", "--no-cache", "--check-cache"}).status, 2);
  EXPECT_EQ(run_cli({"--help"}).status, 0);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> cmd{"psi", "--geometry", "unknot", "--max-degree", "4",
                                     "--no-cache", "--format", "records"};
  EXPECT_EQ(run_cli(cmd).out, run_cli(cmd).out);
  EXPECT_EQ(run_cli({"verify", "--suite", "commutator", "--max-degree", "5"}).out,
            run_cli({"verify", "--suite", "commutator", "--max-degree", "5"}).out);
}

TEST(Cli, RecordsMatchLibrarySerialization) {
  const Result r = run_cli({"psi", "--geometry", "c3", "--max-degree", "3", "--no-cache", "--format", "records"});
  const SkeinVectorDocument doc = deserialize_skein_vector(r.out);
  EXPECT_EQ(doc.vector, solve_recursion(GeometryTag::c3, 3));
  EXPECT_EQ(doc.manifest["operator"], "◯ − P10 + a_Lγ·P01");
  EXPECT_EQ(doc.manifest["variables"]["s"], "q^{1/2}");
}

TEST_F(CacheDir, CacheHitIsByteIdentical) {
  const std::vector<std::string> base{"psi", "--geometry", "unknot-prime", "--max-degree", "4"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> v = base;
    v.insert(v.end(), extra.begin(), extra.end());
    return run_cli(v);
  };
  const Result fresh = with({"--no-cache", "--format", "records"});
  EXPECT_FALSE(fs::exists(dir_));
  const Result first = with({"--format", "records"});
  ASSERT_TRUE(fs::exists(ResultCache(dir_).path_for(GeometryTag::unknot_prime, 4)));
  const Result hit = with({"--format", "records"});
  EXPECT_EQ(first.out, fresh.out);
  EXPECT_EQ(hit.out, fresh.out);
  EXPECT_EQ(with({}).out, with({"--no-cache"}).out);
  const Result check = with({"--check-cache"});
  EXPECT_EQ(check.status, 0) << check.err;
}

TEST_F(CacheDir, CheckCacheDetectsTampering) {
  ASSERT_EQ(run_cli({"psi", "--geometry", "c3", "--max-degree", "2"}).status, 0);
  const fs::path file = ResultCache(dir_).path_for(GeometryTag::c3, 2);
  std::string bytes = *ResultCache(dir_).load(GeometryTag::c3, 2);
  bytes.replace(bytes.rfind("\"c\":\"1\""), 7, "\"c\":\"2\"");
  ASSERT_TRUE(ResultCache(dir_).store(GeometryTag::c3, 2, bytes));
  const Result r = run_cli({"psi", "--geometry", "c3", "--max-degree", "2", "--check-cache"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("cache mismatch"), std::string::npos);
}

TEST_F(CacheDir, CorruptCacheEntryIsReported) {
  ASSERT_TRUE(ResultCache(dir_).store(GeometryTag::c3, 1, "garbage\n"));
  const Result r = run_cli({"psi", "--geometry", "c3", "--max-degree", "1"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("corrupt cache entry"), std::string::npos);
}

TEST_F(CacheDir, DirectoryFollowsEnvironment) {
  EXPECT_EQ(default_cache_directory(), dir_);
  ::unsetenv("SKEINSOLVE_CACHE_DIR");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg-test", 1);
  EXPECT_EQ(default_cache_directory(), fs::path("/tmp/xdg-test/skeinsolve"));
  ::unsetenv("XDG_CACHE_HOME");
  EXPECT_EQ(default_cache_directory().filename(), "skeinsolve");
}

}  // namespace
}  // namespace skein

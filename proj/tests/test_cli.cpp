#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"

using hds::cplx;
using hds::cli::run;
using Args = std::vector<std::string>;

namespace {

const std::string kMatrixA = "[[[-2,-1],[1,1]],[[3,1],[-2,-1]]]";

nlohmann::ordered_json strip_time(nlohmann::ordered_json j) {
  j["aggregate"].erase("wall_time");
  return j;
}

}  // namespace

TEST_CASE("complex literals") {
  CHECK(hds::cli::parse_complex("0.3+1.1i") == cplx(0.3, 1.1));
  CHECK(hds::cli::parse_complex("-2-0.5i") == cplx(-2.0, -0.5));
  CHECK(hds::cli::parse_complex("1.5i") == cplx(0.0, 1.5));
  CHECK(hds::cli::parse_complex("-i") == cplx(0.0, -1.0));
  CHECK(hds::cli::parse_complex("4") == cplx(4.0, 0.0));
  CHECK(hds::cli::parse_complex("1e-3+2e1i") == cplx(1e-3, 20.0));
  CHECK(hds::cli::parse_complex("[0.5, 2]") == cplx(0.5, 2.0));
  CHECK_THROWS_AS(hds::cli::parse_complex("abc"), hds::cli::UsageError);
  CHECK_THROWS_AS(hds::cli::parse_complex(""), hds::cli::UsageError);
}

TEST_CASE("classical reciprocity is exact") {
  const auto r = run({"hds", "classical", "--recip", "--c", "3", "--d", "1"});
  CHECK(r.exit_code == 0);
  CHECK(r.report["aggregate"]["pass"] == true);
  CHECK(r.report["aggregate"]["max_defect"] == 0.0);
  CHECK(r.report["cases"][0]["defect_exact"] == "0/1");
}

TEST_CASE("psi of A") {
  const auto r = run({"hds", "--d", "7", "psi", "--matrix", kMatrixA});
  REQUIRE(r.exit_code == 0);
  const double v = r.report["cases"][0]["value"].get<double>();
  CHECK(std::abs(v) == doctest::Approx(4.2908).epsilon(1e-4));
}

TEST_CASE("cocycle campaign passes and is reproducible") {
  const Args args{"hds", "--d", "7", "verify", "cocycle", "--trials", "100", "--seed", "1"};
  const auto a = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.report["aggregate"]["pass"] == true);
  CHECK(a.report["cases"].size() == 100);
  const auto b = run(args);
  CHECK(strip_time(a.report).dump() == strip_time(b.report).dump());
}

TEST_CASE("other subcommands") {
  CHECK(run({"hds", "--d", "7", "sum", "--num", "[-2,-1]", "--den", "[3,1]", "--z2", "0.3+1.1i",
             "--script"})
            .exit_code == 0);
  CHECK(run({"hds", "--d", "7", "classify", "--matrix", kMatrixA}).exit_code == 0);
  CHECK(run({"hds", "--d", "1", "lambda", "--z", "[[0.1, 1.2]]"}).exit_code == 0);
  CHECK(run({"hds", "--d", "7", "verify", "reciprocity", "--trials", "3", "--seed", "4"})
            .exit_code == 0);
  CHECK(run({"hds", "--d", "7", "verify", "prop2", "--trials", "2", "--seed", "4"}).exit_code ==
        0);
  CHECK(run({"hds", "classical", "--hecke", "--p", "5", "--c", "7", "--d", "3"}).exit_code == 0);
  const auto la = run({"hds", "--d", "7", "la", "--matrix", kMatrixA, "--s", "2",
                       "--norm-bound", "5000"});
  CHECK(la.exit_code == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"hds"}).exit_code == 2);
  CHECK(run({"hds", "bogus"}).exit_code == 2);
  CHECK(run({"hds", "--d", "4", "classify", "--matrix", kMatrixA}).exit_code == 2);
  CHECK(run({"hds", "--d", "7", "psi", "--matrix", "[[1,2]]"}).exit_code == 2);
  CHECK(run({"hds", "--d", "7", "sum", "--num", "[2,0]", "--den", "[4,0]", "--z2", "1i"})
            .exit_code == 2);
  CHECK(run({"hds", "--j", "3", "classical", "--c", "3", "--d", "1"}).exit_code == 2);
  const auto r = run({"hds", "--d", "7", "la", "--s", "1.1"});
  CHECK(r.exit_code == 2);
  CHECK_FALSE(r.diagnostic.empty());
}

TEST_CASE("help exits with 0") { CHECK(run({"hds", "--help"}).exit_code == 0); }

TEST_CASE("default tolerance from the environment") {
  ::unsetenv("HDS_TOL");
  CHECK(hds::cli::default_tolerance() == 1e-10);
  ::setenv("HDS_TOL", "1e-6", 1);
  CHECK(hds::cli::default_tolerance() == 1e-6);
  ::setenv("HDS_TOL", "junk", 1);
  CHECK(hds::cli::default_tolerance() == 1e-10);
  ::unsetenv("HDS_TOL");
}

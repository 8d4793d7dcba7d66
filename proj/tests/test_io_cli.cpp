#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nilcover/ball.hpp"
#include "nilcover/cli.hpp"
#include "nilcover/errors.hpp"
#include "nilcover/io.hpp"

using namespace nilcover;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kOptText = "1.30633820,0,0.73894462,0.65316910,1.13132206,1.10841693";

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("parse_point") {
    CHECK(parse_point("1,2,3") == NilPoint{1, 2, 3});
    CHECK(parse_point(" -0.5, 1e-3 ,2") == NilPoint{-0.5, 1e-3, 2});
    CHECK_THROWS_AS(parse_point("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_point("1,2,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_point("1,2,3,4"), std::invalid_argument);
  }

  TEST_CASE("parse_lattice") {
    const LatticeBasis b = parse_lattice(kOptText);
    CHECK(b.t1.t1 == 1.30633820);
    CHECK(b.t2.t3 == 1.10841693);
    CHECK(b.k == 1);
    CHECK(parse_lattice("1,0,0,0,1,0,3").k == 3);
    CHECK_THROWS_AS(parse_lattice("1,0,0,0,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lattice("1,0,0,0,1,0,1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lattice("1,0,0,0,1,0,0"), std::invalid_argument);
  }

  TEST_CASE("lattice file") {
    const auto path = std::filesystem::temp_directory_path() / "nilcover_lattice_test.json";
    {
      std::ofstream f(path);
      f << R"({"t1":[1.3,0,0.7],"t2":[0.6,1.1,1.1],"k":2})";
    }
    const LatticeBasis b = read_lattice_file(path.string());
    CHECK(b.t2.t2 == 1.1);
    CHECK(b.k == 2);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_lattice_file(path.string()), std::runtime_error);
  }

  TEST_CASE("density report round trip") {
    DensityReport r;
    r.lattice = parse_lattice(kOptText);
    r.provenance = "test";
    r.covering_radius = 0.9029394137;
    r.ball_volume = ball_volume(r.covering_radius);
    r.domain_volume = domain_volume(Lattice(r.lattice));
    r.density = r.ball_volume / r.domain_volume;
    r.verified = true;
    CHECK(validate(r).empty());
    const DensityReport back = density_report_from_json(Json::parse(to_json(r).dump()));
    CHECK(back.density == r.density);  // shortest round-trip digits
    CHECK(back.lattice.t2.t3 == r.lattice.t2.t3);
    CHECK(back.provenance == "test");
    CHECK(validate(back).empty());

    DensityReport bad = r;
    bad.density *= 1.01;
    CHECK_FALSE(validate(bad).empty());
    bad = r;
    bad.covering_radius = 7.0;
    CHECK_FALSE(validate(bad).empty());
  }

  TEST_CASE("lower bound config round trip") {
    const LowerBoundConfig c = lower_bound_density(0.9);
    CHECK(validate(c).empty());
    const LowerBoundConfig back = lower_bound_config_from_json(Json::parse(to_json(c).dump()));
    CHECK(back.OT3 == c.OT3);
    CHECK(back.H == c.H);
    CHECK(validate(back).empty());
    LowerBoundConfig bad = c;
    bad.OT3 *= 1.1;
    CHECK_FALSE(validate(bad).empty());
  }
}

TEST_SUITE("cli") {
  TEST_CASE("distance") {
    const Run r = run_cli({"distance", "--from", "0,0,0", "--to", "1.30633820,0,0.73894461"});
    CHECK(r.code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(1.47788922).epsilon(1e-5));
    const Run j = run_cli({"--json", "distance", "--from", "0,0,0", "--to", "0,0,2"});
    CHECK(j.code == 0);
    CHECK(Json::parse(j.out)["distance"].get<double>() == doctest::Approx(2.0));
  }

  TEST_CASE("ball volume and constants") {
    const Run r = run_cli({"ball-volume", "--radius", "0.90293941"});
    CHECK(r.code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(3.12538516).epsilon(1e-5 / 3.1));
    CHECK(run_cli({"constants"}).code == 0);
  }

  TEST_CASE("optimize hex as JSON") {
    const Run r = run_cli({"--json", "optimize", "hex", "--samples", "2000"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["t11"].get<double>() == doctest::Approx(1.26001585).epsilon(1e-4));
    CHECK(j["density"].get<double>() == doctest::Approx(1.42900615).epsilon(1e-5 / 1.43));
    CHECK(j["verified"].get<bool>());
  }

  TEST_CASE("covering density from a lattice file") {
    const auto path = std::filesystem::temp_directory_path() / "nilcover_cli_lattice.json";
    {
      std::ofstream f(path);
      f << to_json(parse_lattice(kOptText)).dump();
    }
    const Run r = run_cli({"--json", "covering", "density", "--lattice-file", path.string(), "--samples", "2000"});
    std::filesystem::remove(path);
    REQUIRE(r.code == 0);
    const DensityReport rep = density_report_from_json(Json::parse(r.out));
    CHECK(rep.density == doctest::Approx(1.43093459).epsilon(1e-5 / 1.43));
    CHECK(validate(rep).empty());
  }

  TEST_CASE("exit codes") {
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"no-such-command"}).code == 1);
    CHECK(run_cli({"distance", "--from", "0,0"}).code == 1);
    CHECK(run_cli({"distance", "--from", "0,0", "--to", "1,1,1"}).code == 1);
    CHECK(run_cli({"ball-volume", "--radius", "7"}).code == 2);
    CHECK(run_cli({"lattice", "volume", "--lattice", "1,0,0,1,0,0"}).code == 2);
    CHECK(run_cli({"distance", "--from", "0,0,0", "--to", "0,0,7"}).code == 3);
    CHECK(run_cli({"covering", "radius", "--lattice-file", "/nonexistent/lattice.json"}).code == 4);
    const Run bad = run_cli({"ball-volume", "--radius", "7"});
    CHECK_FALSE(bad.err.empty());
    CHECK(bad.out.empty());
  }

  TEST_CASE("sphere mesh to a file") {
    const auto path = std::filesystem::temp_directory_path() / "nilcover_sphere_test.obj";
    const Run r = run_cli({"sphere-mesh", "--radius", "1.0", "--n-theta", "8", "--n-phi", "16", "--out", path.string()});
    CHECK(r.code == 0);
    std::ifstream in(path);
    int v = 0, f = 0;
    std::string line;
    while (std::getline(in, line)) {
      if (line.rfind("v ", 0) == 0) ++v;
      if (line.rfind("f ", 0) == 0) ++f;
    }
    CHECK(v == 8 * 16 + 2);
    CHECK(f == 2 * 8 * 16);
    std::filesystem::remove(path);
    CHECK(run_cli({"sphere-mesh", "--radius", "1.0", "--out", "/nonexistent/dir/x.obj"}).code == 4);
  }

  TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::string> args{"--json", "covering", "density", "--lattice", kOptText, "--samples", "3000"};
    const Run a = run_cli(args), b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const std::vector<std::string> tiling{"lattice", "tiling-check", "--lattice", kOptText, "--samples", "300"};
    CHECK(run_cli(tiling).out == run_cli(tiling).out);
  }
}

#include "nilcover/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>

#include "nilcover/ball.hpp"
#include "nilcover/covering.hpp"
#include "nilcover/errors.hpp"
#include "nilcover/geodesic.hpp"
#include "nilcover/io.hpp"
#include "nilcover/lattice.hpp"

namespace nilcover::cli {

namespace {

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Human-readable rendering: one `key: value` line per field, numbers at 17
// significant digits; a single-field result prints just its value.
void print_human(std::ostream& out, const Json& j) {
  auto render = [](const Json& v) -> std::string {
    if (v.is_number_float()) return format_number(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_number(); })) {
      std::string s;
      for (const Json& e : v) s += (s.empty() ? "" : ",") + format_number(e.get<double>());
      return s;
    }
    return v.dump();
  };
  if (j.is_object() && j.size() == 1) {
    out << render(j.begin().value()) << '\n';
    return;
  }
  for (auto it = j.begin(); it != j.end(); ++it) out << it.key() << ": " << render(it.value()) << '\n';
}

struct Common {
  bool json = false;
  int samples = kDefaultCoverageSamples;
  double tol = 1e-8;
  bool m_image = false;
  std::string out_file;
  std::string lattice_text;
  std::string lattice_file;
};

void add_lattice_options(CLI::App* app, Common& c) {
  auto* text = app->add_option("--lattice", c.lattice_text, "t11,t12,t13,t21,t22,t23[,k]");
  auto* file = app->add_option("--lattice-file", c.lattice_file, "JSON {\"t1\":[...],\"t2\":[...],\"k\":1}");
  text->excludes(file);
}

LatticeBasis lattice_basis(const Common& c, bool required = true) {
  if (!c.lattice_file.empty()) {
    std::ifstream probe(c.lattice_file);
    if (!probe) throw IoFailure("cannot read " + c.lattice_file);
    return read_lattice_file(c.lattice_file);
  }
  if (!c.lattice_text.empty()) return parse_lattice(c.lattice_text);
  if (required) throw CLI::RequiredError("--lattice or --lattice-file");
  return {};
}

Json constants_json() {
  Json j;
  j["euclidean_covering_density"] = kEuclideanCoveringDensity;
  j["ball_convexity_threshold"] = std::numbers::pi / 2.0;
  j["m_image_convexity_threshold"] = std::numbers::pi;
  j["max_radius"] = kMaxRadius;
  j["chord_h1"] = kChordH1;
  j["chord_h2"] = kChordH2;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geodesic balls, lattices and ball coverings in Nil geometry", "nilcover"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_flag("--json", c.json, "emit a JSON object on stdout");

  std::string from_text, to_text;
  double radius = 0.0;
  int n_theta = 32, n_phi = 64, shell = 1;
  bool shooting = false;
  std::vector<std::string> point_texts;

  auto* distance_cmd = app.add_subcommand("distance", "geodesic distance between two points");
  distance_cmd->add_option("--from", from_text, "x,y,z")->required();
  distance_cmd->add_option("--to", to_text, "x,y,z")->required();

  auto* geodesic_cmd = app.add_subcommand("geodesic", "minimizing geodesic between two points");
  geodesic_cmd->add_option("--from", from_text, "x,y,z")->required();
  geodesic_cmd->add_option("--to", to_text, "x,y,z")->required();
  geodesic_cmd->add_flag("--shooting", shooting, "use multistart shooting instead of the exact solver");
  geodesic_cmd->add_option("--tol", c.tol, "shooting residual tolerance");

  auto* volume_cmd = app.add_subcommand("ball-volume", "volume of the geodesic ball");
  volume_cmd->add_option("--radius", radius)->required();

  auto* mesh_cmd = app.add_subcommand("sphere-mesh", "triangulated geodesic sphere as OBJ");
  mesh_cmd->add_option("--radius", radius)->required();
  mesh_cmd->add_option("--n-theta", n_theta, "latitude rings")->capture_default_str();
  mesh_cmd->add_option("--n-phi", n_phi, "vertices per ring")->capture_default_str();
  mesh_cmd->add_option("--out", c.out_file, "OBJ file (default: stdout)");
  mesh_cmd->add_flag("--m-image", c.m_image, "emit M-image coordinates");

  auto* convexity_cmd = app.add_subcommand("convexity", "convexity predicates and numerical scans");
  convexity_cmd->add_option("--radius", radius)->required();
  convexity_cmd->add_flag("--m-image", c.m_image, "scan the M-image instead of the ball");

  auto* chord_cmd = app.add_subcommand("chord-max", "longest vertical chord of the ball");
  chord_cmd->add_option("--radius", radius)->required();

  auto* lattice_cmd = app.add_subcommand("lattice", "lattice constructions");
  lattice_cmd->require_subcommand(1);
  auto* lat_domain = lattice_cmd->add_subcommand("domain", "fundamental-domain vertices");
  auto* lat_volume = lattice_cmd->add_subcommand("volume", "fundamental-domain volume");
  auto* lat_points = lattice_cmd->add_subcommand("points", "orbit points of the origin");
  lat_points->add_option("--shell", shell, "exponent bound n")->capture_default_str();
  auto* lat_tiling = lattice_cmd->add_subcommand("tiling-check", "random tiling spot check");
  int tiling_samples = 1000;
  lat_tiling->add_option("--samples", tiling_samples)->capture_default_str();
  for (auto* sub : {lat_domain, lat_volume, lat_points, lat_tiling}) add_lattice_options(sub, c);

  auto* circum_cmd = app.add_subcommand("circumball", "ball through four points");
  circum_cmd->add_option("--point", point_texts, "x,y,z (give four times)")->expected(4);
  circum_cmd->add_option("--tol", c.tol, "residual tolerance")->capture_default_str();
  add_lattice_options(circum_cmd, c);

  auto* covering_cmd = app.add_subcommand("covering", "lattice-like ball coverings");
  covering_cmd->require_subcommand(1);
  auto* cov_radius = covering_cmd->add_subcommand("radius", "covering radius");
  auto* cov_density = covering_cmd->add_subcommand("density", "covering density report");
  auto* cov_verify = covering_cmd->add_subcommand("verify", "sampling check of a covering");
  cov_verify->add_option("--radius", radius)->required();
  for (auto* sub : {cov_radius, cov_density, cov_verify}) {
    add_lattice_options(sub, c);
    sub->add_option("--samples", c.samples)->capture_default_str();
  }

  auto* bound_cmd = app.add_subcommand("bound", "bound functions");
  bound_cmd->require_subcommand(1);
  std::vector<CLI::App*> bound_subs;
  for (const char* name : {"f", "f1", "f2", "lower"}) {
    auto* sub = bound_cmd->add_subcommand(name);
    sub->add_option("--radius", radius)->required();
    bound_subs.push_back(sub);
  }

  auto* optimize_cmd = app.add_subcommand("optimize", "density optimizers");
  optimize_cmd->require_subcommand(1);
  auto* opt_hex = optimize_cmd->add_subcommand("hex", "hexagonal lattice family");
  opt_hex->add_option("--samples", c.samples)->capture_default_str();
  optimize_cmd->add_subcommand("lower", "lower-bound construction");

  auto* constants_cmd = app.add_subcommand("constants", "reference constants");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  Json result;
  try {
    if (distance_cmd->parsed()) {
      result["distance"] = distance(parse_point(from_text), parse_point(to_text));
    } else if (geodesic_cmd->parsed()) {
      const NilPoint p = parse_point(from_text), q = parse_point(to_text);
      ShootingOptions so;
      so.tolerance = c.tol;
      const GeodesicSolveResult g = shooting ? geodesic_between_shooting(p, q, so) : geodesic_between(p, q);
      result["alpha"] = g.params.alpha;
      result["theta"] = g.params.theta;
      result["s"] = g.params.s;
      result["residual"] = g.residual;
      result["branch_count"] = g.branch_count;
    } else if (volume_cmd->parsed()) {
      result["volume"] = ball_volume(radius);
    } else if (mesh_cmd->parsed()) {
      const SphereMesh mesh = sphere_mesh(radius, n_theta, n_phi, c.m_image);
      if (c.out_file.empty()) {
        write_obj(out, mesh);
        return kSuccess;
      }
      std::ofstream file(c.out_file);
      if (!file) throw IoFailure("cannot write " + c.out_file);
      write_obj(file, mesh);
      if (!file) throw IoFailure("error writing " + c.out_file);
      result["file"] = c.out_file;
      result["vertices"] = mesh.vertices.size();
      result["faces"] = mesh.faces.size();
    } else if (convexity_cmd->parsed()) {
      result["radius"] = radius;
      result["ball_convex"] = is_ball_convex(radius);
      result["m_image_convex"] = is_m_image_convex(radius);
      const auto crit = profile_critical_angle(radius);
      if (crit) result["profile_critical_angle"] = *crit;
      else result["profile_critical_angle"] = nullptr;
      const ConvexityScan scan = scan_ball_convexity(radius, 24, 48, c.m_image);
      result["support_violation"] = scan.max_violation;
      result["mesh_convex"] = scan.convex;
    } else if (chord_cmd->parsed()) {
      result["chord"] = max_vertical_chord(radius);
    } else if (lattice_cmd->parsed()) {
      const Lattice lattice(lattice_basis(c));
      if (lat_domain->parsed()) {
        result["rotation"] = lattice.rotation();
        result["basis"] = to_json(lattice.basis());
        result["vertices"] = to_json(fundamental_domain(lattice));
      } else if (lat_volume->parsed()) {
        result["volume"] = domain_volume(lattice);
      } else if (lat_points->parsed()) {
        Json pts = Json::array();
        for (const NilPoint& p : lattice_points_in_shell(lattice, shell)) pts.push_back(to_json(p));
        result["points"] = pts;
      } else {
        result = to_json(tiling_spot_check(lattice, tiling_samples));
      }
    } else if (circum_cmd->parsed()) {
      std::array<NilPoint, 4> pts;
      if (!point_texts.empty()) {
        for (std::size_t i = 0; i < 4; ++i) pts[i] = parse_point(point_texts[i]);
      } else {
        const FundamentalDomain d = fundamental_domain(Lattice(lattice_basis(c)));
        pts = {d.O(), d.T1(), d.T2(), d.T3()};
      }
      CircumballOptions co;
      co.tolerance = c.tol;
      result = to_json(circumball(pts, co));
    } else if (covering_cmd->parsed()) {
      const Lattice lattice(lattice_basis(c));
      if (cov_radius->parsed()) {
        const CoveringRadius cr = validated_covering_radius(lattice, c.samples);
        result["radius"] = cr.radius;
        result["tetrahedra_radius"] = cr.tetrahedra_radius;
        result["validated"] = cr.validated;
      } else if (cov_density->parsed()) {
        result = to_json(covering_density(lattice, "user", c.samples));
      } else {
        result = to_json(verify_covering(lattice, radius, c.samples));
      }
    } else if (bound_cmd->parsed()) {
      if (bound_subs[0]->parsed()) result["f"] = bound_f(radius);
      else if (bound_subs[1]->parsed()) result["f1"] = bound_f1(radius);
      else if (bound_subs[2]->parsed()) result["f2"] = bound_f2(radius);
      else result = to_json(lower_bound_density(radius));
    } else if (optimize_cmd->parsed()) {
      if (opt_hex->parsed()) {
        result = to_json(optimize_hex(0.8, 1.8, c.samples));
      } else {
        const LowerBoundMinimum m = minimize_lower_bound();
        result = to_json(m.config);
      }
    } else if (constants_cmd->parsed()) {
      result = constants_json();
    }
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const NoSolution& e) {
    err << "no solution: " << e.what() << '\n';
    return kNoSolution;
  } catch (const DegenerateConfiguration& e) {
    err << "no solution: " << e.what() << '\n';
    return kNoSolution;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const DegenerateLattice& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }

  if (c.json) out << result.dump() << '\n';
  else print_human(out, result);
  return kSuccess;
}

}  // namespace nilcover::cli

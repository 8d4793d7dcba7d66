#include "nilcover/io.hpp"

#include "nilcover/ball.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace nilcover {

namespace {

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw std::invalid_argument("not a number: '" + item + "'");
    out.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw std::invalid_argument("trailing comma in '" + text + "'");
  return out;
}

Json triple(double a, double b, double c) { return Json::array({a, b, c}); }

Translation translation_from(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected a 3-element array");
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

}  // namespace

NilPoint parse_point(const std::string& text) {
  const auto v = parse_numbers(text);
  if (v.size() != 3) throw std::invalid_argument("point needs 3 comma-separated numbers: '" + text + "'");
  return {v[0], v[1], v[2]};
}

LatticeBasis parse_lattice(const std::string& text) {
  const auto v = parse_numbers(text);
  if (v.size() != 6 && v.size() != 7)
    throw std::invalid_argument("lattice needs t11,t12,t13,t21,t22,t23[,k]: '" + text + "'");
  LatticeBasis b;
  b.t1 = {v[0], v[1], v[2]};
  b.t2 = {v[3], v[4], v[5]};
  if (v.size() == 7) {
    if (v[6] != std::floor(v[6]) || v[6] < 1.0) throw std::invalid_argument("k must be a positive integer");
    b.k = static_cast<int>(v[6]);
  }
  return b;
}

LatticeBasis read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return lattice_from_json(j);
}

Json to_json(const NilPoint& p) { return triple(p.x, p.y, p.z); }

Json to_json(const GeodesicParams& g) {
  Json j;
  j["alpha"] = g.alpha;
  j["theta"] = g.theta;
  j["s"] = g.s;
  return j;
}

Json to_json(const LatticeBasis& b) {
  Json j;
  j["t1"] = triple(b.t1.t1, b.t1.t2, b.t1.t3);
  j["t2"] = triple(b.t2.t1, b.t2.t2, b.t2.t3);
  j["k"] = b.k;
  return j;
}

Json to_json(const FundamentalDomain& d) {
  Json j;
  for (std::size_t i = 0; i < d.vertices.size(); ++i) j[FundamentalDomain::kLabels[i]] = to_json(d.vertices[i]);
  return j;
}

Json to_json(const CircumballResult& c) {
  Json j;
  j["center"] = to_json(c.center);
  j["radius"] = c.radius;
  j["residual"] = c.residual;
  return j;
}

Json to_json(const CoverageCheck& c) {
  Json j;
  j["covered"] = c.covered;
  j["samples"] = c.samples;
  j["witness"] = to_json(c.witness);
  if (std::isfinite(c.witness_distance)) j["witness_distance"] = c.witness_distance;
  else j["witness_distance"] = nullptr;
  return j;
}

Json to_json(const TilingReport& t) {
  Json j;
  j["samples"] = t.samples;
  j["violations"] = t.violations;
  j["min_cover"] = t.min_cover;
  j["max_cover"] = t.max_cover;
  return j;
}

Json to_json(const DensityReport& r) {
  Json j;
  j["lattice"] = to_json(r.lattice);
  j["provenance"] = r.provenance;
  j["covering_radius"] = r.covering_radius;
  j["ball_volume"] = r.ball_volume;
  j["domain_volume"] = r.domain_volume;
  j["density"] = r.density;
  j["verified"] = r.verified;
  return j;
}

Json to_json(const LowerBoundConfig& c) {
  Json j;
  j["rp"] = c.Rp;
  j["chord_theta"] = c.chord_theta;
  j["ot3"] = c.OT3;
  j["h"] = to_json(c.H);
  j["t1p"] = to_json(c.T1p);
  j["t2p"] = to_json(c.T2p);
  j["density"] = c.density;
  j["lattice"] = to_json(c.lattice);
  return j;
}

Json to_json(const HexOptimum& h) {
  Json j;
  j["t11"] = h.t11;
  j["radius"] = h.radius;
  j["density"] = h.density;
  j["center"] = to_json(h.ball.center);
  j["lattice"] = to_json(h.lattice);
  j["verified"] = h.verified;
  return j;
}

NilPoint point_from_json(const Json& j) {
  const Translation t = translation_from(j);
  return {t.t1, t.t2, t.t3};
}

LatticeBasis lattice_from_json(const Json& j) {
  try {
    LatticeBasis b;
    b.t1 = translation_from(j.at("t1"));
    b.t2 = translation_from(j.at("t2"));
    b.k = j.value("k", 1);
    return b;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed lattice JSON: ") + e.what());
  }
}

DensityReport density_report_from_json(const Json& j) {
  DensityReport r;
  r.lattice = lattice_from_json(j.at("lattice"));
  r.provenance = j.at("provenance").get<std::string>();
  r.covering_radius = j.at("covering_radius").get<double>();
  r.ball_volume = j.at("ball_volume").get<double>();
  r.domain_volume = j.at("domain_volume").get<double>();
  r.density = j.at("density").get<double>();
  r.verified = j.at("verified").get<bool>();
  return r;
}

LowerBoundConfig lower_bound_config_from_json(const Json& j) {
  LowerBoundConfig c;
  c.Rp = j.at("rp").get<double>();
  c.chord_theta = j.at("chord_theta").get<double>();
  c.OT3 = j.at("ot3").get<double>();
  c.H = point_from_json(j.at("h"));
  c.T1p = point_from_json(j.at("t1p"));
  c.T2p = point_from_json(j.at("t2p"));
  c.density = j.at("density").get<double>();
  c.lattice = lattice_from_json(j.at("lattice"));
  return c;
}

std::string validate(const DensityReport& r) {
  if (r.density != r.ball_volume / r.domain_volume) return "density != ball_volume / domain_volume";
  if (r.verified && r.density < 1.0) return "verified covering with density < 1";
  if (!(r.covering_radius > 0.0)) return "covering radius must be positive";
  if (r.covering_radius > kMaxRadius) return "covering radius exceeds 2π";
  const double v = ball_volume(r.covering_radius);
  if (std::abs(r.ball_volume - v) > 1e-9 * v) return "ball_volume != volume of the covering ball";
  if (!(r.domain_volume > 0.0)) return "domain volume must be positive";
  return {};
}

std::string validate(const LowerBoundConfig& c, double tol) {
  const double ht1 = std::hypot(c.T1p.x - c.H.x, c.T1p.y - c.H.y);
  const double ht2 = std::hypot(c.T2p.x - c.H.x, c.T2p.y - c.H.y);
  if (std::abs(ht1 - ht2) > tol) return "H'T1' != H'T2'";
  const double twice_area = std::abs((c.T1p.x - c.H.x) * (c.T2p.y - c.H.y) - (c.T2p.x - c.H.x) * (c.T1p.y - c.H.y));
  if (std::abs(c.OT3 - twice_area) > tol) return "O'T3' != 2 Area(H'T1'T2')";
  return {};
}

}  // namespace nilcover

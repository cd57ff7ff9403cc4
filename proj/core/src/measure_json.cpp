#include "halfdepth/measure_json.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace halfdepth {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("measure spec: " + msg);
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) fail("unknown key \"" + it.key() + "\" in " + where);
}

Point2 parse_point(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(where + " must be a [x, y] number pair");
  Point2 p{j[0].get<double>(), j[1].get<double>()};
  if (!is_finite(p)) fail(where + " must be finite");
  return p;
}

Rational parse_weight(const json& j, const std::string& where) {
  Rational w;
  if (j.is_string()) {
    w = parse_rational(j.get<std::string>());
  } else if (j.is_number()) {
    w = rational_from_double(j.get<double>());
  } else {
    fail(where + " must be a number or a \"p/q\" string");
  }
  if (w <= 0) fail(where + " must be positive");
  return w;
}

double parse_positive_number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where + " must be a number");
  const double v = j.get<double>();
  if (!(v > 0) || !std::isfinite(v)) fail(where + " must be positive and finite");
  return v;
}

int parse_dim(const json& obj) {
  if (!obj.contains("d")) return 2;
  if (!obj["d"].is_number_integer()) fail("\"d\" must be an integer");
  const int d = obj["d"].get<int>();
  if (d < 1) fail("\"d\" must be >= 1");
  return d;
}

}  // namespace

Measure parse_measure_spec(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("top level must be an object");
  check_keys(root, {"components"}, "top level");
  if (!root.contains("components") || !root["components"].is_array())
    fail("\"components\" array is required");

  std::vector<Component> comps;
  for (const json& c : root["components"]) {
    if (!c.is_object() || !c.contains("type") || !c["type"].is_string())
      fail("each component needs a \"type\" string");
    const std::string type = c["type"].get<std::string>();
    if (type == "finite_atomic") {
      check_keys(c, {"type", "weight", "atoms"}, "finite_atomic");
      if (!c.contains("atoms") || !c["atoms"].is_array()) fail("finite_atomic needs \"atoms\"");
      Rational scale = c.contains("weight") ? parse_weight(c["weight"], "finite_atomic weight")
                                            : Rational(1);
      FiniteAtomic fa;
      for (const json& a : c["atoms"]) {
        if (!a.is_object()) fail("each atom must be an object");
        check_keys(a, {"point", "weight"}, "atom");
        if (!a.contains("point") || !a.contains("weight")) fail("atom needs point and weight");
        fa.atoms.push_back({parse_point(a["point"], "atom point"),
                            scale * parse_weight(a["weight"], "atom weight")});
      }
      comps.emplace_back(std::move(fa));
    } else if (type == "uniform_disk") {
      check_keys(c, {"type", "center", "radius", "weight"}, "uniform_disk");
      UniformDisk d;
      d.center = c.contains("center") ? parse_point(c["center"], "disk center") : Point2{0, 0};
      if (!c.contains("radius")) fail("uniform_disk needs \"radius\"");
      d.radius = parse_positive_number(c["radius"], "disk radius");
      d.mass = c.contains("weight") ? parse_positive_number(c["weight"], "disk weight") : 1.0;
      comps.emplace_back(d);
    } else if (type == "cauchy_product") {
      check_keys(c, {"type", "d", "center", "weight"}, "cauchy_product");
      CauchyProduct p;
      p.dim = parse_dim(c);
      p.center = c.contains("center") ? parse_point(c["center"], "cauchy center") : Point2{0, 0};
      p.weight = c.contains("weight") ? parse_positive_number(c["weight"], "cauchy weight") : 1.0;
      comps.emplace_back(p);
    } else if (type == "axis_cauchy") {
      check_keys(c, {"type", "d", "weight"}, "axis_cauchy");
      AxisCauchyMixture ax;
      ax.dim = parse_dim(c);
      ax.weight =
          c.contains("weight") ? parse_positive_number(c["weight"], "axis_cauchy weight") : 1.0;
      comps.emplace_back(ax);
    } else if (type == "dirac") {
      check_keys(c, {"type", "location", "weight"}, "dirac");
      if (!c.contains("location") || !c.contains("weight"))
        fail("dirac needs location and weight");
      comps.emplace_back(DiracAtom{parse_point(c["location"], "dirac location"),
                                   parse_weight(c["weight"], "dirac weight")});
    } else {
      fail("unknown component type \"" + type + "\"");
    }
  }
  return Measure(std::move(comps));
}

Measure load_measure_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_measure_spec(buf.str());
}

std::string measure_to_json(const Measure& m) {
  json comps = json::array();
  for (const Component& comp : m.components()) {
    json c;
    if (const auto* fa = std::get_if<FiniteAtomic>(&comp)) {
      c["type"] = "finite_atomic";
      json atoms = json::array();
      for (const Atom& a : fa->atoms) {
        json aj;
        aj["point"] = {a.position.x, a.position.y};
        aj["weight"] = json(rational_to_string(a.weight));
        atoms.push_back(aj);
      }
      c["atoms"] = atoms;
    } else if (const auto* disk = std::get_if<UniformDisk>(&comp)) {
      c["type"] = "uniform_disk";
      c["center"] = {disk->center.x, disk->center.y};
      c["radius"] = disk->radius;
      c["weight"] = disk->mass;
    } else if (const auto* cp = std::get_if<CauchyProduct>(&comp)) {
      c["type"] = "cauchy_product";
      c["d"] = cp->dim;
      c["center"] = {cp->center.x, cp->center.y};
      c["weight"] = cp->weight;
    } else if (const auto* ax = std::get_if<AxisCauchyMixture>(&comp)) {
      c["type"] = "axis_cauchy";
      c["d"] = ax->dim;
      c["weight"] = ax->weight;
    } else {
      const auto& da = std::get<DiracAtom>(comp);
      c["type"] = "dirac";
      c["location"] = {da.location.x, da.location.y};
      c["weight"] = json(rational_to_string(da.mass));
    }
    comps.push_back(c);
  }
  json root;
  root["components"] = comps;
  return root.dump();
}

std::string spec_hash(const Measure& m) {
  const std::string text = measure_to_json(m);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace halfdepth

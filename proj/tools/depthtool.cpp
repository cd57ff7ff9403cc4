// depthtool: depth queries, depth-field and central-region export, atom
// reconstruction, and scripted verification for planar measures given as
// JSON specs.

#include "halfdepth/depth.hpp"
#include "halfdepth/measure_json.hpp"
#include "halfdepth/oracle.hpp"
#include "halfdepth/parallel.hpp"
#include "halfdepth/reconstruct.hpp"
#include "halfdepth/reference_measures.hpp"
#include "halfdepth/regions.hpp"
#include "halfdepth/selfcheck.hpp"
#include "halfdepth/version.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using namespace halfdepth;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
  std::string spec_path;
  std::string bbox_text;
  std::string resolution_text = "61x61";
  std::string levels_text;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string format = "csv";
  unsigned threads = 0;
};

BBox parse_bbox(const std::string& text) {
  double v[4];
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf", &v[0], &v[1], &v[2], &v[3]) != 4)
    throw CLI::ValidationError("--bbox expects x0,y0,x1,y1");
  BBox b{{v[0], v[1]}, {v[2], v[3]}};
  if (!b.valid()) throw CLI::ValidationError("--bbox must satisfy x0 < x1 and y0 < y1");
  return b;
}

std::pair<int, int> parse_resolution(const std::string& text) {
  int nx = 0, ny = 0;
  if (std::sscanf(text.c_str(), "%dx%d", &nx, &ny) != 2 || nx < 2 || ny < 2)
    throw CLI::ValidationError("--resolution expects NxM with N, M >= 2");
  return {nx, ny};
}

std::vector<double> parse_levels(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (...) {
      throw CLI::ValidationError("--levels expects comma-separated numbers");
    }
  }
  if (out.empty()) throw CLI::ValidationError("--levels expects at least one level");
  return out;
}

Point2 parse_point(const std::string& text) {
  double x = 0, y = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf", &x, &y) != 2)
    throw CLI::ValidationError("points are given as x,y");
  return {x, y};
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

int cmd_depth(const CommonFlags& flags, const std::vector<std::string>& point_args) {
  const Measure m = load_measure_spec(flags.spec_path);
  for (const std::string& arg : point_args) {
    const Point2 p = parse_point(arg);
    const DepthValue d = depth(m, p);
    std::string line = "depth(" + format_number(p.x) + ", " + format_number(p.y) +
                       ") = " + format_number(d.value.value());
    if (d.value.is_exact()) line += " (= " + rational_to_string(d.value.rational()) + " exact)";
    line += d.attained ? " attained=true" : " attained=false";
    if (d.witness) {
      line += " witness_normal=(" + format_number(d.witness->plane_normal().x) + ", " +
              format_number(d.witness->plane_normal().y) + ")";
      line += " witness_ray=(" + format_number(d.witness->ray_direction().x) + ", " +
              format_number(d.witness->ray_direction().y) + ")";
    }
    std::cout << line << "\n";
  }
  return kExitOk;
}

int cmd_field(const CommonFlags& flags) {
  const Measure m = load_measure_spec(flags.spec_path);
  const BBox bbox = flags.bbox_text.empty() ? m.default_bbox() : parse_bbox(flags.bbox_text);
  const auto [nx, ny] = parse_resolution(flags.resolution_text);
  DepthField field = depth_field(m, bbox, nx, ny);
  field.seed = flags.seed;
  fs::create_directories(flags.out_dir);
  write_depth_field_csv(field, (fs::path(flags.out_dir) / "field.csv").string());
  write_file(fs::path(flags.out_dir) / "field.json", depth_field_sidecar(field));
  std::cout << "wrote field.csv and field.json (" << nx << "x" << ny << ") to " << flags.out_dir
            << "\n";
  return kExitOk;
}

int cmd_regions(const CommonFlags& flags, int directions) {
  const Measure m = load_measure_spec(flags.spec_path);
  const BBox bbox = flags.bbox_text.empty() ? m.default_bbox() : parse_bbox(flags.bbox_text);
  const std::vector<double> levels = parse_levels(flags.levels_text);
  const std::string hash = spec_hash(m);
  fs::create_directories(flags.out_dir);
  int idx = 0;
  for (double level : levels) {
    CentralRegion region;
    if (m.purely_atomic()) {
      region = central_region_atomic(m, rational_from_double(level));
    } else {
      MixtureRegionOptions opts;
      opts.directions = directions;
      opts.tol = flags.tol;
      region = central_region_mixture(m, bbox, level, opts);
    }
    char name[40];
    std::snprintf(name, sizeof name, "region_%03d", idx);
    if (region.empty()) {
      std::cout << name << ": level " << format_number(level) << " -> empty region\n";
    } else if (flags.format == "json") {
      write_file(fs::path(flags.out_dir) / (std::string(name) + ".json"),
                 region_to_json(region, hash));
    } else {
      write_region_csv(region, (fs::path(flags.out_dir) / (std::string(name) + ".csv")).string());
    }
    ++idx;
  }
  std::cout << "wrote " << idx << " region file(s) to " << flags.out_dir << "\n";
  return kExitOk;
}

int cmd_reconstruct(const CommonFlags& flags, double level_step) {
  const Measure m = load_measure_spec(flags.spec_path);
  const BBox bbox = flags.bbox_text.empty() ? m.default_bbox() : parse_bbox(flags.bbox_text);
  const DepthOracle oracle = DepthOracle::from_measure(m, bbox);
  fs::create_directories(flags.out_dir);

  ReconstructionReport report;
  if (m.purely_atomic()) {
    const ExactReconstruction rec = reconstruct_finite_atomic(oracle);
    report = rec.report;
  } else {
    const double total = m.total_mass().value();
    const double step = level_step > 0 ? level_step : 1e-3 * total;
    std::vector<double> levels;
    for (double b = step; b < total; b += step) levels.push_back(b);
    DetectOptions opts;
    opts.region.tol = flags.tol;
    report = detect_atoms(oracle, levels, opts);
  }

  // Support contours for the report, at a handful of levels.
  std::vector<double> contour_levels;
  const double top = report.median.level;
  for (int k = 1; k <= 6; ++k) contour_levels.push_back(top * k / 7.0);
  report.contours = support_report(oracle, contour_levels);
  std::vector<std::string> contour_files;
  for (std::size_t i = 0; i < report.contours.size(); ++i) {
    char name[48];
    std::snprintf(name, sizeof name, "contour_%03zu.csv", i);
    std::ofstream out(fs::path(flags.out_dir) / name);
    for (const Point2& p : report.contours[i].points)
      out << format_number(p.x) << "," << format_number(p.y) << "\n";
    contour_files.push_back(name);
  }

  write_file(fs::path(flags.out_dir) / "report.json",
             reconstruction_report_to_json(report, contour_files));
  std::cout << "verdict: " << report.verdict << " (" << report.candidates.size()
            << " candidate(s)); report.json written to " << flags.out_dir << "\n";
  return report.verdict == "FAIL" ? kExitVerificationFailure : kExitOk;
}

int run_summary(const CheckSummary& summary) {
  for (const CheckLine& line : summary.lines)
    std::cout << (line.pass ? "PASS" : "FAIL") << " " << line.name << " -- " << line.detail
              << "\n";
  std::cout << (summary.ok() ? "all checks passed" : "some checks FAILED") << "\n";
  return summary.ok() ? kExitOk : kExitVerificationFailure;
}

int cmd_verify(const std::string& what, const CommonFlags& flags, double delta, int grid_n) {
  CheckSummary summary;
  if (what == "example1") {
    summary.lines.push_back(check_disk_atom_recovery(delta));
    summary.lines.push_back(check_disk_atom_regions(delta));
  } else if (what == "example2") {
    summary.lines.push_back(check_cross_depth_identity(grid_n));
    summary.lines.push_back(check_cross_negative_control());
  } else if (what == "properties") {
    summary = run_property_suite(flags.seed == 0 ? 20240901 : flags.seed);
  } else {
    throw CLI::ValidationError("verify expects example1, example2 or properties");
  }
  return run_summary(summary);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"halfspace depth of mixed planar measures: evaluation, central regions, and "
               "reconstruction from depth"};
  app.set_version_flag("--version", HALFDEPTH_VERSION_STRING);
  app.require_subcommand(1);

  CommonFlags flags;
  app.add_option("--threads", flags.threads, "cap worker threads (0 = hardware)");

  auto add_common = [&](CLI::App* sub, bool needs_spec) {
    if (needs_spec)
      sub->add_option("--spec", flags.spec_path, "measure spec (JSON)")->required();
    sub->add_option("--bbox", flags.bbox_text, "x0,y0,x1,y1 (default: derived from the spec)");
    sub->add_option("--tol", flags.tol, "tolerance for approximate regions");
    sub->add_option("--seed", flags.seed, "seed recorded in output metadata");
    sub->add_option("--out", flags.out_dir, "output directory");
    sub->add_option("--format", flags.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* depth_cmd = app.add_subcommand("depth", "evaluate depth at query points");
  std::vector<std::string> point_args;
  add_common(depth_cmd, true);
  depth_cmd->add_option("points", point_args, "query points as x,y")->required();

  auto* field_cmd = app.add_subcommand("field", "export a dense depth field (CSV + sidecar)");
  add_common(field_cmd, true);
  field_cmd->add_option("--resolution", flags.resolution_text, "grid size NxM (default 61x61)");

  auto* regions_cmd = app.add_subcommand("regions", "export central regions at given levels");
  add_common(regions_cmd, true);
  int region_directions = 256;
  regions_cmd->add_option("--levels", flags.levels_text, "comma-separated levels")->required();
  regions_cmd->add_option("--directions", region_directions, "radial directions (approx mode)");

  auto* rec_cmd = app.add_subcommand("reconstruct", "detect atoms / reconstruct from depth");
  add_common(rec_cmd, true);
  double level_step = 0.0;
  rec_cmd->add_option("--level-step", level_step,
                      "level grid pitch for detection (default 1e-3 x total mass)");

  auto* verify_cmd =
      app.add_subcommand("verify", "run the bundled verification suites (example1|example2|properties)");
  std::string verify_what;
  verify_cmd->add_option("what", verify_what, "example1|example2|properties")->required();
  double delta = 0.1;
  int grid_n = 61;
  verify_cmd->add_option("--delta", delta, "atom mass for example1 (default 1/10)");
  verify_cmd->add_option("--grid", grid_n, "grid size per side for example2 (default 61)");
  verify_cmd->add_option("--seed", flags.seed, "seed for the randomized property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (flags.threads) set_max_threads(flags.threads);

  try {
    if (depth_cmd->parsed()) return cmd_depth(flags, point_args);
    if (field_cmd->parsed()) return cmd_field(flags);
    if (regions_cmd->parsed()) return cmd_regions(flags, region_directions);
    if (rec_cmd->parsed()) return cmd_reconstruct(flags, level_step);
    if (verify_cmd->parsed()) return cmd_verify(verify_what, flags, delta, grid_n);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}

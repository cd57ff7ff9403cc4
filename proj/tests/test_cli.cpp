#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const fs::path out = fs::temp_directory_path() / "halfdepth_cli_out.txt";
  const std::string cmd = std::string(DEPTHTOOL_BIN) + " " + args + " > " + out.string() + " 2>&1";
  const int rc = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  return {WEXITSTATUS(rc), buf.str()};
}

fs::path write_spec(const std::string& name, const std::string& body) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p);
  out << body;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kCrossSpec = R"({"components": [{"type": "axis_cauchy", "d": 2, "weight": 1.0}]})";
const char* kTriangleSpec = R"({"components": [{"type": "finite_atomic", "atoms": [
  {"point": [0, 0], "weight": 1},
  {"point": [2, 0], "weight": 1},
  {"point": [0, 2], "weight": 1}]}]})";

}  // namespace

TEST_CASE("depth command prints values, exact forms and witnesses") {
  const fs::path spec = write_spec("cross.json", kCrossSpec);
  const RunResult r = run("depth --spec " + spec.string() + " 0,0 1,0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("depth(0, 0) = 0.5") != std::string::npos);
  CHECK(r.output.find("depth(1, 0) = 0.125") != std::string::npos);
  CHECK(r.output.find("witness_normal") != std::string::npos);

  const fs::path tri = write_spec("tri.json", kTriangleSpec);
  const RunResult rt = run("depth --spec " + tri.string() + " 5,5 0.5,0.5");
  CHECK(rt.exit_code == 0);
  CHECK(rt.output.find("= 0 (= 0 exact)") != std::string::npos);
  CHECK(rt.output.find("= 1 (= 1 exact)") != std::string::npos);
}

TEST_CASE("usage and spec errors exit with code 2") {
  CHECK(run("depth 0,0").exit_code == 2);                       // missing --spec
  CHECK(run("nonsense").exit_code == 2);                        // unknown subcommand
  const fs::path bad = write_spec("bad.json", "{\"components\": [{\"type\": \"nope\"}]}");
  CHECK(run("depth --spec " + bad.string() + " 0,0").exit_code == 2);
  const RunResult missing = run("depth --spec /does/not/exist.json 0,0");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("field command writes a deterministic CSV and sidecar") {
  const fs::path spec = write_spec("cross.json", kCrossSpec);
  const fs::path dir1 = fs::temp_directory_path() / "halfdepth_field1";
  const fs::path dir2 = fs::temp_directory_path() / "halfdepth_field2";
  const std::string common = "field --spec " + spec.string() +
                             " --bbox -2,-2,2,2 --resolution 9x9 --seed 7 --out ";
  CHECK(run(common + dir1.string()).exit_code == 0);
  CHECK(run(common + dir2.string()).exit_code == 0);
  const std::string csv1 = slurp(dir1 / "field.csv");
  CHECK(!csv1.empty());
  CHECK(csv1 == slurp(dir2 / "field.csv"));  // byte-identical reruns
  const std::string sidecar = slurp(dir1 / "field.json");
  CHECK(sidecar == slurp(dir2 / "field.json"));
  CHECK(sidecar.find("spec_hash") != std::string::npos);
  CHECK(sidecar.find("\"seed\": 7") != std::string::npos);
}

TEST_CASE("regions command emits polygon files for atomic specs") {
  const fs::path spec = write_spec("tri.json", kTriangleSpec);
  const fs::path dir = fs::temp_directory_path() / "halfdepth_regions";
  fs::remove_all(dir);
  const RunResult r = run("regions --spec " + spec.string() + " --levels 1,2 --format json --out " +
                          dir.string());
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir / "region_000.json"));
  CHECK(!fs::exists(dir / "region_001.json"));  // level 2 is empty
  CHECK(r.output.find("empty region") != std::string::npos);
  const std::string json = slurp(dir / "region_000.json");
  CHECK(json.find("\"polygon\"") != std::string::npos);
}

TEST_CASE("reconstruct command round-trips an atomic spec") {
  const fs::path spec = write_spec("tri.json", kTriangleSpec);
  const fs::path dir = fs::temp_directory_path() / "halfdepth_recon";
  fs::remove_all(dir);
  const RunResult r = run("reconstruct --spec " + spec.string() + " --out " + dir.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("verdict: PASS") != std::string::npos);
  const std::string report = slurp(dir / "report.json");
  CHECK(report.find("\"verdict\": \"PASS\"") != std::string::npos);
  CHECK(report.find("candidates") != std::string::npos);
}

TEST_CASE("verify example2 runs on a reduced grid") {
  const RunResult r = run("verify example2 --grid 13");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASS cauchy pair depth identity") != std::string::npos);
  CHECK(r.output.find("PASS cauchy pair negative control") != std::string::npos);
}

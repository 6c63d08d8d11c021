#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "chainlab/report.hpp"
#include "chainlab/specan.hpp"

using namespace chainlab;
namespace fs = std::filesystem;

namespace {

std::string bin() {
  const char* b = std::getenv("CHAINLAB_BIN");
  REQUIRE_MESSAGE(b != nullptr, "CHAINLAB_BIN must point at the tool");
  return b;
}

fs::path data_dir() {
  const char* d = std::getenv("CHAINLAB_DATA");
  REQUIRE_MESSAGE(d != nullptr, "CHAINLAB_DATA must point at the data tree");
  return d;
}

fs::path sandbox() {
  static const fs::path root = [] {
    fs::path p = fs::temp_directory_path() /
                 ("chainlab_cli_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return root;
}

int run_cmd(const std::string& args, const fs::path& stderr_to = {}) {
  std::string cmd = bin() + " " + args + " >/dev/null";
  if (stderr_to.empty())
    cmd += " 2>/dev/null";
  else
    cmd += " 2>" + stderr_to.string();
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file " << p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p.string();
}

// All regular files in a directory, keyed by name, as raw bytes.
std::map<std::string, std::string> dir_contents(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) out[e.path().filename().string()] = slurp(e.path());
  return out;
}

}  // namespace

TEST_CASE("help and argument errors") {
  CHECK(run_cmd("--help") == 0);
  CHECK(run_cmd("") == 2);            // a subcommand is required
  CHECK(run_cmd("frobnicate") == 2);  // unknown subcommand
  CHECK(run_cmd("lna --no-such-flag") == 2);
}

TEST_CASE("every subcommand emits its artifact set") {
  const fs::path base = sandbox() / "artifacts";
  const std::map<std::string, std::vector<std::string>> expect = {
      {"lna", {"s11.csv", "gain.csv", "nf.csv"}},
      {"dco", {"tuning.csv", "phase_noise.csv", "spectrum.csv"}},
      {"pulse", {"waveform.csv", "spectrum.csv", "spectrum_rect.csv",
                 "summary.csv"}},
      {"mixer", {"tones.csv", "spectrum.csv", "summary.csv"}},
      {"tx", {"waveform.csv", "spectrum.csv", "mask_report.json"}},
      {"rx", {"budget.csv", "power.csv"}},
  };
  for (const auto& [cmd, files] : expect) {
    const fs::path dir = base / cmd;
    REQUIRE(run_cmd(cmd + " --out " + dir.string()) == 0);
    for (const std::string& f : files)
      CHECK_MESSAGE(fs::exists(dir / f), cmd << " should write " << f);
    CHECK(fs::exists(dir / "manifest.json"));
    CHECK(fs::exists(dir / "resolved_config.cfg"));
  }
}

TEST_CASE("identical runs are byte identical") {
  for (const std::string cmd : {"lna", "dco", "pulse", "mixer", "tx", "rx"}) {
    const fs::path a = sandbox() / ("det_a_" + cmd);
    const fs::path b = sandbox() / ("det_b_" + cmd);
    REQUIRE(run_cmd(cmd + " --out " + a.string()) == 0);
    REQUIRE(run_cmd(cmd + " --out " + b.string()) == 0);
    const auto ca = dir_contents(a);
    const auto cb = dir_contents(b);
    REQUIRE(ca.size() == cb.size());
    for (const auto& [name, bytes] : ca) {
      REQUIRE(cb.count(name) == 1);
      CHECK_MESSAGE(cb.at(name) == bytes, cmd << "/" << name << " differs");
    }
  }
}

TEST_CASE("csv numbers use fixed scientific formatting") {
  const fs::path dir = sandbox() / "fmt";
  REQUIRE(run_cmd("rx --out " + dir.string()) == 0);
  const std::string csv = slurp(dir / "budget.csv");
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // may be a comment or the header
  while (line.size() && line[0] == '#') std::getline(in, line);
  std::getline(in, line);  // first data row
  const std::regex cell("-?\\d\\.\\d{8}e[+-]\\d{2,3}");
  std::istringstream row(line);
  std::string tok;
  while (std::getline(row, tok, ','))
    CHECK_MESSAGE(std::regex_match(tok, cell), "bad cell '" << tok << "'");
}

TEST_CASE("manifest lists every artifact with its checksum") {
  const fs::path dir = sandbox() / "manifest";
  REQUIRE(run_cmd("lna --out " + dir.string()) == 0);
  const std::string man = slurp(dir / "manifest.json");
  for (const auto& e : fs::directory_iterator(dir)) {
    const std::string name = e.path().filename().string();
    if (name == "manifest.json") continue;
    CHECK_MESSAGE(man.find("\"" + name + "\"") != std::string::npos,
                  "manifest missing " << name);
    const std::string sum = hex64(fnv1a64(slurp(e.path())));
    CHECK_MESSAGE(man.find(sum) != std::string::npos,
                  "manifest checksum stale for " << name);
  }
}

TEST_CASE("config validation failures exit 2 and name the key") {
  const fs::path dir = sandbox() / "cfgerr";
  fs::create_directories(dir);

  const std::string unknown =
      write_file(dir / "unknown.cfg", "lna.bogus = 1\n");
  const fs::path err = dir / "stderr.txt";
  CHECK(run_cmd("lna --config " + unknown + " --out " + (dir / "o1").string(),
                err) == 2);
  CHECK(slurp(err).find("lna.bogus") != std::string::npos);

  const std::string inverted =
      write_file(dir / "inverted.cfg", "grid.start_hz = 6e9\ngrid.stop_hz = 2e9\n");
  CHECK(run_cmd("lna --config " + inverted + " --out " + (dir / "o2").string(),
                err) == 2);
  CHECK(slurp(err).find("grid") != std::string::npos);

  CHECK(run_cmd("lna --points 1 --out " + (dir / "o3").string()) == 2);

  const std::string zero_pulse =
      write_file(dir / "zero.cfg", "pulse.amplitude_v = 0\n");
  CHECK(run_cmd("pulse --config " + zero_pulse + " --out " +
                (dir / "o4").string(), err) == 2);
  CHECK(slurp(err).find("pulse") != std::string::npos);
  CHECK(run_cmd("tx --config " + zero_pulse + " --out " +
                (dir / "o5").string()) == 2);

  CHECK(run_cmd("lna --config /nonexistent.cfg --out " +
                (dir / "o6").string()) == 2);
}

TEST_CASE("environment profile feeds the resolved config") {
  const fs::path dir = sandbox() / "envprof";
  fs::create_directories(dir);
  const std::string prof = write_file(
      dir / "prof.cfg", "profile = envtest\nlna.ls = 2e-9\n");
  ::setenv("UWB_CHAINLAB_PROFILE", prof.c_str(), 1);
  REQUIRE(run_cmd("rx --out " + (dir / "out").string()) == 0);
  ::unsetenv("UWB_CHAINLAB_PROFILE");
  const std::string resolved = slurp(dir / "out" / "resolved_config.cfg");
  CHECK(resolved.find("profile = envtest") != std::string::npos);
  CHECK(resolved.find("lna.ls = 2e-09") != std::string::npos);
  const std::string man = slurp(dir / "out" / "manifest.json");
  CHECK(man.find("envtest") != std::string::npos);
}

TEST_CASE("mask enforcement drives the exit code") {
  const fs::path dir = sandbox() / "mask";
  fs::create_directories(dir);
  // a mask nothing can satisfy
  SpectralMask impossible;
  impossible.name = "impossible";
  impossible.reference = SpectrumReference::peak_relative;
  impossible.segments = {{0.96e9, 24e9, -200.0}};
  const fs::path mpath = dir / "impossible.mask";
  save_mask(impossible, mpath);
  const std::string cfg =
      write_file(dir / "tx.cfg", "tx.mask = " + mpath.string() + "\n");

  // without enforcement the verdict lives in the artifacts only
  REQUIRE(run_cmd("tx --config " + cfg + " --out " + (dir / "soft").string()) ==
          0);
  CHECK(slurp(dir / "soft" / "mask_report.json").find("\"fail\"") !=
        std::string::npos);
  // with enforcement the run exits 3 but still writes everything
  CHECK(run_cmd("tx --enforce-mask --config " + cfg + " --out " +
                (dir / "hard").string()) == 3);
  CHECK(fs::exists(dir / "hard" / "mask_report.json"));
  CHECK(fs::exists(dir / "hard" / "spectrum.csv"));
}

TEST_CASE("mask-check verdicts and exit codes") {
  const fs::path dir = sandbox() / "maskcheck";
  const fs::path pulse_dir = dir / "pulse";
  REQUIRE(run_cmd("pulse --out " + pulse_dir.string()) == 0);
  const std::string pmask =
      (data_dir() / "masks" / "pulse_baseband.mask").string();

  CHECK(run_cmd("mask-check " + (pulse_dir / "spectrum.csv").string() + " " +
                pmask + " --out " + (dir / "pass").string()) == 0);
  CHECK(run_cmd("mask-check " + (pulse_dir / "spectrum_rect.csv").string() +
                " " + pmask + " --out " + (dir / "fail").string()) == 3);
  CHECK(slurp(dir / "fail" / "mask_report.json").find("\"fail\"") !=
        std::string::npos);

  // reference mismatch is a config problem, not a verdict
  SpectralMask abs_mask;
  abs_mask.name = "absolute";
  abs_mask.reference = SpectrumReference::absolute_dbm;
  abs_mask.segments = {{1e9, 8e9, -40.0}};
  const fs::path apath = dir / "absolute.mask";
  save_mask(abs_mask, apath);
  CHECK(run_cmd("mask-check " + (pulse_dir / "spectrum.csv").string() + " " +
                apath.string() + " --out " + (dir / "mismatch").string()) == 2);

  CHECK(run_cmd("mask-check /nonexistent.csv " + pmask + " --out " +
                (dir / "missing").string()) == 2);
}

TEST_CASE("shipped mask files mirror the builtins") {
  const SpectralMask tx = load_mask(data_dir() / "masks" / "tx_rf.mask");
  CHECK(mask_text(tx) == mask_text(builtin_tx_mask()));
  const SpectralMask pb = load_mask(data_dir() / "masks" / "pulse_baseband.mask");
  CHECK(mask_text(pb) == mask_text(builtin_pulse_mask()));
}

TEST_CASE("tx run against the shipped mask file matches the builtin") {
  const fs::path dir = sandbox() / "maskfile";
  fs::create_directories(dir);
  const std::string cfg = write_file(
      dir / "tx.cfg",
      "tx.mask = " + (data_dir() / "masks" / "tx_rf.mask").string() + "\n");
  REQUIRE(run_cmd("tx --out " + (dir / "builtin").string()) == 0);
  REQUIRE(run_cmd("tx --config " + cfg + " --out " + (dir / "file").string()) ==
          0);
  CHECK(slurp(dir / "builtin" / "spectrum.csv") ==
        slurp(dir / "file" / "spectrum.csv"));
  CHECK(slurp(dir / "builtin" / "mask_report.json") ==
        slurp(dir / "file" / "mask_report.json"));
}

TEST_CASE("points override shrinks the sweep") {
  const fs::path dir = sandbox() / "points";
  REQUIRE(run_cmd("lna --points 5 --out " + dir.string()) == 0);
  const std::string csv = slurp(dir / "gain.csv");
  std::size_t rows = 0;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#' && line.find("f_Hz") == std::string::npos)
      ++rows;
  CHECK(rows == 5);
}

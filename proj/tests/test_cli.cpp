#include "pbtsim/noise_bounds.hpp"
#include "pbtsim/pbt_core.hpp"

#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct CommandResult {
  int code = -1;
  std::string output;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("pbtsim_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream is(path);
  std::ostringstream out;
  out << is.rdbuf();
  return out.str();
}

// Run the tool through the shell, capturing both streams; `prefix` can
// carry environment assignments.
CommandResult run_cli(const std::string& args, const std::string& prefix = "") {
  static int counter = 0;
  const fs::path capture = work_dir() / ("capture_" + std::to_string(counter++) + ".txt");
  const std::string cmd =
      prefix + PBTSIM_CLI_PATH " " + args + " > " + capture.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  CommandResult result;
  if (raw != -1 && WIFEXITED(raw)) result.code = WEXITSTATUS(raw);
  result.output = slurp(capture);
  return result;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> fields;
    std::istringstream fs_line(line);
    std::string field;
    while (std::getline(fs_line, field, ',')) fields.push_back(field);
    rows.push_back(fields);
  }
  return rows;
}

double to_double(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

TEST_CASE("fidelity subcommand") {
  CommandResult r = run_cli("fidelity --ports 2");
  CHECK(r.code == 0);
  CHECK(r.output.find("entanglement_fidelity: 0.466506") != std::string::npos);
  CHECK(r.output.find("port_survival: 0.288675") != std::string::npos);

  CommandResult noisy = run_cli("fidelity --ports 3 --depolarizing 0.1");
  CHECK(noisy.code == 0);
  CHECK(noisy.output.find("q_avg: 0.81") != std::string::npos);
  CHECK(noisy.output.find("noisy_entanglement_fidelity:") != std::string::npos);
}

TEST_CASE("argument failures exit with 2") {
  CHECK(run_cli("").code == 2);                       // missing subcommand
  CHECK(run_cli("fidelity").code == 2);               // missing --ports
  CHECK(run_cli("fidelity --ports 0").code == 2);     // positivity check
  CHECK(run_cli("fidelity --ports 2 --bogus").code == 2);
  CHECK(run_cli("fidelity --ports 2 --depolarizing 0.1 --noise 0.1,0.1,0.1").code ==
        2);  // mutually exclusive noise spellings
  CHECK(run_cli("fidelity --ports 2 --flip 5,0.1").code == 2);  // bad axis
  CHECK(run_cli("fidelity --ports 2 --depolarizing 2.0").code == 2);  // bad rate

  const std::string out = (work_dir() / "unused.csv").string();
  CHECK(run_cli("bounds --m0 0.8 --theta 0.5 --omega 0.1 --out " + out).code == 2);
  CHECK(run_cli("bounds --omega 0.1 --out " + out).code == 2);
  CHECK(run_cli("bounds --m0 0.8 --omega 0:1 --out " + out).code == 2);
  CHECK(run_cli("bounds --m0 0.8 --omega 0.1 --format xml --out " + out).code == 2);
}

TEST_CASE("filesystem failures exit with 3") {
  CHECK(run_cli("bounds --m0 0.8 --omega 0.1 --out /nonexistent-dir/x.csv").code == 3);
}

TEST_CASE("bounds slice output") {
  const fs::path out = work_dir() / "slice.csv";
  CommandResult r =
      run_cli("bounds --m0 0.8 --omega 0:0.5:6 --out " + out.string());
  REQUIRE(r.code == 0);
  CHECK(r.output.find("wrote 6 rows") != std::string::npos);

  auto rows = parse_csv(slurp(out));
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == std::vector<std::string>{"omega", "rel_m_low", "rel_m_up", "rel_m_dep"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double omega = 0.5 * static_cast<double>(i - 1) / 5.0;
    CHECK(to_double(rows[i][0]) == omega);
    CHECK(to_double(rows[i][1]) == pbtsim::m_low(0.8, omega) / 0.8);
    CHECK(to_double(rows[i][2]) == pbtsim::m_up(0.8, omega) / 0.8);
    CHECK(to_double(rows[i][3]) == pbtsim::m_dep(0.8, omega) / 0.8);
  }
}

TEST_CASE("bounds surface output with theta spelling") {
  const fs::path out = work_dir() / "surface.csv";
  CommandResult r =
      run_cli("bounds --theta 0.4:0.8:2 --omega 0.1:0.3:3 --out " + out.string());
  REQUIRE(r.code == 0);

  auto rows = parse_csv(slurp(out));
  REQUIRE(rows.size() == 7);  // header + 2x3 grid
  CHECK(rows[0][0] == "m0");
  CHECK(rows[0][5] == "above_critical");
  CHECK(to_double(rows[1][0]) == std::sin(0.4));
  CHECK(to_double(rows[4][0]) == std::sin(0.8));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double m0 = to_double(rows[i][0]);
    const double omega = to_double(rows[i][1]);
    CHECK(to_double(rows[i][2]) == pbtsim::m_low(m0, omega));
    CHECK(to_double(rows[i][3]) == pbtsim::m_up(m0, omega));
    CHECK(rows[i][5] == (m0 >= pbtsim::critical_m0(omega) ? "true" : "false"));
  }
}

TEST_CASE("csv and json carry the same payload") {
  const fs::path csv_out = work_dir() / "pair.csv";
  const fs::path json_out = work_dir() / "pair.json";
  REQUIRE(run_cli("bounds --m0 0.3:0.9:4 --omega 0:0.6:5 --out " + csv_out.string())
              .code == 0);
  REQUIRE(run_cli("bounds --m0 0.3:0.9:4 --omega 0:0.6:5 --format json --out " +
                  json_out.string())
              .code == 0);

  auto rows = parse_csv(slurp(csv_out));
  nlohmann::json doc = nlohmann::json::parse(slurp(json_out));
  CHECK(doc["meta"]["command"] == "bounds");
  CHECK(doc["meta"]["omega_count"] == 5);
  REQUIRE(doc["records"].size() == rows.size() - 1);
  for (std::size_t i = 0; i < doc["records"].size(); ++i) {
    const auto& record = doc["records"][i];
    const auto& row = rows[i + 1];
    for (std::size_t c = 0; c < rows[0].size(); ++c) {
      const auto& value = record[rows[0][c]];
      if (value.is_number()) {
        CHECK(value.get<double>() == to_double(row[c]));
      } else {
        CHECK(value.get<std::string>() == row[c]);
      }
    }
  }
}

TEST_CASE("scan runs are reproducible and bounded") {
  const std::string args =
      "scan --omega 0.1 --theta 0.8 --channels 4 --angles 12 --gamma-steps 3 "
      "--seed 7 --inject-boundaries --refine --out ";
  const fs::path first = work_dir() / "scan1.csv";
  const fs::path second = work_dir() / "scan2.csv";

  CommandResult r1 = run_cli(args + first.string());
  REQUIRE(r1.code == 0);
  CHECK(r1.output.find("evaluated: 146") != std::string::npos);

  CommandResult r2 = run_cli(args + second.string());
  REQUIRE(r2.code == 0);
  CHECK(slurp(first) == slurp(second));  // same seed, same bytes

  auto rows = parse_csv(slurp(first));
  REQUIRE(rows.size() == 1 + 4 + 146);  // header, extremes, refined, samples
  CHECK(rows[1][0] == "min");
  CHECK(rows[2][0] == "max");
  CHECK(rows[3][0] == "refined_min");
  CHECK(rows[4][0] == "refined_max");
  CHECK(rows[5][0] == "sample");

  // With the analytic candidates injected the extremes hit the bounds.
  const double m0 = std::sin(0.8);
  CHECK(to_double(rows[1][9]) == doctest::Approx(pbtsim::m_low(m0, 0.1)).epsilon(1e-9));
  CHECK(to_double(rows[2][9]) == doctest::Approx(pbtsim::m_up(m0, 0.1)).epsilon(1e-9));
}

TEST_CASE("simulate subcommand") {
  const fs::path out = work_dir() / "choi.csv";
  CommandResult r =
      run_cli("simulate --ports 2 --noise 0.1,0.2,0.3 --out " + out.string());
  REQUIRE(r.code == 0);
  CHECK(r.output.find("max_choi_deviation:") != std::string::npos);
  CHECK(r.output.find("analytic_entanglement_fidelity:") != std::string::npos);
  auto rows = parse_csv(slurp(out));
  CHECK(rows.size() == 17);  // header + full 4x4 Choi matrix

  CHECK(run_cli("simulate --ports 9").code == 2);  // above the simulator cap
}

TEST_CASE("pbet subcommand") {
  CommandResult r = run_cli("pbet --ports 12 --theta 0.8 --flip 3,0.05");
  REQUIRE(r.code == 0);
  CHECK(r.output.find("phase_flip_representable: true") != std::string::npos);
  CHECK(r.output.find("teleported_negativity:") != std::string::npos);

  // Outside the validated range the tool says so instead of failing.
  CommandResult rough = run_cli("pbet --ports 12 --theta 0.8 --depolarizing 0.5");
  REQUIRE(rough.code == 0);
  CHECK(rough.output.find("phase_flip_representable: false") != std::string::npos);
  CHECK(rough.output.find("unvalidated") != std::string::npos);
}

TEST_CASE("relative outputs resolve against PBTSIM_OUT_DIR") {
  const fs::path dir = work_dir() / "outdir";
  fs::create_directories(dir);
  CommandResult r = run_cli("bounds --m0 0.8 --omega 0.1 --out rel.csv",
                            "PBTSIM_OUT_DIR=" + dir.string() + " ");
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "rel.csv"));

  // Absolute paths ignore the variable.
  const fs::path abs_out = work_dir() / "abs.csv";
  CommandResult r2 = run_cli("bounds --m0 0.8 --omega 0.1 --out " + abs_out.string(),
                             "PBTSIM_OUT_DIR=" + dir.string() + " ");
  REQUIRE(r2.code == 0);
  CHECK(fs::exists(abs_out));
}

TEST_CASE("options load from a config file") {
  const fs::path cfg = work_dir() / "pbtsim.cfg";
  std::ofstream(cfg) << "[fidelity]\nports = 2\n";
  CommandResult r = run_cli("--config " + cfg.string() + " fidelity");
  REQUIRE(r.code == 0);
  CHECK(r.output.find("ports: 2") != std::string::npos);
  CHECK(r.output.find("entanglement_fidelity: 0.466506") != std::string::npos);

  // Command line wins over the file.
  CommandResult r2 = run_cli("--config " + cfg.string() + " fidelity --ports 1");
  REQUIRE(r2.code == 0);
  CHECK(r2.output.find("ports: 1") != std::string::npos);
}

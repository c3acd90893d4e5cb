#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "../support/process.hpp"

using testing_support::run_command;
namespace fs = std::filesystem;

namespace {

const std::string kCli = VIRGAME_CLI_PATH;
const fs::path kData = VIRGAME_TEST_DATA_DIR;

std::string cli(const std::string& args) { return kCli + " " + args; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dc_column(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(line.rfind(',') + 1) + "\n";
  return out;
}

struct TempDir {
  fs::path path = fs::temp_directory_path() / ("virgame_cli_" + std::to_string(::getpid()));
  TempDir() { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("score") {
  auto a = run_command(cli("score --profile " + (kData / "profiles/company_a.json").string()));
  CHECK(a.exit_code == 0);
  CHECK(a.out == "SPS=83.0000 S=59.7500 DP=31.0000 DC=14.9375\n");

  auto b = run_command(cli("score --profile " + (kData / "profiles/company_b.json").string()));
  CHECK(b.out == "SPS=11.5000 S=23.3750 DP=72.7500 DC=90.0000\n");

  auto j = run_command(cli("score --json --profile " + (kData / "profiles/company_a.json").string()));
  CHECK(j.exit_code == 0);
  CHECK(j.out.find("\"severity\": 59.75") != std::string::npos);

  auto missing = run_command(cli("score --profile /nonexistent/profile.json"), true);
  CHECK(missing.exit_code == 2);
  CHECK(missing.out.rfind("error:", 0) == 0);
}

TEST_CASE("validation and usage errors exit 2 with an error: prefix") {
  TempDir tmp;
  std::ofstream(tmp.path / "bad.json") << R"({"name":"x","variables":{"A":1}})";
  auto bad = run_command(cli("score --profile " + (tmp.path / "bad.json").string()), true);
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.rfind("error:", 0) == 0);
  CHECK(bad.out.find("\"B\"") != std::string::npos);

  auto usage = run_command(cli("frobnicate"), true);
  CHECK(usage.exit_code == 2);
  CHECK(usage.out.rfind("error:", 0) == 0);

  auto none = run_command(cli(""), true);
  CHECK(none.exit_code == 2);

  auto pd = run_command(cli("game pd --t 3 --r 3 --p 1 --s 0 --solve"), true);
  CHECK(pd.exit_code == 2);
  CHECK(pd.out.rfind("error:", 0) == 0);

  auto seedless = run_command(cli("simulate --network " + (kData / "networks/star4.json").string() +
                                  " --ticks 5 --p 0.5"),
                              true);
  CHECK(seedless.exit_code == 2);
}

TEST_CASE("unwritable output is a runtime failure") {
  auto r = run_command(cli("sweep --fix A=20 --out /nonexistent/dir/out.csv"), true);
  CHECK(r.exit_code == 1);
  CHECK(r.out.rfind("error:", 0) == 0);
}

TEST_CASE("compare") {
  auto r = run_command(cli("compare --a " + (kData / "profiles/company_a.json").string() + " --b " +
                           (kData / "profiles/company_b.json").string()));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("SPS a=83.0000 b=11.5000 higher=a") != std::string::npos);
  CHECK(r.out.find("S a=59.7500 b=23.3750 higher=a") != std::string::npos);
  CHECK(r.out.find("DP a=31.0000 b=72.7500 higher=b") != std::string::npos);
  CHECK(r.out.find("DC a=14.9375 b=90.0000 higher=b") != std::string::npos);
}

TEST_CASE("sweep output files") {
  TempDir tmp;
  const auto a20 = tmp.path / "a20.csv", a80 = tmp.path / "a80.csv", svg = tmp.path / "a20.svg";
  REQUIRE(run_command(cli("sweep --fix A=20 --out " + a20.string() + " --svg " + svg.string())).exit_code == 0);
  REQUIRE(run_command(cli("sweep --fix A=80 --out " + a80.string())).exit_code == 0);
  const auto csv20 = slurp(a20);
  CHECK(std::count(csv20.begin(), csv20.end(), '\n') == 102);
  CHECK(slurp(svg).find("<svg") != std::string::npos);

  // Stdout and file output are the same bytes, and repeat runs are identical.
  CHECK(run_command(cli("sweep --fix A=20")).out == csv20);
  CHECK(run_command(cli("sweep --fix A=20")).out == csv20);

  // C = 10: every DC entry is zero.
  auto c10 = run_command(cli("sweep --fix C=10")).out;
  std::istringstream rows(dc_column(c10));
  std::string v;
  std::getline(rows, v);
  CHECK(v == "DC");
  while (std::getline(rows, v)) CHECK(v == "0");

  CHECK(run_command(cli("sweep --fix Z=20")).exit_code == 2);
  CHECK(run_command(cli("sweep --fix A")).exit_code == 2);
}

TEST_CASE("game") {
  auto pd = run_command(cli("game pd --t 5 --r 3 --p 1 --s 0 --solve"));
  CHECK(pd.exit_code == 0);
  CHECK(pd.out.find("pure Nash: (Defect, Defect)\n") != std::string::npos);
  CHECK(pd.out.find("mixed Nash: none") != std::string::npos);
  CHECK(pd.out.find("dominant: row=Defect col=Defect") != std::string::npos);

  auto ransom = run_command(cli("game ransom --solve"));
  CHECK(ransom.out.find("NotPay/Decrypt: (100.0000, 0.0000)") != std::string::npos);
  CHECK(ransom.out.find("Pay/NotDecrypt: (-100.0000, 100.0000)") != std::string::npos);
  CHECK(ransom.out.find("dominant: row=NotPay col=none") != std::string::npos);

  auto custom = run_command(cli("game ransom --user 100,-30,20,-100 --virus 0,0,100,100 --solve"));
  CHECK(custom.out.find("pure Nash: (NotPay, Decrypt); (NotPay, NotDecrypt)") != std::string::npos);

  auto sd = run_command(cli("game snowdrift --b 3 --c 1 --solve"));
  CHECK(sd.out.find("mixed Nash: row=(0.8000, 0.2000) col=(0.8000, 0.2000)") != std::string::npos);

  auto file = run_command(cli("game file " + (kData / "games/ransom_default.json").string() + " --solve"));
  CHECK(file.exit_code == 0);
  CHECK(file.out == ransom.out);

  auto json = run_command(cli("game pd --json"));
  CHECK(json.out.find("\"row_labels\"") != std::string::npos);

  CHECK(run_command(cli("game ransom --user 1,2,3")).exit_code == 2);
}

TEST_CASE("rank") {
  auto r = run_command(cli("rank --profile " + (kData / "profiles/company_b.json").string()));
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("1. 84.2500  Simple malware removal with antivirus software\n", 0) == 0);
  CHECK(r.out.find("5. 54.8750  Ransom payment\n") != std::string::npos);

  auto w = run_command(cli("rank --weights 1,0,0,0 --catalog " + (kData / "default_catalog.json").string() +
                           " --profile " + (kData / "profiles/company_b.json").string()));
  CHECK(w.out.rfind("1. 90.0000  Recovery using shadow volume copies\n", 0) == 0);

  CHECK(run_command(cli("rank --weights 1,1,0,0 --profile " + (kData / "profiles/company_b.json").string()))
            .exit_code == 2);
  CHECK(run_command(cli("rank --catalog /nonexistent.json --profile " +
                        (kData / "profiles/company_b.json").string()))
            .exit_code == 2);
}

TEST_CASE("simulate") {
  const auto star = (kData / "networks/star4.json").string();
  auto zero = run_command(cli("simulate --network " + star + " --ticks 10 --p 0 --seed 7"));
  CHECK(zero.exit_code == 0);
  CHECK(zero.out.find("mean_f=25.0000 stddev_f=0.0000") != std::string::npos);

  const auto ring = (kData / "networks/ring8.json").string();
  auto first = run_command(cli("simulate --network " + ring + " --ticks 30 --p 0.4 --seed 9 --runs 200"));
  auto second = run_command(cli("simulate --network " + ring + " --ticks 30 --p 0.4 --seed 9 --runs 200"));
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);

  TempDir tmp;
  const auto csv = tmp.path / "traj.csv";
  REQUIRE(run_command(cli("simulate --network " + ring + " --ticks 5 --p 0.4 --seed 9 --csv " + csv.string()))
              .exit_code == 0);
  const auto text = slurp(csv);
  CHECK(text.rfind("tick,susceptible,infected,cleaned,contaminated_clouds\n0,7,1,0,0\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);
}

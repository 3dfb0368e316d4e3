#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "support.hpp"
#include "zetalab/cli.hpp"
#include "zetalab/sizdc.hpp"
#include "zetalab/zero_catalog.hpp"

using namespace zetalab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "zetalab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::filesystem::path& dir() {
  static const std::filesystem::path d = support::scratch_dir("cli");
  return d;
}

// The shared [14, 1500] catalog as a cache file.
const std::string& cache() {
  static const std::string path = [] {
    const auto p = dir() / "zeros-1500.txt";
    save_catalog(support::catalog(), p);
    return p.string();
  }();
  return path;
}

long count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("zeros") {
  const std::string p = (dir() / "z100.txt").string();
  const Run r = run({"zeros", "--from", "14", "--to", "100", "--out", p});
  CHECK(r.code == exit_code::ok);
  CHECK(r.out.find("29 zeros") != std::string::npos);
  const ZeroCatalog c = load_catalog(p);
  CHECK(c.size() == 29);
  const std::string first = support::read_file(p);
  CHECK(run({"zeros", "--from", "14", "--to", "100", "--out", p}).code == exit_code::ok);
  CHECK(support::read_file(p) == first);

  CHECK(run({"zeros", "--from", "50", "--to", "14", "--out", p}).code == exit_code::usage);
  CHECK(run({"zeros", "--from", "10", "--to", "20", "--out", p}).code == exit_code::usage);
  CHECK(run({"zeros", "--from", "14", "--to", "20"}).code == exit_code::usage);
}

TEST_CASE("verify") {
  SUBCASE("lemma1 prints a JSON report") {
    const Run r = run({"verify", "--what", "lemma1", "--t", "100", "--x", "5", "--sigma", "1.2",
                       "--cutoff", "1000", "--zeros", cache()});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.find("\"residual\"") != std::string::npos);
    CHECK(r.out.back() == '\n');
  }
  SUBCASE("--json writes the report and prints a summary") {
    const std::string j = (dir() / "l1.json").string();
    const Run r = run({"verify", "--what", "lemma1", "--t", "300", "--x", "10", "--sigma", "2",
                       "--zeros", cache(), "--json", j});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.find("lemma1 residual") != std::string::npos);
    CHECK(support::read_file(j).find("\"kind\"") != std::string::npos);
  }
  SUBCASE("corollary below x = 3 is a hypothesis failure") {
    const Run r = run({"verify", "--what", "corollary", "--t", "20", "--eps0", "0.1", "--zeros",
                       cache()});
    CHECK(r.code == exit_code::hypothesis);
    CHECK(r.err.find("< 3") != std::string::npos);
  }
  SUBCASE("t on an ordinate") {
    const std::string t = std::to_string(support::catalog().zeros()[3].gamma);
    const Run r = run({"verify", "--what", "theorem1", "--t", t, "--x", "10", "--sigma", "1",
                       "--zeros", cache()});
    CHECK(r.code == exit_code::hypothesis);
  }
  SUBCASE("flags that do not apply are usage errors") {
    CHECK(run({"verify", "--what", "lemma1", "--t", "100", "--x", "5", "--sigma", "1.2", "--a",
               "0.3", "--zeros", cache()})
              .code == exit_code::usage);
    CHECK(run({"verify", "--what", "corollary", "--t", "500", "--eps0", "4", "--x", "10",
               "--zeros", cache()})
              .code == exit_code::usage);
    CHECK(run({"verify", "--what", "theorem2", "--t", "500", "--x", "10", "--sigma", "1",
               "--zeros", cache()})
              .code == exit_code::usage);
    CHECK(run({"verify", "--what", "lemma7", "--t", "500", "--zeros", cache()}).code ==
          exit_code::usage);
    CHECK(run({"verify", "--what", "lemma1", "--t", "100", "--x", "2000", "--sigma", "1.2",
               "--zeros", cache()})
              .code == exit_code::usage);
  }
  SUBCASE("heights outside the catalog") {
    const Run r = run({"verify", "--what", "theorem1", "--t", "3000.5", "--x", "10", "--sigma",
                       "2", "--zeros", cache()});
    CHECK(r.code == exit_code::certification);
  }
  SUBCASE("proof bounds report without a baseline") {
    const Run r = run({"verify", "--what", "bound:zero1", "--t", "500", "--x", "10", "--a", "0.2",
                       "--sigma", "1.2", "--zeros", cache()});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.find("\"lhs_value\": 0") != std::string::npos);
  }
  SUBCASE("missing catalog") {
    const Run r = run({"verify", "--what", "lemma1", "--t", "100", "--x", "5", "--sigma", "1.2",
                       "--zeros", (dir() / "none.txt").string()});
    CHECK(r.code == exit_code::usage);
  }
}

TEST_CASE("sizdc") {
  const std::string rh = rh_case().to_string();
  SUBCASE("computed zeros satisfy the condition") {
    const Run r = run({"sizdc", "--params", rh, "--zeros", cache(), "--from", "100", "--to", "1400",
                       "--grid", "14,4"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.rfind("T,sigma,sigma_floor,window,lhs_count,rhs_bound,ratio,satisfied\n", 0) == 0);
    // With Phi = 3 the phi slices step past sigma = 1 after the floor, one cell per height.
    CHECK(count_lines(r.out) == 1 + 14);
  }
  SUBCASE("an off-line zero violates it") {
    const auto syn = dir() / "syn.txt";
    std::ofstream(syn) << "# gamma beta\n500.3 0.75\n";
    const std::string csv = (dir() / "v.csv").string();
    const Run r = run({"sizdc", "--params", rh, "--zeros", cache(), "--from", "100", "--to", "1400",
                       "--grid", "14,4", "--synthetic", syn.string(), "--csv", csv});
    CHECK(r.code == exit_code::sizdc_violated);
    CHECK(r.err.find("T = 500") != std::string::npos);
    CHECK(support::read_file(csv).find(",0\n") != std::string::npos);
  }
  SUBCASE("malformed parameters name the grammar") {
    const Run r = run({"sizdc", "--params", "l=one;v=one", "--zeros", cache(), "--to", "1400"});
    CHECK(r.code == exit_code::usage);
    CHECK(r.err.find("expected l=F;v=F;phi=F;psi=F") != std::string::npos);
  }
  SUBCASE("--synthetic and --random-offline exclude each other") {
    CHECK(run({"sizdc", "--zeros", cache(), "--to", "1400", "--synthetic", "f", "--random-offline",
               "3"})
              .code == exit_code::usage);
  }
  SUBCASE("repeated runs are byte-identical") {
    const std::vector<std::string> args = {"sizdc", "--zeros", cache(), "--to", "1400",
                                           "--random-offline", "5", "--seed", "9"};
    const Run a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("scan") {
  const Run r = run({"scan", "--littlewood", "--t-min", "100", "--t-max", "1400", "--zeros",
                     cache()});
  CHECK(count_lines(r.out) == 201);
  CHECK(r.out.rfind("t,log_abs_zeta,s_t,littlewood_ratio,s_ratio,t_requested,repelled\n", 0) == 0);
  CHECK(r.err.find("max littlewood_ratio") != std::string::npos);
  CHECK(run({"scan", "--t-min", "100", "--t-max", "1400", "--zeros", cache()}).code ==
        exit_code::usage);
  CHECK(run({"scan", "--littlewood", "--t-min", "100", "--t-max", "1400", "--n", "0", "--zeros",
             cache()})
            .code == exit_code::usage);

  const double g = support::catalog().zeros()[200].gamma;
  const Run p = run({"scan", "--littlewood", "--t-min", std::to_string(g), "--t-max",
                     std::to_string(g + 1.0), "--n", "2", "--zeros", cache()});
  CHECK(p.out.find(",1\n") != std::string::npos);
}

TEST_CASE("help lists every option with its precondition") {
  const Run r = run({"verify", "--help"});
  CHECK(r.code == exit_code::ok);
  for (const char* s : {"--what", "--t", "--x", "--sigma", "--a", "--eps0", "--cutoff", "--sizdc",
                        "--zeros", "--json", "3 <= x", "1e-3"}) {
    CHECK_MESSAGE(r.out.find(s) != std::string::npos, s);
  }
  const Run top = run({"--help"});
  CHECK(top.out.find("ZETALAB_ZERO_CACHE") != std::string::npos);
  CHECK(top.out.find("Exit codes") != std::string::npos);
  CHECK(run({}).code == exit_code::usage);
  CHECK(run({"bogus"}).code == exit_code::usage);
}

TEST_CASE("the installed binary honours the cache environment variable") {
  const char* exe = std::getenv("ZETALAB_CLI");
  if (!exe) return;
  const std::string base = std::string("ZETALAB_ZERO_CACHE=") + cache() + " " + exe;
  const auto status = [](const std::string& cmd) {
    const int s = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(status(base + " verify --what lemma1 --t 100 --x 5 --sigma 1.2") == 0);
  CHECK(status(base + " verify --what corollary --t 20 --eps0 0.1") == 4);
  CHECK(status(std::string(exe) + " verify --what lemma1 --t 100 --x 5 --sigma 1.2") == 64);
  CHECK(status(base + " sizdc --params 'l=one;v' --to 1400") == 64);
}

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"

#include "owlab/cli.hpp"
#include "owlab/errors.hpp"
#include "owlab/io.hpp"

using owlab::cli::JobConfig;
using owlab::io::json;

namespace {
  struct Outcome {
    int         status;
    std::string out;
    std::string err;
  };

  Outcome run(JobConfig const& c) {
    std::ostringstream out, err;
    int const          status = owlab::cli::run(c, out, err);
    return {status, out.str(), err.str()};
  }

  JobConfig job(std::string command, std::string semigroup,
                std::map<std::string, std::vector<std::string>> params) {
    JobConfig c;
    c.command   = std::move(command);
    c.semigroup = std::move(semigroup);
    c.params    = std::move(params);
    return c;
  }

  std::string slurp(std::string const& path) {
    std::ifstream      in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Runs the installed tool through the shell and returns its exit status.
  int shell(std::string const& args, std::string const& capture) {
    std::string const cmd    = std::string(OWLAB_BINARY) + " " + args + " > " + capture + " 2>&1";
    int const         status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
}  // namespace

TEST_CASE("alpha example") {
  Outcome const o = run(job("alpha", "zd:2", {{"set", {"box:0,0:10,10"}}, {"K", {"box:0,0:3,3"}}}));
  CHECK(o.status == 0);
  CHECK(o.out == "{\"alpha\":{\"num\":36,\"den\":100}}\n");
}

TEST_CASE("boundary command") {
  Outcome const o = run(job("boundary", "zd:1", {{"set", {"box:0:10"}}, {"K", {"box:0:3"}}}));
  CHECK(o.status == 0);
  json const j = json::parse(o.out);
  CHECK(j["interior"].size() == 8);
  CHECK(j["boundary"].dump() == "[[8],[9]]");
  CHECK(j["alpha"].dump() == R"({"num":2,"den":10})");
}

TEST_CASE("ow with a constant-rate function") {
  Outcome const o = run(job("ow", "zd:1", {{"folner", {"boxes"}}, {"h", {"card:2"}}, {"max", {"10"}}}));
  CHECK(o.status == 0);
  std::istringstream lines(o.out);
  std::string        line;
  std::getline(lines, line);
  CHECK(line == "n,card,h,ratio");
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(line.substr(line.rfind(',') + 1) == "2");
    ++rows;
  }
  CHECK(rows == 10);
  json const summary = json::parse(o.err);
  CHECK(summary["lambda_hat"] == 2.0);
  CHECK(summary["cauchy_gap"] == 0.0);
}

TEST_CASE("strict tiling below n0 is a domain error") {
  Outcome const o = run(job("tile", "zd:1",
                            {{"mode", {"strict"}},
                             {"eps", {"1/2"}},
                             {"n", {"2"}},
                             {"D", {"box:0:100"}},
                             {"K", {"box:0:1", "box:0:10"}}}));
  CHECK(o.status == 2);
  CHECK(o.err.find("n0(1/2) = 3") != std::string::npos);
  CHECK(o.out.empty());
}

TEST_CASE("best-effort tiling and fill output") {
  Outcome const t = run(job("tile", "zd:1",
                            {{"eps", {"1/2"}}, {"D", {"box:0:64"}}, {"K", {"box:0:2"}}}));
  CHECK(t.status == 0);
  json const tj = json::parse(t.out);
  CHECK(tj["mode"] == "best-effort");
  CHECK(tj["residual"].empty());
  CHECK(tj["achieved"].dump() == R"({"num":0,"den":64})");
  CHECK(tj["transcript"].size() == 1);
  CHECK(tj["hypotheses"].size() == 1);

  Outcome const f = run(job("fill", "zd:1", {{"omega", {"box:0:100"}}, {"K", {"box:0:10"}}, {"eps", {"1/2"}}}));
  CHECK(f.status == 0);
  json const fj = json::parse(f.out);
  CHECK(fj["pattern"].size() == 19);
  CHECK(fj["coverage_size"] == 100);
  CHECK(fj["coverage_bound"].dump() == R"({"num":91,"den":2})");
  CHECK(fj["disjoint"] == true);
}

TEST_CASE("folner report csv") {
  Outcome const o = run(job("folner-report", "zd:2",
                            {{"kind", {"boxes"}}, {"K", {"box:0,0:3,3"}}, {"indices", {"5,10,20,40"}}}));
  CHECK(o.status == 0);
  CHECK(o.out
        == "n,card,alpha_num,alpha_den,max_defect_num,max_defect_den\n"
           "5,25,16,25,16,25\n10,100,36,100,36,100\n20,400,76,400,76,400\n40,1600,156,1600,156,1600\n");
}

TEST_CASE("entropy and certify") {
  Outcome const e = run(job("entropy", "", {{"sft", {"golden"}}, {"max", {"30"}}}));
  CHECK(e.status == 0);
  CHECK(e.out.find("\n30,30,2178309,") != std::string::npos);

  Outcome const c = run(job("certify", "zd:1",
                            {{"D", {"box:0:64"}}, {"K", {"box:0:8"}}, {"eps", {"1/2"}}, {"h", {"sft:golden"}},
                             {"window", {"15"}}}));
  CHECK(c.status == 0);
  CHECK(json::parse(c.out)["passed"] == true);
}

TEST_CASE("malformed configurations exit 1 and name the field") {
  Outcome const missing = run(job("alpha", "zd:2", {{"set", {"box:0,0:3,3"}}}));
  CHECK(missing.status == 1);
  CHECK(missing.err.find("--K") != std::string::npos);

  Outcome const sg = run(job("alpha", "zd:zero", {{"set", {"box:0:3"}}, {"K", {"box:0:1"}}}));
  CHECK(sg.status == 1);
  CHECK(sg.err.find("semigroup") != std::string::npos);

  Outcome const eps = run(job("fill", "zd:1", {{"omega", {"box:0:10"}}, {"K", {"box:0:2"}}, {"eps", {"half"}}}));
  CHECK(eps.status == 1);
  CHECK(eps.err.find("--eps") != std::string::npos);

  Outcome const unknown = run(job("alpha", "zd:1", {{"set", {"box:0:3"}}, {"K", {"box:0:1"}}, {"L", {"x"}}}));
  CHECK(unknown.status == 1);
  CHECK(unknown.err.find("--L") != std::string::npos);

  JobConfig csv = job("fill", "zd:1", {{"omega", {"box:0:10"}}, {"K", {"box:0:2"}}, {"eps", {"1/2"}}});
  csv.format    = "csv";
  CHECK(run(csv).status == 1);
  CHECK(run(job("mystery", "zd:1", {})).status == 1);
  CHECK(run(job("ow", "zd:1", {{"h", {"card:1"}}, {"max", {"3"}}})).status == 1);
}

TEST_CASE("domain and resource errors") {
  Outcome const empty = run(job("alpha", "zd:1", {{"set", {"box:3:3"}}, {"K", {"box:0:1"}}}));
  CHECK(empty.status == 2);
  Outcome const nat = run(job("alpha", "nat:1", {{"set", {"box:-2:3"}}, {"K", {"box:0:1"}}}));
  CHECK(nat.status == 2);

  ::setenv("OWLAB_BUDGET", "1000", 1);
  Outcome const big = run(job("entropy", "", {{"sft", {"hardsq"}}, {"max", {"12"}}}));
  ::unsetenv("OWLAB_BUDGET");
  CHECK(big.status == 3);
  CHECK(big.err.find("budget") != std::string::npos);
}

TEST_CASE("job configs round-trip") {
  JobConfig c = job("tile", "zd:1", {{"eps", {"1/2"}}, {"D", {"box:0:64"}}, {"K", {"box:0:2", "box:0:4"}}});
  c.jobs      = 3;
  c.output    = "out.json";
  CHECK(JobConfig::from_json(c.to_json()) == c);

  JobConfig const canon = owlab::cli::canonical(c);
  CHECK(canon.format == "json");
  CHECK(canon.params.at("mode") == std::vector<std::string>{"best-effort"});
  CHECK(JobConfig::from_json(canon.to_json()).to_json() == canon.to_json());
  CHECK(owlab::cli::canonical(canon) == canon);

  json const loose = json::parse(R"({"params": {"max": 10, "h": "card:2"}, "command": "ow", "semigroup": "zd:1"})");
  JobConfig const parsed = JobConfig::from_json(loose);
  CHECK(parsed.params.at("max") == std::vector<std::string>{"10"});
  CHECK(parsed.to_json().dump()
        == R"({"command":"ow","semigroup":"zd:1","params":{"h":["card:2"],"max":["10"]},"output":"","format":"","jobs":1})");

  CHECK_THROWS_AS(JobConfig::from_json(json::parse(R"({"command": "ow", "extra": 1})")), owlab::ConfigError);
  CHECK_THROWS_AS(JobConfig::from_json(json::parse(R"({"semigroup": "zd:1"})")), owlab::ConfigError);
  CHECK_THROWS_AS(JobConfig::from_json(json::parse(R"({"command": "ow", "jobs": 0})")), owlab::ConfigError);
}

TEST_CASE("outputs are deterministic and written to files") {
  JobConfig c = job("ow", "zd:1", {{"h", {"sft:golden"}}, {"max", {"20"}}});
  c.output    = "owlab_cli_ow.csv";
  c.jobs      = 4;
  CHECK(run(c).status == 0);
  std::string const first = slurp(c.output), first_summary = slurp(c.output + ".summary.json");
  c.jobs = 1;
  CHECK(run(c).status == 0);
  CHECK(slurp(c.output) == first);
  CHECK(slurp(c.output + ".summary.json") == first_summary);
  CHECK(json::parse(first_summary).contains("lambda_hat"));
}

TEST_CASE("command-line tool") {
  CHECK(shell("alpha --semigroup zd:2 --set box:0,0:10,10 --K box:0,0:3,3", "owlab_cli_a.txt") == 0);
  CHECK(slurp("owlab_cli_a.txt") == "{\"alpha\":{\"num\":36,\"den\":100}}\n");

  CHECK(shell("tile --mode strict --eps 1/2 --n 2 --semigroup zd:1 --D box:0:100 --K box:0:1 --K box:0:10",
              "owlab_cli_t.txt")
        == 2);
  CHECK(slurp("owlab_cli_t.txt").find("n0(1/2) = 3") != std::string::npos);

  CHECK(shell("alpha --semigroup zd:2 --no-such-flag 1", "owlab_cli_bad.txt") == 1);
  CHECK(shell("ow --help", "owlab_cli_help.txt") == 0);
  CHECK(slurp("owlab_cli_help.txt").find("n,card,h,ratio") != std::string::npos);

  std::ofstream("owlab_cli_job.json")
      << R"({"command": "alpha", "semigroup": "zd:2", "params": {"set": "box:0,0:10,10", "K": "box:0,0:3,3"}})";
  CHECK(shell("run --config owlab_cli_job.json", "owlab_cli_r.txt") == 0);
  CHECK(slurp("owlab_cli_r.txt") == "{\"alpha\":{\"num\":36,\"den\":100}}\n");
  std::ofstream("owlab_cli_badjob.json") << R"({"command": "alpha", "colour": "red"})";
  CHECK(shell("run --config owlab_cli_badjob.json", "owlab_cli_rb.txt") == 1);
  CHECK(slurp("owlab_cli_rb.txt").find("colour") != std::string::npos);
}

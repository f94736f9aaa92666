#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with stderr silenced; stdout and the exit code come back.
RunResult run_cli(const std::string& args) {
  const std::string command = std::string(UFSG_CLI_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), n);
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_vector_file(const std::string& name, const std::string& content) {
  const std::string path = "cli_test_" + name + ".tsv";
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("element arithmetic commands", "[cli]") {
  REQUIRE(run_cli("mul x1 x0").out == "x0 x2\n");
  REQUIRE(run_cli("normalize \"x0 x2 x1\"").out == "x0 x1 x3\n");
  REQUIRE(run_cli("order x0 x1").out == "<\n");
  REQUIRE(run_cli("order x1 x0").out == ">\n");
  REQUIRE(run_cli("order x0 x0").out == "=\n");

  const RunResult none = run_cli("divide --left x2 \"x0 x2\"");
  REQUIRE(none.exit_code == 0);
  REQUIRE(none.out == "none\n");
  REQUIRE(run_cli("divide --left x1 \"x0 x2\"").out == "x0\n");
  REQUIRE(run_cli("divide --right x0 \"x0 x2\"").out == "x1\n");

  REQUIRE(run_cli("conjugate --down --n 1 \"x0 x2\"").out == "x0 x1\n");
  REQUIRE(run_cli("conjugate --up --n 1 \"x0 x1\"").out == "x0 x2\n");
  REQUIRE(run_cli("conjugate --down --n 1 \"x0 x1\"").out == "none\n");

  REQUIRE(run_cli("tmul C A").out == "B C\n");
  REQUIRE(run_cli("enumerate --max-ind 1 --max-gen 2 --output tsv").out == "e\nx0\nx1\nx2\n");
}

TEST_CASE("exit codes distinguish usage and domain errors", "[cli]") {
  REQUIRE(run_cli("mul x1 x0").exit_code == 0);
  REQUIRE(run_cli("mul bogus x0").exit_code == 1);        // domain: parse failure
  REQUIRE(run_cli("normalize --strict \"x1 x0\"").exit_code == 1);
  REQUIRE(run_cli("normalize \"x1 x0\"").exit_code == 0);
  REQUIRE(run_cli("mul --no-such-flag x1 x0").exit_code == 2);  // usage
  REQUIRE(run_cli("nosuchcommand").exit_code == 2);
  REQUIRE(run_cli("").exit_code == 2);
  REQUIRE(run_cli("divide x1 \"x0 x2\"").exit_code == 2);  // missing --left/--right
  REQUIRE(run_cli("--help").exit_code == 0);
}

TEST_CASE("ufbasis prints and verifies", "[cli]") {
  const RunResult r = run_cli("ufbasis --rank 2 --max-len 3 --output tsv --verify");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out == "a\nb\nba\nbaa\nbab\n");
}

TEST_CASE("folner box table matches the closed form", "[cli]") {
  const RunResult r = run_cli("folner --semigroup t --gen A --side left --n-max 4 --output tsv");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out ==
          "1\t0\t0\t2\n"
          "2\t4\t1/2\t1\n"
          "3\t18\t2/3\t2/3\n"
          "4\t48\t3/4\t1/2\n");

  const RunResult sweep =
      run_cli("folner --semigroup t --gens A,C --side right --n-min 2 --n-max 3 --output tsv");
  REQUIRE(sweep.exit_code == 0);
  REQUIRE(sweep.out ==
          "A\tN=2\t8\t4\t1/2\t1\n"
          "A\tN=3\t27\t18\t2/3\t2/3\n"
          "C\tN=2\t8\t4\t1/2\t1\n"
          "C\tN=3\t27\t18\t2/3\t2/3\n");
}

TEST_CASE("thompson sweeps and custom sets", "[cli]") {
  const RunResult r =
      run_cli("folner --semigroup s --gens x0,x1 --max-ind 2 --max-gen 2 --output tsv");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.find("x0\tind=1,gen=1\t3\t1\t1/3\t4/3\n") == 0);

  const std::string path = temp_vector_file("set", "e\nx0\nx0^2\n");
  const RunResult custom =
      run_cli("folner --semigroup s --gens x0 --set " + path + " --output tsv");
  REQUIRE(custom.exit_code == 0);
  REQUIRE(custom.out == "x0\tfile=" + path + "\t3\t2\t2/3\t2/3\n");
  std::remove(path.c_str());
}

TEST_CASE("vector pipeline commands", "[cli]") {
  const std::string f = temp_vector_file("f", "x0\t1\t0\nx1\t1\t0\n");
  const std::string g = temp_vector_file("g", "x0\t2\t0\n");

  const RunResult conv = run_cli("convolve " + f + " " + g + " --output tsv");
  REQUIRE(conv.exit_code == 0);
  REQUIRE(conv.out == "x0^2\t2\t0\nx0 x2\t2\t0\n");

  const RunResult expect = run_cli("expect " + f + " --output tsv");
  REQUIRE(expect.out == "x0\t1\t0\n");

  const RunResult spec = run_cli("specrad --n-max 3 " + f + " --output tsv");
  REQUIRE(spec.exit_code == 0);
  REQUIRE(spec.out ==
          "1\t1\t0\t1\t0\t1\n"
          "2\t1\t0\t1\t0\t1\n"
          "3\t1\t0\t1\t0\t1\n");

  const RunResult norm =
      run_cli("compress --max-ind 2 --max-gen 2 --norm " + g + " --output tsv");
  REQUIRE(norm.exit_code == 0);
  REQUIRE(norm.out == "2\n");

  const RunResult entries = run_cli("compress --max-ind 1 --max-gen 1 " + g + " --output tsv");
  REQUIRE(entries.exit_code == 0);
  // Basis e, x0, x1: x0 . e = x0 only; the other images leave the ball.
  REQUIRE(entries.out == "1\t0\t2\t0\n");

  const RunResult json = run_cli("convolve " + f + " " + g + " --output json");
  const auto parsed = nlohmann::json::parse(json.out);
  REQUIRE(parsed.size() == 2);
  REQUIRE(parsed[0]["element"] == "x0^2");
  REQUIRE(parsed[0]["re"] == "2");

  const RunResult missing = run_cli("convolve no_such_file.tsv " + g);
  REQUIRE(missing.exit_code == 1);

  std::remove(f.c_str());
  std::remove(g.c_str());
}

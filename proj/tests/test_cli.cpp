#include "wmesc/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "wmesc/instance.hpp"

using namespace wmesc;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("wmesc");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data_file(const std::string& name) {
  return std::string(WMESC_DATA_DIR) + "/" + name;
}

// Writes `text` to a throwaway file and cleans it up on scope exit.
class TempFile {
 public:
  TempFile(const std::string& stem, const std::string& text)
      : path_(std::filesystem::temp_directory_path() /
              ("wmesc_" + stem + ".txt")) {
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("solve prints the cover weight and chosen sets") {
  CliRun r = run({"solve", data_file("sample.wmesc")});
  CHECK(r.code == 0);
  CHECK(r.out == "w 1.50000000\ns 0 2\n");
  CHECK(r.err.empty());
}

TEST_CASE("solve --stats appends one search-summary comment") {
  CliRun r = run({"solve", "--stats", data_file("sample.wmesc")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "w 1.50000000\n"
        "s 0 2\n"
        "# nodes=5 leaves=2 depth=3 histogram=unary:2,forced:0,"
        "two_branch:1,out1_pair:0,out1_full:0,generic:0\n");
}

TEST_CASE("solve --json emits a single machine-readable line") {
  CliRun r = run({"solve", "--json", data_file("sample.wmesc")});
  CHECK(r.code == 0);
  REQUIRE(r.out.size() > 1);
  CHECK(r.out.back() == '\n');
  CHECK(r.out.find('\n') == r.out.size() - 1);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "cover");
  CHECK(j["weight"] == 1.5);
  CHECK(j["chosen"] == nlohmann::json({0, 2}));
  CHECK(j["stats"]["nodes"] == 5);
  CHECK(j["stats"]["leaves"] == 2);
  CHECK(j["stats"]["pruned"] == 1);
  CHECK(j["stats"]["depth"] == 3);
  CHECK(j["stats"]["histogram"]["unary"] == 2);
  CHECK(j["stats"]["histogram"]["two_branch"] == 1);
}

TEST_CASE("solve reports no-solution with its own exit code") {
  TempFile f("nosol", "p wmesc 1 0\n");
  CliRun r = run({"solve", f.path()});
  CHECK(r.code == 2);
  CHECK(r.out == "no-solution\n");

  CliRun j = run({"solve", "--json", f.path()});
  CHECK(j.code == 2);
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["kind"] == "no-solution");
  CHECK(parsed["weight"].is_null());
  CHECK(parsed["chosen"].is_null());
}

TEST_CASE("solve --no-prune keeps the answer and visits no fewer nodes") {
  CliRun pruned = run({"solve", "--json", data_file("sample.wmesc")});
  CliRun full = run({"solve", "--json", "--no-prune",
                     data_file("sample.wmesc")});
  nlohmann::json a = nlohmann::json::parse(pruned.out);
  nlohmann::json b = nlohmann::json::parse(full.out);
  CHECK(a["weight"] == b["weight"]);
  CHECK(a["chosen"] == b["chosen"]);
  CHECK(b["stats"]["pruned"] == 0);
  CHECK(b["stats"]["nodes"].get<std::uint64_t>() >=
        a["stats"]["nodes"].get<std::uint64_t>());
}

TEST_CASE("brute agrees with solve on the sample") {
  CliRun r = run({"brute", data_file("sample.wmesc")});
  CHECK(r.code == 0);
  CHECK(r.out == "w 1.50000000\ns 0 2\n");
}

TEST_CASE("gen emits a parseable instance, identically every time") {
  CliRun a = run({"gen", "--n", "6", "--m", "4", "--seed", "9"});
  CliRun b = run({"gen", "--n", "6", "--m", "4", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Instance inst = parse_instance_text(a.out);
  CHECK(inst.n == 6);
  CHECK(inst.m() == 4);

  CliRun c = run({"gen", "--n", "6", "--m", "4", "--seed", "10"});
  CHECK(c.out != a.out);
}

TEST_CASE("gen --planted appends the hidden partition as a comment") {
  CliRun r = run({"gen", "--n", "24", "--m", "10", "--density", "0.2",
                  "--seed", "11", "--planted", "4,6"});
  CHECK(r.code == 0);
  std::size_t at = r.out.find("# planted:");
  REQUIRE(at != std::string::npos);
  Instance inst = parse_instance_text(r.out);  // comment line parses away
  CHECK(inst.n == 24);
  CHECK(inst.m() == 10);

  // The advertised positions really form a minimum-weight cover.
  std::istringstream tail(r.out.substr(at + 10));
  std::vector<int> planted;
  int v = 0;
  while (tail >> v) planted.push_back(v);
  CHECK(planted.size() == 4);
  CHECK(verify_cover(inst, planted));
}

TEST_CASE("pack solves the sample packing through the reduction") {
  CliRun r = run({"pack", data_file("sample.pack")});
  CHECK(r.code == 0);
  CHECK(r.out == "size 2\ns 0 2\n");
}

TEST_CASE("roots prints one row per recurrence") {
  CliRun r = run({"roots"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0] == "1 2T(k-3) 1.259921 1.260");
  CHECK(rows[1] == "2 T(k-2)+T(k-4) 1.272020 1.273");
  CHECK(rows[2] == "3 2T(k-4) 1.189207 1.190");
  CHECK(rows[5] == "6 2T(k-5)+T(k-3) 1.298030 1.299");
  CHECK(rows[8] == "9 T(k-6)+T(k-1) 1.285199 1.286");
}

TEST_CASE("bench rows audit leaf counts and repeat exactly") {
  CliRun a = run({"bench", "--m-list", "6,8", "--trials", "3", "--seed",
                  "2"});
  CliRun b = run({"bench", "--m-list", "6,8", "--trials", "3", "--seed",
                  "2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string row;
  REQUIRE(std::getline(lines, row));
  CHECK(row.substr(0, 19) == "m=6 trials=3 max_le");
  CHECK(row.find(" pass") != std::string::npos);
  REQUIRE(std::getline(lines, row));
  CHECK(row.substr(0, 4) == "m=8 ");
}

TEST_CASE("failures use exit code one and an error line") {
  CliRun missing = run({"solve", "/nonexistent/path.wmesc"});
  CHECK(missing.code == 1);
  CHECK(missing.err.substr(0, 20) == "error: cannot open '");

  TempFile bad("badparse", "p wmesc 2 1\ns 1 7\n");
  CliRun parse = run({"solve", bad.path()});
  CHECK(parse.code == 1);
  CHECK(parse.err ==
        "error: line 2: element id 7 out of range (n=2)\n");

  CliRun planted = run({"gen", "--n", "4", "--m", "3", "--planted", "3"});
  CHECK(planted.code == 1);
  CHECK(planted.err == "error: --planted wants blocks,distractors\n");

  CliRun trials = run({"bench", "--m-list", "4", "--trials", "0"});
  CHECK(trials.code == 1);

  CliRun unknown = run({"frobnicate"});
  CHECK(unknown.code == 1);
}

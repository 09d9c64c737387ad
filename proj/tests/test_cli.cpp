#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "taspm/bench.hpp"
#include "taspm/cli.hpp"
#include "taspm/spmf_io.hpp"

using namespace taspm;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("taspm_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("mine") {
  TempDir tmp;
  auto db = tmp.file("table1.spmf");
  write_database_file(fixtures::table1(), db);
  auto out = tmp.file("out.txt");

  auto r = cli({"mine", "--input", db, "--query", "1 -1 2 -1", "--minsup", "2", "--algo",
                "taspm-v2", "--output", out});
  CHECK(r.code == 0);
  auto text = slurp(out);
  CHECK_FALSE(text.empty());
  CHECK(text.find("7 -1 1 -1 2 -1 #SUP: 2\n") != std::string::npos);
  CHECK(r.err.find("intersections=") != std::string::npos);

  r = cli({"mine", "--input", db, "--query", "1 -1 5 -1 6 -1", "--minsup", "2", "--output", out});
  CHECK(r.code == 0);
  CHECK(slurp(out).empty());

  r = cli({"mine", "--input", db, "--query", "1 -1 2 -1", "--minsup-rel", "0.5", "--algo",
           "cmspam", "--toggle", "utfp=on"});
  CHECK(r.code == 0);
  CHECK(r.out == text);
}

TEST_CASE("mine exit codes") {
  TempDir tmp;
  auto db = tmp.file("table1.spmf");
  write_database_file(fixtures::table1(), db);
  auto bad_db = tmp.file("bad.spmf");
  std::ofstream(bad_db) << "1 -1 -2\n3 1 -1 -2\n";

  CHECK(cli({"mine", "--input", db, "--minsup", "0"}).code == 2);
  CHECK(cli({"mine", "--input", db}).code == 2);
  CHECK(cli({"mine", "--input", db, "--minsup", "2", "--minsup-rel", "0.5"}).code == 2);
  CHECK(cli({"mine", "--input", db, "--minsup-rel", "1.5"}).code == 2);
  CHECK(cli({"mine", "--input", db, "--minsup", "2", "--algo", "spade"}).code == 2);
  CHECK(cli({"mine", "--input", db, "--minsup", "2", "--toggle", "upip"}).code == 2);
  CHECK(cli({"mine", "--input", db, "--minsup", "2", "--toggle", "warp=on"}).code == 2);
  CHECK(cli({"mine", "--input", db, "--minsup", "2", "--query", "1 -1 -1"}).code == 2);
  CHECK(cli({"mine", "--minsup", "2"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);

  auto missing = cli({"mine", "--input", tmp.file("nope.spmf"), "--minsup", "2"});
  CHECK(missing.code == 1);
  auto unsorted = cli({"mine", "--input", bad_db, "--minsup", "1"});
  CHECK(unsorted.code == 1);
  CHECK(unsorted.err.find("line 2") != std::string::npos);
  CHECK(cli({"mine", "--input", bad_db, "--minsup", "1", "--normalize"}).code == 0);
}

TEST_CASE("gen and stats") {
  TempDir tmp;
  auto x = tmp.file("x.spmf");
  auto y = tmp.file("y.spmf");
  auto e = tmp.file("e.spmf");
  std::vector<std::string> gen{"gen", "--sequences", "200", "--alphabet", "50", "--avg-itemsets",
                               "4", "--avg-items", "2", "--patterns", "5", "--embed-prob",
                               "0.5", "--seed", "7", "--output"};
  auto gx = gen, gy = gen;
  gx.push_back(x);
  gy.push_back(y);
  CHECK(cli(gx).code == 0);
  CHECK(cli(gy).code == 0);
  CHECK(slurp(x) == slurp(y));
  CHECK_FALSE(slurp(x).empty());

  CHECK(cli({"gen", "--sequences", "0", "--output", e}).code == 0);
  CHECK(slurp(e).empty());
  CHECK(cli({"gen", "--alphabet", "0"}).code == 2);

  auto db = tmp.file("table1.spmf");
  write_database_file(fixtures::table1(), db);
  auto st = cli({"stats", "--input", db});
  CHECK(st.code == 0);
  CHECK(st.out == "|D|=4 |I|=7 avg(I)=1.79 avg(S)=6.25 min(S)=2 max(S)=4\n");
  CHECK(cli({"stats", "--input", e}).code == 1);
}

TEST_CASE("bench") {
  TempDir tmp;
  auto db = tmp.file("table1.spmf");
  write_database_file(fixtures::table1(), db);
  auto csv = tmp.file("grid.csv");
  auto r = cli({"bench", "--input", db, "--query", "1 -1 2 -1", "--minsup-list", "1,2,3,4,5,6",
                "--algos", "cmspam,taspm-v1,taspm-v2", "--csv", csv, "--repeat", "3"});
  CHECK(r.code == 0);
  std::ifstream in(csv);
  auto rows = parse_bench_csv(in);
  CHECK(rows.size() == 18);
  CHECK(intersection_order_violations(rows).empty());
  for (const auto& row : rows) {
    CHECK(row.dataset == db);
    CHECK(row.query == "1 -1 2 -1");
  }

  CHECK(cli({"bench", "--input", db, "--minsup-list", "0"}).code == 2);
  CHECK(cli({"bench", "--input", db, "--minsup-list", "x"}).code == 2);
  CHECK(cli({"bench", "--input", "gen:5..1:1", "--minsup-list", "2"}).code == 2);
  CHECK(cli({"bench", "--input", db, "--minsup-list", "2", "--repeat", "0"}).code == 2);

  auto partial = tmp.file("partial.csv");
  auto fail = cli({"bench", "--input", db, "--input", tmp.file("missing.spmf"), "--minsup-list",
                   "2", "--algos", "cmspam", "--csv", partial});
  CHECK(fail.code == 1);
  std::ifstream pin(partial);
  CHECK(parse_bench_csv(pin).size() == 1);
}

TEST_CASE("bench CSV rows parse back") {
  BenchRow row{"a,b", "taspm-v2", 3, "1 -1 \"2\" -1", 12, 34, 56, 7};
  auto line = format_bench_row(row);
  CHECK(parse_bench_row(line) == row);
  CHECK_THROWS(parse_bench_row("x,y"));
  CHECK_THROWS(parse_bench_row("d,a,notanumber,q,1,2,3,4"));
}

TEST_CASE("expand_input") {
  GenParams gp{0, 100, 4.0, 2.0, 5, 0.5, 1};
  auto grid = expand_input("gen:6000..15000:1000", gp);
  REQUIRE(grid.size() == 10);
  CHECK(grid.front().label == "gen:6000");
  CHECK(grid.back().label == "gen:15000");
  auto one = expand_input("gen:30", gp);
  REQUIRE(one.size() == 1);
  CHECK(one[0].load().size() == 30);
  CHECK(expand_input("some/file.spmf", gp)[0].label == "some/file.spmf");
}

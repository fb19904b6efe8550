#include <stdexcept>
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "starsys/cli.hpp"
#include "starsys/format.hpp"

namespace fs = std::filesystem;
using starsys::cli::run;

namespace {

struct result {
  int code;
  std::string out;
  std::string err;
};

result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(STARSYS_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "starsys_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("bound") {
  auto r = call({"bound", "9", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "L=6 blocks=12 admissible=yes\n");
  r = call({"bound", "10", "3"});
  CHECK(r.out == "L=8 blocks=15 admissible=yes\n");
  r = call({"bound", "8", "3"});
  CHECK(r.code == 3);
  CHECK(r.out == "admissible=no\n");
  CHECK(r.err.rfind("error=inadmissible", 0) == 0);
  CHECK(call({"bound", "9", "2"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"bound", "9"}).code == 2);
  CHECK(call({"bound", "nine", "3"}).code == 2);
  const auto r = call({"check", "/nonexistent/file.star"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error=io", 0) == 0);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("construct then check") {
  const auto file = scratch("c24.cstar").string();
  auto r = call({"construct", "24", "3", "-o", file});
  CHECK(r.code == 0);
  CHECK(r.out.find("classes=23") != std::string::npos);
  CHECK(r.out.find("family=even ") != std::string::npos);
  r = call({"check", file});
  CHECK(r.code == 0);
  CHECK(r.out == "status=VALID kind=colouring n=24 e=3 blocks=92 classes=23\n");

  r = call({"construct", "16", "3"});
  CHECK(r.code == 0);
  const auto c = starsys::parse_cstar(r.out);
  CHECK(c.classes.size() == 16);

  r = call({"construct", "15", "5"});
  CHECK(r.code == 3);
  CHECK(r.err.rfind("error=unsupported_class", 0) == 0);
  CHECK(call({"construct", "8", "3"}).code == 3);
}

TEST_CASE("check reports defects") {
  CHECK(call({"check", data("s3_9_twelve.star")}).code == 0);
  CHECK(call({"check", data("s3_10_eight.cstar")}).code == 0);
  const auto bad = scratch("bad.star").string();
  starsys::write_file(bad, "6 3\n1: 3 5 6\n2: 1 3 6\n4: 1 2 3\n5: 2 3 4\n6: 3 4 1\n");
  auto r = call({"check", bad});
  CHECK(r.code == 1);
  CHECK(r.out.find("status=INVALID kind=system defect=duplicate_edge") == 0);
  CHECK(r.out.find("duplicate=1-6") != std::string::npos);
  CHECK(r.out.find("missing=5-6") != std::string::npos);

  const auto badc = scratch("bad.cstar").string();
  starsys::write_file(badc, "6 3\nA | 1: 3 5 6\nA | 2: 1 3 6\nB | 4: 1 2 3\nC | 5: 2 3 4\nD | 6: 3 4 5\n");
  r = call({"check", badc});
  CHECK(r.code == 1);
  CHECK(r.out.find("defect=class_conflict class=A") != std::string::npos);

  const auto garbled = scratch("garbled.star").string();
  starsys::write_file(garbled, "6 3\n1 3 5 6\n");
  r = call({"check", garbled});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error=parse line=2", 0) == 0);
}

TEST_CASE("chi") {
  auto r = call({"chi", data("s3_9_eight.star")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("chi=8 status=exact", 0) == 0);
  CHECK(call({"chi", data("s3_9_twelve.star")}).out.rfind("chi=12 ", 0) == 0);
  CHECK(call({"chi", data("s3_10_eight.cstar")}).out.rfind("chi=8 ", 0) == 0);

  const auto witness = scratch("witness.cstar").string();
  r = call({"chi", data("s3_9_eight.star"), "--witness", witness});
  CHECK(r.code == 0);
  CHECK(call({"check", witness}).out.find("classes=8") != std::string::npos);

  const auto graph = scratch("c5.col").string();
  starsys::write_file(graph, "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  r = call({"chi", graph, "--graph"});
  CHECK(r.out.rfind("chi=3 ", 0) == 0);
}

TEST_CASE("big exports DIMACS") {
  const auto out = scratch("big.col").string();
  auto r = call({"big", data("s3_9_twelve.star"), "--dimacs", out});
  CHECK(r.code == 0);
  CHECK(r.out == "vertices=12 edges=66\n");
  CHECK(starsys::read_file(out).find("p edge 12 66") != std::string::npos);
  r = call({"big", data("s3_9_eight.star")});
  CHECK(r.out.find("p edge 12 ") != std::string::npos);
}

TEST_CASE("search writes re-parseable systems") {
  auto r = call({"search", "9", "3", "--limit", "3", "--reproducible"});
  CHECK(r.code == 0);
  const auto v = starsys::parse_star_stream(r.out);
  CHECK(v.size() == 3);
  CHECK(r.err == "systems=3 mode=enumerate complete=no\n");
  CHECK(starsys::to_star(v[0]) + "---\n" + starsys::to_star(v[1]) + "---\n" + starsys::to_star(v[2]) == r.out);

  const auto dir = scratch("systems");
  fs::remove_all(dir);
  r = call({"search", "7", "3", "--cyclic", "(1,2,3,4,5,6,7)", "-o", dir.string()});
  CHECK(r.code == 0);
  std::size_t files = 0;
  for (const auto& f : fs::directory_iterator(dir)) {
    ++files;
    CHECK(call({"check", f.path().string()}).code == 0);
  }
  CHECK(r.out == "systems=" + std::to_string(files) + " mode=cyclic complete=yes\n");

  r = call({"search", "15", "3", "--sample", "--seed", "3", "--limit", "2"});
  CHECK(starsys::parse_star_stream(r.out).size() == 2);
  CHECK(call({"search", "7", "3", "--cyclic", "(1,2"}).code == 2);
  CHECK(call({"search", "8", "3"}).code == 3);
}

TEST_CASE("census") {
  const auto input = scratch("goldens.star").string();
  starsys::write_file(input, starsys::read_file(data("s3_9_eight.star")) + "---\n" +
                                 starsys::read_file(data("s3_9_twelve.star")) + "---\n" +
                                 starsys::read_file(data("s3_9_eight.star")));
  const auto json = scratch("census.json").string();
  auto r = call({"census", "9", "3", "--input", input, "--json", json, "--reproducible"});
  CHECK(r.code == 0);
  CHECK(r.out.find("total=3 timeouts=0") != std::string::npos);
  const auto j = nlohmann::json::parse(starsys::read_file(json));
  CHECK(j["schema"] == 1);
  CHECK(j["histogram"] == nlohmann::json{{"8", 2}, {"12", 1}});
  CHECK(j["mode"] == "input");

  r = call({"census", "7", "3", "--orbits"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mode=orbits") != std::string::npos);
  CHECK(call({"census", "10", "3", "--input", input}).code == 2);
}

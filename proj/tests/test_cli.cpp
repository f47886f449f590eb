#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>

#include "upse/blocks.hpp"
#include "upse/exact_geometry.hpp"
#include "upse/io.hpp"

using namespace upse;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("upse_cli_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args, const std::string& log = "/dev/null") {
  const std::string cmd = std::string(UPSE_CLI_PATH) + " " + args + " > " + log + " 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

void put(const std::string& path, const std::string& text) { write_file(path, text); }

}  // namespace

TEST_CASE("decide exit codes") {
  TempDir d;
  put(d / "path.json", R"({"n":5,"arcs":[[0,1],[1,2],[2,3],[3,4]]})");
  put(d / "lrlrl.json", R"({"tags":"LRLRL"})");
  CHECK(run("decide " + d / "path.json" + " " + d / "lrlrl.json") == 0);

  put(d / "c4.json", R"({"n":4,"arcs":[[0,1],[2,1],[2,3],[0,3]]})");
  put(d / "llrr.json", R"({"tags":"LLRR"})");
  CHECK(run("decide " + d / "c4.json" + " " + d / "llrr.json") == 1);

  put(d / "bad.json", R"({"n":4,"arcs":[[0,1)");
  CHECK(run("decide " + d / "bad.json" + " " + d / "llrr.json") == 2);
  CHECK(run("decide " + d / "path.json" + " " + d / "llrr.json") == 2);
  CHECK(run("decide " + d / "missing.json" + " " + d / "llrr.json") == 2);
  CHECK(run("frobnicate") == 2);

  // Non-outerplanar is a NO with a reason, not an error.
  put(d / "k4.json", R"({"n":4,"arcs":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
  CHECK(run("decide " + d / "k4.json" + " " + d / "llrr.json", d / "k4.log") == 1);
  CHECK(read_file(d / "k4.log").find("not outerplanar") != std::string::npos);

  // Fixed pair.
  CHECK(run("decide " + d / "path.json" + " " + d / "lrlrl.json" + " --source 0 --sink 4") == 0);
  CHECK(run("decide " + d / "path.json" + " " + d / "lrlrl.json" + " --source 1 --sink 4") == 2);
}

TEST_CASE("concrete point sets") {
  TempDir d;
  put(d / "path.json", R"({"n":3,"arcs":[[0,1],[1,2]]})");
  put(d / "pts.json", R"({"points":[["0","0"],["-1","1.5"],["0.25","3"]]})");
  CHECK(run("decide " + d / "path.json" + " " + d / "pts.json") == 0);
  put(d / "inside.json", R"({"points":[["0","0"],["-2","1"],["2","1"],["0","0.5"]]})");
  put(d / "p4.json", R"({"n":4,"arcs":[[0,1],[1,2],[2,3]]})");
  CHECK(run("decide " + d / "p4.json" + " " + d / "inside.json") == 2);
}

TEST_CASE("embed writes files that re-validate") {
  TempDir d;
  REQUIRE(run("gen --kind caterpillar --n 20 --seed 7 --graph-out " + d / "g.json" + " --points-out " +
              d / "p.json") == 0);
  REQUIRE(run("embed " + d / "g.json" + " " + d / "p.json" + " --out " + d / "e.json" + " --svg " +
              d / "o.svg") == 0);
  const Digraph g = parse_graph(read_file(d / "g.json"));
  const ConvexPointSet s = parse_points(read_file(d / "p.json"));
  const Embedding e = parse_embedding(read_file(d / "e.json"));
  CHECK(validate_upse(g, s, e).ok());
  const auto svg = read_file(d / "o.svg");
  int lines = 0;
  for (size_t at = 0; (at = svg.find("class=\"arc\"", at)) != std::string::npos; ++at) ++lines;
  CHECK(lines == 19);
  // Exact re-check on realized coordinates.
  const auto pts = realize_coordinates(s);
  const auto& arcs = g.arcs();
  for (size_t i = 0; i < arcs.size(); ++i) {
    CHECK(pts[e.map[arcs[i].tail]].y < pts[e.map[arcs[i].head]].y);
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      CHECK_FALSE(segments_cross(pts[e.map[arcs[i].tail]], pts[e.map[arcs[i].head]],
                                 pts[e.map[arcs[j].tail]], pts[e.map[arcs[j].head]]));
    }
  }
}

TEST_CASE("embed edge cases") {
  TempDir d;
  put(d / "one.json", R"({"n":1,"arcs":[]})");
  put(d / "l.json", R"({"tags":"L"})");
  REQUIRE(run("embed " + d / "one.json" + " " + d / "l.json" + " --out " + d / "e.json" + " --svg " +
              d / "o.svg") == 0);
  CHECK(parse_embedding(read_file(d / "e.json")).map == std::vector<PointId>{0});
  CHECK(read_file(d / "o.svg").find("<svg") != std::string::npos);

  put(d / "c4.json", R"({"n":4,"arcs":[[0,1],[2,1],[2,3],[0,3]]})");
  put(d / "llrr.json", R"({"tags":"LLRR"})");
  CHECK(run("embed " + d / "c4.json" + " " + d / "llrr.json" + " --out " + d / "no.json" + " --svg " +
            d / "no.svg") == 1);
  CHECK_FALSE(fs::exists(d / "no.json"));
  CHECK_FALSE(fs::exists(d / "no.svg"));
}

TEST_CASE("gen round trip") {
  TempDir d;
  REQUIRE(run("gen --kind path --n 5 --seed 0 --graph-out " + d / "g.json" + " --points-out " + d / "p.json") == 0);
  const auto gtext = read_file(d / "g.json");
  const auto ptext = read_file(d / "p.json");
  CHECK(format_graph(parse_graph(gtext)) == gtext);
  CHECK(format_points(parse_points(ptext)) == ptext);
  REQUIRE(run("gen --kind path --n 5 --seed 0 --graph-out " + d / "g2.json" + " --points-out " + d / "p2.json") == 0);
  CHECK(read_file(d / "g2.json") == gtext);
  CHECK(read_file(d / "p2.json") == ptext);

  REQUIRE(run("gen --kind outerplanar-dag --n 12 --seed 3 --graph-out " + d / "o.json" + " --points-out " +
              d / "op.json") == 0);
  const auto dec = block_decompose(parse_graph(read_file(d / "o.json")));
  CHECK(dec.outerplanar);
  CHECK(run("gen --kind blob --graph-out " + d / "x.json") == 2);
}

TEST_CASE("embedding file is 1-based") {
  const Embedding e{{2, 0, 1}};
  CHECK(format_embedding(e) == "{\"map\":[3,1,2]}\n");
  CHECK(parse_embedding(format_embedding(e)) == e);
  CHECK_THROWS_AS(parse_embedding(R"({"map":[0,1]})"), InputError);
}

TEST_CASE("oracle and bench commands") {
  TempDir d;
  CHECK(run("oracle --max-n 1 --count 0", d / "o.log") == 0);
  CHECK(read_file(d / "o.log").find("0 disagreements") != std::string::npos);
  CHECK(run("oracle --max-n 4 --count 30 --outerplanar-max-n 6 --seed 2") == 0);
  CHECK(run("oracle --max-n 40") == 2);
  REQUIRE(run("bench --sizes 1 --reps 2 --csv " + d / "b.csv") == 0);
  const auto csv = read_file(d / "b.csv");
  CHECK(csv.rfind("size,variant,median_ms\n", 0) == 0);
  CHECK(csv.find("1,optimized,") != std::string::npos);
  CHECK(run("bench --sizes 4,8 --reps 1 --variants optimized,naive-dp", d / "b.log") == 0);
  CHECK(read_file(d / "b.log").find("slope naive-dp") != std::string::npos);
}

#include <doctest.h>

#include <filesystem>
#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "corpus.hpp"
#include "mce/synth.hpp"
#include "mce/vertex_engine.hpp"

using namespace mce;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("mce_cli_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string write_graph(const std::string& name, const Graph& g) {
  std::ostringstream text;
  write_edge_list(g, text);
  return write_file(name, text.str());
}

std::map<std::string, std::string> parse_report(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto eq = line.find('=');
    if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

}  // namespace

TEST_CASE("enum: counts, lists and digests") {
  const auto tri = write_file("tri.txt", "0 1\n1 2\n0 2\n");
  auto r = run({"enum", "--input", tri, "--algorithm", "hbbmc", "--output", "count"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");

  const auto p3 = write_file("p3.txt", "0 1\n1 2\n");
  r = run({"enum", "--input", p3, "--output", "list", "--sorted"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 1\n1 2\n");

  const auto mm9 = write_graph("mm9.txt", corpus::moon_moser(9));
  std::string digest;
  for (const char* alg : {"vbbmc", "ebbmc", "hbbmc", "oracle"}) {
    CAPTURE(alg);
    r = run({"enum", "--input", mm9, "--algorithm", alg});
    CHECK(r.code == 0);
    CHECK(r.out == "27\n");
    r = run({"enum", "--input", mm9, "--algorithm", alg, "--output", "digest"});
    CHECK(r.out.size() == 17);
    if (digest.empty()) digest = r.out;
    CHECK(r.out == digest);
  }
}

TEST_CASE("enum: list output uses original ids") {
  const auto path = write_file("sparse.txt", "10 20\n20 30\n");
  auto r = run({"enum", "--input", path, "--output", "list", "--sorted"});
  CHECK(r.out == "10 20\n20 30\n");
}

TEST_CASE("enum: report keys and counter ordering") {
  const auto g = write_graph("dense.txt", corpus::er_p(40, 0.7, 4));
  const auto report = (scratch_dir() / "report.txt").string();
  auto r = run({"enum", "--input", g, "--output", "list", "--report", report});
  REQUIRE(r.code == 0);
  std::ifstream in(report);
  std::stringstream text;
  text << in.rdbuf();
  auto kv = parse_report(text.str());
  for (const char* key : {"algorithm", "et", "clique_count", "clique_digest", "recursive_calls",
                          "et_eligible_branches", "et_fired_branches", "elapsed_ms", "ordering_ms"}) {
    CHECK(kv.count(key) == 1);
  }
  CHECK(kv["algorithm"] == "hbbmc");
  CHECK(kv["et"] == "3");
  const auto count = std::stoull(kv["clique_count"]);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == count);
  const auto fired = std::stoull(kv["et_fired_branches"]);
  const auto eligible = std::stoull(kv["et_eligible_branches"]);
  const auto calls = std::stoull(kv["recursive_calls"]);
  CHECK(fired <= eligible);
  CHECK(eligible <= calls);
  CHECK(fired > 0);

  // Without --report the report goes to the error stream.
  r = run({"enum", "--input", g, "--output", "digest"});
  CHECK(parse_report(r.err)["clique_digest"] + "\n" == r.out);
}

TEST_CASE("enum: digest ignores edge-list line order") {
  const auto g = corpus::er_p(30, 0.4, 8);
  std::ostringstream text;
  write_edge_list(g, text);
  std::vector<std::string> lines;
  std::istringstream in(text.str());
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  std::shuffle(lines.begin(), lines.end(), std::mt19937(1));
  std::string shuffled = "# shuffled\n";
  for (const auto& l : lines) shuffled += l + "\n";
  const auto a = write_graph("ordered.txt", g);
  const auto b = write_file("shuffled.txt", shuffled);
  auto ra = run({"enum", "--input", a, "--output", "digest"});
  auto rb = run({"enum", "--input", b, "--output", "digest"});
  CHECK(ra.out == rb.out);
}

TEST_CASE("enum: usage errors") {
  const auto tri = write_file("tri2.txt", "0 1\n1 2\n0 2\n");
  CHECK(run({"enum", "--input", tri, "--algorithm", "nope"}).code == 1);
  CHECK(run({"enum", "--input", tri, "--et", "4"}).code == 1);
  CHECK(run({"enum", "--input", tri, "--output", "xml"}).code == 1);
  CHECK(run({"enum", "--input", tri, "--bogus"}).code == 1);
  CHECK(run({"enum", "--input", tri, "--sorted"}).code == 1);
  CHECK(run({"enum", "--input", tri, "--algorithm", "oracle", "--et", "2"}).code == 1);
  CHECK(run({"enum", "--input", (scratch_dir() / "missing.txt").string()}).code == 1);
  CHECK(run({"enum", "--input", write_file("bad.txt", "0 1\nfoo bar\n")}).code == 1);
  CHECK(run({"enum"}).code == 1);
  CHECK(run({}).code == 1);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("enum") != std::string::npos);
}

TEST_CASE("stats output") {
  auto r = run({"stats", "--input", write_graph("k5.txt", corpus::complete(5))});
  CHECK(r.code == 0);
  CHECK(r.out == "n=5\nm=10\ndelta=4\ntau=3\nrho=2.0000\ncondition=false\n");
  r = run({"stats", "--input", write_graph("k33.txt", corpus::complete_bipartite(3, 3))});
  auto kv = parse_report(r.out);
  CHECK(kv["delta"] == "3");
  CHECK(kv["tau"] == "0");
  r = run({"stats", "--input", write_graph("c5.txt", corpus::cycle(5))});
  kv = parse_report(r.out);
  CHECK(kv["delta"] == "2");
  CHECK(kv["tau"] == "0");
  CHECK(kv["condition"] == "false");
  CHECK(run({"stats", "--input", (scratch_dir() / "nothing.txt").string()}).code == 1);
}

TEST_CASE("gen writes the canonical edge list") {
  auto r = run({"gen", "--spec", "er:n=10,rho=2,seed=7"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  auto loaded = load_edge_list(in);
  CHECK(loaded.graph == synth::gen_er({synth::Model::er, 10, 2.0, 7}));

  const auto out = (scratch_dir() / "ba.txt").string();
  r = run({"gen", "--spec", "ba:n=100,rho=3,seed=1", "--out", out});
  CHECK(r.code == 0);
  CHECK(load_edge_list_file(out).graph.edge_count() == 294);
  CHECK(run({"gen", "--spec", "er:n=4,rho=9"}).code == 1);
  CHECK(run({"gen", "--spec", "zz"}).code == 1);
}

TEST_CASE("bench agrees across engines") {
  auto r = run({"bench", "--gen", "er:n=1000,rho=5,seed=3", "--algorithms", "vbbmc,hbbmc"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, '\t');) cells.push_back(cell);
    rows.push_back(cells);
  }
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"graph", "algorithm", "et", "median_ms", "cliques", "calls", "digest"});
  CHECK(rows[1][1] == "vbbmc");
  CHECK(rows[2][1] == "hbbmc");
  CHECK(rows[1][4] == rows[2][4]);
  CHECK(rows[1][6] == rows[2][6]);

  const auto file = write_graph("bench.txt", corpus::petersen());
  r = run({"bench", "--input", file, "--algorithms", "vbbmc,ebbmc,hbbmc,oracle", "--et", "0,1,2,3", "--repeats",
           "3"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 3 * 4 + 1);
}

TEST_CASE("bench flags a faulty engine") {
  cli::engine_registry()["faulty"] = [](const Graph& g, CliqueSink& sink, const EngineOptions& o) {
    auto stats = vbbmc_enumerate(g, sink, o);
    const VertexId extra[1] = {0};
    sink.emit(extra);
    return stats;
  };
  const auto file = write_graph("fault.txt", corpus::petersen());
  auto r = run({"bench", "--input", file, "--algorithms", "vbbmc,faulty"});
  CHECK(r.code == 2);
  CHECK(r.err.find("faulty") != std::string::npos);
  cli::engine_registry().erase("faulty");
  CHECK(run({"bench", "--input", file, "--algorithms", "faulty"}).code == 1);
  CHECK(run({"bench", "--algorithms", "vbbmc"}).code == 1);
  CHECK(run({"bench", "--input", file, "--repeats", "0"}).code == 1);
}

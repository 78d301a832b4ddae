#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mce/clique_sink.hpp"
#include "mce/engine.hpp"
#include "mce/graph.hpp"

namespace mce::cli {

using EngineFn = std::function<RunStats(const Graph&, CliqueSink&, const EngineOptions&)>;

/// Engines selectable by name. Tests may register extra entries.
std::map<std::string, EngineFn>& engine_registry();

struct EnumArgs {
  std::string input;
  std::string algorithm = "hbbmc";
  std::optional<int> et;  // default 3
  std::string output = "count";
  bool sorted = false;
  std::string report;     // empty: report goes to err
};

struct StatsArgs {
  std::string input;
};

struct GenArgs {
  std::string spec;
  std::string out;        // empty: write to out stream
};

struct BenchArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> gens;
  std::vector<std::string> algorithms{"vbbmc", "ebbmc", "hbbmc"};
  std::vector<int> et{3};
  int repeats = 1;
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kMismatch = 2;

int cmd_enum(const EnumArgs& args, std::ostream& out, std::ostream& err);
int cmd_stats(const StatsArgs& args, std::ostream& out, std::ostream& err);
int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv (without the program name) and dispatches.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

std::string hex64(std::uint64_t value);

}  // namespace mce::cli

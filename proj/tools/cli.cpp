#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mce/edge_engine.hpp"
#include "mce/hybrid_engine.hpp"
#include "mce/oracle.hpp"
#include "mce/orderings.hpp"
#include "mce/synth.hpp"
#include "mce/vertex_engine.hpp"

namespace mce::cli {

namespace {

RunStats run_oracle(const Graph& g, CliqueSink& sink, const EngineOptions&) {
  RunStats stats;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : oracle::reference_bk(g)) sink.emit(c);
  stats.enumeration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return stats;
}

struct Timed {
  RunStats stats;
  double elapsed_ms = 0.0;
};

Timed run_engine(const EngineFn& engine, const Graph& g, CliqueSink& sink, int et) {
  EngineOptions options;
  options.et_threshold = et;
  const auto start = std::chrono::steady_clock::now();
  Timed result;
  result.stats = engine(g, sink, options);
  result.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

const EngineFn* find_engine(const std::string& name, std::ostream& err) {
  auto& registry = engine_registry();
  auto it = registry.find(name);
  if (it == registry.end()) {
    err << "error: unknown algorithm '" << name << "'\n";
    return nullptr;
  }
  return &it->second;
}

}  // namespace

std::map<std::string, EngineFn>& engine_registry() {
  static std::map<std::string, EngineFn> registry{
      {"vbbmc", [](const Graph& g, CliqueSink& s, const EngineOptions& o) { return vbbmc_enumerate(g, s, o); }},
      {"ebbmc", [](const Graph& g, CliqueSink& s, const EngineOptions& o) { return ebbmc_enumerate(g, s, o); }},
      {"hbbmc", [](const Graph& g, CliqueSink& s, const EngineOptions& o) { return hbbmc_enumerate(g, s, o); }},
      {"oracle", run_oracle},
  };
  return registry;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

int cmd_enum(const EnumArgs& args, std::ostream& out, std::ostream& err) {
  const EngineFn* engine = find_engine(args.algorithm, err);
  if (engine == nullptr) return kUsage;
  if (args.algorithm == "oracle" && args.et) {
    err << "error: --et does not apply to the oracle\n";
    return kUsage;
  }
  const int et = args.et.value_or(3);
  if (et < 0 || et > 3) {
    err << "error: --et must be in 0..3\n";
    return kUsage;
  }
  SinkMode mode;
  if (args.output == "count") {
    mode = SinkMode::count;
  } else if (args.output == "list") {
    mode = SinkMode::list;
  } else if (args.output == "digest") {
    mode = SinkMode::digest;
  } else {
    err << "error: --output must be count, list or digest\n";
    return kUsage;
  }
  if (args.sorted && mode != SinkMode::list) {
    err << "error: --sorted requires --output list\n";
    return kUsage;
  }

  LoadedGraph loaded;
  try {
    loaded = load_edge_list_file(args.input);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  CliqueSink sink(mode);
  const Timed run = run_engine(*engine, loaded.graph, sink, args.algorithm == "oracle" ? 0 : et);

  if (mode == SinkMode::count) {
    out << sink.count() << "\n";
  } else if (mode == SinkMode::digest) {
    out << hex64(sink.digest()) << "\n";
  } else {
    std::vector<std::vector<std::uint64_t>> lines;
    lines.reserve(sink.cliques().size());
    for (const auto& c : sink.cliques()) {
      std::vector<std::uint64_t> ids;
      for (VertexId v : c) ids.push_back(loaded.original_ids[v]);
      lines.push_back(std::move(ids));
    }
    if (args.sorted) std::sort(lines.begin(), lines.end());
    for (const auto& ids : lines) {
      for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
      out << "\n";
    }
  }

  std::ofstream report_file;
  std::ostream* report = &err;
  if (!args.report.empty()) {
    report_file.open(args.report);
    if (!report_file) {
      err << "error: cannot write report '" << args.report << "'\n";
      return kUsage;
    }
    report = &report_file;
  }
  *report << "algorithm=" << args.algorithm << "\n"
          << "et=" << (args.algorithm == "oracle" ? 0 : et) << "\n"
          << "clique_count=" << sink.count() << "\n"
          << "clique_digest=" << hex64(sink.digest()) << "\n"
          << "recursive_calls=" << run.stats.recursive_calls << "\n"
          << "et_eligible_branches=" << run.stats.et_eligible_branches << "\n"
          << "et_fired_branches=" << run.stats.et_fired_branches << "\n"
          << std::fixed << std::setprecision(3) << "elapsed_ms=" << run.elapsed_ms << "\n"
          << "ordering_ms=" << run.stats.ordering_ms << "\n";
  return kOk;
}

int cmd_stats(const StatsArgs& args, std::ostream& out, std::ostream& err) {
  LoadedGraph loaded;
  try {
    loaded = load_edge_list_file(args.input);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const auto s = compute_stats(loaded.graph);
  out << "n=" << s.n << "\n"
      << "m=" << s.m << "\n"
      << "delta=" << s.delta << "\n"
      << "tau=" << s.tau << "\n"
      << "rho=" << std::fixed << std::setprecision(4) << s.rho << "\n"
      << "condition=" << (s.condition ? "true" : "false") << "\n";
  return kOk;
}

int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = synth::generate(synth::parse_gen_spec(args.spec));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (args.out.empty()) {
    write_edge_list(g, out);
    return kOk;
  }
  std::ofstream file(args.out);
  if (!file) {
    err << "error: cannot write '" << args.out << "'\n";
    return kUsage;
  }
  write_edge_list(g, file);
  return kOk;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  if (args.inputs.empty() && args.gens.empty()) {
    err << "error: bench needs --input or --gen\n";
    return kUsage;
  }
  if (args.repeats < 1) {
    err << "error: --repeats must be positive\n";
    return kUsage;
  }
  for (int et : args.et) {
    if (et < 0 || et > 3) {
      err << "error: --et values must be in 0..3\n";
      return kUsage;
    }
  }
  std::vector<const EngineFn*> engines;
  for (const auto& name : args.algorithms) {
    const EngineFn* engine = find_engine(name, err);
    if (engine == nullptr) return kUsage;
    engines.push_back(engine);
  }

  std::vector<std::pair<std::string, Graph>> graphs;
  try {
    for (const auto& path : args.inputs) graphs.emplace_back(path, load_edge_list_file(path).graph);
    for (const auto& spec : args.gens) graphs.emplace_back(spec, synth::generate(synth::parse_gen_spec(spec)));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  int status = kOk;
  out << "graph\talgorithm\tet\tmedian_ms\tcliques\tcalls\tdigest\n";
  for (const auto& [label, g] : graphs) {
    std::optional<std::pair<std::string, std::uint64_t>> reference;
    for (std::size_t a = 0; a < engines.size(); ++a) {
      const auto& name = args.algorithms[a];
      const std::vector<int> ets = name == "oracle" ? std::vector<int>{0} : args.et;
      for (int et : ets) {
        std::vector<double> times;
        CliqueSink sink(SinkMode::digest);
        Timed run;
        for (int r = 0; r < args.repeats; ++r) {
          sink = CliqueSink(SinkMode::digest);
          run = run_engine(*engines[a], g, sink, et);
          times.push_back(run.elapsed_ms);
        }
        std::sort(times.begin(), times.end());
        const std::size_t mid = times.size() / 2;
        const double median = times.size() % 2 ? times[mid] : (times[mid - 1] + times[mid]) / 2;
        out << label << "\t" << name << "\t" << et << "\t" << std::fixed << std::setprecision(3) << median << "\t"
            << sink.count() << "\t" << run.stats.recursive_calls << "\t" << hex64(sink.digest()) << "\n";

        const std::string cell = name + " et=" + std::to_string(et);
        if (!reference) {
          reference.emplace(cell, sink.digest());
        } else if (reference->second != sink.digest()) {
          err << "digest mismatch on " << label << ": " << reference->first << " vs " << cell << "\n";
          status = kMismatch;
        }
      }
    }
  }
  return status;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal clique enumeration toolkit"};
  app.require_subcommand(1);

  EnumArgs enum_args;
  auto* en = app.add_subcommand("enum", "Enumerate maximal cliques");
  en->add_option("--input", enum_args.input, "Edge list file")->required();
  en->add_option("--algorithm", enum_args.algorithm, "vbbmc, ebbmc, hbbmc or oracle")
      ->check(CLI::IsMember({"vbbmc", "ebbmc", "hbbmc", "oracle"}));
  en->add_option("--et", enum_args.et, "Early termination threshold 0..3 (default 3)")->check(CLI::Range(0, 3));
  en->add_option("--output", enum_args.output, "count, list or digest")
      ->check(CLI::IsMember({"count", "list", "digest"}));
  en->add_flag("--sorted", enum_args.sorted, "Sort list output");
  en->add_option("--report", enum_args.report, "Write the run report here instead of stderr");

  StatsArgs stats_args;
  auto* st = app.add_subcommand("stats", "Print n, m, delta, tau, rho and the hybrid condition");
  st->add_option("--input", stats_args.input, "Edge list file")->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic graph");
  gen->add_option("--spec", gen_args.spec, "e.g. er:n=1000,rho=5,seed=3 or ba:n=1000,rho=5")->required();
  gen->add_option("--out", gen_args.out, "Output file (default stdout)");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time engines and cross-check digests");
  bench->add_option("--input", bench_args.inputs, "Edge list file (repeatable)");
  bench->add_option("--gen", bench_args.gens, "Generator spec (repeatable)");
  bench->add_option("--algorithms", bench_args.algorithms, "Comma-separated engines")->delimiter(',');
  bench->add_option("--et", bench_args.et, "Comma-separated thresholds")->delimiter(',');
  bench->add_option("--repeats", bench_args.repeats, "Runs per cell; the median is reported");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (en->parsed()) return cmd_enum(enum_args, out, err);
  if (st->parsed()) return cmd_stats(stats_args, out, err);
  if (gen->parsed()) return cmd_gen(gen_args, out, err);
  return cmd_bench(bench_args, out, err);
}

}  // namespace mce::cli

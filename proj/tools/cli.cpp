#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "overlap/bench.hpp"
#include "overlap/generate.hpp"
#include "overlap/oracle.hpp"
#include "overlap/pipeline.hpp"
#include "overlap/verify.hpp"

namespace overlap::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string set_name(SetId x) {
  return x == kNoSet ? "none" : "X" + std::to_string(x + 1);
}

SetFamily load(const std::string& path) {
  if (path == "-") return parse_family(std::cin);
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return parse_family(in);
}

std::size_t oracle_cap() {
  const char* env = std::getenv("OVERLAP_ORACLE_CAP");
  if (env == nullptr || *env == '\0') return oracle::kDefaultCap;
  std::size_t pos = 0;
  unsigned long long cap = 0;
  try {
    cap = std::stoull(env, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || env[pos] != '\0')
    throw std::invalid_argument(std::string("OVERLAP_ORACLE_CAP is not a number: ") + env);
  return static_cast<std::size_t>(cap);
}

Json edges_json(std::span<const Edge> edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.a + 1, e.b + 1});
  return out;
}

/// {"classes": ..., "max": ..., "edges": ...} with 1-based set indices.
Json result_json(const PipelineResult& r, std::span<const Edge> edges) {
  Json j;
  j["classes"] = Json::array();
  for (const auto& members : r.classes.members) {
    Json cls = Json::array();
    for (SetId x : members) cls.push_back(x + 1);
    j["classes"].push_back(std::move(cls));
  }
  j["max"] = Json::array();
  for (SetId y : r.maxc.max) {
    if (y == kNoSet)
      j["max"].push_back(nullptr);
    else
      j["max"].push_back(y + 1);
  }
  j["edges"] = edges_json(edges);
  return j;
}

enum class Format { kText, kJson, kDot };

struct AnalysisOptions {
  std::string path;
  bool json = false;
  bool dot = false;
  Format format() const { return json ? Format::kJson : dot ? Format::kDot : Format::kText; }
};

void emit_classes(const SetFamily& f, const PipelineResult& r, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::kJson:
      out << result_json(r, r.dgraph.edges).dump() << '\n';
      break;
    case Format::kDot:
      write_dot(out, f, r.dgraph.edges, "dahlhaus");
      break;
    case Format::kText:
      for (SetId x = 0; x < f.set_count(); ++x)
        out << set_name(x) << ' ' << r.classes.class_of[x] << '\n';
      break;
  }
}

void emit_max(const SetFamily& f, const PipelineResult& r, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::kJson:
      out << result_json(r, r.dgraph.edges).dump() << '\n';
      break;
    case Format::kDot:
      out << "digraph \"max\" {\n";
      for (SetId x = 0; x < f.set_count(); ++x) out << "  " << set_name(x) << ";\n";
      for (SetId x = 0; x < f.set_count(); ++x)
        if (r.maxc.max[x] != kNoSet)
          out << "  " << set_name(x) << " -> " << set_name(r.maxc.max[x]) << ";\n";
      out << "}\n";
      break;
    case Format::kText:
      for (SetId x = 0; x < f.set_count(); ++x)
        out << set_name(x) << " -> " << set_name(r.maxc.max[x]) << '\n';
      break;
  }
}

void emit_subgraph(const SetFamily& f, const PipelineResult& r, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::kJson:
      out << result_json(r, r.subgraph.edges).dump() << '\n';
      break;
    case Format::kDot:
      write_dot(out, f, r.subgraph.edges, "overlap_subgraph");
      break;
    case Format::kText:
      for (const Edge& e : r.subgraph.edges)
        out << set_name(e.a) << " -- " << set_name(e.b) << '\n';
      break;
  }
}

void emit_forest(const SetFamily& f, const PipelineResult& r, Format fmt, std::ostream& out) {
  std::vector<Edge> all;
  for (const auto& tree : r.forest.tree_edges) all.insert(all.end(), tree.begin(), tree.end());
  std::sort(all.begin(), all.end());
  switch (fmt) {
    case Format::kJson:
      out << result_json(r, all).dump() << '\n';
      break;
    case Format::kDot:
      write_dot(out, f, all, "spanning_forest");
      break;
    case Format::kText:
      for (std::size_t c = 0; c < r.forest.classes.class_count(); ++c) {
        out << "tree " << c << " root " << set_name(r.forest.roots[c]) << " size "
            << r.forest.classes.members[c].size() << '\n';
        for (const Edge& e : r.forest.tree_edges[c])
          out << "  " << set_name(e.a) << " -- " << set_name(e.b) << '\n';
      }
      break;
  }
}

int cmd_verify(const std::string& path, std::ostream& out) {
  const SetFamily f = load(path);
  const VerifyReport rep = verify_family(f, oracle_cap());
  for (const auto& c : rep.checks) {
    out << (c.ok ? "PASS " : "FAIL ") << c.name;
    if (!c.ok) out << ": " << c.detail;
    out << '\n';
  }
  if (rep.passed()) {
    out << "verify: ok (m=" << f.set_count() << ", |F|=" << f.total_size() << ")\n";
    return kOk;
  }
  if (rep.counterexample) {
    out << "minimized counterexample (" << rep.counterexample->set_count() << " sets):\n"
        << format_family(*rep.counterexample);
  }
  return kVerifyMismatch;
}

struct GenOptions {
  std::string kind;
  std::size_t n = 20;
  std::size_t m = 10;
  std::size_t k = 5;
  std::size_t min_size = 1;
  std::size_t max_size = 5;
  std::size_t blocks = 3;
  std::string output;
};

int cmd_gen(const GenOptions& o, std::uint64_t seed, std::ostream& out) {
  SetFamily f;
  if (o.kind == "star")
    f = gen::star(o.m);
  else if (o.kind == "nested")
    f = gen::nested(o.k);
  else if (o.kind == "random")
    f = gen::random(o.n, o.m, o.min_size, o.max_size, seed);
  else if (o.kind == "blocks")
    f = gen::blocks(o.blocks, o.k, seed);
  else
    throw std::invalid_argument("unknown generator kind: " + o.kind);

  const std::string text = format_family(f);
  if (o.output.empty() || o.output == "-") {
    out << text;
  } else {
    std::ofstream file(o.output);
    if (!file) throw std::ios_base::failure("cannot write " + o.output);
    file << text;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Overlap classes of a set family in linear time", "overlap"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  AnalysisOptions analysis;
  const std::pair<const char*, const char*> analyses[] = {
      {"classes", "Overlap class id of every set"},
      {"max", "Max(X) of every set"},
      {"subgraph", "Linear-size subgraph of the overlap graph"},
      {"forest", "Spanning forest of the overlap classes"},
  };
  std::vector<CLI::App*> analysis_cmds;
  for (auto [name, desc] : analyses) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("file", analysis.path, "Family file, - for stdin")->required();
    auto* json = sub->add_flag("--json", analysis.json, "JSON output");
    sub->add_flag("--dot", analysis.dot, "Graphviz output")->excludes(json);
    sub->add_option("--seed", seed, "Ignored; accepted for uniformity");
    analysis_cmds.push_back(sub);
  }

  std::string verify_path;
  CLI::App* verify = app.add_subcommand("verify", "Check the fast pipeline against the brute-force oracle");
  verify->add_option("file", verify_path, "Family file, - for stdin")->required();

  GenOptions gen_opts;
  CLI::App* gen = app.add_subcommand("gen", "Generate a family");
  gen->add_option("kind", gen_opts.kind, "star | nested | random | blocks")->required();
  gen->add_option("--n", gen_opts.n, "Universe size (random)");
  gen->add_option("--m", gen_opts.m, "Set count (star, random)");
  gen->add_option("--k", gen_opts.k, "Chain length (nested) or block width (blocks)");
  gen->add_option("--min-size", gen_opts.min_size, "Smallest set (random)");
  gen->add_option("--max-size", gen_opts.max_size, "Largest set (random)");
  gen->add_option("--blocks", gen_opts.blocks, "Number of blocks (blocks)");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("-o,--output", gen_opts.output, "Output file (default stdout)");

  std::vector<std::size_t> sizes = default_bench_sizes();
  std::size_t repeat = 3;
  CLI::App* bench = app.add_subcommand("bench", "Time the pipeline on doubling |F|, CSV output");
  bench->add_option("--sizes", sizes, "Target |F| values")->delimiter(',');
  bench->add_option("--seed", seed, "Random seed");
  bench->add_option("--repeat", repeat, "Runs per size, fastest kept");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    for (std::size_t i = 0; i < analysis_cmds.size(); ++i) {
      if (!analysis_cmds[i]->parsed()) continue;
      const SetFamily f = load(analysis.path);
      const PipelineResult r = run_pipeline(f);
      const Format fmt = analysis.format();
      switch (i) {
        case 0: emit_classes(f, r, fmt, out); break;
        case 1: emit_max(f, r, fmt, out); break;
        case 2: emit_subgraph(f, r, fmt, out); break;
        default: emit_forest(f, r, fmt, out); break;
      }
      return kOk;
    }
    if (verify->parsed()) return cmd_verify(verify_path, out);
    if (gen->parsed()) return cmd_gen(gen_opts, seed, out);
    if (bench->parsed()) {
      write_bench_csv(out, run_bench(sizes, seed, repeat));
      return kOk;
    }
  } catch (const oracle::CapExceeded& e) {
    err << "overlap: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ParseError& e) {
    err << "overlap: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "overlap: " << e.what() << '\n';
    return kInputError;
  } catch (const std::ios_base::failure& e) {
    err << "overlap: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace overlap::cli

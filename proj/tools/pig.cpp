#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pig/pig.h"

namespace {

enum Exit { ok = 0, failure = 1, input = 2, incomplete = 3 };

int exit_for(pig_status s) {
  switch (s) {
    case PIG_OK: return ok;
    case PIG_ERR_ARGUMENT:
    case PIG_ERR_PARSE:
    case PIG_ERR_IO: return input;
    case PIG_ERR_INCOMPLETE: return incomplete;
    default: return failure;
  }
}

struct GraphDeleter {
  void operator()(pig_graph* g) const { pig_graph_free(g); }
};
using Graph = std::unique_ptr<pig_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { pig_string_free(s); }
};
using Owned = std::unique_ptr<char, StringDeleter>;

struct Failed {
  int code;
};

void check(pig_status s) {
  if (s == PIG_OK) return;
  std::cerr << "pig: " << pig_status_name(s) << ": " << pig_last_error() << "\n";
  throw Failed{exit_for(s)};
}

Graph load(const std::string& path) {
  pig_graph* g = nullptr;
  check(pig_graph_load(path.c_str(), &g));
  return Graph(g);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "pig: cannot open " << path << "\n";
    throw Failed{input};
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const char* text) {
  std::ofstream out(path);
  out << text;
  if (!out) {
    std::cerr << "pig: cannot write " << path << "\n";
    throw Failed{input};
  }
}

// Writes the offending graph of an incompleteness diagnostic before failing.
void check_archiving(pig_status s, const std::string& archive) {
  if (s == PIG_ERR_INCOMPLETE && pig_last_diagnostic_graph() && !archive.empty()) {
    std::string msg = pig_last_error();
    write_file(archive, pig_last_diagnostic_graph());
    std::cerr << "pig: offending graph written to " << archive << "\n";
    std::cerr << "pig: " << pig_status_name(s) << ": " << msg << "\n";
    throw Failed{incomplete};
  }
  check(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified independent sets in planar graphs"};
  app.require_subcommand(1);

  std::string file, cert_file, json_out, ratio = "3/13", rules, out_file, archive = "pig-diagnostic.rot";
  bool verify = false, step = false, delta5 = false, no_septri = false;
  int n = 0, count = 0, threads = 0;
  std::uint64_t seed = 1;

  auto* ex = app.add_subcommand("extract", "Extract a certified independent set");
  ex->add_option("FILE", file, "Rotation-system graph file")->required();
  ex->add_option("--ratio", ratio, "Target ratio a/b")->capture_default_str();
  ex->add_option("--json", json_out, "Write the certificate here");
  ex->add_flag("--verify", verify, "Replay the certificate before exiting");
  ex->add_option("--archive", archive, "Where to write the graph of an incompleteness diagnostic")
      ->capture_default_str();

  auto* cc = app.add_subcommand("check-cert", "Replay a certificate against a graph");
  cc->add_option("FILE", file)->required();
  cc->add_option("CERT", cert_file)->required();

  auto* dis = app.add_subcommand("discharge", "Run a discharging rule set");
  dis->add_option("FILE", file)->required();
  dis->add_option("--rules", rules)->required()->check(CLI::IsMember({"warmup", "main"}));
  dis->add_flag("--json", "Emit JSON (the only format)");

  auto* cfg = app.add_subcommand("config", "List reducible configuration matches");
  cfg->add_option("FILE", file)->required();

  auto* red = app.add_subcommand("reduce", "Show the next certified extraction step");
  red->add_option("FILE", file)->required();
  red->add_flag("--step", step, "Emit one step as JSON")->required();
  red->add_option("--ratio", ratio)->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Generate a random planar triangulation");
  gen->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed)->required();
  gen->add_flag("--delta5", delta5, "Minimum degree 5");
  gen->add_flag("--no-septri", no_septri, "No separating triangles");
  gen->add_option("-o", out_file, "Output file")->required();

  auto* al = app.add_subcommand("alpha", "Exact independence number");
  al->add_option("FILE", file)->required();

  auto* cor = app.add_subcommand("corpus", "Extract over generated graphs");
  cor->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  cor->add_option("--count", count)->required()->check(CLI::NonNegativeNumber);
  cor->add_option("--ratio", ratio)->capture_default_str();
  cor->add_option("--seed", seed, "First seed")->capture_default_str();
  cor->add_flag("--delta5", delta5);
  cor->add_flag("--no-septri", no_septri);
  cor->add_option("--threads", threads, "Workers, 0 for one per core")->capture_default_str();
  cor->add_option("-o", out_file, "Write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : input;
  }

  try {
    if (*ex) {
      Graph g = load(file);
      char* raw = nullptr;
      pig_extract_info info{};
      check_archiving(pig_extract(g.get(), ratio.c_str(), 0, &raw, &info), archive);
      Owned cert(raw);
      if (!json_out.empty()) write_file(json_out, cert.get());
      std::cout << "n " << info.n << " bound " << info.bound << " size " << info.size << " steps " << info.steps
                << "\n";
      if (info.size < info.bound) return failure;
      if (verify) {
        int good = 0, failed_step = -1;
        char* msg = nullptr;
        check(pig_check_certificate(g.get(), cert.get(), 0, &good, &failed_step, &msg));
        Owned m(msg);
        std::cout << "verify " << (good ? "ok" : "FAILED") << ": " << m.get() << "\n";
        if (!good) return failure;
      }
      return ok;
    }
    if (*cc) {
      Graph g = load(file);
      std::string text = slurp(cert_file);
      int good = 0, failed_step = -1;
      char* msg = nullptr;
      check(pig_check_certificate(g.get(), text.c_str(), 0, &good, &failed_step, &msg));
      Owned m(msg);
      std::cout << (good ? "ok" : "FAILED") << ": " << m.get() << "\n";
      return good ? ok : failure;
    }
    if (*dis) {
      Graph g = load(file);
      char* raw = nullptr;
      check(pig_discharge(g.get(), rules.c_str(), &raw));
      std::cout << Owned(raw).get();
      return ok;
    }
    if (*cfg) {
      Graph g = load(file);
      char* raw = nullptr;
      check(pig_configs(g.get(), &raw));
      std::cout << Owned(raw).get();
      return ok;
    }
    if (*red) {
      Graph g = load(file);
      char* raw = nullptr;
      check_archiving(pig_reduce_step(g.get(), ratio.c_str(), 0, &raw), archive);
      std::cout << Owned(raw).get();
      return ok;
    }
    if (*gen) {
      pig_graph* raw_g = nullptr;
      check(pig_graph_generate(seed, n, delta5, no_septri, &raw_g));
      Graph g(raw_g);
      char* raw = nullptr;
      check(pig_graph_serialize(g.get(), &raw));
      write_file(out_file, Owned(raw).get());
      std::cout << "n " << pig_graph_vertex_count(g.get()) << " m " << pig_graph_edge_count(g.get()) << "\n";
      return ok;
    }
    if (*al) {
      Graph g = load(file);
      int a = 0;
      char* raw = nullptr;
      check(pig_alpha(g.get(), 0, &a, &raw));
      std::cout << "alpha " << a << " set " << Owned(raw).get() << "\n";
      return ok;
    }
    if (*cor) {
      char* raw = nullptr;
      pig_corpus_info info{};
      check(pig_corpus(n, count, seed, delta5, no_septri, ratio.c_str(), 0, threads, &raw, &info));
      Owned report(raw);
      if (out_file.empty()) std::cout << report.get();
      else write_file(out_file, report.get());
      std::cerr << "corpus: " << info.successes << "/" << info.count << " verified, " << info.diagnostics
                << " diagnostics\n";
      if (info.diagnostics > 0) return incomplete;
      return info.successes == info.count ? ok : failure;
    }
  } catch (const Failed& f) {
    return f.code;
  }
  return input;
}

// cgtool: inspect colored graphs and run the verification suites.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cgraph/census.hpp"
#include "cgraph/embedding.hpp"
#include "cgraph/graph_io.hpp"
#include "cgraph/harness.hpp"
#include "cgraph/moves.hpp"
#include "cgraph/search.hpp"

namespace fs = std::filesystem;
using namespace cgraph;

namespace {

constexpr const char* kGrammar =
    "usage: cgtool (validate|census|embed|bubbles|flip|contract|reduce|"
    "maxpair|maxglue|check2cut|verify <suite>|run-all) [files...] "
    "[--budget N] [--jobs N] [--emit-graphs DIR]\n";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  int budget = kDefaultVertexBudget;
  int jobs = 1;
  int moves = 0;
  std::uint64_t seed = 1;
  std::optional<fs::path> emit_dir;
};

void emit(const Globals& g, const std::string& stem, const ColoredGraph& graph) {
  if (!g.emit_dir) return;
  fs::create_directories(*g.emit_dir);
  write_graph_file(*g.emit_dir / (stem + ".cg"), graph);
}

std::string stem_of(const std::string& file) {
  return fs::path(file).stem().string();
}

SearchOptions search_options(const Globals& g) {
  SearchOptions o;
  o.budget = g.budget;
  o.jobs = g.jobs;
  return o;
}

HarnessConfig harness_config(const Globals& g) {
  HarnessConfig cfg;
  cfg.vertex_budget = g.budget;
  cfg.move_budget = g.moves;
  cfg.jobs = g.jobs;
  cfg.seed = g.seed;
  cfg.output_dir = g.emit_dir;
  return cfg;
}

std::vector<ColoredGraph> read_all(const std::vector<std::string>& files) {
  std::vector<ColoredGraph> out;
  for (const auto& f : files) out.push_back(read_graph_file(f));
  return out;
}

int cmd_validate(const std::vector<std::string>& files) {
  int status = 0;
  for (const auto& f : files) {
    try {
      const ColoredGraph g = read_graph_file(f);
      std::cout << f << ": ok d=" << g.dimension() << " n=" << g.vertex_count()
                << " support=" << g.support().to_string()
                << (g.is_closed() ? " closed" : " open")
                << (g.is_connected() ? " connected" : " disconnected") << '\n';
    } catch (const ValidationError& e) {
      std::cout << f << ": invalid\n" << e.report().to_string();
      status = 1;
    } catch (const ParseError& e) {
      std::cout << f << ": " << e.what() << '\n';
      status = 1;
    }
  }
  return status;
}

int cmd_census(const std::vector<std::string>& files) {
  for (const auto& f : files) {
    const ColoredGraph g = read_graph_file(f);
    const CycleCensus c = cycle_census(g);
    std::cout << "# " << f << '\n' << c.to_text();
    if (g.support().contains(0)) std::cout << "C0 " << c.c0() << '\n';
    std::cout << "total " << c.total() << '\n';
    if (g.is_closed() && g.is_connected()) {
      std::cout << "omega " << gurau_degree(g).value.to_string() << '\n';
    }
  }
  return 0;
}

int cmd_embed(const std::vector<std::string>& files) {
  for (const auto& f : files) {
    const ColoredGraph g = read_graph_file(f);
    const EmbeddingStats s = embedding_stats(g);
    std::cout << "# " << f << '\n' << s.to_text();
    std::cout << "melonic " << (is_melonic(g).melonic ? "yes" : "no") << '\n';
    if (s.genus == 0) {
      const FaceBoundReport fb = check_face_bound(g);
      std::cout << "face-bound 2F2+F4=" << fb.lhs
                << (fb.holds ? " holds" : " violated") << '\n';
    }
  }
  return 0;
}

int cmd_bubbles(const std::vector<std::string>& files, const Globals& glob) {
  for (const auto& f : files) {
    const ColoredGraph g = read_graph_file(f);
    std::cout << "# " << f << '\n';
    const ColorSet support = g.support();
    for (Color skip : support.to_vector()) {
      const ColorSet p = support - ColorSet{skip};
      const PBubbleCensus census = p_bubbles(g, p);
      std::cout << "colors " << p.to_string() << " count "
                << census.components.size() << '\n';
      int k = 0;
      for (const PBubble& b : census.components) {
        const ColoredGraph sub = extract_p_bubble(g, b, p);
        std::cout << "  bubble " << k << " n=" << b.vertices.size();
        if (p.size() == 3) {
          std::cout << " genus=" << embedding_stats(sub).genus;
        }
        std::cout << " vertices";
        for (Vertex v : b.vertices) std::cout << ' ' << v;
        std::cout << '\n';
        emit(glob, stem_of(f) + "-bubble-" + p.to_string() + "-" +
                       std::to_string(k), sub);
        ++k;
      }
    }
  }
  return 0;
}

int cmd_flip(const std::string& file, EdgeId e1, EdgeId e2,
             const Globals& glob) {
  const ColoredGraph g = read_graph_file(file);
  const FlipResult r = flip(g, e1, e2);
  std::cout << "interaction " << r.interaction.to_string() << '\n'
            << "C0 " << r.c0_before << " -> " << r.c0_after << '\n'
            << "components " << r.components.size() << '\n';
  if (r.connected()) std::cout << "predicted " << r.predicted_c0() << '\n';
  emit(glob, stem_of(file) + "-flip", r.graph);
  return 0;
}

int cmd_contract(const std::string& file, EdgeId e, const Globals& glob) {
  const ColoredGraph g = read_graph_file(file);
  const ContractionResult r = contract(g, e);
  std::cout << "case " << to_string(r.kind) << '\n'
            << "parallel " << r.parallel.to_string() << '\n'
            << "C0 " << r.c0_before << " -> " << r.c0_after << " (expected "
            << r.expected_delta << ")\n"
            << "components " << r.components.size() << '\n';
  emit(glob, stem_of(file) + "-contract", r.graph);
  return 0;
}

int cmd_reduce(const std::vector<std::string>& files, const Globals& glob) {
  int status = 0;
  for (const auto& f : files) {
    const ColoredGraph g = read_graph_file(f);
    const ReductionTrace t = reduce_to_canonical(g, glob.moves);
    std::cout << "# " << f << '\n' << t.to_text();
    emit(glob, stem_of(f) + "-reduced", t.terminal);
    if (t.budget_exhausted) status = 1;
  }
  return status;
}

int cmd_maxpair(const std::vector<std::string>& files, const Globals& glob) {
  for (const auto& f : files) {
    const ColoredGraph b = read_graph_file(f);
    const MaxReport r = max_pairings(b, search_options(glob));
    std::cout << "# " << f << '\n' << r.to_text();
    for (std::size_t i = 0; i < r.maximizers.size(); ++i) {
      emit(glob, stem_of(f) + "-max-" + std::to_string(i), r.maximizers[i]);
    }
  }
  return 0;
}

int cmd_maxglue(const std::vector<std::string>& files, const Globals& glob) {
  const std::vector<ColoredGraph> bubbles = read_all(files);
  const MaxReport r = max_gluings(bubbles, search_options(glob));
  std::cout << r.to_text();
  for (std::size_t i = 0; i < r.maximizers.size(); ++i) {
    emit(glob, "maxglue-" + std::to_string(i), r.maximizers[i]);
  }
  return 0;
}

int cmd_check2cut(const std::vector<std::string>& files, int bubble) {
  int status = 0;
  C1Cache cache;
  for (const auto& f : files) {
    const ColoredGraph g = read_graph_file(f);
    const auto occ = bubble_occurrences(g);
    if (bubble < 0 || bubble >= static_cast<int>(occ.size())) {
      throw UsageError("--bubble out of range: graph has " +
                       std::to_string(occ.size()) + " bubbles");
    }
    const MaxTwoCutVerdict v = check_max_two_cut(g, occ[bubble], cache);
    std::cout << "# " << f << '\n'
              << "C1 " << v.c1 << '\n'
              << "pairing_C0 " << v.pairing_c0 << '\n'
              << "pairing_connected " << (v.pairing_connected ? "yes" : "no")
              << '\n';
    if (!v.bad_class_sizes.empty()) {
      std::cout << "bad_classes";
      for (int s : v.bad_class_sizes) std::cout << ' ' << s;
      std::cout << '\n';
    }
    if (!v.violation.empty()) std::cout << "violation " << v.violation << '\n';
    std::cout << "verdict " << (v.holds ? "holds" : "fails") << '\n';
    if (!v.holds) status = 1;
  }
  return status;
}

int print_suite(const SuiteResult& r) {
  std::cout << r.to_text();
  return r.passed ? 0 : 1;
}

int cmd_verify(const std::string& suite, const std::vector<std::string>& files,
               int marked, const Globals& glob) {
  if (suite == "only-planar") {
    if (files.empty()) throw UsageError("verify only-planar needs bubble files");
    const std::vector<ColoredGraph> bubbles = read_all(files);
    if (marked < 0 || marked >= static_cast<int>(bubbles.size())) {
      throw UsageError("--marked out of range");
    }
    const OnlyPlanarReport r =
        verify_only_planar(bubbles, marked, search_options(glob));
    std::cout << r.to_text();
    std::cout << "RESULT only-planar " << (r.ok() ? "pass" : "fail") << " 1 "
              << (r.ok() ? 0 : 1) << '\n';
    return r.ok() ? 0 : 1;
  }
  if (!is_suite(suite)) throw UsageError("unknown suite: " + suite);
  if (!files.empty()) throw UsageError("verify " + suite + " takes no files");
  return print_suite(run_suite(suite, harness_config(glob)));
}

int cmd_run_all(const Globals& glob) {
  int status = 0;
  int failed = 0;
  for (auto name : suite_names()) {
    const SuiteResult r = run_suite(name, harness_config(glob));
    if (print_suite(r) != 0) {
      status = 1;
      ++failed;
    }
  }
  std::cout << "RESULT run-all " << (status == 0 ? "pass" : "fail") << ' '
            << suite_names().size() << ' ' << failed << '\n';
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored graph toolkit", "cgtool"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals glob;
  std::string emit_dir;
  app.add_option("--budget", glob.budget, "vertex budget for enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", glob.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--moves", glob.moves, "move budget for reduce, 0 = 10 n")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", glob.seed, "seed for randomized suites");
  app.add_option("--emit-graphs", emit_dir, "write produced graphs here");

  std::vector<std::string> files;
  std::string file;
  EdgeId e1 = -1, e2 = -1;
  int bubble = 0;
  int marked = 0;
  std::string suite;

  auto* validate_cmd = app.add_subcommand("validate", "check graph files");
  validate_cmd->add_option("files", files)->required();
  auto* census_cmd = app.add_subcommand("census", "bicolored cycle census");
  census_cmd->add_option("files", files)->required();
  auto* embed_cmd = app.add_subcommand("embed", "genus and faces of 3-bubbles");
  embed_cmd->add_option("files", files)->required();
  auto* bubbles_cmd = app.add_subcommand("bubbles", "list sub-bubbles");
  bubbles_cmd->add_option("files", files)->required();
  auto* flip_cmd = app.add_subcommand("flip", "flip two color 0 edges");
  flip_cmd->add_option("file", file)->required();
  flip_cmd->add_option("e1", e1)->required();
  flip_cmd->add_option("e2", e2)->required();
  auto* contract_cmd = app.add_subcommand("contract", "contract a color 0 edge");
  contract_cmd->add_option("file", file)->required();
  contract_cmd->add_option("edge", e1)->required();
  auto* reduce_cmd = app.add_subcommand("reduce", "dipole reduction");
  reduce_cmd->add_option("files", files)->required();
  auto* maxpair_cmd = app.add_subcommand("maxpair", "maximize C0 over pairings");
  maxpair_cmd->add_option("files", files)->required();
  auto* maxglue_cmd = app.add_subcommand("maxglue", "maximize C0 over gluings");
  maxglue_cmd->add_option("files", files)->required();
  auto* check_cmd =
      app.add_subcommand("check2cut", "maximal 2-cut property of a bubble");
  check_cmd->add_option("files", files)->required();
  check_cmd->add_option("--bubble", bubble, "bubble index")->required();
  auto* verify_cmd = app.add_subcommand("verify", "run a suite");
  verify_cmd->add_option("suite", suite)->required();
  verify_cmd->add_option("files", files);
  verify_cmd->add_option("--marked", marked, "marked bubble for only-planar");
  auto* run_all_cmd = app.add_subcommand("run-all", "run every suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n' << kGrammar;
    return 2;
  }
  if (!emit_dir.empty()) glob.emit_dir = emit_dir;

  try {
    if (*validate_cmd) return cmd_validate(files);
    if (*census_cmd) return cmd_census(files);
    if (*embed_cmd) return cmd_embed(files);
    if (*bubbles_cmd) return cmd_bubbles(files, glob);
    if (*flip_cmd) return cmd_flip(file, e1, e2, glob);
    if (*contract_cmd) return cmd_contract(file, e1, glob);
    if (*reduce_cmd) return cmd_reduce(files, glob);
    if (*maxpair_cmd) return cmd_maxpair(files, glob);
    if (*maxglue_cmd) return cmd_maxglue(files, glob);
    if (*check_cmd) return cmd_check2cut(files, bubble);
    if (*verify_cmd) return cmd_verify(suite, files, marked, glob);
    if (*run_all_cmd) return cmd_run_all(glob);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n' << kGrammar;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  std::cerr << kGrammar;
  return 2;
}

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgraph/colored_graph.hpp"

namespace cgraph {

struct HarnessConfig {
  int vertex_budget = 16;
  int move_budget = 0;  // 0: 10 n per reduction
  int jobs = 1;
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> output_dir;
  std::vector<std::string> suites;

  /// Throws std::invalid_argument on non-positive budgets or unknown suites.
  void validate() const;
};

struct CaseRow {
  std::string id;
  std::string expected;
  std::string observed;
  bool ok = false;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  bool truncated = false;
  std::vector<CaseRow> cases;
  double seconds = 0;

  int failures() const;
  /// Case table, a `# time` line, then `RESULT <suite> <pass|fail> <n> <k>`.
  std::string to_text() const;
};

std::span<const std::string_view> suite_names();
bool is_suite(std::string_view name);

/// Throws std::invalid_argument for an unknown suite. A budget overrun ends
/// the suite early with a truncation row, which counts as a failure.
SuiteResult run_suite(std::string_view name, const HarnessConfig& cfg);

/// Connected closed graph at dimension d with `whites` white vertices; each
/// color is an independent uniform matching.
ColoredGraph random_closed_graph(std::mt19937_64& rng, int whites, int d = 3);

/// The bubble multisets named by the suites, as fixture name lists.
struct Multiset {
  std::vector<std::string_view> names;
  int marked = 0;
  std::string label() const;
  std::vector<ColoredGraph> build() const;
};

/// Multisets whose maximizers are checked for 4-cuts and sphere reduction.
std::span<const Multiset> maximizer_multisets();
/// The above plus one with a non-planar marked bubble.
std::span<const Multiset> two_cut_multisets();

}  // namespace cgraph

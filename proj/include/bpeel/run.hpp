#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "bpeel/graph.hpp"

namespace bpeel {

enum class Algorithm { Count, Tip, Wing, Core, FracCore, Nucleus23 };

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);
std::optional<Side> parse_side(std::string_view name);

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitRuntime = 3;

struct RunConfig {
  std::filesystem::path input;
  Side primary_side = Side::Left;
  Algorithm algorithm = Algorithm::Tip;
  double min_density = 0.0;
  std::size_t min_u = 0;
  std::size_t min_v = 0;
  std::filesystem::path output_dir = ".";
  bool emit_members = false;
  bool emit_timings = false;
  /// Also print the filtered profile CSV on stdout (the hierarchy command).
  bool print_profile = false;
};

/// Throws ArgumentError when a field is out of range.
void validate(const RunConfig& config);

/// Runs one algorithm and writes its artifacts into output_dir:
///   <algo>_values.tsv     value per entity
///   <algo>_hierarchy.csv  every hierarchy node (not for count)
///   <algo>_profile.csv    nodes passing the filters
///   <algo>_members.tsv    node_id and member labels, with emit_members
///   <algo>_timings.txt    phase wall times in seconds, with emit_timings
/// A summary goes to `out` and diagnostics to `err`. Returns an exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bpeel

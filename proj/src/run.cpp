#include "bpeel/run.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <vector>

#include "bpeel/baselines.hpp"
#include "bpeel/errors.hpp"
#include "bpeel/hierarchy.hpp"

namespace bpeel {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Count: return "count";
    case Algorithm::Tip: return "tip";
    case Algorithm::Wing: return "wing";
    case Algorithm::Core: return "core";
    case Algorithm::FracCore: return "frac-core";
    case Algorithm::Nucleus23: return "nucleus23";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Count, Algorithm::Tip, Algorithm::Wing, Algorithm::Core,
                      Algorithm::FracCore, Algorithm::Nucleus23}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

std::optional<Side> parse_side(std::string_view name) {
  if (name == "left") return Side::Left;
  if (name == "right") return Side::Right;
  return std::nullopt;
}

void validate(const RunConfig& config) {
  if (!(config.min_density >= 0.0 && config.min_density <= 1.0)) {
    throw ArgumentError("min density must be in [0, 1]");
  }
  if (config.input.empty()) throw ArgumentError("no input file given");
  if (config.output_dir.empty()) throw ArgumentError("no output directory given");
}

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

class OutputError : public Error {
 public:
  using Error::Error;
};

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Writes a file in one go; the content is only renamed into place after a
/// successful flush.
template <class Fill>
void write_file(const fs::path& path, Fill&& fill) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw OutputError("cannot write " + tmp.string());
    fill(f);
    f.flush();
    if (!f) throw OutputError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw OutputError("cannot move " + tmp.string() + " to " + path.string());
}

struct Timings {
  double load = 0, count = 0, peel = 0, hierarchy = 0, total = 0;
};

/// Decomposition output in a form shared by all algorithms.
struct Outcome {
  Count butterflies = 0;
  bool has_butterflies = false;
  std::vector<double> values;  // per entity
  bool integral = true;
  std::optional<NucleusTree> tree;
};

std::string vertex_label(const BipartiteGraph& g, std::uint32_t u) { return g.label_u(u); }

std::string edge_label(const BipartiteGraph& g, std::uint32_t e) {
  return g.label_u(g.edge_u(e)) + '\t' + g.label_v(g.edge_v(e));
}

void print_histogram(std::ostream& out, const std::vector<double>& values) {
  std::map<double, std::size_t> hist;
  for (double x : values) ++hist[x];
  out << "histogram\n";
  for (const auto& [value, n] : hist) {
    out << static_cast<Count>(value) << '\t' << n << '\n';
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto start = Clock::now();
  Timings t;
  BipartiteGraph g;
  try {
    std::ifstream in(config.input);
    if (!in) throw Error("cannot open " + config.input.string());
    g = load_bipartite(in, config.primary_side);
  } catch (const ParseError& e) {
    err << "error: " << config.input.string() << ':' << e.line() << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  t.load = seconds_since(start);

  const std::string algo(to_string(config.algorithm));
  try {
    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    if (ec || !fs::is_directory(config.output_dir)) {
      throw OutputError("cannot create output directory " + config.output_dir.string());
    }
    const auto file = [&](const char* suffix) { return config.output_dir / (algo + suffix); };

    Outcome result;
    std::optional<ProjectedGraph> gp;
    std::optional<NucleusEdgeResult> nucleus;
    auto phase = Clock::now();
    switch (config.algorithm) {
      case Algorithm::Count: {
        const auto pv = count_per_vertex(g);
        const auto pe = count_per_edge(g);
        t.count = seconds_since(phase);
        if (pv.total != pe.total) {
          throw std::logic_error("per-vertex and per-edge totals disagree");
        }
        result.butterflies = pv.total;
        result.has_butterflies = true;
        result.values.assign(pv.values.begin(), pv.values.end());
        break;
      }
      case Algorithm::Tip: {
        const auto beta = count_per_vertex(g);
        t.count = seconds_since(phase);
        phase = Clock::now();
        const auto tip = tip_decompose(g, beta);
        t.peel = seconds_since(phase);
        phase = Clock::now();
        result.tree = build_hierarchy(g, tip);
        t.hierarchy = seconds_since(phase);
        result.butterflies = beta.total;
        result.has_butterflies = true;
        result.values.assign(tip.theta.begin(), tip.theta.end());
        break;
      }
      case Algorithm::Wing: {
        const auto beta = count_per_edge(g);
        t.count = seconds_since(phase);
        phase = Clock::now();
        const auto wing = wing_decompose(g, beta);
        t.peel = seconds_since(phase);
        phase = Clock::now();
        result.tree = build_hierarchy(g, wing);
        t.hierarchy = seconds_since(phase);
        result.butterflies = beta.total;
        result.has_butterflies = true;
        result.values.assign(wing.psi.begin(), wing.psi.end());
        break;
      }
      case Algorithm::Core:
      case Algorithm::FracCore: {
        const bool frac = config.algorithm == Algorithm::FracCore;
        gp = frac ? project_weighted(g) : project_unweighted(g);
        t.count = seconds_since(phase);
        phase = Clock::now();
        const auto core = frac ? fractional_core_decompose(*gp) : core_decompose(*gp);
        t.peel = seconds_since(phase);
        phase = Clock::now();
        result.tree = build_core_hierarchy(g, *gp, core,
                                           frac ? NucleusKind::FracCore : NucleusKind::Core);
        t.hierarchy = seconds_since(phase);
        result.values = core.core;
        result.integral = !frac;
        break;
      }
      case Algorithm::Nucleus23: {
        gp = project_unweighted(g);
        t.count = seconds_since(phase);
        phase = Clock::now();
        nucleus = nucleus23_decompose(*gp);
        t.peel = seconds_since(phase);
        phase = Clock::now();
        result.tree = build_nucleus23_hierarchy(g, *gp, *nucleus);
        t.hierarchy = seconds_since(phase);
        result.values.assign(nucleus->kappa.begin(), nucleus->kappa.end());
        break;
      }
    }

    // labels of the entities the values refer to
    const auto label = [&](std::uint32_t id) -> std::string {
      switch (config.algorithm) {
        case Algorithm::Wing: return edge_label(g, id);
        case Algorithm::Nucleus23:
          return g.label_u(gp->edge_a(id)) + '\t' + g.label_u(gp->edge_b(id));
        default: return vertex_label(g, id);
      }
    };

    write_file(file("_values.tsv"), [&](std::ostream& f) {
      for (std::uint32_t id = 0; id < result.values.size(); ++id) {
        f << label(id) << '\t';
        if (result.integral) {
          f << static_cast<Count>(result.values[id]);
        } else {
          f << fixed6(result.values[id]);
        }
        f << '\n';
      }
    });

    std::size_t profile_rows = 0;
    if (result.tree) {
      const auto records = subgraph_profiles(*result.tree);
      const ProfileFilter filter{config.min_density, config.min_u, config.min_v};
      write_file(file("_hierarchy.csv"),
                 [&](std::ostream& f) { write_profile_csv(f, records, ProfileFilter{}); });
      write_file(file("_profile.csv"), [&](std::ostream& f) { write_profile_csv(f, records, filter); });
      for (const auto& r : records) profile_rows += filter.accepts(r) ? 1 : 0;
      if (config.emit_members) {
        write_file(file("_members.tsv"), [&](std::ostream& f) {
          for (const auto& r : records) {
            if (!filter.accepts(r)) continue;
            for (std::uint32_t id : result.tree->members(r.node_id)) {
              f << r.node_id << '\t' << label(id) << '\n';
            }
          }
        });
      }
      if (config.print_profile) write_profile_csv(out, records, filter);
    }

    t.total = seconds_since(start);
    if (config.emit_timings) {
      write_file(file("_timings.txt"), [&](std::ostream& f) {
        char buf[128];
        for (const auto& [name, value] : {std::pair{"load", t.load}, {"count", t.count},
                                          {"peel", t.peel}, {"hierarchy", t.hierarchy},
                                          {"total", t.total}}) {
          std::snprintf(buf, sizeof buf, "%s\t%.3f\n", name, value);
          f << buf;
        }
      });
    }

    if (config.algorithm == Algorithm::Count) {
      out << "butterflies=" << result.butterflies << '\n';
      return kExitOk;
    }
    if (config.print_profile) return kExitOk;
    out << "algorithm=" << algo << '\n';
    out << "u=" << g.u_count() << " v=" << g.v_count() << " edges=" << g.edge_count() << '\n';
    if (result.has_butterflies) out << "butterflies=" << result.butterflies << '\n';
    double max_value = 0;
    for (double x : result.values) max_value = std::max(max_value, x);
    out << "max=" << (result.integral ? std::to_string(static_cast<Count>(max_value)) : fixed6(max_value))
        << '\n';
    out << "nodes=" << result.tree->nodes.size() << " profile_rows=" << profile_rows << '\n';
    if (result.integral) print_histogram(out, result.values);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace bpeel

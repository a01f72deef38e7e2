// One status line per acceptance criterion. Exit status is nonzero when any
// hard criterion fails; WARN and SKIP lines never fail the run.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "bpeel/baselines.hpp"
#include "bpeel/hierarchy.hpp"
#include "bpeel/run.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/tempdir.hpp"
#ifdef BPEEL_HAVE_FETCH
#include "bpeel/fetch.hpp"
#endif

using namespace bpeel;
using namespace bpeel::testing;
namespace fs = std::filesystem;

namespace {

enum class Status { Pass, Fail, Warn, Skip };

struct Verdict {
  Status status;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

/// Collects the first few mismatch descriptions.
class Mismatches {
 public:
  void add(const std::string& what) {
    if (count_++ < 5) text_ += (text_.empty() ? "" : "; ") + what;
  }
  bool empty() const { return count_ == 0; }
  std::string summary() const {
    return std::to_string(count_) + " mismatches: " + text_ + (count_ > 5 ? "; ..." : "");
  }

 private:
  std::size_t count_ = 0;
  std::string text_;
};

/// The seeded regime of the oracle criteria: |U|,|V| <= 15, p in {0.2, 0.4, 0.6}.
BipartiteGraph oracle_graph(std::uint64_t seed) {
  const double ps[] = {0.2, 0.4, 0.6};
  return random_bipartite(3 + seed % 13, 3 + (seed * 7) % 13, ps[seed % 3], seed);
}

Verdict butterfly_oracle() {
  const auto start = Clock::now();
  Mismatches bad;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto g = oracle_graph(seed);
    const auto want = brute_counts(g);
    const auto pv = count_per_vertex(g);
    const auto pe = count_per_edge(g);
    const std::string tag = "seed " + std::to_string(seed);
    if (pv.values != want.per_vertex) bad.add(tag + " per-vertex");
    if (pe.values != want.per_edge) bad.add(tag + " per-edge");
    if (pv.total != want.total || pe.total != want.total) bad.add(tag + " total");
  }
  const double secs = since(start);
  if (!bad.empty()) return {Status::Fail, bad.summary()};
  if (secs >= 10.0) return {Status::Fail, "took " + fmt("%.2f", secs) + " s"};
  return {Status::Pass, "50 graphs match exhaustive enumeration in " + fmt("%.3f", secs) + " s"};
}

Verdict identities() {
  std::vector<BipartiteGraph> graphs;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) graphs.push_back(oracle_graph(seed));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    graphs.push_back(random_bipartite(150, 120, 0.08, seed));
  }
  graphs.push_back(t3());
  graphs.push_back(biclique(3, 3));
  graphs.push_back(biclique(12, 7));
  Mismatches bad;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto pv = count_per_vertex(graphs[i]);
    const auto pe = count_per_edge(graphs[i]);
    Count sv = 0, se = 0;
    for (Count x : pv.values) sv += x;
    for (Count x : pe.values) se += x;
    if (sv != 2 * pv.total) bad.add("graph " + std::to_string(i) + " vertex sum");
    if (se != 4 * pe.total) bad.add("graph " + std::to_string(i) + " edge sum");
    if (pv.total != pe.total) bad.add("graph " + std::to_string(i) + " totals");
  }
  if (!bad.empty()) return {Status::Fail, bad.summary()};
  return {Status::Pass, std::to_string(graphs.size()) + " graphs"};
}

template <class Order, class Values>
bool nondecreasing(const Order& order, const Values& values) {
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (values[order[i - 1]] > values[order[i]]) return false;
  }
  return true;
}

Verdict peeling_oracle() {
  Mismatches bad;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto g = oracle_graph(seed);
    const std::string tag = "seed " + std::to_string(seed);
    const auto tip = tip_decompose(g, count_per_vertex(g));
    if (tip.theta != tip_oracle(g)) bad.add(tag + " theta");
    if (!nondecreasing(tip.peel_order, tip.theta)) bad.add(tag + " tip order");
    const auto wing = wing_decompose(g, count_per_edge(g));
    if (wing.psi != wing_oracle(g)) bad.add(tag + " psi");
    if (!nondecreasing(wing.peel_order, wing.psi)) bad.add(tag + " wing order");
  }
  if (!bad.empty()) return {Status::Fail, bad.summary()};
  return {Status::Pass, "theta and psi match iterative deletion on 50 graphs; peel sequences nondecreasing"};
}

Verdict t3_fixture() {
  const auto g = t3();
  Mismatches bad;

  const auto tip = tip_decompose(g, count_per_vertex(g));
  const std::vector<Count> theta{2, 3, 3, 3, 3, 2};
  for (VertexId u = 0; u < g.u_count(); ++u) {
    if (tip.theta[u] != theta[u]) {
      bad.add("theta(" + g.label_u(u) + ")=" + std::to_string(tip.theta[u]) + " expected " +
              std::to_string(theta[u]));
    }
  }

  // stated goldens: psi 2 on {B,C}x{1,2,3} and {D,E}x{4,5,6}, 1 on the rest
  const std::set<std::string> fringe{"A1", "A2", "C4", "D3", "F5", "F6"};
  const auto wing = wing_decompose(g, count_per_edge(g));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto name = edge_name(g, e);
    const Count expected = fringe.count(name) ? 1 : 2;
    if (wing.psi[e] != expected) {
      bad.add("psi(" + name + ")=" + std::to_string(wing.psi[e]) + " expected " +
              std::to_string(expected));
    }
  }

  const auto tree = build_hierarchy(g, wing);
  bool shape = tree.roots.size() == 1 && tree.nodes[tree.roots[0]].k == 1 &&
               tree.nodes[tree.roots[0]].children.size() == 2;
  if (shape) {
    for (std::size_t c : tree.nodes[tree.roots[0]].children) shape = shape && tree.nodes[c].k == 2;
  }
  if (!shape) bad.add("wing hierarchy is not one k=1 root with two k=2 children");

  if (bad.empty()) return {Status::Pass, "theta, psi and wing tree match"};
  const bool oracle_agrees = wing.psi == wing_oracle(g) && tip.theta == tip_oracle(g);
  return {Status::Fail, bad.summary() + (oracle_agrees
                                             ? " (the brute-force oracle agrees with the "
                                               "implementation, not with the stated goldens)"
                                             : " (implementation also disagrees with the oracle)")};
}

std::set<std::pair<std::size_t, std::size_t>> edge_pairs(const BipartiteGraph& g,
                                                         const std::vector<EdgeId>& es) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (EdgeId e : es) out.insert({g.edge_u(e), g.edge_v(e)});
  return out;
}

Verdict definition_conformance() {
  Mismatches bad;
  std::size_t tips_checked = 0, wings_checked = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = random_bipartite(4 + seed % 7, 4 + (seed * 3) % 7, 0.3 + 0.1 * (seed % 4), seed);
    const DenseBipartite d(g);
    const std::string tag = "seed " + std::to_string(seed);

    const auto tip = tip_decompose(g, count_per_vertex(g));
    for (Count k : std::set<Count>(tip.theta.begin(), tip.theta.end())) {
      if (k == 0) continue;
      for (const auto& cls : extract_k_tips(g, tip, k)) {
        ++tips_checked;
        const std::set<std::size_t> s(cls.begin(), cls.end());
        if (!is_connected_k_tip(d, s, k)) bad.add(tag + " tip conditions k=" + std::to_string(k));
        for (std::uint32_t mask = 0; mask < (1u << g.u_count()); ++mask) {
          std::set<std::size_t> sup = s;
          for (std::size_t u = 0; u < g.u_count(); ++u) {
            if (mask & (1u << u)) sup.insert(u);
          }
          if (sup.size() > s.size() && is_connected_k_tip(d, sup, k)) {
            bad.add(tag + " tip not maximal k=" + std::to_string(k));
            break;
          }
        }
      }
    }

    // a k-wing is maximal when the classes are exactly the butterfly-connected
    // components of the largest edge set with k butterflies per edge
    const auto wing = wing_decompose(g, count_per_edge(g));
    const auto oracle = wing_oracle(g);
    for (Count k : std::set<Count>(wing.psi.begin(), wing.psi.end())) {
      if (k == 0) continue;
      const auto classes = extract_k_wings(g, wing, k);
      std::vector<EdgeId> covered, fixpoint;
      for (const auto& c : classes) covered.insert(covered.end(), c.begin(), c.end());
      std::sort(covered.begin(), covered.end());
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (oracle[e] >= k) fixpoint.push_back(e);
      }
      if (covered != fixpoint) bad.add(tag + " wing cover k=" + std::to_string(k));
      for (std::size_t i = 0; i < classes.size(); ++i) {
        ++wings_checked;
        const auto own = edge_pairs(g, classes[i]);
        if (!is_connected_k_wing(d, own, k)) bad.add(tag + " wing conditions k=" + std::to_string(k));
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
          auto both = own;
          const auto other = edge_pairs(g, classes[j]);
          both.insert(other.begin(), other.end());
          if (is_connected_k_wing(d, both, k)) bad.add(tag + " wings mergeable k=" + std::to_string(k));
        }
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
          if (oracle[e] >= k) continue;
          auto grown = own;
          grown.insert({g.edge_u(e), g.edge_v(e)});
          if (is_connected_k_wing(d, grown, k)) bad.add(tag + " wing not maximal k=" + std::to_string(k));
        }
      }
    }
  }
  if (!bad.empty()) return {Status::Fail, bad.summary()};
  return {Status::Pass, std::to_string(tips_checked) + " k-tips and " + std::to_string(wings_checked) +
                            " k-wings are valid, connected and maximal on 30 graphs"};
}

Verdict baseline_oracles() {
  Mismatches bad;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = random_bipartite(6 + seed % 15, 5 + seed % 9, 0.15 + 0.05 * (seed % 4), seed);
    const std::string tag = "seed " + std::to_string(seed);
    const auto gp = project_unweighted(g);
    const DenseGraph dense(gp);
    const auto core = core_decompose(gp);
    const auto want_core = core_oracle(dense);
    for (std::size_t x = 0; x < want_core.size(); ++x) {
      if (core.core[x] != static_cast<double>(want_core[x])) {
        bad.add(tag + " core");
        break;
      }
    }
    if (nucleus23_decompose(gp).kappa != nucleus23_oracle(gp)) bad.add(tag + " nucleus23");
    const auto wp = project_weighted(g);
    const auto frac = fractional_core_decompose(wp).core;
    const auto want_frac = fractional_core_oracle(DenseGraph(wp));
    for (std::size_t x = 0; x < frac.size(); ++x) {
      if (std::abs(frac[x] - want_frac[x]) > 1e-9) {
        bad.add(tag + " frac-core");
        break;
      }
    }
  }

  // two triangles joined by a bridge: the bridge is in no triangle
  const auto a = ProjectedGraph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
  const auto ra = nucleus23_decompose(a);
  const EdgeId bridge = 3;  // (2,3) in (a,b) order
  if (a.edge_a(bridge) != 2 || a.edge_b(bridge) != 3 || ra.kappa[bridge] != 0) bad.add("bridge kappa");
  if (extract_k_nuclei23(a, ra, 1).size() != 2) bad.add("bridge graph nuclei");
  if (extract_k_cores(a, core_decompose(a), 2).size() != 1) bad.add("bridge graph 2-core");

  // bowtie: two 1-nuclei sharing the center vertex
  const auto b = ProjectedGraph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  const auto nb = extract_k_nuclei23(b, nucleus23_decompose(b), 1);
  if (nb.size() != 2 || projected_edge_endpoints(b, nb[0]) != std::vector<VertexId>{0, 1, 2} ||
      projected_edge_endpoints(b, nb[1]) != std::vector<VertexId>{2, 3, 4}) {
    bad.add("bowtie nuclei");
  }
  if (!bad.empty()) return {Status::Fail, bad.summary()};
  return {Status::Pass, "core, fractional core and (2,3)-nucleus match brute force on 30 graphs; "
                        "bridge kappa=0 and overlapping bowtie nuclei reproduced"};
}

std::vector<fs::path> data_dirs() {
  std::vector<fs::path> dirs;
  if (const char* d = std::getenv("BPEEL_DATA_DIR"); d && *d) dirs.emplace_back(d);
#ifdef BPEEL_HAVE_FETCH
  dirs.push_back(default_cache_dir());
#endif
  return dirs;
}

std::optional<fs::path> find_dataset(const std::string& name) {
  for (const auto& dir : data_dirs()) {
    const auto p = dir / (name + ".edges");
    if (fs::exists(p)) return p;
  }
  return std::nullopt;
}

/// Agreement after rounding x to the displayed precision `unit`.
bool rounds_to(double x, double shown, double unit) {
  return std::llround(x / unit) == std::llround(shown / unit);
}

Verdict table2() {
  const auto condmat = find_dataset("condmat");
  const auto marvel = find_dataset("marvel");
  if (!condmat && !marvel) {
    return {Status::Skip, "no condmat.edges or marvel.edges in BPEEL_DATA_DIR or the fetch cache"};
  }
  Mismatches drift;
  std::string seen;
  if (condmat) {
    const auto g = load_bipartite_file(condmat->string());
    const auto total = count_per_vertex(g).total;
    const auto gp = project_unweighted(g);
    const auto tri = count_triangles(gp);
    seen += "condmat |U|=" + std::to_string(g.u_count()) + " |V|=" + std::to_string(g.v_count()) +
            " |E|=" + std::to_string(g.edge_count()) + " butterflies=" + std::to_string(total) +
            " |E_p|=" + std::to_string(gp.edge_count()) + " triangles=" + std::to_string(tri);
    if (!rounds_to(g.u_count(), 16700, 100)) drift.add("condmat |U|");
    if (!rounds_to(g.v_count(), 22000, 100)) drift.add("condmat |V|");
    if (!rounds_to(g.edge_count(), 58600, 100)) drift.add("condmat |E|");
    if (!rounds_to(static_cast<double>(total), 70500, 100)) drift.add("condmat butterflies");
    if (!rounds_to(gp.edge_count(), 95100, 100)) drift.add("condmat |E_p|");
    if (!rounds_to(static_cast<double>(tri), 68000, 100)) drift.add("condmat triangles");
  }
  if (marvel) {
    const auto g = load_bipartite_file(marvel->string());
    const auto total = count_per_vertex(g).total;
    seen += std::string(seen.empty() ? "" : "; ") + "marvel butterflies=" + std::to_string(total);
    if (!rounds_to(static_cast<double>(total), 10.7e6, 1e5)) drift.add("marvel butterflies");
  }
  if (!condmat) seen += " (condmat absent)";
  if (!marvel) seen += " (marvel absent)";
  if (!drift.empty()) return {Status::Warn, drift.summary() + " [" + seen + "]"};
  return {Status::Pass, seen};
}

/// Edge list on disk for CLI-level checks.
fs::path write_graph(const TempDir& dir, const std::string& name, const BipartiteGraph& g) {
  const auto p = dir / name;
  std::ofstream out(p);
  for (EdgeId e = 0; e < g.edge_count(); ++e) out << 'u' << g.edge_u(e) << " v" << g.edge_v(e) << '\n';
  return p;
}

Verdict runtime_trend(const TempDir& dir) {
  const auto g = random_bipartite(500, 500, 0.1, 2024);
  const auto total = count_per_vertex(g).total;
  if (total < 1'000'000) return {Status::Fail, "trend graph has only " + std::to_string(total) + " butterflies"};
  const auto input = write_graph(dir, "trend.txt", g);
  const auto timed = [&](Algorithm a) {
    RunConfig c;
    c.input = input;
    c.algorithm = a;
    c.output_dir = dir / "trend";
    std::ostringstream out, err;
    const auto start = Clock::now();
    const int code = run(c, out, err);
    return code == kExitOk ? since(start) : -1.0;
  };
  const double tip = timed(Algorithm::Tip);
  const double wing = timed(Algorithm::Wing);
  const std::string detail = std::to_string(total) + " butterflies: tip " + fmt("%.3f", tip) +
                             " s, wing " + fmt("%.3f", wing) + " s";
  if (tip < 0 || wing < 0) return {Status::Fail, "run failed; " + detail};
  return {tip <= wing ? Status::Pass : Status::Warn, detail};
}

Verdict determinism(const TempDir& dir) {
  const auto inputs = {write_graph(dir, "det_random.txt", random_bipartite(120, 90, 0.08, 99)),
                       write_graph(dir, "det_t3.txt", t3())};
  Mismatches bad;
  std::size_t files = 0;
  for (const auto& input : inputs) {
    for (Algorithm a : {Algorithm::Count, Algorithm::Tip, Algorithm::Wing, Algorithm::Core,
                        Algorithm::FracCore, Algorithm::Nucleus23}) {
      std::string first_stdout;
      for (int rep = 0; rep < 2; ++rep) {
        RunConfig c;
        c.input = input;
        c.algorithm = a;
        c.emit_members = true;
        c.output_dir = dir / ("det" + std::to_string(rep));
        std::ostringstream out, err;
        if (run(c, out, err) != kExitOk) bad.add("run failed: " + err.str());
        if (rep == 0) first_stdout = out.str();
        if (rep == 1 && out.str() != first_stdout) bad.add(std::string(to_string(a)) + " stdout");
      }
      const std::string name(to_string(a));
      for (auto suffix : {"_values.tsv", "_hierarchy.csv", "_profile.csv", "_members.tsv"}) {
        const auto p0 = dir / "det0" / (name + suffix);
        const auto p1 = dir / "det1" / (name + suffix);
        if (!fs::exists(p0)) continue;
        ++files;
        if (slurp(p0) != slurp(p1)) bad.add(input.filename().string() + " " + name + suffix);
      }
    }
  }
  if (!bad.empty()) return {Status::Fail, bad.summary()};
  return {Status::Pass, std::to_string(files) + " output files byte-identical across two runs"};
}

}  // namespace

int main() {
  TempDir dir;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"butterfly-oracle", butterfly_oracle},
      {"count-identities", identities},
      {"peeling-oracle", peeling_oracle},
      {"t3-fixture", t3_fixture},
      {"definition-conformance", definition_conformance},
      {"baseline-oracles", baseline_oracles},
      {"table2-datasets", table2},
      {"runtime-trend", [&] { return runtime_trend(dir); }},
      {"determinism", [&] { return determinism(dir); }},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {Status::Fail, std::string("exception: ") + e.what()};
    }
    const char* label = v.status == Status::Pass   ? "PASS"
                        : v.status == Status::Fail ? "FAIL"
                        : v.status == Status::Warn ? "WARN"
                                                   : "SKIP";
    failures += v.status == Status::Fail ? 1 : 0;
    std::cout << label << ' ' << name << ": " << v.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all hard criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

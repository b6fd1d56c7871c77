#include "g5/acceptance.hpp"
#include "g5/catalog.hpp"
#include "g5/colorer.hpp"
#include "g5/discharging.hpp"
#include "g5/harness.hpp"
#include "g5/invariants.hpp"
#include "g5/io.hpp"
#include "g5/reducer.hpp"
#include "g5/weights.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

using namespace g5;

namespace {

constexpr int kOk = 0, kViolation = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Precoloring precoloring_for(const GraphFile& f, const std::string& spec) {
  if (!spec.empty()) return parse_precolor_spec(spec);
  return f.precolor;
}

void print_coloring(const Coloring& c) {
  for (std::size_t v = 0; v < c.size(); ++v) std::cout << (v ? " " : "") << v << "=" << c[v];
  std::cout << "\n";
}

int cmd_color(const std::string& file, const std::string& spec, bool oracle_only) {
  GraphFile f = read_graph_file(file);
  Precoloring phi = precoloring_for(f, spec);
  std::optional<Coloring> c;
  bool disk = f.graph.rings().size() == 1 && !f.graph.rings()[0].is_vertex_ring();
  if (oracle_only || !disk || phi.size() != f.graph.rings()[0].vertices.size()) {
    c = oracle_extend(f.graph, phi);
  } else {
    DiskSolveStats st;
    c = solve_disk(f.graph, phi, 18, &st);
    std::cout << "reductions " << st.reductions << " oracle calls " << st.oracle_calls << "\n";
    std::optional<Coloring> o = oracle_extend(f.graph, phi);
    if (o.has_value() != c.has_value()) {
      std::cout << "DISAGREEMENT with the oracle\n";
      return kViolation;
    }
  }
  if (!c) {
    std::cout << "NOT EXTENDABLE\n";
    return kOk;
  }
  if (!extends(f.graph, phi, *c)) {
    std::cout << "INVALID colouring produced\n";
    return kViolation;
  }
  print_coloring(*c);
  return kOk;
}

std::vector<Appearance> appearances_of(const EmbeddedGraph& g, Strength s) { return find_appearances(g, s); }

int cmd_find(const std::string& file, const std::string& strength) {
  auto s = parse_strength(strength);
  if (!s) throw UsageError("unknown strength " + strength);
  GraphFile f = read_graph_file(file);
  auto as = appearances_of(f.graph, *s);
  for (std::size_t i = 0; i < as.size(); ++i) std::cout << i << " " << describe(as[i]) << "\n";
  std::cout << as.size() << " appearance(s)\n";
  return kOk;
}

int cmd_reduce(const std::string& file, int id, const std::string& spec) {
  GraphFile f = read_graph_file(file);
  auto as = appearances_of(f.graph, Strength::Faint);
  if (id < 0 || id >= static_cast<int>(as.size()))
    throw UsageError("appearance " + std::to_string(id) + " out of range (" + std::to_string(as.size()) + " found)");
  Precoloring phi = precoloring_for(f, spec);
  std::optional<Precoloring> arg;
  if (!phi.empty()) arg = phi;
  try {
    ReductionResult res = reduce(f.graph, as[id], arg);
    std::cout << "# " << describe(as[id]) << "\n";
    Precoloring mapped;
    for (auto [v, c] : phi)
      if (res.vertex_map[v] >= 0) mapped[res.vertex_map[v]] = c;
    std::cout << serialize(res.graph, mapped);
    if (!phi.empty() && f.graph.rings().size() == 1) {
      auto red = oracle_extend(res.graph, mapped);
      if (red) {
        Coloring lifted = lift_coloring(f.graph, res, *red);
        if (!extends(f.graph, phi, lifted)) {
          std::cout << "# lift FAILED\n";
          return kViolation;
        }
        std::cout << "# lift ok\n";
      } else {
        std::cout << "# reduced graph does not extend\n";
      }
    }
  } catch (const ReduceError& e) {
    std::cout << e.what() << "\n";
    return kViolation;
  } catch (const ColorError& e) {
    std::cout << e.what() << "\n";
    return kViolation;
  }
  return kOk;
}

std::vector<int> read_edge_file(const EmbeddedGraph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::vector<int> M;
  int u, v;
  while (in >> u >> v) {
    int e = (u >= 0 && v >= 0 && u < g.n() && v < g.n()) ? g.edge_id(u, v) : -1;
    if (e < 0) throw UsageError("not an edge: " + std::to_string(u) + " " + std::to_string(v));
    M.push_back(e);
  }
  if (!in.eof()) throw UsageError("malformed edge list in " + path);
  std::sort(M.begin(), M.end());
  M.erase(std::unique(M.begin(), M.end()), M.end());
  return M;
}

Q parse_fraction(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw UsageError("bad fraction " + s);
  }
}

int cmd_audit(const std::string& file, const std::string& eps, const std::string& mopt) {
  GraphFile f = read_graph_file(file);
  const EmbeddedGraph& g = f.graph;
  WeightFunction w = default_weight_fn();
  Q epsilon = eps.empty() ? w.epsilon() : parse_fraction(eps);
  std::vector<int> M;
  if (mopt == "auto") M = capture_4cycles(g);
  else if (mopt != "null") M = read_edge_file(g, mopt);
  ChargeAudit a = audit_charges(g, M, epsilon, w);
  std::cout << "epsilon " << to_string(epsilon) << " |M| " << M.size() << "\n";
  std::cout << "total initial " << to_string(a.init.total()) << " primary " << to_string(a.prim.total()) << " final "
            << to_string(a.fin.total()) << "\n";
  for (auto [rule, d] : a.rule_deltas) std::cout << "rule " << rule << " delta " << to_string(d) << "\n";
  std::cout << a.text();
  return a.ok() ? kOk : kViolation;
}

// weights are printed over the common denominator 4113 of the default table
std::string over_4113(const Q& q) {
  using boost::multiprecision::cpp_int;
  cpp_int den = boost::multiprecision::denominator(q);
  if (q == 0 || 4113 % den != 0) return to_string(q);
  cpp_int num = boost::multiprecision::numerator(q) * (4113 / den);
  return num.str() + "/4113";
}

int cmd_weight(const std::string& file) {
  GraphFile f = read_graph_file(file);
  std::cout << over_4113(graph_weight(f.graph, default_weight_fn())) << "\n";
  return kOk;
}

int cmd_classify(const std::string& file) {
  GraphFile f = read_graph_file(file);
  const EmbeddedGraph& g = f.graph;
  int rc = kOk;
  InvariantReport inv = check_all(g);
  for (int i = 0; i < kNumInvariants; ++i)
    std::cout << to_string(static_cast<Inv>(i)) << " " << (inv[i].holds ? "holds" : "fails") << "\n";
  auto crit = is_R_critical(g);
  std::cout << "critical "
            << (crit.verdict == CritVerdict::RCritical ? "R-critical"
                : crit.verdict == CritVerdict::PhiCritical ? "phi-critical" : "no")
            << "\n";
  if (g.rings().size() == 1 && !g.rings()[0].is_vertex_ring()) {
    ExceptionalClass ec = classify_exceptional(g);
    std::cout << "exceptional " << to_string(ec.cls) << (ec.very_exceptional ? " very" : "") << "\n";
    std::cout << "plane case " << to_string(planechar_case(g)) << "\n";
    if (crit.verdict == CritVerdict::RCritical) {
      try {
        DiskBoundReport r = check_diskgirth5(g, default_weight_fn(), true);
        std::cout << "weight bound " << r.describe() << "\n";
        if (!r.holds) rc = kViolation;
      } catch (const PreconditionFailed& e) {
        std::cout << "weight bound not applicable: " << e.what() << "\n";
      }
    }
  }
  return rc;
}

int cmd_extract(const std::string& file, const std::string& spec) {
  GraphFile f = read_graph_file(file);
  Precoloring phi = parse_precolor_spec(spec);
  try {
    Subgraph h = extract_critical(f.graph, phi);
    std::cout << serialize(h.graph) << "# to host:";
    for (VertexId v : h.to_host) std::cout << " " << v;
    std::cout << "\n";
  } catch (const ColorError& e) {
    std::cout << e.what() << "\n";
    return kViolation;
  }
  return kOk;
}

int cmd_enumerate(int ring, int max_n, bool critical) {
  auto gs = enumerate_corpus({ring, max_n, 5, critical});
  for (const auto& g : gs) std::cout << serialize(g) << "\n";
  std::cout << "# " << gs.size() << " graph(s)\n";
  return kOk;
}

int cmd_selfcheck(bool quick) {
  int rc = kOk;
  try {
    for (const auto& c : load_catalog()) validate_configuration(c);
    std::cout << "catalog: " << catalog().size() << " configurations valid\n";
  } catch (const CatalogInvalid& e) {
    std::cout << "catalog: " << e.what() << "\n";
    rc = kViolation;
  }
  if (auto v = default_weight_fn().violation()) {
    std::cout << "weights: " << v->first << " " << v->second << "\n";
    rc = kViolation;
  } else {
    std::cout << "weights: default weight function valid\n";
  }
  AcceptanceOptions opt;
  opt.quick = quick;
  opt.on_result = [](const CriterionResult& r) { std::cout << r.line() << std::endl; };
  for (const auto& r : run_acceptance(opt))
    if (!r.pass) rc = kViolation;
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"girth-5 precoloring extension toolkit"};
  app.require_subcommand(1);
  std::string file, spec, strength = "Faint", eps, mopt = "auto";
  bool oracle_only = false, quick = false, critical = false;
  int id = -1, ring = 0, max_n = 0;

  auto* color = app.add_subcommand("color", "extend a ring precolouring");
  color->add_option("FILE", file)->required();
  color->add_option("--precolor", spec);
  color->add_flag("--oracle-only", oracle_only);

  auto* find = app.add_subcommand("find-configs", "list configuration appearances");
  find->add_option("FILE", file)->required();
  find->add_option("--min-strength", strength);

  auto* red = app.add_subcommand("reduce", "apply a reduction");
  red->add_option("FILE", file)->required();
  red->add_option("--appearance", id, "index from find-configs")->required();
  red->add_option("--precolor", spec);

  auto* audit = app.add_subcommand("audit-charges", "run the discharging audit");
  audit->add_option("FILE", file)->required();
  audit->add_option("--epsilon", eps);
  audit->add_option("--M", mopt, "auto, null, or a file of edges");

  auto* weight = app.add_subcommand("weight", "sum of face weights");
  weight->add_option("FILE", file)->required();

  auto* classify = app.add_subcommand("classify", "invariants, criticality and class");
  classify->add_option("FILE", file)->required();

  auto* extract = app.add_subcommand("extract-critical", "minimal non-extending subgraph");
  extract->add_option("FILE", file)->required();
  extract->add_option("--precolor", spec)->required();

  auto* enumerate = app.add_subcommand("enumerate", "enumerate ring-rooted disks");
  enumerate->add_option("--ring", ring)->required();
  enumerate->add_option("--max-n", max_n)->required();
  enumerate->add_flag("--critical", critical);

  auto* self = app.add_subcommand("selfcheck", "catalog, weights and acceptance suite");
  self->add_flag("--quick", quick);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*color) return cmd_color(file, spec, oracle_only);
    if (*find) return cmd_find(file, strength);
    if (*red) return cmd_reduce(file, id, spec);
    if (*audit) return cmd_audit(file, eps, mopt);
    if (*weight) return cmd_weight(file);
    if (*classify) return cmd_classify(file);
    if (*extract) return cmd_extract(file, spec);
    if (*enumerate) return cmd_enumerate(ring, max_n, critical);
    if (*self) return cmd_selfcheck(quick);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const GraphError& e) {
    std::cerr << "graph error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cout << "violation: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}

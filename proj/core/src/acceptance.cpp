#include "g5/acceptance.hpp"

#include "g5/catalog.hpp"
#include "g5/colorer.hpp"
#include "g5/discharging.hpp"
#include "g5/harness.hpp"
#include "g5/invariants.hpp"
#include "g5/io.hpp"
#include "g5/reducer.hpp"
#include "g5/weights.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>

namespace g5 {

std::string CriterionResult::line() const {
  std::ostringstream out;
  out << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << title << "  [" << detail << "]";
  return out.str();
}

namespace {

const char* kE1 =
    "g5 1\nn 8\nrot 0: 1 4 7\nrot 1: 0 2\nrot 2: 1 3\nrot 3: 2 4\nrot 4: 0 3 5\nrot 5: 4 6\nrot 6: 5 7\n"
    "rot 7: 0 6\nring facial 0 1 2 3 4 5 6 7\n";
const char* kE2 =
    "g5 1\nn 10\nrot 0: 1 9 8\nrot 1: 0 2\nrot 2: 1 3\nrot 3: 2 4 9\nrot 4: 3 5\nrot 5: 4 6\nrot 6: 5 7 9\n"
    "rot 7: 6 8\nrot 8: 0 7\nrot 9: 0 3 6\nring facial 0 1 2 3 4 5 6 7 8\n";
const char* kPrism =
    "g5 1\nn 15\nrot 0: 1 10 9\nrot 1: 0 2\nrot 2: 1 3 11\nrot 3: 2 4\nrot 4: 3 5 12\nrot 5: 4 6\n"
    "rot 6: 5 7 13\nrot 7: 6 8\nrot 8: 7 9 14\nrot 9: 0 8\nrot 10: 0 11 14\nrot 11: 2 12 10\n"
    "rot 12: 4 13 11\nrot 13: 6 14 12\nrot 14: 8 10 13\nring facial 0 1 2 3 4 5 6 7 8 9\n";

// Concentric cycles, innermost first. Every vertex of a layer is joined to one vertex of the next layer,
// spread evenly; the outermost cycle is the ring.
EmbeddedGraph concentric(const std::vector<int>& sizes, int shift = 0) {
  std::vector<int> off{0};
  for (int k : sizes) off.push_back(off.back() + k);
  int n = off.back();
  std::vector<int> out(n, -1), in(n, -1);
  for (std::size_t j = 0; j + 1 < sizes.size(); ++j) {
    for (int i = 0; i < sizes[j]; ++i) {
      int u = off[j] + i;
      int v = off[j + 1] + (i * sizes[j + 1] / sizes[j] + (j > 0 ? shift : 0)) % sizes[j + 1];
      out[u] = v;
      in[v] = u;
    }
  }
  std::vector<std::vector<VertexId>> rot(n);
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    for (int i = 0; i < sizes[j]; ++i) {
      int v = off[j] + i;
      auto& r = rot[v];
      if (out[v] >= 0) r.push_back(out[v]);
      r.push_back(off[j] + (i + 1) % sizes[j]);
      if (in[v] >= 0) r.push_back(in[v]);
      r.push_back(off[j] + (i + sizes[j] - 1) % sizes[j]);
    }
  }
  Ring ring{RingKind::Facial, {}};
  for (int v = off[sizes.size() - 1]; v < n; ++v) ring.vertices.push_back(v);
  return build(rot, {ring});
}

Precoloring alternating(const EmbeddedGraph& g) {
  Precoloring phi;
  const auto& rv = g.rings()[0].vertices;
  for (std::size_t i = 0; i < rv.size(); ++i) phi[rv[i]] = 1 + static_cast<int>(i % 2);
  if (rv.size() % 2) phi[rv.back()] = 3;
  return phi;
}

struct Sweep {
  long long pairs = 0, oracle_yes = 0, disagreements = 0, bad_colorings = 0;
  long long reductions = 0, fallbacks = 0;
  std::vector<std::pair<const EmbeddedGraph*, Precoloring>> refused;
  std::string first_problem;
};

class Suite {
 public:
  explicit Suite(const AcceptanceOptions& o) : opt_(o), w_(default_weight_fn()) {}

  std::vector<CriterionResult> run() {
    std::vector<CriterionResult> out;
    using Fn = CriterionResult (Suite::*)();
    const std::vector<Fn> all = {&Suite::c1, &Suite::c2,  &Suite::c3, &Suite::c4, &Suite::c5, &Suite::c6,
                                 &Suite::c7, &Suite::c8, &Suite::c9, &Suite::c10, &Suite::c11};
    for (int i = 1; i <= 11; ++i) {
      if (!opt_.only.empty() && std::find(opt_.only.begin(), opt_.only.end(), i) == opt_.only.end()) continue;
      auto t0 = std::chrono::steady_clock::now();
      CriterionResult r;
      try {
        r = (this->*all[i - 1])();
      } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
      }
      r.id = i;
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (opt_.on_result) opt_.on_result(r);
      out.push_back(r);
    }
    return out;
  }

 private:
  void note(const std::string& s) const {
    if (opt_.log) opt_.log(s);
  }

  int small_n() const { return opt_.quick ? 10 : 12; }
  // R-critical corpus sizes; rings of length 9..12 go two vertices further so that clause (b) shows up
  int critical_n(int l) const { return (opt_.quick ? 12 : 14) + (l >= 9 ? 2 : 0); }

  const std::vector<EmbeddedGraph>& corpus(int l, int n, bool critical) {
    auto key = std::make_tuple(l, n, critical);
    auto it = corpora_.find(key);
    if (it != corpora_.end()) return it->second;
    auto gs = enumerate_corpus({l, n, 5, critical});
    note("corpus l=" + std::to_string(l) + " n<=" + std::to_string(n) + (critical ? " critical" : "") + ": " +
         std::to_string(gs.size()) + " graphs");
    return corpora_.emplace(key, std::move(gs)).first->second;
  }

  std::vector<const EmbeddedGraph*> small_corpus(int lmax) {
    std::vector<const EmbeddedGraph*> out;
    for (int l = 5; l <= lmax; ++l)
      for (const auto& g : corpus(l, small_n(), false)) out.push_back(&g);
    return out;
  }

  const std::vector<EmbeddedGraph>& hosts() {
    if (hosts_.empty()) {
      for (int ring : opt_.quick ? std::vector<int>{5} : std::vector<int>{5, 8})
        for (const auto& c : catalog()) hosts_.push_back(canonical_host(c, ring).graph);
    }
    return hosts_;
  }

  // Graphs meeting the invariant hypotheses of the charge lemmas, where the small corpus does not.
  const std::vector<EmbeddedGraph>& layered() {
    if (layered_.empty()) {
      std::vector<std::pair<std::vector<int>, int>> specs = {{{5, 10}, 0},      {{7, 14}, 0},      {{9, 18}, 0},
                                                             {{11, 22}, 0},     {{5, 10, 20}, 0},  {{5, 10, 20}, 1},
                                                             {{7, 14, 28}, 0},  {{9, 18, 36}, 0},  {{5, 15}, 0},
                                                             {{5, 10, 20, 40}, 0}};
      for (const auto& [sizes, shift] : specs) layered_.push_back(concentric(sizes, shift));
    }
    return layered_;
  }

  // Audits with both the default M (4-cycle capture) and the touching subgraph.
  const std::vector<ChargeAudit>& audits() {
    if (!audits_.empty()) return audits_;
    for (const EmbeddedGraph* g : small_corpus(10)) {
      auto cap = capture_4cycles(*g);
      auto touch = touching_subgraph(*g);
      audits_.push_back(audit_charges(*g, cap, w_.epsilon(), w_));
      if (touch != cap) audits_.push_back(audit_charges(*g, touch, w_.epsilon(), w_));
    }
    return audits_;
  }

  const Sweep& sweep() {
    if (swept_) return sweep_;
    swept_ = true;
    for (const EmbeddedGraph* g : small_corpus(9)) {
      for (const auto& phi : ring_precolorings(*g, true)) {
        ++sweep_.pairs;
        auto ref = oracle_extend(*g, phi);
        DiskSolveStats st;
        auto plain = solve_disk(*g, phi, 18);
        auto eager = solve_disk(*g, phi, 0, &st);
        sweep_.reductions += st.reductions;
        sweep_.fallbacks += st.fallbacks;
        bool agree = plain.has_value() == ref.has_value() && eager.has_value() == ref.has_value();
        if (!agree) {
          ++sweep_.disagreements;
          if (sweep_.first_problem.empty()) sweep_.first_problem = "disagreement on\n" + serialize(*g, phi);
        }
        for (const auto* c : {&plain, &eager})
          if (*c && !extends(*g, phi, **c)) ++sweep_.bad_colorings;
        if (ref)
          ++sweep_.oracle_yes;
        else
          sweep_.refused.push_back({g, phi});
      }
    }
    return sweep_;
  }

  CriterionResult c1() {
    CriterionResult r;
    r.title = "constants";
    auto w = make_weight_fn(frac(2, 4113), frac(4, 4113), frac(72, 4113), frac(540, 4113), frac(2184, 4113));
    auto bad = w.violation();
    bool s4 = 135 * w.s(5) == w.s(7);
    r.pass = !bad && s4;
    r.detail = std::string(bad ? "violates " + bad->first + ": " + bad->second : "S1-S5 and eps hold") +
               ", 135s(5)" + (s4 ? "=" : "!=") + "s(7)=" + to_string(w.s(7));
    return r;
  }

  CriterionResult c2() {
    CriterionResult r;
    r.title = "initial charge bound";
    long long checked = 0, bad = 0;
    int cycles_tight = 0, cycles = 0;
    std::string first;
    for (const auto& a : audits()) {
      for (const auto& l : a.lines) {
        if (l.lemma != "initcharge") continue;
        ++checked;
        if (l.verdict != LemmaVerdict::Holds) {
          ++bad;
          if (first.empty()) first = l.str();
        }
      }
    }
    for (int l = 5; l <= 10; ++l) {
      for (const auto& g : corpus(l, small_n(), false)) {
        if (g.m() != l) continue;
        ++cycles;
        auto a = audit_charges(g, {}, w_.epsilon(), w_);
        for (const auto& line : a.lines)
          if (line.lemma == "initcharge" && line.margin == 0) ++cycles_tight;
      }
    }
    r.pass = bad == 0 && checked > 0 && cycles == 6 && cycles_tight == 6;
    r.detail = std::to_string(checked) + " audits, " + std::to_string(bad) + " over the bound, equality on " +
               std::to_string(cycles_tight) + "/" + std::to_string(cycles) + " bare cycles" +
               (first.empty() ? "" : "; first: " + first);
    return r;
  }

  CriterionResult c3() {
    CriterionResult r;
    r.title = "conservation";
    long long lines = 0, bad = 0, created = 0;
    std::string first;
    for (const auto& a : audits()) {
      for (const auto& l : a.lines) {
        if (l.lemma != "conservation") continue;
        ++lines;
        if (l.verdict != LemmaVerdict::Holds) {
          ++bad;
          if (first.empty()) first = l.str();
        }
      }
      for (auto [rule, delta] : a.rule_deltas)
        if (rule == 5 && delta != 0) ++created;
    }
    r.pass = bad == 0 && lines > 0;
    r.detail = std::to_string(audits().size()) + " audits, " + std::to_string(lines) + " rule checks, " +
               std::to_string(bad) + " failures, rule 5 created charge in " + std::to_string(created) +
               (first.empty() ? "" : "; first: " + first);
    return r;
  }

  CriterionResult c4() {
    CriterionResult r;
    r.title = "charge lemmas";
    const std::vector<std::string> lemmas = {"primaryvertex", "lemma-primary", "finalvertex", "finalbigface",
                                             "final5face",    "safereach",     "fincharges",  "reach-bound",
                                             "noconfigweight", "newconfigweight"};
    struct Count {
      long long holds = 0, violated = 0, skipped = 0;
    };
    std::map<std::string, Count> count;
    std::string first;
    auto tally = [&](const ChargeAudit& a) {
      for (const auto& l : a.lines) {
        if (std::find(lemmas.begin(), lemmas.end(), l.lemma) == lemmas.end()) continue;
        auto& c = count[l.lemma];
        if (l.verdict == LemmaVerdict::Holds) ++c.holds;
        if (l.verdict == LemmaVerdict::Skipped) ++c.skipped;
        if (l.verdict == LemmaVerdict::Violated) {
          ++c.violated;
          if (first.empty()) first = l.str();
        }
      }
    };
    for (const auto& a : audits()) tally(a);
    std::vector<EmbeddedGraph> extra = hosts();
    extra.insert(extra.end(), layered().begin(), layered().end());
    for (const auto& g : extra) {
      tally(audit_charges(g, capture_4cycles(g), w_.epsilon(), w_));
      tally(audit_charges(g, touching_subgraph(g), w_.epsilon(), w_));
    }
    long long violated = 0, skipped = 0;
    std::ostringstream d;
    for (const auto& l : lemmas) {
      const Count& c = count[l];
      violated += c.violated;
      skipped += c.skipped;
      d << l << " " << c.holds << "/" << c.violated << "/" << c.skipped << "; ";
    }
    r.pass = violated == 0;
    r.detail = "holds/violated/skipped per lemma: " + d.str() + "skipped total " + std::to_string(skipped) +
               (first.empty() ? "" : "; first violation: " + first);
    return r;
  }

  static Precoloring map_phi(const ReductionResult& r, const Precoloring& phi, bool& proper) {
    Precoloring out;
    proper = true;
    for (auto [v, c] : phi) {
      VertexId w = r.vertex_map[v];
      if (out.count(w) && out[w] != c) proper = false;
      out[w] = c;
    }
    for (auto [v, c] : out)
      for (VertexId u : r.graph.neighbors(v)) proper = proper && !(out.count(u) && out[u] == c);
    return out;
  }

  CriterionResult c5() {
    CriterionResult r;
    r.title = "lift soundness";
    long long lifts = 0, failures = 0, refused = 0, clashing = 0;
    std::set<std::string> covered;
    std::string first;
    for (const auto& g : hosts()) {
      auto phis = ring_precolorings(g, true);
      for (const auto& a : find_appearances(g, Strength::Strong)) {
        for (const auto& phi : phis) {
          auto red = reduce(g, a, phi);
          bool proper = true;
          Precoloring phi2 = map_phi(red, phi, proper);
          if (!proper) {
            ++clashing;
            continue;
          }
          auto sub = oracle_extend(red.graph, phi2);
          if (!sub) {
            ++refused;
            continue;
          }
          ++lifts;
          covered.insert(a.conf().id);
          bool ok = false;
          std::string why;
          try {
            ok = extends(g, phi, lift_coloring(g, red, *sub));
            if (!ok) why = "lift is not a proper extension";
          } catch (const std::exception& e) {
            why = e.what();
          }
          if (!ok) {
            ++failures;
            if (first.empty()) first = describe(a) + ": " + why;
          }
        }
      }
    }
    r.pass = failures == 0 && lifts > 0 && covered.size() == catalog().size();
    r.detail = std::to_string(lifts) + " lifts, " + std::to_string(failures) + " failures, " +
               std::to_string(covered.size()) + "/" + std::to_string(catalog().size()) +
               " configurations, reduced graph refused " + std::to_string(refused) + ", phi clashes in G' " +
               std::to_string(clashing) + (first.empty() ? "" : "; first: " + first);
    return r;
  }

  CriterionResult c6() {
    CriterionResult r;
    r.title = "solver equivalence";
    const Sweep& s = sweep();
    r.pass = s.disagreements == 0 && s.bad_colorings == 0 && s.pairs > 0;
    r.detail = std::to_string(s.pairs) + " (graph, precoloring) pairs, " + std::to_string(s.oracle_yes) +
               " extend, " + std::to_string(s.disagreements) + " disagreements, " + std::to_string(s.bad_colorings) +
               " improper answers, eager solver reductions " + std::to_string(s.reductions) + ", fallbacks " +
               std::to_string(s.fallbacks) + (s.first_problem.empty() ? "" : "; " + s.first_problem);
    return r;
  }

  // Clauses of the plane characterization, evaluated directly on G - V(R).
  static std::vector<char> clauses(const EmbeddedGraph& g) {
    int l = g.rings()[0].length();
    std::vector<VertexId> inner;
    for (VertexId v = 0; v < g.n(); ++v)
      if (g.is_internal(v)) inner.push_back(v);
    int nh = static_cast<int>(inner.size()), mh = 0;
    for (int e = 0; e < g.m(); ++e) {
      auto [a, b] = g.edge_ends(e);
      mh += g.is_internal(a) && g.is_internal(b);
    }
    std::vector<int> comp(g.n(), -1);
    int comps = 0;
    for (VertexId s : inner) {
      if (comp[s] >= 0) continue;
      std::vector<VertexId> st{s};
      comp[s] = comps;
      while (!st.empty()) {
        VertexId v = st.back();
        st.pop_back();
        for (VertexId u : g.neighbors(v))
          if (g.is_internal(u) && comp[u] < 0) comp[u] = comps, st.push_back(u);
      }
      ++comps;
    }
    bool connected = comps == 1;
    bool a = l >= 9 && connected && mh == nh - 1 && nh <= l - 8;
    bool b = false;
    if (l >= 10 && connected && mh == nh && nh <= l - 5) {
      for (const Cycle& c : cycles_up_to(g, 9)) {
        bool internal = true;
        for (VertexId v : c) internal = internal && g.is_internal(v);
        if (internal) b = c.size() == 5;
      }
    }
    bool c = false;
    if (l == 12) {
      const auto& rv = g.rings()[0].vertices;
      for (int off = 0; off < 2 && !c; ++off) {
        bool ok = true;
        for (int i = off; i < 12; i += 2) {
          bool on5 = false;
          for (int f : g.faces_at(rv[i])) on5 = on5 || (!g.is_ring_face(f) && g.faces()[f].length == 5);
          ok = ok && g.degree(rv[i]) == 2 && on5;
        }
        c = ok;
      }
    }
    return {a, b, c};
  }

  CriterionResult c7() {
    CriterionResult r;
    r.title = "plane characterization";
    int classified = 0, not_induced = 0, bad = 0;
    std::map<std::string, int> by;
    std::string first;
    auto judge = [&](const EmbeddedGraph& g) {
      auto cl = clauses(g);
      int hits = cl[0] + cl[1] + cl[2];
      PlaneCase pc = planechar_case(g);
      std::string want = hits != 1 ? "?" : cl[0] ? "A" : cl[1] ? "B" : "C";
      by[to_string(pc)]++;
      if (hits != 1 || want != to_string(pc)) {
        ++bad;
        if (first.empty()) first = "clauses " + std::to_string(hits) + ", case " + to_string(pc) + " on\n" + serialize(g);
      } else {
        ++classified;
      }
      return pc;
    };
    for (int l = 9; l <= 12; ++l) {
      for (const auto& g : corpus(l, critical_n(l), true)) {
        if (!ring_is_induced(g, 0)) {
          ++not_induced;
          continue;
        }
        judge(g);
      }
    }
    PlaneCase pb = judge(concentric({5, 10}));
    PlaneCase pe2 = judge(parse_graph(kE2).graph);
    r.pass = bad == 0 && classified > 0 && pe2 == PlaneCase::A && pb == PlaneCase::B;
    std::ostringstream d;
    d << classified << " classified, " << bad << " unmatched or ambiguous, " << not_induced
      << " with a non-induced ring; ";
    for (auto [k, v] : by) d << k << "=" << v << " ";
    d << "; E2 -> " << to_string(pe2) << ", pentagon in a 10-ring -> " << to_string(pb);
    r.detail = d.str() + (first.empty() ? "" : "; first: " + first);
    return r;
  }

  CriterionResult c8() {
    CriterionResult r;
    r.title = "disk weight bounds";
    int checked = 0, bad = 0, tight = 0;
    std::string first;
    for (int l = 5; l <= 12; ++l) {
      for (const auto& g : corpus(l, critical_n(l), true)) {
        auto rep = check_diskgirth5(g, w_, true);
        ++checked;
        tight += rep.tight;
        if (!rep.holds) {
          ++bad;
          if (first.empty()) first = rep.describe() + " on\n" + serialize(g);
        }
      }
    }
    auto e1 = check_diskgirth5(parse_graph(kE1).graph, w_);
    auto e2 = check_diskgirth5(parse_graph(kE2).graph, w_);
    bool e1ok = e1.holds && e1.tight && e1.weight == 2 * w_.s(5) && e1.bound && *e1.bound == w_.s(5) + w_.s(5);
    bool e2ok = e2.holds && e2.tight && e2.weight == 3 * w_.s(5) && e2.bound && *e2.bound == w_.s(5) + 2 * w_.s(5);
    r.pass = bad == 0 && checked > 0 && e1ok && e2ok;
    r.detail = std::to_string(checked) + " critical graphs, " + std::to_string(bad) + " violations, " +
               std::to_string(tight) + " tight; E1 " + e1.describe() + "; E2 " + e2.describe() +
               (first.empty() ? "" : "; first: " + first);
    return r;
  }

  CriterionResult c9() {
    CriterionResult r;
    r.title = "critical extraction";
    const Sweep& s = sweep();
    long long ok = 0, bad = 0, max_ratio_num = 0, max_ratio_den = 1;
    std::string first;
    for (const auto& [g, phi] : s.refused) {
      std::string why;
      try {
        Subgraph h = extract_critical(*g, phi);
        std::vector<char> seen(g->n(), 0);
        for (VertexId v : h.to_host) seen[v] = 1;
        for (VertexId v : g->ring_vertices())
          if (!seen[v]) why = "ring vertex " + std::to_string(v) + " missing";
        Precoloring phih;
        for (VertexId v = 0; v < h.graph.n(); ++v)
          if (phi.count(h.to_host[v])) phih[v] = phi.at(h.to_host[v]);
        if (oracle_extend(h.graph, phih)) why = "phi extends to H";
        if (why.empty() && is_phi_critical(h.graph, phih).verdict != CritVerdict::PhiCritical)
          why = "H is not phi-critical";
        long long cap = 1715LL * static_cast<long long>(g->ring_vertices().size());
        if (h.graph.n() > cap) why = "H too large";
        long long ring = static_cast<long long>(g->ring_vertices().size());
        if (h.graph.n() * max_ratio_den > max_ratio_num * ring) max_ratio_num = h.graph.n(), max_ratio_den = ring;
      } catch (const std::exception& e) {
        why = e.what();
      }
      if (why.empty()) {
        ++ok;
      } else {
        ++bad;
        if (first.empty()) first = why + " on\n" + serialize(*g, phi);
      }
    }
    r.pass = bad == 0 && ok > 0;
    r.detail = std::to_string(s.refused.size()) + " non-extendable pairs, " + std::to_string(ok) +
               " certified, " + std::to_string(bad) + " failures, largest |V(H)|/|V(C)| = " +
               std::to_string(max_ratio_num) + "/" + std::to_string(max_ratio_den) +
               (first.empty() ? "" : "; first: " + first);
    return r;
  }

  CriterionResult c10() {
    CriterionResult r;
    r.title = "reduction audits";
    std::vector<const EmbeddedGraph*> objects = small_corpus(10);
    for (int l = 5; l <= 12; ++l)
      for (const auto& g : corpus(l, critical_n(l), true)) objects.push_back(&g);
    for (const auto& g : hosts()) objects.push_back(&g);
    for (const auto& g : layered()) objects.push_back(&g);
    long long found = 0, no_i3 = 0, bad = 0, winners = 0, short_cycles = 0, six_inside = 0;
    int max_el = 0;
    std::string first;
    for (const EmbeddedGraph* g : objects) {
      auto apps = find_appearances(*g, Strength::Strong);
      if (apps.empty()) continue;
      if (!check_invariant(*g, Inv::I3).holds) {
        no_i3 += static_cast<long long>(apps.size());
        continue;
      }
      Precoloring phi = alternating(*g);
      for (const auto& a : apps) {
        ++found;
        std::string why;
        try {
          auto red = reduce(*g, a, phi);
          auto gpp = i0_core(red);
          auto el = elasticity_audit(*g, red, gpp);
          max_el = std::max(max_el, el.total);
          if (!el.ok()) why = "elasticity: " + el.violations[0];
          else if (el.total > 10) why = "elasticity sum " + std::to_string(el.total);
          auto cover = face_cover_audit(*g, red, gpp);
          six_inside += !cover.notes.empty();
          if (why.empty() && !cover.ok()) why = "face cover: " + cover.violations[0];
          auto win = winners_audit(*g, red, gpp, w_);
          winners += win.applicable;
          if (why.empty() && !win.ok()) why = "winners: " + win.violations[0];
          auto sc = verify_short_cycle_lemma(*g, red);
          short_cycles += sc.applicable;
          if (why.empty() && !sc.ok()) why = "short cycles: " + sc.violations[0];
        } catch (const std::exception& e) {
          why = e.what();
        }
        if (!why.empty()) {
          ++bad;
          if (first.empty()) first = describe(a) + ": " + why + " on\n" + serialize(*g);
        }
      }
    }
    r.pass = bad == 0 && found > 0;
    r.detail = std::to_string(objects.size()) + " graphs, " + std::to_string(found) + " Strong appearances audited, " +
               std::to_string(no_i3) + " on hosts failing I3 not audited, " + std::to_string(bad) +
               " failing, max elasticity sum " + std::to_string(max_el) + ", R3 6-face inside a member " +
               std::to_string(six_inside) + ", winners audit applicable " + std::to_string(winners) +
               ", short-cycle lemma applicable " + std::to_string(short_cycles) +
               (first.empty() ? "" : "; first: " + first);
    return r;
  }

  CriterionResult c11() {
    CriterionResult r;
    r.title = "strengthening";
    auto g = parse_graph(kPrism).graph;
    std::string why;
    int wheels = 0, tried = 0;
    for (const auto& a : find_appearances(g, Strength::Appears)) {
      if (a.conf().id != "R1") continue;
      ++tried;
      auto s = strengthen(g, a);
      if (s.strong || !s.wheel) {
        why = "no wheel from " + describe(a);
        continue;
      }
      const auto& w = *s.wheel;
      bool ok = w.s == 5 && static_cast<int>(w.ring.size()) == 2 * w.s && static_cast<int>(w.cycle.size()) == w.s &&
                g.rings()[0].length() == 2 * w.s;
      for (VertexId v : w.cycle) {
        int on_ring = 0;
        for (VertexId u : g.neighbors(v)) on_ring += g.is_ring_vertex(u);
        ok = ok && g.is_internal(v) && g.degree(v) == 3 && on_ring == 1;
      }
      for (std::size_t i = 0; i < w.cycle.size(); ++i)
        ok = ok && g.adjacent(w.cycle[i], w.cycle[(i + 1) % w.cycle.size()]);
      if (ok) ++wheels;
      else why = "wheel does not match the outcome conditions";
    }
    r.pass = tried > 0 && wheels == tried;
    r.detail = std::to_string(wheels) + "/" + std::to_string(tried) + " R1 appearances give ExceptionalWheel(s=5)" +
               (why.empty() ? "" : "; " + why);
    return r;
  }

  AcceptanceOptions opt_;
  WeightFunction w_;
  std::map<std::tuple<int, int, bool>, std::vector<EmbeddedGraph>> corpora_;
  std::vector<EmbeddedGraph> hosts_;
  std::vector<EmbeddedGraph> layered_;
  std::vector<ChargeAudit> audits_;
  Sweep sweep_;
  bool swept_ = false;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  Suite s(opt);
  return s.run();
}

}  // namespace g5

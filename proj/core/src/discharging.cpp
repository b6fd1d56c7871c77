#include "g5/discharging.hpp"

#include "g5/catalog.hpp"
#include "g5/invariants.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace g5 {

const char* to_string(Phase p) {
  switch (p) {
    case Phase::Initial: return "Initial";
    case Phase::Primary: return "Primary";
    case Phase::Final: return "Final";
  }
  return "?";
}

const char* to_string(LemmaVerdict v) {
  switch (v) {
    case LemmaVerdict::Holds: return "Holds";
    case LemmaVerdict::Violated: return "Violated";
    case LemmaVerdict::Skipped: return "Skipped";
  }
  return "?";
}

std::string Node::str() const {
  switch (kind) {
    case Kind::Vertex: return "v" + std::to_string(id);
    case Kind::Face: return "f" + std::to_string(id);
    case Kind::None: break;
  }
  return "-";
}

Q ChargeLedger::total() const {
  Q t = 0;
  for (const Q& q : vertex) t += q;
  for (const Q& q : face) t += q;
  return t;
}

const Q& ChargeLedger::at(Node n) const { return n.kind == Node::Kind::Vertex ? vertex[n.id] : face[n.id]; }

void ChargeLedger::move(int rule, Node from, Node to, const Q& amount, int edge) {
  (from.kind == Node::Kind::Vertex ? vertex[from.id] : face[from.id]) -= amount;
  (to.kind == Node::Kind::Vertex ? vertex[to.id] : face[to.id]) += amount;
  log.push_back({rule, from, to, amount, edge});
}

void ChargeLedger::create(int rule, Node to, const Q& amount) {
  (to.kind == Node::Kind::Vertex ? vertex[to.id] : face[to.id]) += amount;
  log.push_back({rule, Node{}, to, amount, -1});
}

ChargeLedger replay(const ChargeLedger& from, const std::vector<Transfer>& log, std::size_t begin) {
  ChargeLedger out = from;
  out.log.clear();
  for (std::size_t i = begin; i < log.size(); ++i) {
    const Transfer& t = log[i];
    if (t.from.kind == Node::Kind::None)
      out.create(t.rule, t.to, t.amount);
    else
      out.move(t.rule, t.from, t.to, t.amount, t.edge);
  }
  return out;
}

std::vector<int> capture_4cycles(const EmbeddedGraph& g) {
  std::set<int> edges;
  for (const Cycle& c : cycles_up_to(g, 4))
    for (std::size_t i = 0; i < c.size(); ++i) edges.insert(g.edge_id(c[i], c[(i + 1) % c.size()]));
  return {edges.begin(), edges.end()};
}

bool captures_4cycles(const EmbeddedGraph& g, const std::vector<int>& M) {
  std::set<int> in(M.begin(), M.end());
  for (const Cycle& c : cycles_up_to(g, 4))
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!in.count(g.edge_id(c[i], c[(i + 1) % c.size()]))) return false;
  if (M.empty()) return true;
  std::vector<int> deg(g.n(), 0);
  for (int e : M) {
    auto [u, v] = g.edge_ends(e);
    ++deg[u];
    ++deg[v];
  }
  for (int d : deg)
    if (d == 1) return false;
  return true;
}

std::vector<int> touching_subgraph(const EmbeddedGraph& g) {
  std::vector<int> M = capture_4cycles(g);
  std::set<int> in(M.begin(), M.end());
  for (const auto& a : find_appearances(g, Strength::Appears)) {
    std::vector<int> cur(in.begin(), in.end());
    if (touched_by(g, a, cur)) continue;
    for (int f : a.face_map) {
      if (f < 0 || g.faces()[f].walks.size() != 1) continue;
      for (DartId d : g.faces()[f].walks[0]) in.insert(d / 2);
      break;
    }
  }
  return {in.begin(), in.end()};
}

namespace {

bool in_facial_ring(const EmbeddedGraph& g, VertexId v) { return g.is_ring_vertex(v) && !g.is_vertex_ring(v); }

std::vector<char> m_faces(const EmbeddedGraph& g, const std::vector<int>& M) {
  std::vector<char> out(g.num_faces(), 0);
  for (int e : M)
    for (int f : g.edge_faces(e)) out[f] = 1;
  return out;
}

// corners of f, one per dart of its boundary walks (vertex = tail)
std::vector<DartId> corners(const EmbeddedGraph& g, int f) {
  std::vector<DartId> out;
  for (const auto& w : g.faces()[f].walks) out.insert(out.end(), w.begin(), w.end());
  return out;
}

bool is_cuff_of_vertex_ring(const EmbeddedGraph& g, int f) { return g.is_vertex_ring_cuff(f); }

}  // namespace

ChargeLedger initial(const EmbeddedGraph& g, const std::vector<int>& M) {
  ChargeLedger L;
  L.phase = Phase::Initial;
  L.M = M;
  std::sort(L.M.begin(), L.M.end());
  L.vertex.assign(g.n(), 0);
  L.face.assign(g.num_faces(), 0);
  auto touched = m_faces(g, L.M);
  for (int f = 0; f < g.num_faces(); ++f) {
    if (!g.is_ring_face(f)) L.face[f] = g.faces()[f].length - 4;
    if (touched[f]) L.face[f] += frac(5, 3);
  }
  for (VertexId v = 0; v < g.n(); ++v) {
    int d = g.degree(v);
    if (g.is_vertex_ring(v))
      L.vertex[v] = d;
    else if (g.is_ring_vertex(v))
      L.vertex[v] = d == 2 ? frac(-1, 3) : Q(d - 3);
    else
      L.vertex[v] = d - 4;
  }
  return L;
}

std::vector<FaceDanger> classify_danger(const EmbeddedGraph& g, const std::vector<int>& M) {
  std::vector<FaceDanger> out(g.num_faces());
  auto touched = m_faces(g, M);
  auto internal3 = [&](VertexId v) { return g.is_internal(v) && g.degree(v) == 3; };

  for (VertexId y = 0; y < g.n(); ++y) {
    if (g.degree(y) != 3) continue;
    for (DartId e0 : g.darts_out(y)) {
      VertexId x = g.head(e0);
      out[g.corner_face(g.rot_next(e0))].opposite_of.push_back(x);
    }
  }
  for (auto& fd : out) {
    std::sort(fd.opposite_of.begin(), fd.opposite_of.end());
    fd.opposite_of.erase(std::unique(fd.opposite_of.begin(), fd.opposite_of.end()), fd.opposite_of.end());
  }

  for (int f = 0; f < g.num_faces(); ++f) {
    const Face& face = g.faces()[f];
    if (face.length != 5 || touched[f]) continue;
    std::vector<VertexId> vs = g.face_vertices(f);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    int k = 0;
    for (VertexId v : vs) k += internal3(v) ? 1 : 0;
    out[f].k_dangerous = k;
    if (k != 4 || face.walks.size() != 1 || vs.size() != 5) continue;
    const auto& w = face.walks[0];
    int odd = 0;
    while (internal3(g.tail(w[odd]))) ++odd;
    DartId uv = w[(odd + 2) % 5];
    out[f].link_edge = uv / 2;
    out[f].linked_face = g.face_of_dart(g.twin(uv));
    bool on_ring = false;
    for (VertexId v : vs) on_ring = on_ring || g.is_ring_vertex(v);
    bool opposite_vr = false;
    for (VertexId x : out[f].opposite_of) opposite_vr = opposite_vr || g.is_vertex_ring(x);
    out[f].extremely_4dangerous = !on_ring && !opposite_vr;
  }
  for (int f = 0; f < g.num_faces(); ++f)
    if (out[f].linked_face >= 0) out[out[f].linked_face].linked_from.push_back({f, out[f].link_edge});
  return out;
}

ChargeLedger primary(const EmbeddedGraph& g, const ChargeLedger& init) {
  ChargeLedger L = init;
  L.phase = Phase::Primary;
  const Q third = frac(1, 3);
  auto danger = classify_danger(g, L.M);
  auto touched = m_faces(g, L.M);

  // Rule 1
  for (int f : g.internal_faces())
    for (DartId d : corners(g, f)) {
      VertexId v = g.tail(d);
      bool deg2_ring = g.degree(v) == 2 && in_facial_ring(g, v);
      bool deg3_internal = g.degree(v) == 3 && g.is_internal(v);
      if (deg2_ring || deg3_internal) L.move(1, Node::face(f), Node::vertex(v), third);
    }

  // Rule 2
  for (VertexId v = 0; v < g.n(); ++v) {
    if (in_facial_ring(g, v)) {
      for (DartId d : g.darts_out(v)) {
        int f = g.corner_face(d);
        if (danger[f].k_dangerous == 4) L.move(2, Node::vertex(v), Node::face(f), third);
      }
    } else if (g.is_vertex_ring(v)) {
      int cuff = g.cuff_face(g.ring_of(v));
      L.move(2, Node::vertex(v), Node::face(cuff), frac(8, 9));
      for (DartId d : g.darts_out(v)) {
        int f = g.corner_face(d);
        if (f != cuff) L.move(2, Node::vertex(v), Node::face(f), third);
      }
      for (VertexId y : g.neighbors(v)) {
        if (g.degree(y) != 3) continue;
        int g3 = g.corner_face(g.rot_next(g.dart(y, v)));
        L.move(2, Node::vertex(v), Node::face(g3), third);
      }
    }
  }

  // Rule 3
  for (int fp = 0; fp < g.num_faces(); ++fp) {
    if (!danger[fp].extremely_4dangerous) continue;
    int f = danger[fp].linked_face;
    if (g.faces()[f].length >= 6 || touched[f] || is_cuff_of_vertex_ring(g, f))
      L.move(3, Node::face(f), Node::face(fp), third, danger[fp].link_edge);
  }

  // Rule 4
  auto linked_extreme = [&](DartId d) {
    int other = g.face_of_dart(g.twin(d));
    return danger[other].extremely_4dangerous && danger[other].link_edge == d / 2;
  };
  for (int fp : g.internal_faces()) {
    if (g.faces()[fp].length < 7) continue;
    for (const auto& w : g.faces()[fp].walks) {
      const int k = static_cast<int>(w.size());
      for (int i = 0; i < k; ++i) {
        DartId d1 = w[i], d2 = w[(i + 1) % k], d3 = w[(i + 2) % k];
        if (!linked_extreme(d1) || !linked_extreme(d3)) continue;
        int f = g.face_of_dart(g.twin(d2));
        if (g.faces()[f].length >= 6) L.move(4, Node::face(f), Node::face(fp), frac(1, 9), d2 / 2);
      }
    }
  }
  return L;
}

SafeReach safe_and_reachable(const EmbeddedGraph& g, const ChargeLedger& prim) {
  SafeReach out;
  out.safe.assign(g.n(), 0);
  for (VertexId v = 0; v < g.n(); ++v) {
    bool s = g.degree(v) >= 5 || g.is_ring_vertex(v);
    for (DartId d : g.darts_out(v)) s = s || prim.face[g.corner_face(d)] > 0;
    out.safe[v] = s;
  }
  out.reach3.assign(g.n(), {});
  for (VertexId v = 0; v < g.n(); ++v) {
    std::vector<int> dist(g.n(), -1);
    std::deque<VertexId> q{v};
    dist[v] = 0;
    std::set<int> faces;
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop_front();
      for (DartId d : g.darts_out(x)) faces.insert(g.corner_face(d));
      if (g.degree(x) == 0) faces.insert(g.isolated_face(x));
      if (dist[x] == 3) continue;
      for (VertexId y : g.neighbors(x))
        if (dist[y] < 0 && !out.safe[y]) {
          dist[y] = dist[x] + 1;
          q.push_back(y);
        }
    }
    out.reach3[v].assign(faces.begin(), faces.end());
  }
  return out;
}

ChargeLedger final_charges(const EmbeddedGraph& g, const ChargeLedger& prim, const Q& epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  ChargeLedger L = prim;
  L.phase = Phase::Final;
  L.epsilon = epsilon;
  // Rule 5
  for (VertexId v = 0; v < g.n(); ++v)
    if (in_facial_ring(g, v) && g.degree(v) == 3) L.create(5, Node::vertex(v), 26 * epsilon);
  // Rule 6
  for (int f = 0; f < g.num_faces(); ++f)
    if (prim.face[f] > 0)
      for (DartId d : corners(g, f)) L.move(6, Node::face(f), Node::vertex(g.tail(d)), 46 * epsilon);
  // Rule 7
  SafeReach sr = safe_and_reachable(g, prim);
  for (VertexId v = 0; v < g.n(); ++v) {
    if (!(g.is_vertex_ring(v) || (sr.safe[v] && g.degree(v) >= 3))) continue;
    for (int f : sr.reach3[v])
      if (!g.is_ring_face(f) && prim.face[f] == 0) L.move(7, Node::vertex(v), Node::face(f), epsilon);
  }
  return L;
}

std::string LemmaLine::str() const {
  std::string s = lemma + " " + object + " " + to_string(verdict) + " " + to_string(margin);
  if (!note.empty()) s += " " + note;
  return s;
}

bool ChargeAudit::ok() const {
  for (const auto& l : lines)
    if (l.verdict == LemmaVerdict::Violated) return false;
  return true;
}

bool ChargeAudit::skipped(const std::string& lemma) const {
  for (const auto& l : lines)
    if (l.lemma == lemma) return l.verdict == LemmaVerdict::Skipped;
  return true;
}

std::vector<LemmaLine> ChargeAudit::violations() const {
  std::vector<LemmaLine> out;
  for (const auto& l : lines)
    if (l.verdict == LemmaVerdict::Violated) out.push_back(l);
  return out;
}

std::string ChargeAudit::text() const {
  std::ostringstream os;
  for (const auto& l : lines) os << l.str() << "\n";
  return os.str();
}

void raise_if_violated(const ChargeAudit& a) {
  for (const auto& l : a.lines)
    if (l.verdict == LemmaVerdict::Violated) throw LemmaViolated(l);
}

namespace {

class Auditor {
 public:
  Auditor(const EmbeddedGraph& g, const std::vector<int>& M, const Q& eps, const WeightFunction& w)
      : g_(g), M_(M), eps_(eps), w_(w) {}

  ChargeAudit run();

 private:
  bool inv(Inv i) {
    int k = static_cast<int>(i);
    if (!inv_[k]) inv_[k] = check_invariant(g_, i).holds;
    return *inv_[k];
  }
  // first configuration among ids that appears and is not touched by M
  std::string untouched(const std::set<std::string>& ids) {
    if (!appearances_) appearances_ = find_appearances(g_, Strength::Appears);
    for (const auto& a : *appearances_)
      if (ids.count(a.conf().id) && !touched_by(g_, a, M_)) return a.conf().id;
    return {};
  }
  // returns the failed hypotheses, empty when all hold
  std::string primary_hyps() {
    std::string miss;
    for (Inv i : {Inv::I0, Inv::I1, Inv::I3, Inv::I4, Inv::I5, Inv::I7})
      if (!inv(i)) miss += std::string(miss.empty() ? "" : ",") + to_string(i);
    if (!captures_4cycles(g_, M_)) miss += std::string(miss.empty() ? "" : ",") + "capture";
    std::string u = untouched({"R1", "R2", "R3", "R4", "R5"});
    if (!u.empty()) miss += std::string(miss.empty() ? "" : ",") + u + "-untouched";
    return miss;
  }
  std::string safereach_hyps() {
    std::string miss = primary_hyps();
    if (!inv(Inv::I8)) miss += std::string(miss.empty() ? "" : ",") + "I8";
    std::string u = untouched({"R6", "R7"});
    if (!u.empty()) miss += std::string(miss.empty() ? "" : ",") + u + "-untouched";
    return miss;
  }
  std::string all_configs_touched() {
    std::set<std::string> ids;
    for (const auto& c : catalog()) ids.insert(c.id);
    std::string u = untouched(ids);
    return u.empty() ? u : u + "-untouched";
  }
  std::string s_conditions() {
    if (w_.s(5) != 2 * eps_) return "S1";
    if (w_.s(7) > frac(4, 9) - 644 * eps_) return "S2";
    Q slope = frac(10, 9) - 92 * eps_;
    if (w_.s(8) > slope * 8 - 8 || eps_ > frac(1, 828)) return "S3";
    return {};
  }

  void add(const std::string& lemma, const std::string& object, const Q& margin, std::string note = {}) {
    out_.lines.push_back({lemma, object, margin >= 0 ? LemmaVerdict::Holds : LemmaVerdict::Violated, margin,
                          std::move(note)});
  }
  void fail(const std::string& lemma, const std::string& object, const Q& margin, std::string note) {
    out_.lines.push_back({lemma, object, LemmaVerdict::Violated, margin, std::move(note)});
  }
  void skip(const std::string& lemma, const std::string& why) {
    out_.lines.push_back({lemma, "-", LemmaVerdict::Skipped, 0, "hypotheses: " + why});
  }

  void conservation();
  void lemma_primary(const std::vector<FaceDanger>& danger);
  void reach_bound(const SafeReach& sr);
  void safereach(const SafeReach& sr);

  const EmbeddedGraph& g_;
  std::vector<int> M_;
  Q eps_;
  const WeightFunction& w_;
  std::optional<bool> inv_[kNumInvariants];
  std::optional<std::vector<Appearance>> appearances_;
  ChargeAudit out_;
};

std::string vname(VertexId v) { return "v" + std::to_string(v); }
std::string fname(int f) { return "f" + std::to_string(f); }

void Auditor::conservation() {
  std::map<int, Q> delta;
  for (int r = 1; r <= 7; ++r) delta[r] = 0;
  for (const auto& t : out_.fin.log)
    if (t.from.kind == Node::Kind::None) delta[t.rule] += t.amount;
  int n3 = 0;
  for (VertexId v = 0; v < g_.n(); ++v) n3 += in_facial_ring(g_, v) && g_.degree(v) == 3 ? 1 : 0;
  // totals measured rule by rule from the log
  ChargeLedger cur = out_.init;
  cur.log.clear();
  for (int r = 1; r <= 7; ++r) {
    Q before = cur.total();
    std::vector<Transfer> part;
    for (const auto& t : out_.fin.log)
      if (t.rule == r) part.push_back(t);
    cur = replay(cur, part);
    Q change = cur.total() - before;
    out_.rule_deltas.push_back({r, change});
    Q expected = r == 5 ? 26 * eps_ * n3 : Q(0);
    Q gap = change - expected;
    if (gap == 0)
      add("conservation", "rule" + std::to_string(r), 0);
    else
      fail("conservation", "rule" + std::to_string(r), -abs(gap), "change " + to_string(change));
  }
  ChargeLedger rep = replay(out_.init, out_.fin.log);
  bool same = rep.vertex == out_.fin.vertex && rep.face == out_.fin.face;
  if (same)
    add("conservation", "replay", 0);
  else
    fail("conservation", "replay", -1, "log does not reproduce the final charges");
}

void Auditor::lemma_primary(const std::vector<FaceDanger>& danger) {
  auto touched = m_faces(g_, M_);
  for (int f : g_.internal_faces()) {
    const Q& c = out_.prim.face[f];
    int len = g_.faces()[f].length;
    if (c < 0) {
      fail("lemma-primary", fname(f), c, "negative");
      continue;
    }
    if (c == 0) {
      std::string why;
      if (len != 5) why = "zero charge on a face of length " + std::to_string(len);
      else if (touched[f]) why = "zero charge on an M face";
      else if (is_cuff_of_vertex_ring(g_, f)) why = "zero charge on a cuff face";
      if (!why.empty()) {
        fail("lemma-primary", fname(f), -1, why);
        continue;
      }
      std::string cases;
      const FaceDanger& d = danger[f];
      bool on_ring = false;
      for (VertexId v : g_.face_vertices(f)) on_ring = on_ring || g_.is_ring_vertex(v);
      if (d.k_dangerous == 3) cases += "a";
      if (on_ring) cases += "b";
      if (d.k_dangerous == 4 && d.linked_face >= 0) {
        int h = d.linked_face;
        int hl = g_.faces()[h].length;
        if (hl >= 6) cases += "c";
        if (hl == 5 && (touched[h] || is_cuff_of_vertex_ring(g_, h))) cases += "d";
      }
      bool opp = false;
      for (VertexId x : d.opposite_of) opp = opp || g_.is_vertex_ring(x);
      if (d.k_dangerous == 4 && opp) cases += "e";
      if (cases.empty())
        fail("lemma-primary", fname(f), -1, "zero charge outside cases (a)-(e)");
      else
        add("lemma-primary", fname(f), 0, "case " + cases);
      continue;
    }
    Q margin = c - frac(2, 9);
    if (len >= 8) margin = std::min(margin, c - (Q(5 * len) / 9 - 4));
    if (len == 6) {
      bool deg2 = false;
      for (VertexId v : g_.face_vertices(f)) deg2 = deg2 || (g_.degree(v) == 2 && in_facial_ring(g_, v));
      if (deg2) margin = std::min(margin, c - frac(2, 3));
    }
    add("lemma-primary", fname(f), margin);
  }
}

void Auditor::reach_bound(const SafeReach& sr) {
  for (VertexId v = 0; v < g_.n(); ++v) {
    int d = g_.degree(v);
    int cnt = static_cast<int>(sr.reach3[v].size());
    Q margin = 20 * d - cnt;
    for (DartId e : g_.darts_out(v)) {
      int f = g_.corner_face(e);
      if (out_.prim.face[f] > 0) {
        int others = cnt - (std::binary_search(sr.reach3[v].begin(), sr.reach3[v].end(), f) ? 1 : 0);
        margin = std::min(margin, Q(20 * (d - 3) + 26 - others));
      }
    }
    add("reach-bound", vname(v), margin);
  }
}

void Auditor::safereach(const SafeReach& sr) {
  // distance through unsafe vertices from the nearest safe vertex to a vertex of f
  std::vector<int> dist(g_.n(), -1);
  std::deque<VertexId> q;
  for (VertexId v = 0; v < g_.n(); ++v)
    if (sr.safe[v]) {
      dist[v] = 0;
      q.push_back(v);
    }
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    for (VertexId y : g_.neighbors(x))
      if (dist[y] < 0 && !sr.safe[y]) {
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
  }
  for (int f : g_.internal_faces()) {
    if (out_.prim.face[f] != 0) continue;
    int best = -1;
    for (VertexId v : g_.face_vertices(f))
      if (dist[v] >= 0 && (best < 0 || dist[v] < best)) best = dist[v];
    if (best < 0)
      fail("safereach", fname(f), -1, "no safe vertex reaches it");
    else
      add("safereach", fname(f), 3 - best);
  }
}

ChargeAudit Auditor::run() {
  std::sort(M_.begin(), M_.end());
  out_.init = initial(g_, M_);
  out_.prim = primary(g_, out_.init);
  out_.fin = final_charges(g_, out_.prim, eps_);
  auto danger = classify_danger(g_, M_);
  SafeReach sr = safe_and_reachable(g_, out_.prim);

  int n2 = 0, n3 = 0, n4 = 0;
  for (VertexId v = 0; v < g_.n(); ++v) {
    if (!in_facial_ring(g_, v)) continue;
    n2 += g_.degree(v) == 2;
    n3 += g_.degree(v) == 3;
    n4 += g_.degree(v) >= 4;
  }
  const int R = static_cast<int>(g_.rings().size());
  const int EM = static_cast<int>(M_.size());

  conservation();

  Q init_bound = 4 * R + Q(2 * n2) / 3 + Q(10 * EM) / 3 - 8;
  add("initcharge", "total", init_bound - out_.init.total());
  add("fincharge", "total", init_bound + 26 * eps_ * n3 - out_.fin.total());

  std::string pv_miss;
  for (Inv i : {Inv::I0, Inv::I3})
    if (!inv(i)) pv_miss += std::string(pv_miss.empty() ? "" : ",") + to_string(i);
  if (!pv_miss.empty()) {
    skip("primaryvertex", pv_miss);
  } else {
    for (VertexId v = 0; v < g_.n(); ++v) {
      int d = g_.degree(v);
      const Q& c = out_.prim.vertex[v];
      Q margin = c;
      if (g_.is_vertex_ring(v)) margin = std::min(margin, c - Q(d) / 9);
      else if (g_.is_ring_vertex(v) && d >= 3) margin = std::min(margin, c - Q(2 * (d - 3)) / 3);
      if (g_.is_internal(v) && d >= 4 && c != d - 4) {
        fail("primaryvertex", vname(v), -abs(c - (d - 4)), "not exactly d-4");
        continue;
      }
      add("primaryvertex", vname(v), margin);
    }
  }

  std::string lp_miss = primary_hyps();
  if (!lp_miss.empty()) {
    for (const char* l : {"lemma-primary", "reach-bound", "finalvertex", "finalbigface"}) skip(l, lp_miss);
  } else {
    lemma_primary(danger);
    reach_bound(sr);
    if (eps_ > frac(1, 180)) {
      skip("finalvertex", "eps > 1/180");
    } else {
      for (VertexId v = 0; v < g_.n(); ++v) {
        int d = g_.degree(v);
        const Q& c = out_.fin.vertex[v];
        Q margin = c;
        if (in_facial_ring(g_, v) && d >= 4) margin = std::min(margin, c - ((frac(2, 3) - 20 * eps_) * (d - 3) - 26 * eps_));
        add("finalvertex", vname(v), margin);
      }
    }
    for (int f : g_.internal_faces()) {
      int l = g_.faces()[f].length;
      const Q& c = out_.fin.face[f];
      if (l == 6 || l == 7) add("finalbigface", fname(f), c - (frac(2, 9) - 322 * eps_));
      if (l >= 8) add("finalbigface", fname(f), c - ((frac(5, 9) - 46 * eps_) * l - 4));
    }
  }

  std::string sr_miss = safereach_hyps();
  if (!sr_miss.empty()) {
    skip("safereach", sr_miss);
  } else {
    safereach(sr);
  }
  std::string f5_miss = sr_miss;
  if (eps_ > frac(2, 2079)) f5_miss += std::string(f5_miss.empty() ? "" : ",") + "eps > 2/2079";
  if (f5_miss.empty()) {
    std::string u = all_configs_touched();
    if (!u.empty()) f5_miss = u;
  }
  if (!f5_miss.empty()) {
    skip("final5face", f5_miss);
  } else {
    for (int f : g_.internal_faces())
      if (g_.faces()[f].length == 5) add("final5face", fname(f), out_.fin.face[f] - eps_);
  }

  std::string fc_miss;
  for (int i = 0; i <= 8; ++i)
    if (!inv(static_cast<Inv>(i))) fc_miss += std::string(fc_miss.empty() ? "" : ",") + to_string(static_cast<Inv>(i));
  if (!captures_4cycles(g_, M_)) fc_miss += std::string(fc_miss.empty() ? "" : ",") + "capture";
  if (fc_miss.empty()) fc_miss = all_configs_touched();
  if (fc_miss.empty() && !(eps_ > 0 && eps_ < frac(2, 2079))) fc_miss = "eps";
  if (fc_miss.empty()) fc_miss = s_conditions();
  if (!fc_miss.empty()) {
    for (const char* l : {"fincharges", "noconfigweight", "newconfigweight"}) skip(l, fc_miss);
  } else {
    for (VertexId v = 0; v < g_.n(); ++v) add("fincharges", vname(v), out_.fin.vertex[v]);
    for (int f = 0; f < g_.num_faces(); ++f) {
      if (g_.is_ring_face(f)) {
        const Q& c = out_.fin.face[f];
        if (c == 0) add("fincharges", fname(f), 0, "ring face");
        else fail("fincharges", fname(f), -abs(c), "ring face charge " + to_string(c));
      } else {
        add("fincharges", fname(f), out_.fin.face[f] - w_.s(g_.faces()[f].length) / 2);
      }
    }
    Q weight = graph_weight(g_, w_);
    Q bound = 8 * R + 52 * eps_ * n3 + Q(4 * n2) / 3 + Q(20 * EM) / 3 - 16;
    add("noconfigweight", "total", bound - weight);
    int b = n4;
    for (int f : g_.internal_faces()) {
      if (g_.faces()[f].length != 6) continue;
      bool deg2 = false;
      for (VertexId v : g_.face_vertices(f)) deg2 = deg2 || (g_.degree(v) == 2 && in_facial_ring(g_, v));
      b += deg2;
    }
    add("newconfigweight", "total", bound - Q(8 * b) / 9 - weight);
  }
  return std::move(out_);
}

}  // namespace

ChargeAudit audit_charges(const EmbeddedGraph& g, const std::vector<int>& M, const Q& epsilon,
                          const WeightFunction& w) {
  Auditor a(g, M, epsilon, w);
  return a.run();
}

}  // namespace g5

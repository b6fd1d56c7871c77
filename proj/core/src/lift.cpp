#include "g5/colorer.hpp"
#include "g5/reducer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace g5 {

namespace {

struct StepFailed {
  std::string what;
};

// A view of the configuration: index relabelling (for "by symmetry") and a colour relabelling
// (for "say phi(x1)=1").
class Lift {
 public:
  Lift(const EmbeddedGraph& g, const ReductionResult& res, Coloring col)
      : g_(g), a_(res.appearance), c_(res.appearance.conf()), col_(std::move(col)) {
    for (int v = 0; v < c_.n(); ++v)
      if (c_.in_dom(v)) dom_.insert(a_.imprint[v]);
    for (int i = 0; i <= 3; ++i) to_actual_[i] = from_actual_[i] = i;
  }

  const Configuration& conf() const { return c_; }
  const Coloring& coloring() const { return col_; }
  std::vector<std::string>& trace() { return trace_; }

  void relabel(const std::map<int, int>& sigma) {
    std::map<int, int> next;
    for (int i = 1; i <= 12; ++i) next[i] = index(sigma.count(i) ? sigma.at(i) : i);
    sigma_ = next;
    trace_.push_back("by symmetry: relabel");
  }
  int index(int i) const { return sigma_.count(i) ? sigma_.at(i) : i; }

  VertexId V(const std::string& name) const {
    char kind = name[0];
    int i = std::stoi(name.substr(1));
    std::string real = std::string(1, kind) + std::to_string(index(i));
    int ci = c_.index(real);
    if (ci >= 0) return a_.imprint[ci];
    if (kind != 'x') throw StepFailed{"configuration has no " + real};
    int vi = c_.index("v" + std::to_string(index(i)));
    if (vi < 0) throw StepFailed{"no vertex for " + real};
    VertexId host = a_.imprint[vi];
    std::set<VertexId> inside;
    for (int u : c_.neighbors(vi)) inside.insert(a_.imprint[u]);
    VertexId found = -1;
    for (VertexId u : g_.neighbors(host))
      if (!inside.count(u)) {
        if (found >= 0) throw StepFailed{real + " is not unique"};
        found = u;
      }
    if (found < 0) throw StepFailed{"no outside neighbour for " + real};
    return found;
  }

  // colour in the current naming, 0 when uncoloured
  int c(const std::string& name) const { return from_actual_[col_[V(name)]]; }
  bool colored(const std::string& name) const { return col_[V(name)] != 0; }

  // choose the colour names so that the listed vertices get the listed colours
  void normalize(const std::vector<std::pair<std::string, int>>& want) {
    std::array<int, 4> to{0, 0, 0, 0};
    std::set<int> used_actual, used_paper;
    for (const auto& [name, p] : want) {
      int actual = col_[V(name)];
      if (actual == 0) throw StepFailed{"normalising on uncoloured " + name};
      if (to[p] != 0 && to[p] != actual) throw StepFailed{"cannot normalise " + name};
      if (to[p] == 0 && used_actual.count(actual)) throw StepFailed{"cannot normalise " + name};
      to[p] = actual;
      used_actual.insert(actual);
      used_paper.insert(p);
    }
    for (int p = 1; p <= 3; ++p) {
      if (to[p]) continue;
      for (int actual = 1; actual <= 3; ++actual)
        if (!used_actual.count(actual)) {
          to[p] = actual;
          used_actual.insert(actual);
          break;
        }
    }
    for (int p = 1; p <= 3; ++p) {
      to_actual_[p] = to[p];
      from_actual_[to[p]] = p;
    }
  }

  void set(const std::string& name, int p) {
    VertexId v = V(name);
    if (!dom_.count(v)) throw StepFailed{"assigning to " + name + " outside the deleted part"};
    if (p < 1 || p > 3) throw StepFailed{"bad colour for " + name};
    col_[v] = to_actual_[p];
    trace_.push_back(name + "=" + std::to_string(p));
  }

  std::set<int> neighbour_colors(VertexId v) const {
    std::set<int> out;
    for (VertexId u : g_.neighbors(v))
      if (col_[u]) out.insert(from_actual_[col_[u]]);
    return out;
  }

  void greedy(const std::vector<std::string>& order) {
    for (const auto& name : order) {
      VertexId v = V(name);
      if (!dom_.count(v)) throw StepFailed{"greedy on " + name + " outside the deleted part"};
      std::set<int> seen = neighbour_colors(v);
      int p = 1;
      while (p <= 3 && seen.count(p)) ++p;
      if (p > 3) throw StepFailed{"greedy: " + name + " sees three colours"};
      col_[v] = to_actual_[p];
      trace_.push_back("greedy " + name + "=" + std::to_string(p));
    }
  }

  // the adjacent-pair claim
  void xext(const std::string& n1, const std::string& n2) {
    VertexId u1 = V(n1), u2 = V(n2);
    if (!g_.adjacent(u1, u2)) throw StepFailed{"xext: " + n1 + " " + n2 + " not adjacent"};
    if (g_.degree(u1) != 3 || g_.degree(u2) != 3) throw StepFailed{"xext: degree is not three"};
    std::vector<int> w1, w2;
    for (VertexId x : g_.neighbors(u1))
      if (x != u2) w1.push_back(from_actual_[col_[x]]);
    for (VertexId x : g_.neighbors(u2))
      if (x != u1) w2.push_back(from_actual_[col_[x]]);
    for (int w : w1)
      if (!w) throw StepFailed{"xext: uncoloured neighbour of " + n1};
    for (int w : w2)
      if (!w) throw StepFailed{"xext: uncoloured neighbour of " + n2};
    auto r = extend_adjacent_pair(w1[0], w1[1], w2[0], w2[1]);
    if (!r) throw StepFailed{"xext: " + n1 + " " + n2 + " blocked"};
    col_[u1] = to_actual_[r->first];
    col_[u2] = to_actual_[r->second];
    trace_.push_back("xext " + n1 + "=" + std::to_string(r->first) + " " + n2 + "=" + std::to_string(r->second));
  }

  // colours the listed vertices (a short cycle or a few vertices) in some proper way
  void complete(const std::vector<std::string>& names) {
    std::vector<VertexId> vs;
    for (const auto& n : names) {
      VertexId v = V(n);
      if (!dom_.count(v)) throw StepFailed{"complete on " + n + " outside the deleted part"};
      col_[v] = 0;
      vs.push_back(v);
    }
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
      if (i == vs.size()) return true;
      std::set<int> seen = neighbour_colors(vs[i]);
      for (int p = 1; p <= 3; ++p) {
        if (seen.count(p)) continue;
        col_[vs[i]] = to_actual_[p];
        if (rec(i + 1)) return true;
      }
      col_[vs[i]] = 0;
      return false;
    };
    std::string list;
    for (const auto& n : names) list += " " + n;
    if (!rec(0)) throw StepFailed{"cannot colour" + list};
    trace_.push_back("colour" + list);
  }

  bool attempt(const std::function<void()>& f) {
    Coloring save = col_;
    std::size_t t = trace_.size();
    try {
      f();
      if (!partial_proper()) throw StepFailed{"conflicting colours"};
      return true;
    } catch (const StepFailed& e) {
      col_ = save;
      trace_.resize(t);
      trace_.push_back("(failed: " + e.what + ")");
      return false;
    }
  }

  void fail(const std::string& why) { throw StepFailed{why}; }

  bool partial_proper() const {
    for (int e = 0; e < g_.m(); ++e) {
      auto [u, v] = g_.edge_ends(e);
      if (col_[u] && col_[u] == col_[v]) return false;
    }
    return true;
  }

  // Saves and restores the whole state, views included.
  struct State {
    Coloring col;
    std::map<int, int> sigma;
    std::array<int, 4> to, from;
  };
  State save() const { return {col_, sigma_, to_actual_, from_actual_}; }
  void restore(const State& s) {
    col_ = s.col;
    sigma_ = s.sigma;
    to_actual_ = s.to;
    from_actual_ = s.from;
  }

  const EmbeddedGraph& graph() const { return g_; }

 private:
  const EmbeddedGraph& g_;
  const Appearance& a_;
  const Configuration& c_;
  Coloring col_;
  std::set<VertexId> dom_;
  std::map<int, int> sigma_;
  std::array<int, 4> to_actual_{}, from_actual_{};
  std::vector<std::string> trace_;
};

int other(int a, int b) {
  for (int c = 1; c <= 3; ++c)
    if (c != a && c != b) return c;
  return 0;
}

std::string vn(int i) { return "v" + std::to_string(i); }

void lift_cycle_config(Lift& L, int k) {
  std::vector<ColorList> lists;
  for (int i = 1; i <= k; ++i) {
    int x = L.c("x" + std::to_string(i));
    ColorList l{};
    int j = 0;
    for (int c = 1; c <= 3; ++c)
      if (c != x) l[j++] = c;
    lists.push_back(l);
  }
  auto psi = color_path_lists(lists);
  for (const auto& p : psi) {
    if (p.front() == p.back()) continue;
    for (int i = 1; i <= k; ++i) L.set(vn(i), p[i - 1]);
    return;
  }
  L.fail("path colourings all have equal ends");
}

void lift_r3(Lift& L) { L.greedy({"x2", "v2"}); }

void lift_r4(Lift& L, R4Mode mode) {
  if (mode != R4Mode::PhiDifferent) {
    if (L.c("x1") == L.c("v2")) {
      L.greedy({"v3", "v4", "v5", "v1"});
      return;
    }
    if (L.c("x3") == L.c("v2")) {
      L.greedy({"v1", "v5", "v4", "v3"});
      return;
    }
    L.normalize({{"x1", 1}, {"v2", 2}, {"x3", 3}});
    L.set("v1", 3);
    L.set("v3", 1);
    L.xext("v4", "v5");
    return;
  }
  if (L.c("v2") != L.c("x5")) L.fail("R4: phi(v2) differs from phi(x5)");
  L.normalize({{"v2", 1}, {"x4", 2}});
  L.set("v4", 1);
  L.greedy({"v3", "v1", "v5"});
}

void lift_r5(Lift& L) {
  if (L.c("v2") == L.c("x8")) L.fail("R5: phi(v2) = phi(x8)");
  if (L.c("v4") != L.c("x6")) L.fail("R5: phi(v4) != phi(x6)");
  if (L.c("v2") == L.c("v4")) {
    L.greedy({"v1", "v8", "v5", "v6", "v7", "v3"});
    return;
  }
  L.normalize({{"v2", 1}, {"v4", 2}});
  L.set("v3", 3);
  L.set("v7", 2);
  L.xext("v5", "v6");
  L.xext("v1", "v8");
}

void lift_r6(Lift& L) {
  const bool chord = L.conf().id == "R6'";
  // A reflects through the chord v1v5, B swaps v1 and v5
  const std::map<int, int> A{{2, 8}, {8, 2}, {3, 7}, {7, 3}, {4, 6}, {6, 4}};
  const std::map<int, int> B{{1, 5}, {5, 1}, {2, 4}, {4, 2}, {6, 8}, {8, 6}};
  auto norm = [&] { L.normalize({{"x1", 1}, {"x5", 2}}); };
  if (L.c("x1") == L.c("x5")) L.fail("R6: phi(x1) = phi(x5)");
  norm();
  auto x6_case = [&] {
    L.set("v5", 1);
    L.greedy({"v4", "v3", "v2", "v1", "v8", "v7", "v6"});
  };
  // phi(x6)=1, or a symmetric copy: phi(x4)=1, phi(x2)=2, phi(x8)=2
  for (const auto* s : {(const std::map<int, int>*)nullptr, &A, &B}) {
    auto st = L.save();
    if (s) L.relabel(*s);
    norm();
    if (L.c("x6") == 1) {
      x6_case();
      return;
    }
    L.restore(st);
  }
  {
    auto st = L.save();
    L.relabel(A);
    L.relabel(B);
    norm();
    if (L.c("x6") == 1) {
      x6_case();
      return;
    }
    L.restore(st);
  }
  if (L.c("x2") == 3 && L.c("x8") == 3) {
    L.set("v1", 3);
    L.set("v5", 1);
    L.greedy({"v6", "v7", "v8", "v4", "v3", "v2"});
    return;
  }
  if (L.c("x2") != 1) {
    L.relabel(A);
    norm();
  }
  if (L.c("x2") != 1) L.fail("R6: neither x2 nor x8 has colour 1");
  auto x3_case = [&]() -> bool {
    if (chord || L.c("x3") != 1) {
      L.set("v3", 1);
      L.set("v5", 1);
      L.greedy({"v4", "v6", "v7", "v8", "v1", "v2"});
      return true;
    }
    return false;
  };
  if (x3_case()) return;
  if (L.c("x6") == 3) {
    L.set("v4", 1);
    L.set("v1", 2);
    L.set("v3", 2);
    L.set("v2", 3);
    L.set("v5", 3);
    L.greedy({"v8", "v7", "v6"});
    return;
  }
  // phi(x6)=2; the mirror of the x3 argument handles phi(x7)!=2
  {
    auto st = L.save();
    L.relabel(A);
    L.relabel(B);
    norm();
    if (L.c("x2") == 1 && x3_case()) return;
    L.restore(st);
  }
  if (L.c("x8") == 3) {
    for (int i : {4, 6, 8}) L.set(vn(i), 1);
    for (int i : {1, 3}) L.set(vn(i), 2);
    for (int i : {2, 5, 7}) L.set(vn(i), 3);
    return;
  }
  if (L.c("x4") != 2) {
    L.relabel(A);
    L.relabel(B);
    norm();
    if (L.c("x8") != 3) L.fail("R6: symmetric copy of phi(x8)=3 not found");
    for (int i : {4, 6, 8}) L.set(vn(i), 1);
    for (int i : {1, 3}) L.set(vn(i), 2);
    for (int i : {2, 5, 7}) L.set(vn(i), 3);
    return;
  }
  for (int i : {5, 7}) L.set(vn(i), 1);
  for (int i : {1, 3}) L.set(vn(i), 2);
  for (int i : {2, 4, 6, 8}) L.set(vn(i), 3);
}

// R7 mirror: v1<->v3, v4<->v10, v5<->v9, v6<->v8, v11<->v12
const std::map<int, int> kR7Mirror{{1, 3}, {3, 1}, {4, 10}, {10, 4}, {5, 9}, {9, 5}, {6, 8}, {8, 6}, {11, 12}, {12, 11}};

bool r7_first_part(Lift& L) {
  if (L.c("x8") != 1) return false;
  std::vector<ColorList> lists;
  for (int i = 1; i <= 8; ++i) {
    std::string xi = "x" + std::to_string(i);
    int x = L.c(xi);
    ColorList l{};
    int j = 0;
    for (int c = 1; c <= 3; ++c)
      if (c != x) l[j++] = c;
    lists.push_back(l);
  }
  auto psis = color_path_lists(lists);
  const std::vector<int>* psi = nullptr;
  for (const auto& p : psis)
    if (p.front() == p.back()) psi = &p;
  if (!psi) L.fail("R7: no path colouring with equal ends");
  if (L.c("x9") != L.c("x10")) {
    for (int i = 1; i <= 8; ++i) L.set(vn(i), (*psi)[i - 1]);
    L.greedy({"v12", "v11"});
    L.xext("v9", "v10");
    return true;
  }
  L.set("v11", 1);
  if (L.c("x2") == 1) {
    L.set("v3", 1);
    L.greedy({"v4", "v5", "v6", "v7", "v8", "v9", "v10", "v1", "v2", "v12"});
    return true;
  }
  if (L.c("x6") == 2) {
    L.set("v12", 2);
    L.complete({"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9", "v10"});
    return true;
  }
  int d = L.c("x6");
  if (d == 3 && L.c("x4") == 1 && L.c("x5") == 3) {
    L.set("v12", 3);
    L.set("v3", 1);
    L.greedy({"v2", "v1", "v10", "v9", "v8", "v7", "v6", "v5", "v4"});
    return true;
  }
  if (d == 1 && L.c("x4") == L.c("x5")) {
    L.set("v3", 1);
    L.greedy({"v2", "v1", "v10", "v9", "v8", "v7", "v6", "v12"});
    L.xext("v4", "v5");
    return true;
  }
  L.set("v2", 1);
  L.set("v3", 3);
  L.set("v12", 2);
  L.set("v6", 4 - d);
  L.greedy({"v7", "v8", "v9", "v10", "v1"});
  L.xext("v4", "v5");
  return true;
}

struct Omega {
  int first, second;
};

// the colouring of (p, q) with p != not_p, q != not_q that does not extend to the pair (r, s)
Omega r7_omega(Lift& L, const std::string& p, int not_p, const std::string& q, int not_q, const std::string& r,
               const std::string& s) {
  std::vector<Omega> blocked;
  for (int cp = 1; cp <= 3; ++cp) {
    if (cp == not_p) continue;
    for (int cq = 1; cq <= 3; ++cq) {
      if (cq == not_q) continue;
      auto st = L.save();
      std::size_t t = L.trace().size();
      L.set(p, cp);
      L.set(q, cq);
      bool ok = L.attempt([&] { L.xext(r, s); });
      L.restore(st);
      L.trace().resize(t);
      if (!ok) blocked.push_back({cp, cq});
    }
  }
  if (blocked.size() > 1) L.fail("R7: two colourings of " + p + "," + q + " fail to extend");
  if (blocked.empty()) return {not_p, not_q};
  return blocked[0];
}

void r7_second_part(Lift& L, bool mirrored) {
  int c1 = L.c("x8"), c2 = L.c("x6");
  Omega w1 = r7_omega(L, "v1", 1, "v8", c1, "v9", "v10");
  Omega w2 = r7_omega(L, "v3", 2, "v6", c2, "v4", "v5");
  L.trace().push_back("omega1=(" + std::to_string(w1.first) + "," + std::to_string(w1.second) + ") omega2=(" +
                      std::to_string(w2.first) + "," + std::to_string(w2.second) + ")");
  int a = L.c("x2") == 2 ? 2 : 3;
  int x7 = L.c("x7");
  std::set<int> s1{c1, w1.second}, s2{c2, w2.second};
  auto base = L.save();

  auto finish = [&](int b) {
    int psi8 = L.c("v8");
    int c = 0;
    for (int cand = 1; cand <= 3 && !c; ++cand) {
      if (cand == L.c("x3")) continue;
      if (cand == b || std::set<int>{b, cand} != std::set<int>{a, psi8}) c = cand;
    }
    if (!c) L.fail("R7: no colour for v3");
    L.set("v3", c);
    L.xext("v11", "v12");
    L.xext("v4", "v5");
    L.greedy({"v2"});
  };
  if (w1.first != a) {
    int b = 1;
    while (b == L.c("x6") || b == w2.second) ++b;
    L.set("v1", a);
    L.set("v6", b);
    L.greedy({"v7", "v8"});
    L.xext("v9", "v10");
    finish(b);
    return;
  }
  if (w2.second == c2) {
    L.set("v1", a);
    L.greedy({"v10", "v9", "v8", "v7", "v6"});
    finish(L.c("v6"));
    return;
  }
  std::set<int> both;
  for (int x : s1)
    if (s2.count(x)) both.insert(x);
  if (!both.count(x7) || s1 == s2) {
    int d = other(c1, w1.second), b = other(c2, w2.second);
    L.set("v1", a);
    L.set("v8", d);
    L.set("v6", b);
    L.xext("v9", "v10");
    L.greedy({"v7"});
    finish(b);
    return;
  }
  L.restore(base);

  if (L.c("x9") != L.c("x10")) {
    if (a != L.c("x9")) L.fail("R7: a differs from phi(x9)");
    if (c1 != a) {
      L.set("v1", a);
      L.set("v8", a);
      L.greedy({"v10", "v9", "v7", "v6", "v5", "v4", "v3", "v2", "v12", "v11"});
      return;
    }
    if (L.c("x10") == 5 - a) {
      L.set("v1", 5 - a);
      L.set("v8", 5 - a);
      L.set("v10", a);
      L.set("v9", 1);
      L.set("v7", 1);
      L.set("v6", other(c2, w2.second));
      L.greedy({"v2", "v3", "v12", "v11"});
      L.xext("v4", "v5");
      return;
    }
    L.set("v1", 5 - a);
    L.set("v7", 5 - a);
    L.set("v9", 5 - a);
    L.set("v10", a);
    L.set("v8", 1);
    L.set("v6", other(c2, w2.second));
    L.greedy({"v2", "v3"});
    L.xext("v4", "v5");
    if (L.attempt([&] { L.xext("v11", "v12"); })) return;
    auto psi = [&] {
      L.restore(base);
      L.set("v8", 5 - a);
      L.set("v7", 1);
      L.set("v9", 1);
      L.set("v6", 2);
      L.set("v3", 4 - L.c("x5"));
      L.set("v5", 4 - L.c("x5"));
      L.set("v4", L.c("x5"));
    };
    psi();
    if (L.attempt([&] {
          L.set("v1", a);
          L.set("v10", 5 - a);
          L.greedy({"v2"});
          L.xext("v11", "v12");
        }))
      return;
    psi();
    if (L.attempt([&] {
          L.set("v1", 5 - a);
          L.set("v12", 1);
          L.set("v10", a);
          L.set("v11", a);
          L.greedy({"v2"});
        }))
      return;
    L.restore(base);
    for (int i : {3, 6, 8}) L.set(vn(i), 1);
    for (int i : {1, 5, 7, 9, 12}) L.set(vn(i), 2);
    for (int i : {2, 4, 10, 11}) L.set(vn(i), 3);
    return;
  }
  if (L.c("x4") != L.c("x5")) {
    if (mirrored) L.fail("R7: x4 != x5 in the mirrored view");
    L.relabel(kR7Mirror);
    L.normalize({{"x1", 1}, {"x3", 2}});
    r7_second_part(L, true);
    return;
  }
  if (x7 != c2) L.fail("R7: phi(x7) != phi(x6)");
  if (c2 != 3) {
    L.set("v7", 3);
    L.set("v8", 1);
    L.set("v6", 2);
    L.complete({"v1", "v2", "v3", "v12", "v11"});
    L.xext("v4", "v5");
    L.xext("v9", "v10");
    return;
  }
  if (L.c("x2") != 1) {
    for (int i : {2, 6, 8}) L.set(vn(i), 1);
    for (int i : {1, 7, 12}) L.set(vn(i), 2);
    for (int i : {3, 11}) L.set(vn(i), 3);
  } else {
    L.set("v2", 5 - c1);
    L.set("v8", 5 - c1);
    L.set("v1", c1);
    for (int i : {3, 7, 11}) L.set(vn(i), 1);
    L.set("v6", 2);
    L.set("v12", 3);
  }
  L.xext("v4", "v5");
  L.xext("v9", "v10");
}

void lift_r7(Lift& L) {
  if (L.c("x1") == L.c("x3")) L.fail("R7: phi(x1) = phi(x3)");
  L.normalize({{"x1", 1}, {"x3", 2}});
  if (r7_first_part(L)) return;
  if (L.c("x6") == 2) {
    auto st = L.save();
    L.relabel(kR7Mirror);
    L.normalize({{"x1", 1}, {"x3", 2}});
    if (r7_first_part(L)) return;
    L.restore(st);
  }
  r7_second_part(L, false);
}

void lift_r7p(Lift& L) {
  if (L.c("v3") == L.c("v6")) {
    L.complete({"v2", "v1", "v10", "v9", "v8", "v7"});
    L.greedy({"v11", "v12"});
    return;
  }
  L.normalize({{"v3", 1}, {"v6", 2}});
  L.set("v12", 3);
  if (L.c("x1") == L.c("x9")) L.fail("R7': phi(x1) = phi(x9)");
  L.complete({"v1", "v11", "v8", "v9", "v10"});
  L.xext("v2", "v7");
}

void lift_r7pp(Lift& L) {
  if (L.c("x1") == L.c("x3")) L.fail("R7'': phi(x1) = phi(x3)");
  L.normalize({{"x1", 1}, {"x3", 2}});
  if (L.c("x2") == 1) {
    L.relabel(kR7Mirror);
    L.normalize({{"x1", 1}, {"x3", 2}});
  }
  int c = L.c("x2");
  if (c == 1) L.fail("R7'': phi(x2) = 1 in both views");
  if (L.c("v8") != 1) {
    if (L.attempt([&] {
          L.set("v11", 1);
          L.set("v3", 1);
          L.set("v1", c);
          L.greedy({"v2", "v12"});
          L.xext("v4", "v10");
        }))
      return;
    if (L.c("v6") != 2) {
      L.set("v11", 1);
      L.set("v3", 3);
      L.set("v1", c);
      L.greedy({"v2", "v12"});
      L.xext("v4", "v10");
      return;
    }
    L.set("v12", 1);
    L.set("v2", 1);
    L.set("v3", 3);
    L.greedy({"v11", "v1"});
    L.xext("v10", "v4");
    return;
  }
  if (L.c("v6") != c) {
    if (L.attempt([&] {
          L.set("v1", c);
          L.set("v12", c);
          L.set("v11", 5 - c);
          L.set("v2", 5 - c);
          L.set("v3", 1);
          L.xext("v4", "v10");
        }))
      return;
    L.set("v2", 1);
    L.set("v3", 3);
    L.greedy({"v12", "v11", "v1"});
    L.xext("v4", "v10");
    return;
  }
  if (c != 2) {
    L.set("v3", c);
    L.greedy({"v4", "v10", "v1", "v2", "v11", "v12"});
    return;
  }
  if (L.attempt([&] {
        L.set("v2", 1);
        L.set("v12", 1);
        L.set("v11", 3);
        L.set("v3", 3);
        L.set("v1", 2);
        L.xext("v4", "v10");
      }))
    return;
  for (int i : {2, 4, 12}) L.set(vn(i), 1);
  for (int i : {10, 11}) L.set(vn(i), 2);
  for (int i : {1, 3}) L.set(vn(i), 3);
}

void lift_r7ppp(Lift& L) {
  if (L.c("x1") == L.c("x3")) L.fail("R7''': phi(x1) = phi(x3)");
  L.normalize({{"x1", 1}, {"x3", 2}});
  if (L.c("v8") != 1 && L.c("v6") != 2) {
    L.set("v11", 1);
    L.set("v12", 2);
    L.complete({"v10", "v1", "v2", "v3", "v4", "v5"});
    return;
  }
  if (L.c("v6") != 2) {
    int x2 = L.c("x2"), x4 = L.c("x4");
    if (x2 == 2 || x4 == 2 || x2 == x4) {
      L.set("v1", 2);
      L.set("v5", 2);
      L.set("v12", 2);
      L.greedy({"v11", "v10"});
      L.complete({"v2", "v3", "v4"});
      return;
    }
    if (L.c("v9") != 2 || L.c("v6") != 3) {
      L.set("v2", 2);
      L.set("v4", 2);
      L.set("v11", 2);
      L.set("v1", 3);
      L.greedy({"v12", "v3"});
      L.xext("v5", "v10");
      return;
    }
    L.set("v5", 1);
    for (int i : {1, 4, 12}) L.set(vn(i), 2);
    for (int i : {10, 11}) L.set(vn(i), 3);
    L.set("v2", x4);
    L.set("v3", x2);
    return;
  }
  if (L.c("x4") != 2) {
    L.set("v4", 2);
    L.complete({"v1", "v2", "v3", "v12", "v11"});
    L.greedy({"v10", "v5"});
    return;
  }
  if (L.c("x2") != 2) {
    L.set("v2", 2);
    L.set("v1", 3);
    if (L.c("v8") != 2) {
      L.set("v11", 2);
      L.greedy({"v10", "v5", "v4", "v3", "v12"});
      return;
    }
    if (L.c("v9") == 2) L.fail("R7''': phi(v8) = phi(v9)");
    L.set("v10", 2);
    for (int i : {3, 5, 11}) L.set(vn(i), 1);
    for (int i : {4, 12}) L.set(vn(i), 3);
    return;
  }
  for (int i : {2, 4, 12}) L.set(vn(i), 1);
  for (int i : {3, 5}) L.set(vn(i), 3);
  if (L.c("v9") != 1) {
    L.set("v10", 1);
    L.greedy({"v11", "v1"});
    return;
  }
  if (L.c("v8") != 2) {
    L.set("v10", 2);
    L.set("v11", 2);
    L.set("v1", 3);
    return;
  }
  for (int i : {3, 5, 11}) L.set(vn(i), 1);
  L.set("v1", 2);
  for (int i : {2, 4, 10, 12}) L.set(vn(i), 3);
}

void lift_r7pppp(Lift& L) {
  if (L.c("v6") == L.c("x3")) L.fail("R7'''': phi(v6) = phi(x3)");
  L.normalize({{"v6", 1}, {"x3", 2}});
  if (L.c("v8") != L.c("v10")) {
    if (L.c("v10") != 2) {
      L.set("v12", 2);
      L.set("v11", L.c("v10"));
      L.complete({"v1", "v2", "v3", "v4", "v5"});
      return;
    }
    if (L.c("x2") != 2) {
      L.set("v2", 2);
      L.set("v3", 1);
      L.greedy({"v4", "v5", "v1", "v11", "v12"});
    } else {
      L.set("v1", 1);
      L.set("v3", 1);
      L.set("v2", 3);
      L.greedy({"v11", "v12", "v4", "v5"});
    }
    return;
  }
  int c = L.c("v8");
  if (c == 2) {
    L.set("v12", 2);
    L.complete({"v1", "v2", "v3", "v4", "v5"});
    L.greedy({"v11"});
    return;
  }
  if (c == 3) {
    L.set("v1", 1);
    L.set("v3", 1);
    L.set("v11", 2);
    L.set("v12", 3);
    L.greedy({"v2", "v4", "v5"});
    return;
  }
  L.set("v1", 2);
  L.set("v12", 2);
  L.set("v11", 3);
  L.set("v5", 3);
  if (L.c("x4") != 2) {
    L.set("v4", 2);
    L.greedy({"v2", "v3"});
    return;
  }
  if (L.c("x2") != 1) {
    L.set("v2", 1);
    L.set("v4", 1);
    L.set("v3", 3);
    return;
  }
  L.set("v3", 1);
  for (int i : {2, 5, 11}) L.set(vn(i), 2);
  for (int i : {1, 4, 12}) L.set(vn(i), 3);
}

}  // namespace

Coloring lift_coloring(const EmbeddedGraph& g, const ReductionResult& res, const Coloring& reduced) {
  if (static_cast<int>(reduced.size()) != res.graph.n())
    throw ColorError(ColorErrorCode::InvalidInput, "colouring does not match the reduced graph");
  if (!is_proper(res.graph, reduced)) throw ColorError(ColorErrorCode::InvalidInput, "reduced colouring is not proper");
  Coloring col(g.n(), 0);
  for (VertexId v = 0; v < g.n(); ++v)
    if (res.vertex_map[v] >= 0) col[v] = reduced[res.vertex_map[v]];
  Lift L(g, res, col);
  const std::string& id = res.appearance.conf().id;
  auto report = [&](const std::string& why) {
    std::ostringstream out;
    out << id << ": " << why << "; trace:";
    for (const auto& t : L.trace()) out << " [" << t << "]";
    return ColorError(ColorErrorCode::LiftCaseExhausted, out.str());
  };
  try {
    if (id == "R1")
      lift_cycle_config(L, 5);
    else if (id == "R2")
      lift_cycle_config(L, 7);
    else if (id == "R3")
      lift_r3(L);
    else if (id == "R4")
      lift_r4(L, res.r4_mode);
    else if (id == "R5")
      lift_r5(L);
    else if (id == "R6" || id == "R6'")
      lift_r6(L);
    else if (id == "R7")
      lift_r7(L);
    else if (id == "R7'")
      lift_r7p(L);
    else if (id == "R7''")
      lift_r7pp(L);
    else if (id == "R7'''")
      lift_r7ppp(L);
    else if (id == "R7''''")
      lift_r7pppp(L);
    else
      throw report("unknown configuration");
  } catch (const StepFailed& e) {
    throw report(e.what);
  } catch (const ColorError& e) {
    throw report(e.what());
  }
  const Coloring& out = L.coloring();
  for (VertexId v = 0; v < g.n(); ++v)
    if (out[v] == 0) throw report("vertex " + std::to_string(v) + " left uncoloured");
  if (!is_proper(g, out)) throw report("result is not proper");
  return out;
}

std::optional<Coloring> solve_disk(const EmbeddedGraph& g, const Precoloring& phi, int threshold,
                                   DiskSolveStats* stats) {
  DiskSolveStats local;
  DiskSolveStats& st = stats ? *stats : local;
  if (g.rings().size() != 1 || g.rings()[0].is_vertex_ring())
    throw ColorError(ColorErrorCode::InvalidInput, "solve_disk needs exactly one facial ring");
  for (VertexId v : g.ring_vertices())
    if (!phi.count(v)) throw ColorError(ColorErrorCode::InvalidInput, "ring vertex without a colour");
  bool chord_clash = false;
  for (const auto& [v, c] : phi) {
    if (c < 1 || c > 3) throw ColorError(ColorErrorCode::ImproperPrecoloring, "colour out of range");
    for (VertexId u : g.neighbors(v)) {
      if (!phi.count(u) || phi.at(u) != c) continue;
      if (g.is_ring_edge(g.edge_id(u, v)))
        throw ColorError(ColorErrorCode::ImproperPrecoloring, "adjacent ring vertices share a colour");
      chord_clash = true;
    }
  }
  // a monochromatic chord is an edge of G - E(R): phi is a colouring of R that does not extend
  if (chord_clash) return std::nullopt;
  auto oracle = [&] {
    ++st.oracle_calls;
    return oracle_extend(g, phi);
  };
  if (g.n() <= threshold) return oracle();

  std::optional<Appearance> pick;
  for (const auto& a : find_appearances(g, Strength::Strong)) {
    pick = a;
    break;
  }
  if (!pick) {
    for (const auto& a : find_appearances(g, Strength::Appears)) {
      try {
        auto s = strengthen(g, a);
        if (s.strong) {
          pick = *s.strong;
          break;
        }
      } catch (const std::exception&) {
      }
    }
  }
  if (!pick) return oracle();

  ReductionResult res = reduce(g, *pick, phi);
  ++st.reductions;
  Precoloring phi2;
  for (const auto& [v, c] : phi) phi2[res.vertex_map[v]] = c;
  std::optional<Coloring> sub;
  bool sub_disk = res.graph.rings().size() == 1;
  bool consistent = true;
  for (const auto& [v, c] : phi)
    if (phi2.at(res.vertex_map[v]) != c) consistent = false;
  for (const auto& [v, c] : phi2)
    for (VertexId u : res.graph.neighbors(v))
      if (phi2.count(u) && phi2.at(u) == c) consistent = false;
  if (sub_disk && consistent) sub = solve_disk(res.graph, phi2, threshold, &st);
  if (!sub) {
    ++st.fallbacks;
    return oracle();
  }
  return lift_coloring(g, res, *sub);
}

}  // namespace g5

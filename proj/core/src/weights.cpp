#include "g5/weights.hpp"

#include "g5/colorer.hpp"

namespace g5 {

Q WeightFunction::s(int l) const {
  if (l < 5) throw std::out_of_range("s(l) is defined for l >= 5");
  if (l <= 8) return table_[l - 5];
  return Q(l - 8);
}

std::optional<std::pair<std::string, std::string>> WeightFunction::violation(int window) const {
  auto fail = [](const char* c, std::string why) { return std::make_optional(std::make_pair(std::string(c), why)); };
  if (eps_ <= 0) return fail("eps", "epsilon must be positive");
  if (s(5) != 2 * eps_) return fail("S1", "s(5) = " + to_string(s(5)) + " but 2eps = " + to_string(2 * eps_));
  if (s(7) > frac(4, 9) - 644 * eps_) return fail("S2", "s(7) > 4/9 - 644eps");
  Q slope = frac(10, 9) - 92 * eps_;
  if (s(8) > slope * 8 - 8) return fail("S3", "s(8) > (10/9 - 92eps)8 - 8");
  // l >= 9: l - 8 <= slope*l - 8 iff eps <= 1/828
  if (eps_ > frac(1, 828)) return fail("S3", "tail l - 8 <= (10/9 - 92eps)l - 8 needs eps <= 1/828");
  for (int l = 5; l < 9; ++l)
    if (s(l) <= 0 || s(l + 1) <= s(l)) return fail("S4", "s is not positive and increasing at " + std::to_string(l));
  if (14 * s(5) > s(6)) return fail("S4", "14s(5) > s(6)");
  if (135 * s(5) > s(7)) return fail("S4", "135s(5) > s(7)");
  if (4 * s(6) > s(7)) return fail("S4", "4s(6) > s(7)");
  if (3 * s(7) > s(8)) return fail("S4", "3s(7) > s(8)");
  if (2 * s(8) > s(7) + s(9)) return fail("S4", "2s(8) > s(7) + s(9)");
  // convexity: non-decreasing increments, constant 1 from l = 9 on
  for (int l = 5; l < 10; ++l)
    if (s(l + 1) - s(l) > s(l + 2) - s(l + 1)) return fail("S5", "increments decrease at " + std::to_string(l));
  for (int x = 5; x <= window; ++x)
    for (int y = x; y <= window; ++y)
      for (int a = 0; x + a <= window && y + a <= window; ++a)
        if (s(x + a) - s(x) > s(y + a) - s(y))
          return fail("S5", "x=" + std::to_string(x) + " y=" + std::to_string(y) + " a=" + std::to_string(a));
  return std::nullopt;
}

WeightFunction make_weight_fn(const Q& epsilon, const Q& s5, const Q& s6, const Q& s7, const Q& s8) {
  WeightFunction w(epsilon, s5, s6, s7, s8);
  if (auto v = w.violation()) throw WeightError(v->first, v->second);
  return w;
}

WeightFunction default_weight_fn() {
  return make_weight_fn(frac(2, 4113), frac(4, 4113), frac(72, 4113), frac(540, 4113), frac(2184, 4113));
}

Q face_weight(const EmbeddedGraph& g, int f, const WeightFunction& w) {
  const Face& face = g.faces()[f];
  bool open_cell = face.walks.size() == 1 && face.isolated.empty();
  if (open_cell && face.length >= 5) return w.s(face.length);
  return Q(face.length);
}

Q graph_weight(const EmbeddedGraph& g, const WeightFunction& w) {
  Q total = 0;
  for (int f : g.internal_faces()) total += face_weight(g, f, w);
  return total;
}

std::string DiskBoundReport::describe() const {
  static const char* names[] = {"s(l-3)+s(5)", "s(l-4)+2s(5)", "s(l-5)+5s(5)", "s(l-5)-5s(5)"};
  std::string out = std::string("class=") + to_string(exceptional) + " bound=" + names[static_cast<int>(clause)];
  out += " w=" + to_string(weight);
  out += " rhs=" + (bound ? to_string(*bound) : std::string("undefined"));
  out += holds ? (tight ? " holds (equality)" : " holds") : " VIOLATED";
  return out;
}

DiskBoundReport check_diskgirth5(const EmbeddedGraph& g, const WeightFunction& w, bool assume_critical) {
  if (g.rings().size() != 1 || g.rings()[0].is_vertex_ring()) throw PreconditionFailed("one facial ring required");
  int l = g.rings()[0].length();
  if (l < 5) throw PreconditionFailed("ring shorter than 5");
  if (!cycles_up_to(g, 4).empty()) throw PreconditionFailed("cycle of length at most four");
  if (!assume_critical && is_R_critical(g).verdict != CritVerdict::RCritical)
    throw PreconditionFailed("graph is not R-critical");
  DiskBoundReport r;
  r.exceptional = classify_exceptional(g).cls;
  r.weight = graph_weight(g, w);
  int arg = 0;
  Q extra;
  switch (r.exceptional) {
    case ExcClass::E0:
    case ExcClass::E1:
      r.clause = DiskBoundReport::Clause::First;
      arg = l - 3;
      extra = w.s(5);
      break;
    case ExcClass::E2:
    case ExcClass::E3:
      r.clause = DiskBoundReport::Clause::Second;
      arg = l - 4;
      extra = 2 * w.s(5);
      break;
    case ExcClass::E4:
    case ExcClass::E5:
      r.clause = DiskBoundReport::Clause::Third;
      arg = l - 5;
      extra = 5 * w.s(5);
      break;
    case ExcClass::None:
      r.clause = DiskBoundReport::Clause::Fourth;
      arg = l - 5;
      extra = -5 * w.s(5);
      break;
  }
  if (arg >= 5) {
    r.bound = w.s(arg) + extra;
    r.holds = r.weight <= *r.bound;
    r.tight = r.weight == *r.bound;
  }
  return r;
}

}  // namespace g5

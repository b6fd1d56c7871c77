#pragma once

#include "g5/graph.hpp"
#include "g5/invariants.hpp"
#include "g5/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace g5 {

class WeightError : public std::runtime_error {
 public:
  WeightError(std::string condition, const std::string& what)
      : std::runtime_error("ConditionViolated(" + condition + "): " + what), condition_(std::move(condition)) {}
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

class WeightFunction {
 public:
  WeightFunction(Q epsilon, Q s5, Q s6, Q s7, Q s8) : eps_(epsilon), table_{s5, s6, s7, s8} {}

  const Q& epsilon() const { return eps_; }
  // s(l) for l >= 5; s(l) = l - 8 from 9 on
  Q s(int l) const;

  // First violated condition ("S1".."S5", "eps"), with a reason, or nullopt.
  std::optional<std::pair<std::string, std::string>> violation(int window = 64) const;

 private:
  Q eps_;
  Q table_[4];
};

WeightFunction make_weight_fn(const Q& epsilon, const Q& s5, const Q& s6, const Q& s7, const Q& s8);
WeightFunction default_weight_fn();

Q face_weight(const EmbeddedGraph& g, int f, const WeightFunction& w);
Q graph_weight(const EmbeddedGraph& g, const WeightFunction& w);

struct DiskBoundReport {
  enum class Clause { First, Second, Third, Fourth } clause = Clause::First;
  ExcClass exceptional = ExcClass::None;
  Q weight;
  std::optional<Q> bound;  // empty when the bound's argument falls below 5
  bool holds = false;
  bool tight = false;
  std::string describe() const;
};

class PreconditionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checks the applicable clause of the disk weight theorem. Criticality is certified with the
// oracle unless assume_critical is set.
DiskBoundReport check_diskgirth5(const EmbeddedGraph& g, const WeightFunction& w, bool assume_critical = false);

}  // namespace g5
